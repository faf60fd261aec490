"""Central hyperplane arrangements over the rationals.

Two kinds are supported.  Graphical arrangements carry one hyperplane
x_i - x_j = 0 per graph edge, and their flats are stored as vertex
partitions (bond-lattice encoding), so rank, closure and localization stay
purely graph-theoretic.  General arrangements store canonical primitive
integer normal vectors and use fraction-free elimination for rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .graphs import Graph


@dataclass(frozen=True)
class GraphEdgeHyperplane:
    """The hyperplane x_i - x_j = 0 for an edge ij, i < j."""

    i: int
    j: int

    def __post_init__(self):
        if not 0 < self.i < self.j:
            raise ValueError(f"edge hyperplane needs 0 < i < j, got ({self.i}, {self.j})")

    @property
    def label(self) -> str:
        return f"{self.i}-{self.j}"

    def normal(self, dim: int) -> tuple:
        v = [0] * dim
        v[self.i - 1] = 1
        v[self.j - 1] = -1
        return tuple(v)


def canonical_normal(coeffs) -> tuple:
    """Scale a rational vector to primitive integers, first nonzero positive."""
    fracs = [Fraction(c) for c in coeffs]
    if all(f == 0 for f in fracs):
        raise ValueError("hyperplane normal must be nonzero")
    denom = 1
    for f in fracs:
        denom = denom * f.denominator // gcd(denom, f.denominator)
    ints = [int(f * denom) for f in fracs]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    ints = [c // g for c in ints]
    lead = next(c for c in ints if c != 0)
    if lead < 0:
        ints = [-c for c in ints]
    return tuple(ints)


@dataclass(frozen=True)
class LinearHyperplane:
    """A hyperplane normal . x = 0 with a canonical primitive integer normal."""

    normal: tuple

    def __post_init__(self):
        if canonical_normal(self.normal) != self.normal:
            raise ValueError(f"normal {self.normal} is not in canonical form")

    @property
    def label(self) -> str:
        return " ".join(str(c) for c in self.normal)


@dataclass(frozen=True)
class Arrangement:
    """Finite central arrangement; hyperplanes are indexed 0..m-1."""

    ambient_dim: int
    hyperplanes: tuple
    kind: str  # "graphical" | "general"

    def __post_init__(self):
        if self.kind not in ("graphical", "general"):
            raise ValueError(f"unknown arrangement kind {self.kind!r}")
        seen = set()
        for h in self.hyperplanes:
            if self.kind == "graphical":
                if not isinstance(h, GraphEdgeHyperplane):
                    raise ValueError("graphical arrangement must contain only edge hyperplanes")
                if h.j > self.ambient_dim:
                    raise ValueError(f"edge {h.label} exceeds ambient dimension {self.ambient_dim}")
                key = (h.i, h.j)
            else:
                if not isinstance(h, LinearHyperplane):
                    raise ValueError("general arrangement must contain only linear hyperplanes")
                if len(h.normal) != self.ambient_dim:
                    raise ValueError("normal length does not match ambient dimension")
                key = h.normal
            if key in seen:
                raise ValueError(f"duplicate hyperplane {h.label}")
            seen.add(key)

    @property
    def m(self) -> int:
        return len(self.hyperplanes)

    def edge_index(self, i: int, j: int) -> int:
        i, j = min(i, j), max(i, j)
        for idx, h in enumerate(self.hyperplanes):
            if isinstance(h, GraphEdgeHyperplane) and (h.i, h.j) == (i, j):
                return idx
        raise KeyError(f"no hyperplane for edge {i}-{j}")

    def labels(self) -> list:
        return [h.label for h in self.hyperplanes]

    def normal_rows(self, indices) -> list:
        rows = []
        for k in indices:
            h = self.hyperplanes[k]
            if isinstance(h, GraphEdgeHyperplane):
                rows.append(list(h.normal(self.ambient_dim)))
            else:
                rows.append(list(h.normal))
        return rows


@dataclass(frozen=True)
class Flat:
    """Element of the intersection lattice.

    `hyperplanes` is the closed set of indices containing the subspace; for
    graphical arrangements `blocks` is the vertex partition (blocks sorted by
    their minimum), for general arrangements it is None.
    """

    rank: int
    hyperplanes: frozenset
    blocks: tuple = None

    def key(self):
        if self.blocks is not None:
            return self.blocks
        return tuple(sorted(self.hyperplanes))


def graphical_arrangement(g: Graph) -> Arrangement:
    """One edge hyperplane per edge of g, in sorted edge order."""
    hyps = tuple(GraphEdgeHyperplane(i, j) for i, j in g.sorted_edges())
    return Arrangement(g.n, hyps, "graphical")


def general_arrangement(normals, ambient_dim=None) -> Arrangement:
    rows = [canonical_normal(v) for v in normals]
    if ambient_dim is None:
        if not rows:
            raise ValueError("ambient dimension required for an empty arrangement")
        ambient_dim = len(rows[0])
    return Arrangement(ambient_dim, tuple(LinearHyperplane(r) for r in rows), "general")


def to_general(a: Arrangement) -> Arrangement:
    """Re-express any arrangement through explicit normal vectors."""
    if a.kind == "general":
        return a
    normals = [h.normal(a.ambient_dim) for h in a.hyperplanes]
    return general_arrangement(normals, a.ambient_dim)


def parse_normals(text: str) -> Arrangement:
    """General arrangement from text: one hyperplane per line of rational coefficients."""
    rows = []
    width = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            row = [Fraction(tok) for tok in line.split()]
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"line {lineno}: invalid rational coefficient in {raw!r}") from None
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ValueError(f"line {lineno}: expected {width} coefficients, got {len(row)}")
        rows.append(row)
    if not rows:
        raise ValueError("no hyperplanes found in input")
    return general_arrangement(rows)


def product_arrangement(a1: Arrangement, a2: Arrangement) -> Arrangement:
    """Arrangement in dimension n1+n2 with a1's hyperplanes first, then a2's.

    The result is always of general kind: a product of graphical arrangements
    need not be graphical on a shared vertex set.
    """
    n1, n2 = a1.ambient_dim, a2.ambient_dim
    normals = []
    for row in a1.normal_rows(range(a1.m)):
        normals.append(tuple(row) + (0,) * n2)
    for row in a2.normal_rows(range(a2.m)):
        normals.append((0,) * n1 + tuple(row))
    return Arrangement(n1 + n2, tuple(LinearHyperplane(canonical_normal(v)) for v in normals), "general")


# ---------------------------------------------------------------------------
# rank / closure / localization


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n + 1))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def _combine(vec, row, col):
    """Eliminate vec[col] using row (row[col] != 0); keep entries primitive."""
    piv = row[col]
    factor = vec[col]
    out = [v * piv - factor * r for v, r in zip(vec, row)]
    g = 0
    for c in out:
        g = gcd(g, abs(c))
    if g > 1:
        out = [c // g for c in out]
    return out


class _IntEchelon:
    """Reduced row-echelon basis of integer vectors; exact, fraction-free.

    Every stored row is zero at every other stored pivot column, so reducing
    a vector against the rows in any order is well defined.
    """

    def __init__(self):
        self.rows = []  # (pivot_col, primitive integer row)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec):
        vec = list(vec)
        for col, row in self.rows:
            if vec[col] != 0:
                vec = _combine(vec, row, col)
        return vec

    def insert(self, vec) -> bool:
        """Reduce vec against the basis; add it if independent.  True if added."""
        vec = self.reduce(vec)
        pivot = next((c for c, v in enumerate(vec) if v != 0), None)
        if pivot is None:
            return False
        self.rows = [
            (col, _combine(row, vec, pivot) if row[pivot] != 0 else row)
            for col, row in self.rows
        ]
        self.rows.append((pivot, vec))
        self.rows.sort(key=lambda item: item[0])
        return True

    def contains(self, vec) -> bool:
        return all(c == 0 for c in self.reduce(vec))


def rank_of_subset(a: Arrangement, indices) -> int:
    """Matroid rank of a hyperplane subset.

    Graphical: n minus the number of connected components of the spanning
    subgraph on the chosen edges.  General: exact integer matrix rank.
    """
    indices = sorted(set(indices))
    for k in indices:
        if not 0 <= k < a.m:
            raise IndexError(f"hyperplane index {k} out of range")
    if a.kind == "graphical":
        uf = _UnionFind(a.ambient_dim)
        for k in indices:
            h = a.hyperplanes[k]
            uf.union(h.i, h.j)
        roots = {uf.find(v) for v in range(1, a.ambient_dim + 1)}
        return a.ambient_dim - len(roots)
    basis = _IntEchelon()
    for row in a.normal_rows(indices):
        basis.insert(row)
    return basis.rank


def closure(a: Arrangement, indices) -> Flat:
    """Smallest flat whose hyperplane set contains the given indices."""
    indices = sorted(set(indices))
    for k in indices:
        if not 0 <= k < a.m:
            raise IndexError(f"hyperplane index {k} out of range")
    if a.kind == "graphical":
        uf = _UnionFind(a.ambient_dim)
        for k in indices:
            h = a.hyperplanes[k]
            uf.union(h.i, h.j)
        comp = {}
        for v in range(1, a.ambient_dim + 1):
            comp.setdefault(uf.find(v), []).append(v)
        blocks = tuple(sorted((tuple(vs) for vs in comp.values()), key=lambda b: b[0]))
        root = {v: uf.find(v) for v in range(1, a.ambient_dim + 1)}
        members = frozenset(
            k for k, h in enumerate(a.hyperplanes) if root[h.i] == root[h.j]
        )
        return Flat(a.ambient_dim - len(blocks), members, blocks)
    basis = _IntEchelon()
    for row in a.normal_rows(indices):
        basis.insert(row)
    members = frozenset(
        k for k, row in enumerate(a.normal_rows(range(a.m))) if basis.contains(row)
    )
    return Flat(len(basis.rows), members, None)


def flat_of_blocks(a: Arrangement, blocks) -> Flat:
    """Graphical flat from a vertex partition whose blocks are connected in a."""
    if a.kind != "graphical":
        raise ValueError("vertex-partition flats exist only for graphical arrangements")
    seen = sorted(v for b in blocks for v in b)
    if seen != list(range(1, a.ambient_dim + 1)):
        raise ValueError("blocks must partition 1..n")
    where = {}
    for idx, b in enumerate(blocks):
        for v in b:
            where[v] = idx
    members = frozenset(
        k for k, h in enumerate(a.hyperplanes) if where[h.i] == where[h.j]
    )
    flat = closure(a, members)
    if flat.blocks != tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0])):
        raise ValueError("blocks are not connected in the arrangement's graph")
    return flat


def is_flat(a: Arrangement, x: Flat) -> bool:
    recomputed = closure(a, x.hyperplanes)
    return recomputed == x


def localization(a: Arrangement, x: Flat) -> frozenset:
    """All hyperplanes of a containing the flat x."""
    if not is_flat(a, x):
        raise ValueError("flat does not belong to this arrangement")
    return x.hyperplanes


def top_flat(a: Arrangement) -> Flat:
    return closure(a, range(a.m))


def bottom_flat(a: Arrangement) -> Flat:
    return closure(a, ())
