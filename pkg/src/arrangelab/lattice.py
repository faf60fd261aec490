"""Intersection lattices: construction, Moebius data, modularity, chains.

Lattices are built by closure BFS from the bottom flat: every flat of rank
k+1 is the closure of a rank-k flat together with one more hyperplane, which
holds in any geometric lattice.  Flats are deduplicated by canonical key and
kept sorted by (rank, key), so flat indices, joins and chain enumerations are
reproducible.  Localization sets are stored as bitmasks internally.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .arrangement import Arrangement, Flat, bottom_flat, closure, graphical_arrangement, product_arrangement
from .graphs import Graph, blocks
from .polynomial import IntPolynomial, integer_roots

FLAT_BOUND_ENV = "ARRANGELAB_FLAT_BOUND"
DEFAULT_FLAT_BOUND = 10**6


class FlatBoundExceeded(RuntimeError):
    """Raised when a lattice would exceed the configured flat-count bound."""


def flat_bound() -> int:
    raw = os.environ.get(FLAT_BOUND_ENV)
    if raw is None:
        return DEFAULT_FLAT_BOUND
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{FLAT_BOUND_ENV} must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class FlatChain:
    """Strictly increasing chain of flats starting at the bottom flat V."""

    flats: tuple

    def __len__(self):
        return len(self.flats)


class IntersectionLattice:
    """All flats of an arrangement with rank, order, Moebius and join/meet.

    Immutable after construction; the memo dictionaries used by joins and
    modularity queries are pure caches.
    """

    def __init__(self, arrangement: Arrangement, flats, mobius):
        self.arrangement = arrangement
        self.flats = tuple(flats)
        self.mobius = tuple(mobius)
        self._masks = tuple(_mask(f.hyperplanes) for f in self.flats)
        self._index_by_mask = {m: i for i, m in enumerate(self._masks)}
        self._index_by_key = {f.key(): i for i, f in enumerate(self.flats)}
        self._rank_buckets = {}
        for i, f in enumerate(self.flats):
            self._rank_buckets.setdefault(f.rank, []).append(i)
        self.top = self._rank_buckets[max(self._rank_buckets)][0]
        self._join_memo = {}
        self._modular = {}
        self._chi_memo = {}
        self._sig_memo = {}
        self._covers = None

    # -- basic queries ------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.flats)

    @property
    def rank(self) -> int:
        return self.flats[self.top].rank

    @property
    def ambient_dim(self) -> int:
        return self.arrangement.ambient_dim

    def flat_index(self, x: Flat) -> int:
        try:
            return self._index_by_key[x.key()]
        except KeyError:
            raise ValueError(f"flat {x.key()} is not in this lattice") from None

    def mask(self, i: int) -> int:
        return self._masks[i]

    def index_of_mask(self, m: int):
        return self._index_by_mask.get(m)

    def leq(self, i: int, j: int) -> bool:
        mi, mj = self._masks[i], self._masks[j]
        return mi & mj == mi

    def rank_of(self, i: int) -> int:
        return self.flats[i].rank

    def indices_of_rank(self, r: int) -> list:
        return list(self._rank_buckets.get(r, []))

    # -- join / meet --------------------------------------------------------

    def join_index(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        got = self._join_memo.get((i, j))
        if got is not None:
            return got
        union = self._masks[i] | self._masks[j]
        found = self._index_by_mask.get(union)
        if found is None:
            lo = max(self.rank_of(i), self.rank_of(j))
            for r in range(lo, self.rank + 1):
                for k in self._rank_buckets.get(r, []):
                    if self._masks[k] & union == union:
                        found = k
                        break
                if found is not None:
                    break
        self._join_memo[(i, j)] = found
        return found

    def meet_index(self, i: int, j: int) -> int:
        inter = self._masks[i] & self._masks[j]
        found = self._index_by_mask.get(inter)
        # intersections of closed sets are closed, so the lookup cannot miss
        assert found is not None, "meet of two flats is not a flat"
        return found

    # -- covers --------------------------------------------------------------

    def upper_covers(self, i: int) -> list:
        if self._covers is None:
            covers = []
            for k in range(self.size):
                mk, rk = self._masks[k], self.rank_of(k)
                ups = [
                    j
                    for j in self._rank_buckets.get(rk + 1, [])
                    if mk & self._masks[j] == mk
                ]
                covers.append(tuple(ups))
            self._covers = tuple(covers)
        return list(self._covers[i])

    # -- modularity ----------------------------------------------------------

    def is_modular_index(self, i: int) -> bool:
        got = self._modular.get(i)
        if got is not None:
            return got
        ri = self.rank_of(i)
        ok = True
        for j in range(self.size):
            rj = self.rank_of(j)
            if ri + rj != self.rank_of(self.join_index(i, j)) + self.rank_of(self.meet_index(i, j)):
                ok = False
                break
        self._modular[i] = ok
        return ok

    # -- characteristic polynomials -------------------------------------------

    def chi_of_flat(self, i: int) -> IntPolynomial:
        """Characteristic polynomial of the localized arrangement A_X.

        The lattice of A_X is the interval [V, X], so the global Moebius
        values restricted to flats below X are exactly the interval's.
        """
        got = self._chi_memo.get(i)
        if got is None:
            n = self.ambient_dim
            mi = self._masks[i]
            coeffs = [0] * (n + 1)
            for j in range(self.size):
                if self._masks[j] & mi == self._masks[j]:
                    coeffs[n - self.rank_of(j)] += self.mobius[j]
            got = IntPolynomial.from_coefficients(coeffs)
            self._chi_memo[i] = got
        return got

    def root_signature(self, i: int):
        """Sorted integer roots of chi(A_X) if it splits over Z, else None."""
        if i not in self._sig_memo:
            self._sig_memo[i] = integer_roots(self.chi_of_flat(i))
        return self._sig_memo[i]


def _mask(indices) -> int:
    m = 0
    for k in indices:
        m |= 1 << k
    return m


def build_lattice(a: Arrangement, bound=None) -> IntersectionLattice:
    """All flats of a, with order, rank and Moebius function.

    Raises FlatBoundExceeded when the number of flats passes the configured
    bound (ARRANGELAB_FLAT_BOUND or 10**6 by default).
    """
    if bound is None:
        bound = flat_bound()
    bottom = bottom_flat(a)
    flats = {bottom.key(): bottom}
    level = [bottom]
    while level:
        nxt = {}
        for x in level:
            have = x.hyperplanes
            for h in range(a.m):
                if h in have:
                    continue
                y = closure(a, set(have) | {h})
                key = y.key()
                if key not in flats and key not in nxt:
                    nxt[key] = y
                    if len(flats) + len(nxt) > bound:
                        raise FlatBoundExceeded(
                            f"lattice exceeds {bound} flats (set {FLAT_BOUND_ENV} to raise the bound)"
                        )
        flats.update(nxt)
        level = list(nxt.values())

    ordered = sorted(flats.values(), key=lambda f: (f.rank, f.key()))
    masks = [_mask(f.hyperplanes) for f in ordered]
    mobius = [0] * len(ordered)
    for i in range(len(ordered)):
        if i == 0:
            mobius[0] = 1
            continue
        total = 0
        mi = masks[i]
        for j in range(i):
            if masks[j] & mi == masks[j]:
                total += mobius[j]
        mobius[i] = -total
    return IntersectionLattice(a, ordered, mobius)


def characteristic_polynomial(l: IntersectionLattice) -> IntPolynomial:
    """chi(A, t) = sum over flats of mu(X) t^(n - r(X))."""
    return l.chi_of_flat(l.top)


def join(l: IntersectionLattice, x: Flat, y: Flat) -> Flat:
    return l.flats[l.join_index(l.flat_index(x), l.flat_index(y))]


def meet(l: IntersectionLattice, x: Flat, y: Flat) -> Flat:
    return l.flats[l.meet_index(l.flat_index(x), l.flat_index(y))]


def is_modular_element(l: IntersectionLattice, x: Flat) -> bool:
    """Ground-truth modularity: the rank identity against every flat."""
    return l.is_modular_index(l.flat_index(x))


def is_modular_brylawski(l: IntersectionLattice, x: Flat) -> bool:
    """Modularity via localizations: A_X must meet A_Y for every flat Y of
    rank r - r(X) + 1."""
    i = l.flat_index(x)
    target = l.rank - l.rank_of(i) + 1
    mi = l.mask(i)
    for j in l.indices_of_rank(target):
        if mi & l.mask(j) == 0:
            return False
    return True


def maximal_modular_chains(l: IntersectionLattice) -> list:
    """All maximal chains consisting entirely of modular flats.

    The search walks cover relations upward and prunes at any non-modular
    flat, which is sound because modularity is element-wise.
    """
    return _modular_chain_search(l, find_all=True)


def is_supersolvable(l: IntersectionLattice) -> bool:
    """True iff some maximal chain of modular elements exists."""
    return bool(_modular_chain_search(l, find_all=False))


def _modular_chain_search(l: IntersectionLattice, find_all: bool):
    chains = []
    if not l.is_modular_index(0):
        return chains

    def walk(path):
        i = path[-1]
        if i == l.top:
            chains.append(FlatChain(tuple(l.flats[k] for k in path)))
            return True
        for j in l.upper_covers(i):
            if l.is_modular_index(j):
                if walk(path + [j]) and not find_all:
                    return True
        return False

    walk([0])
    return chains


def all_maximal_chains(l: IntersectionLattice) -> list:
    """Every maximal chain of the lattice (no modularity filter)."""
    chains = []

    def walk(path):
        i = path[-1]
        if i == l.top:
            chains.append(FlatChain(tuple(l.flats[k] for k in path)))
            return
        for j in l.upper_covers(i):
            walk(path + [j])

    walk([0])
    return chains


def is_maximal_chain(l: IntersectionLattice, chain: FlatChain) -> bool:
    flats = chain.flats
    if not flats:
        return False
    try:
        idx = [l.flat_index(f) for f in flats]
    except ValueError:
        return False
    if idx[0] != 0 or idx[-1] != l.top:
        return False
    for i, j in zip(idx, idx[1:]):
        if not (l.leq(i, j) and l.rank_of(j) == l.rank_of(i) + 1):
            return False
    return len(flats) == l.rank + 1


def verify_geometric(l: IntersectionLattice) -> None:
    """Assert gradedness, semimodularity, atomicity and Moebius sign alternation."""
    n = l.size
    for i in range(n):
        if i != l.top and not l.upper_covers(i):
            raise AssertionError(f"flat {i} below top has no upper cover")
        # atomicity: each flat is the closure (= join) of the atoms below it
        back = closure(l.arrangement, l.flats[i].hyperplanes)
        if back.key() != l.flats[i].key():
            raise AssertionError(f"flat {i} is not closed")
        sign = (-1) ** l.rank_of(i) * l.mobius[i]
        if sign <= 0:
            raise AssertionError(f"Moebius sign alternation fails at flat {i}")
    for i in range(n):
        for j in range(i, n):
            jo = l.join_index(i, j)
            me = l.meet_index(i, j)
            if l.rank_of(i) + l.rank_of(j) < l.rank_of(jo) + l.rank_of(me):
                raise AssertionError(f"semimodularity fails at flats {i}, {j}")


# ---------------------------------------------------------------------------
# products and block decomposition


def product_iso_check(l1: IntersectionLattice, l2: IntersectionLattice,
                      l12: IntersectionLattice, modular_closure: bool = True) -> bool:
    """Verify that (X1, X2) -> X1 (+) X2 is a rank-preserving lattice isomorphism.

    l12 must be built from product_arrangement(a1, a2), so a1's hyperplanes
    occupy indices 0..m1-1 and a2's are shifted by m1.  With modular_closure
    the check also confirms that sums of modular elements are modular.
    """
    m1 = l1.arrangement.m
    if l12.size != l1.size * l2.size:
        return False
    image = {}
    for i1 in range(l1.size):
        for i2 in range(l2.size):
            mask = l1.mask(i1) | (l2.mask(i2) << m1)
            k = l12.index_of_mask(mask)
            if k is None:
                return False
            if l12.rank_of(k) != l1.rank_of(i1) + l2.rank_of(i2):
                return False
            image[(i1, i2)] = k
    if len(set(image.values())) != l12.size:
        return False
    pairs = list(image)
    for p in pairs:
        for q in pairs:
            componentwise = l1.leq(p[0], q[0]) and l2.leq(p[1], q[1])
            if componentwise != l12.leq(image[p], image[q]):
                return False
    if modular_closure:
        for (i1, i2), k in image.items():
            if l1.is_modular_index(i1) and l2.is_modular_index(i2):
                if not l12.is_modular_index(k):
                    return False
    return True


def lattice_iso_by_hyperplane_map(l1: IntersectionLattice, l2: IntersectionLattice,
                                  index_map) -> bool:
    """Check that relabeling hyperplanes by index_map maps l1's flats
    bijectively, rank- and order-preservingly onto l2's."""
    if l1.size != l2.size:
        return False
    image = []
    for i in range(l1.size):
        mask = 0
        for k in range(l1.arrangement.m):
            if l1.mask(i) >> k & 1:
                mask |= 1 << index_map[k]
        j = l2.index_of_mask(mask)
        if j is None or l2.rank_of(j) != l1.rank_of(i):
            return False
        image.append(j)
    if len(set(image)) != l2.size:
        return False
    for i in range(l1.size):
        for j in range(l1.size):
            if l1.leq(i, j) != l2.leq(image[i], image[j]):
                return False
    return True


def relabeled_block(block: Graph):
    """Restrict a block to its own vertex set, relabeled 1..k monotonically."""
    verts = sorted({v for e in block.edges for v in e})
    rename = {v: i + 1 for i, v in enumerate(verts)}
    g = Graph.from_edges(len(verts), [(rename[i], rename[j]) for i, j in block.edges])
    return g, verts


def block_product_check(g: Graph, bound=None) -> bool:
    """Verify the block decomposition of L(A_G) as a product of block lattices.

    Folds the blocks left to right through product_arrangement, checking the
    product isomorphism at each step, then matches the final product lattice
    against L(A_G) through the edge-index bijection.
    """
    blks = blocks(g)
    a_g = graphical_arrangement(g)
    l_g = build_lattice(a_g, bound)
    if not blks:
        return l_g.size == 1
    parts = []
    index_map = {}
    offset = 0
    for b in blks:
        rel, _ = relabeled_block(b)
        a_b = graphical_arrangement(rel)
        parts.append(a_b)
        for pos, (i, j) in enumerate(sorted(b.edges)):
            index_map[a_g.edge_index(i, j)] = offset + pos
        offset += a_b.m
    acc = parts[0]
    l_acc = build_lattice(acc, bound)
    for nxt in parts[1:]:
        l_nxt = build_lattice(nxt, bound)
        prod = product_arrangement(acc, nxt)
        l_prod = build_lattice(prod, bound)
        if not product_iso_check(l_acc, l_nxt, l_prod, modular_closure=False):
            return False
        acc, l_acc = prod, l_prod
    return lattice_iso_by_hyperplane_map(l_g, l_acc, index_map)


# ---------------------------------------------------------------------------
# serialization


def _flat_payload(l: IntersectionLattice, i: int) -> dict:
    f = l.flats[i]
    entry = {
        "index": i,
        "rank": f.rank,
        "mobius": l.mobius[i],
        "hyperplanes": sorted(f.hyperplanes),
        "covers": sorted(l.upper_covers(i)),
    }
    if f.blocks is not None:
        entry["blocks"] = [list(b) for b in f.blocks]
    return entry


def lattice_to_json(l: IntersectionLattice) -> dict:
    a = l.arrangement
    return {
        "kind": a.kind,
        "ambient_dim": a.ambient_dim,
        "hyperplanes": a.labels(),
        "rank": l.rank,
        "flat_count": l.size,
        "flats": [_flat_payload(l, i) for i in range(l.size)],
    }


def lattice_from_json(data: dict):
    """Rebuild (arrangement, lattice) from lattice_to_json output."""
    from .arrangement import GraphEdgeHyperplane, LinearHyperplane, canonical_normal

    kind = data["kind"]
    if kind == "graphical":
        hyps = []
        for label in data["hyperplanes"]:
            i, j = label.split("-")
            hyps.append(GraphEdgeHyperplane(int(i), int(j)))
        a = Arrangement(data["ambient_dim"], tuple(hyps), "graphical")
    else:
        hyps = tuple(
            LinearHyperplane(canonical_normal([int(c) for c in label.split()]))
            for label in data["hyperplanes"]
        )
        a = Arrangement(data["ambient_dim"], hyps, "general")
    flats = []
    for entry in data["flats"]:
        blocks_ = entry.get("blocks")
        flats.append(
            Flat(
                entry["rank"],
                frozenset(entry["hyperplanes"]),
                tuple(tuple(b) for b in blocks_) if blocks_ is not None else None,
            )
        )
    return a, IntersectionLattice(a, flats, [entry["mobius"] for entry in data["flats"]])


def _flat_label(l: IntersectionLattice, i: int) -> str:
    f = l.flats[i]
    if f.blocks is not None:
        return "|".join(",".join(str(v) for v in b) for b in f.blocks)
    return "{" + ",".join(str(k) for k in sorted(f.hyperplanes)) + "}"


def lattice_to_dot(l: IntersectionLattice) -> str:
    """Hasse diagram in DOT format, bottom-up."""
    lines = ["digraph lattice {", "  rankdir=BT;", "  node [shape=box];"]
    for i in range(l.size):
        label = _flat_label(l, i)
        lines.append(f'  f{i} [label="{label}\\nr={l.rank_of(i)} mu={l.mobius[i]}"];')
    for i in range(l.size):
        for j in l.upper_covers(i):
            lines.append(f"  f{i} -> f{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
