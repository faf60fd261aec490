"""Independent brute-force oracles and exhaustive verification campaigns.

Everything here deliberately avoids the main computation paths: chromatic
polynomials come from deletion-contraction instead of the lattice Moebius
sum, ranks from rational Gaussian elimination instead of union-find, and
modularity from subspace sums instead of the rank identity.  The campaign
drives the theorem suite over an internally generated corpus of pairwise
non-isomorphic connected graphs (or over graph6 input).
"""

from __future__ import annotations

import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .arrangement import Arrangement, Flat, closure, rank_of_subset
from .factorization import (
    ALL_CHECKS,
    DEFAULT_BELL_BOUND,
    DEFAULT_ENUMERATION_BOUND,
    ArrangementPartition,
    sections,
    theorem_suite,
    validate_partition,
)
from .graphs import Graph, is_connected, parse_graph6, to_graph6
from .lattice import IntersectionLattice
from .polynomial import IntPolynomial

DC_EDGE_BOUND = 30


# ---------------------------------------------------------------------------
# canonical forms and the graph corpus


def _wl_colors(n, adj):
    colors = {v: 0 for v in range(1, n + 1)}
    while True:
        sig = {
            v: (colors[v], tuple(sorted(colors[w] for w in adj[v])))
            for v in range(1, n + 1)
        }
        ranks = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new = {v: ranks[sig[v]] for v in colors}
        if new == colors:
            return colors
        colors = new


def canonical_key(g: Graph):
    """Isomorphism-invariant key: the minimum edge bitstring over all vertex
    orders consistent with the stable refinement coloring."""
    n = g.n
    adj = {v: set() for v in range(1, n + 1)}
    for i, j in g.edges:
        adj[i].add(j)
        adj[j].add(i)
    colors = _wl_colors(n, adj)
    classes = {}
    for v, c in colors.items():
        classes.setdefault(c, []).append(v)
    ordered_classes = [sorted(classes[c]) for c in sorted(classes)]
    best = None
    for perm_parts in itertools.product(
        *(itertools.permutations(cl) for cl in ordered_classes)
    ):
        order = [v for part in perm_parts for v in part]
        bits = 0
        k = 0
        for a in range(n):
            va = order[a]
            nbrs = adj[va]
            for b in range(a + 1, n):
                if order[b] in nbrs:
                    bits |= 1 << k
                k += 1
        if best is None or bits < best:
            best = bits
    return (n, best or 0)


def _from_key(key) -> Graph:
    n, bits = key
    edges = []
    k = 0
    for a in range(n):
        for b in range(a + 1, n):
            if bits >> k & 1:
                edges.append((a + 1, b + 1))
            k += 1
    return Graph.from_edges(n, edges)


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple:
    """All graphs on n vertices up to isomorphism, grown one vertex at a time."""
    if n == 0:
        return (Graph(0, frozenset()),)
    if n == 1:
        return (Graph(1, frozenset()),)
    keys = set()
    for g in all_graphs(n - 1):
        base = list(g.edges)
        for nbrs in itertools.product((0, 1), repeat=n - 1):
            extra = [(v, n) for v in range(1, n) if nbrs[v - 1]]
            keys.add(canonical_key(Graph.from_edges(n, base + extra)))
    return tuple(_from_key(k) for k in sorted(keys))


def connected_graphs(n: int) -> tuple:
    return tuple(g for g in all_graphs(n) if is_connected(g))


# ---------------------------------------------------------------------------
# chromatic polynomial by deletion-contraction

_chromatic_memo = {}


def chromatic_polynomial_dc(g: Graph, max_edges: int = DC_EDGE_BOUND) -> IntPolynomial:
    """Chromatic polynomial by deletion-contraction, independent of any lattice.

    Contraction merges the endpoints and collapses parallel edges.  Results
    are memoized on the isomorphism class, which keeps dense graphs cheap.
    """
    if g.m > max_edges:
        raise ValueError(f"deletion-contraction is bounded at {max_edges} edges")
    return _chromatic(g)


def _chromatic(g: Graph) -> IntPolynomial:
    if not g.edges:
        return IntPolynomial.monomial(1, g.n)
    key = canonical_key(g)
    got = _chromatic_memo.get(key)
    if got is not None:
        return got
    i, j = min(g.edges)
    deleted = Graph(g.n, g.edges - {(i, j)})
    mapped = set()
    for u, v in deleted.edges:
        u2 = i if u == j else u
        v2 = i if v == j else v
        u2 = u2 if u2 < j else u2 - 1
        v2 = v2 if v2 < j else v2 - 1
        if u2 != v2:
            mapped.add((min(u2, v2), max(u2, v2)))
    contracted = Graph.from_edges(g.n - 1, mapped)
    out = _chromatic(deleted) - _chromatic(contracted)
    _chromatic_memo[key] = out
    return out


# ---------------------------------------------------------------------------
# rank and modularity oracles (rational elimination / subspace sums)


def _fraction_echelon(rows):
    """Reduced echelon over Fraction; returns list of (pivot_col, row)."""
    basis = []
    for row in rows:
        row = [Fraction(x) for x in row]
        for col, b in basis:
            if row[col] != 0:
                f = row[col] / b[col]
                row = [x - f * y for x, y in zip(row, b)]
        pivot = next((c for c, x in enumerate(row) if x != 0), None)
        if pivot is None:
            continue
        row = [x / row[pivot] for x in row]
        basis = [
            (c, [x - b[pivot] * y for x, y in zip(b, row)] if b[pivot] != 0 else b)
            for c, b in basis
        ]
        basis.append((pivot, row))
        basis.sort(key=lambda item: item[0])
    return basis


def naive_rank(a: Arrangement, indices) -> int:
    """Exact matrix rank of the chosen normals via Fraction elimination."""
    rows = a.normal_rows(sorted(set(indices)))
    return len(_fraction_echelon(rows))


def _nullspace(rows, dim):
    """Basis of the solution space of rows . x = 0, over Fraction."""
    basis = _fraction_echelon(rows)
    pivots = [c for c, _ in basis]
    free = [c for c in range(dim) if c not in pivots]
    out = []
    for f in free:
        vec = [Fraction(0)] * dim
        vec[f] = Fraction(1)
        for c, row in basis:
            vec[c] = -row[f]
        out.append(vec)
    return out


def naive_modular(a: Arrangement, l: IntersectionLattice, x: Flat) -> bool:
    """Modularity via subspace sums: X + Y must itself be a flat for every Y.

    Works on general-kind arrangements only, where subspaces are explicit
    solution spaces of the normal equations.
    """
    if a.kind != "general":
        raise ValueError("naive_modular needs a general-kind arrangement; use to_general")
    n = a.ambient_dim
    all_rows = a.normal_rows(range(a.m))
    bx = _nullspace(a.normal_rows(sorted(x.hyperplanes)), n)
    for y in l.flats:
        by = _nullspace(a.normal_rows(sorted(y.hyperplanes)), n)
        span = _fraction_echelon(bx + by)
        dim_sum = len(span)
        containing = [
            row
            for row in all_rows
            if all(sum(Fraction(c) * v for c, v in zip(row, vec)) == 0 for _, vec in span)
        ]
        if n - len(_fraction_echelon(containing)) != dim_sum:
            return False
    return True


def independent_by_sections(a: Arrangement, pi: ArrangementPartition) -> bool:
    """Brute-force independence: check rank(S) = |S| for every section."""
    validate_partition(a, pi)
    return all(rank_of_subset(a, s) == len(s) for s in sections(pi))


def enumerate_flats_by_closure(a: Arrangement) -> set:
    """Closure of every hyperplane subset; the set of flat keys.

    Exponential in m; this is the independent oracle for lattice sizes.
    """
    if a.m > 20:
        raise ValueError("closure enumeration is bounded at m <= 20")
    out = set()
    for size in range(a.m + 1):
        for combo in itertools.combinations(range(a.m), size):
            out.add(closure(a, combo).key())
    return out


def brute_force_chordal(g: Graph) -> bool:
    """Try every vertex ordering as an elimination ordering (n <= 7)."""
    from .graphs import is_elimination_ordering

    if g.n > 7:
        raise ValueError("brute-force chordality is bounded at n <= 7")
    return any(
        is_elimination_ordering(g, order)
        for order in itertools.permutations(range(1, g.n + 1))
    )


# ---------------------------------------------------------------------------
# verification campaign


class CampaignBoundError(RuntimeError):
    """Requested campaign exceeds the supported resource bounds."""


@dataclass
class GraphResult:
    graph6: str
    n: int
    m: int
    checks: dict

    def as_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "checks": {name: out.as_dict() for name, out in self.checks.items()},
        }


@dataclass
class CampaignReport:
    max_n: int
    checks: tuple
    graphs_checked: int = 0
    counts_by_n: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    skipped: list = field(default_factory=list)
    results: list = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        if self.failures:
            return 1
        if self.skipped:
            return 2
        return 0

    def as_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "checks": list(self.checks),
            "graphs_checked": self.graphs_checked,
            "counts_by_n": {str(k): v for k, v in sorted(self.counts_by_n.items())},
            "failures": self.failures,
            "skipped": self.skipped,
            "exit_code": self.exit_code,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True)


def _suite_job(args):
    g6, checks, bell_bound, enum_bound = args
    g = parse_graph6(g6)
    outcome = theorem_suite(g, checks=checks, bell_bound=bell_bound, enum_bound=enum_bound)
    return GraphResult(g6, g.n, g.m, outcome)


def campaign(max_n: int, checks=ALL_CHECKS, corpus_text: str = None,
             bell_bound: int = DEFAULT_BELL_BOUND,
             enum_bound: int = DEFAULT_ENUMERATION_BOUND,
             workers: int = 1) -> CampaignReport:
    """Run the theorem suite over all connected graphs with at most max_n
    vertices (or over a graph6 corpus) and aggregate pass/fail with witnesses.

    Exit code contract: 0 all pass, 1 counterexample found, 2 a requested
    check was skipped for resource bounds.
    """
    checks = tuple(c for c in ALL_CHECKS if c in set(checks))
    if not checks:
        raise CampaignBoundError("no valid checks requested (expected a subset of T1..T4)")
    if max_n > 7 and any(c in checks for c in ("T1", "T2", "T4")):
        raise CampaignBoundError("T1/T2/T4 campaigns are bounded at max_n <= 7")

    if corpus_text is not None:
        graphs = [parse_graph6(line) for line in corpus_text.splitlines() if line.strip()]
    else:
        graphs = [g for n in range(1, max_n + 1) for g in connected_graphs(n)]

    report = CampaignReport(max_n=max_n, checks=checks)
    jobs = [(to_graph6(g), checks, bell_bound, enum_bound) for g in graphs]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_suite_job, jobs))
    else:
        results = [_suite_job(job) for job in jobs]

    for res in results:
        report.graphs_checked += 1
        report.counts_by_n[res.n] = report.counts_by_n.get(res.n, 0) + 1
        report.results.append(res)
        for name, out in res.checks.items():
            if out.status == "fail":
                report.failures.append({"graph6": res.graph6, "check": name, **out.as_dict()})
            elif out.status == "skipped":
                report.skipped.append({"graph6": res.graph6, "check": name, "detail": out.detail})
    return report
