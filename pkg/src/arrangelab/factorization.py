"""Nice partitions and their correspondence with maximal modular chains.

A set partition pi of the hyperplanes is nice when every section (a choice
of at most one hyperplane per part) is independent and every flat X above V
has some part meeting its localization A_X exactly once.  For graphical
arrangements every nice partition arises from a maximal modular chain; the
constructive direction orients each block's edges away from the parts' star
vertices and reads the chain off a topological order of that orientation.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .arrangement import Arrangement, Flat, closure, graphical_arrangement, rank_of_subset
from .graphs import (
    DirectedCycle,
    EliminationOrdering,
    Graph,
    blocks,
    chordality,
    simple_cycles,
    topological_order,
)
from .lattice import (
    FlatChain,
    IntersectionLattice,
    all_maximal_chains,
    build_lattice,
    is_maximal_chain,
    is_modular_brylawski,
    is_modular_element,
)
from .polynomial import IntPolynomial

DEFAULT_ENUMERATION_BOUND = 15
CIRCUIT_SEARCH_BOUND = 16


class EnumerationBoundExceeded(RuntimeError):
    """Raised when a brute-force search would exceed its configured bound."""


class NotNicePartitionError(ValueError):
    """Raised when an operation requires a nice partition and got something else."""

    def __init__(self, certificate):
        super().__init__("partition is not nice")
        self.certificate = certificate


@dataclass(frozen=True)
class ArrangementPartition:
    """Unordered set partition of the hyperplane indices 0..m-1.

    Parts are stored as frozensets sorted by their minimum index, which makes
    equality of unordered partitions plain equality.
    """

    parts: tuple

    @staticmethod
    def from_parts(parts) -> "ArrangementPartition":
        canon = []
        seen = set()
        for p in parts:
            p = frozenset(p)
            if not p:
                raise ValueError("empty part in partition")
            if p & seen:
                raise ValueError("parts are not disjoint")
            seen |= p
            canon.append(p)
        canon.sort(key=min)
        return ArrangementPartition(tuple(canon))

    @property
    def length(self) -> int:
        return len(self.parts)

    def sorted_lists(self) -> list:
        return [sorted(p) for p in self.parts]


def validate_partition(a: Arrangement, pi: ArrangementPartition) -> None:
    covered = set()
    for p in pi.parts:
        covered |= p
    if covered != set(range(a.m)):
        raise ValueError("partition does not cover the hyperplanes 0..m-1 exactly")


def partition_labels(a: Arrangement, pi: ArrangementPartition) -> list:
    """JSON form: parts as sorted lists of hyperplane labels."""
    return [[a.hyperplanes[k].label for k in sorted(p)] for p in pi.parts]


# ---------------------------------------------------------------------------
# sections, circuits, independence


def sections(pi: ArrangementPartition):
    """All sections of pi as sorted index tuples, including the empty one.

    A partition with part sizes s_1..s_l has prod(s_i + 1) sections.
    """
    choices = [[None] + sorted(p) for p in pi.parts]
    for combo in itertools.product(*choices):
        yield tuple(sorted(k for k in combo if k is not None))


@functools.lru_cache(maxsize=4096)
def circuits(a: Arrangement) -> tuple:
    """Inclusion-minimal dependent subsets, as sorted index tuples.

    Graphical circuits are the graph's cycles.  For general arrangements the
    search enumerates subsets by size, which is only viable for small m.
    """
    if a.kind == "graphical":
        g = _graph_of(a)
        index = {(h.i, h.j): k for k, h in enumerate(a.hyperplanes)}
        out = []
        for cyc in simple_cycles(g):
            k = len(cyc)
            edges = [tuple(sorted((cyc[t], cyc[(t + 1) % k]))) for t in range(k)]
            out.append(tuple(sorted(index[e] for e in edges)))
        return tuple(sorted(out, key=lambda c: (len(c), c)))
    if a.m > CIRCUIT_SEARCH_BOUND:
        raise EnumerationBoundExceeded(
            f"circuit search for general arrangements is bounded at m <= {CIRCUIT_SEARCH_BOUND}"
        )
    r = rank_of_subset(a, range(a.m))
    found = []
    for size in range(2, r + 2):
        for combo in itertools.combinations(range(a.m), size):
            s = set(combo)
            if any(set(c) <= s for c in found):
                continue
            if rank_of_subset(a, combo) < size:
                found.append(combo)
    return tuple(sorted(found, key=lambda c: (len(c), c)))


def _graph_of(a: Arrangement) -> Graph:
    return Graph.from_edges(a.ambient_dim, [(h.i, h.j) for h in a.hyperplanes])


def is_independent_partition(a: Arrangement, pi: ArrangementPartition):
    """(True, None) or (False, minimal dependent section).

    A dependent section contains a circuit, and a circuit whose elements lie
    in pairwise distinct parts is itself a section, so it suffices to look
    for a "rainbow" circuit.
    """
    validate_partition(a, pi)
    part_of = {}
    for idx, p in enumerate(pi.parts):
        for k in p:
            part_of[k] = idx
    for circ in circuits(a):
        owners = [part_of[k] for k in circ]
        if len(set(owners)) == len(owners):
            return False, tuple(circ)
    return True, None


@dataclass(frozen=True)
class NiceCertificate:
    """Verdict of the niceness test, with a re-checkable failure witness."""

    nice: bool
    dependent_section: tuple = None
    uncovered_flat: Flat = None


def _part_masks(pi: ArrangementPartition) -> list:
    masks = []
    for p in pi.parts:
        m = 0
        for k in p:
            m |= 1 << k
        masks.append(m)
    return masks


def is_nice(a: Arrangement, l: IntersectionLattice, pi: ArrangementPartition) -> NiceCertificate:
    """Nice = independent and every flat X > V has a part meeting A_X once."""
    ok, witness = is_independent_partition(a, pi)
    if not ok:
        return NiceCertificate(False, dependent_section=witness)
    masks = _part_masks(pi)
    for i in range(l.size):
        if l.rank_of(i) == 0:
            continue
        mi = l.mask(i)
        if not any((pm & mi).bit_count() == 1 for pm in masks):
            return NiceCertificate(False, uncovered_flat=l.flats[i])
    return NiceCertificate(True)


def localize_partition(a: Arrangement, pi: ArrangementPartition, x: Flat) -> ArrangementPartition:
    """Parts intersected with A_X, empty intersections dropped."""
    ax = x.hyperplanes
    parts = [p & ax for p in pi.parts]
    return ArrangementPartition.from_parts([p for p in parts if p])


def verify_factorization(a: Arrangement, l: IntersectionLattice, pi: ArrangementPartition):
    """Check chi(A_X, t) = t^(n-l) prod_i (t - |pi_i cap A_X|) for every flat.

    Returns (True, None) or (False, first failing flat).  At X = V every
    count is zero and both sides are t^n, so the bottom flat is included.
    """
    validate_partition(a, pi)
    n = a.ambient_dim
    ell = pi.length
    masks = _part_masks(pi)
    for i in range(l.size):
        mi = l.mask(i)
        counts = [(pm & mi).bit_count() for pm in masks]
        expected = l.root_signature(i)
        rhs = sorted(counts + [0] * (n - ell))
        if expected is not None:
            if list(expected) != rhs:
                return False, l.flats[i]
            continue
        # chi does not split over the integers; compare polynomials directly
        poly = IntPolynomial.monomial(1, n - ell)
        for c in counts:
            poly = poly * IntPolynomial.linear_root(c)
        if poly != l.chi_of_flat(i):
            return False, l.flats[i]
    return True, None


# ---------------------------------------------------------------------------
# chains <-> partitions


def chain_to_partition(a: Arrangement, chain: FlatChain) -> ArrangementPartition:
    """Parts A_{X_i} minus A_{X_{i-1}} along a maximal chain."""
    flats = chain.flats
    if not flats or flats[0].rank != 0:
        raise ValueError("chain must start at the bottom flat V")
    top_rank = rank_of_subset(a, range(a.m))
    ranks = [f.rank for f in flats]
    if ranks != list(range(len(flats))) or ranks[-1] != top_rank:
        raise ValueError("chain is not maximal")
    parts = []
    for prev, cur in zip(flats, flats[1:]):
        if not prev.hyperplanes < cur.hyperplanes:
            raise ValueError("chain is not increasing")
        parts.append(cur.hyperplanes - prev.hyperplanes)
    return ArrangementPartition.from_parts(parts)


def star_vertex(g: Graph, part, partition: ArrangementPartition = None) -> int:
    """The vertex shared by all edges of a part of a nice partition.

    For parts of size >= 2 the star vertex is forced.  A singleton part has
    two candidate vertices; they can only be told apart with the whole
    partition, so `partition` is required in that case.
    """
    a = graphical_arrangement(g)
    edges = [(a.hyperplanes[k].i, a.hyperplanes[k].j) for k in part]
    if not edges:
        raise ValueError("empty part has no star vertex")
    if len(edges) == 1:
        if partition is None:
            raise ValueError("singleton part needs the full partition to fix its star vertex")
        plan = chain_construction_plan(g, partition)
        target = frozenset(part)
        for blk in plan.block_plans:
            for p, v in blk.centers.items():
                if p == target:
                    return v
        raise ValueError("part does not belong to the given partition")
    common = set(range(1, g.n + 1))
    for i, j in edges:
        common &= {i, j}
    if len(common) != 1:
        raise ValueError("edges of the part share no common vertex; the partition is not nice")
    return next(iter(common))


@dataclass(frozen=True)
class BlockPlan:
    """Construction data for one doubly connected block."""

    vertices: tuple
    centers: dict  # part (frozenset of hyperplane indices) -> star vertex
    elimination_order: tuple
    steps: tuple  # hyperplane indices intersected, in chain order


@dataclass(frozen=True)
class ChainPlan:
    chain: FlatChain
    block_plans: tuple


def _orient_block(g: Graph, a: Arrangement, block_parts: list, singleton_center: int):
    """Arcs of D(G) for one block given the singleton's chosen center."""
    centers = {}
    arcs = []
    for part in block_parts:
        edges = [(a.hyperplanes[k].i, a.hyperplanes[k].j) for k in part]
        if len(edges) == 1:
            center = singleton_center
        else:
            common = set(edges[0])
            for e in edges[1:]:
                common &= set(e)
            if len(common) != 1:
                raise NotNicePartitionError(None)
            center = next(iter(common))
        centers[frozenset(part)] = center
        for i, j in edges:
            if center not in (i, j):
                raise NotNicePartitionError(None)
            arcs.append((center, i + j - center))
    return centers, arcs


def _plan_block(g: Graph, a: Arrangement, block_parts: list) -> BlockPlan:
    verts = sorted({v for part in block_parts
                    for k in part
                    for v in (a.hyperplanes[k].i, a.hyperplanes[k].j)})
    vset = set(verts)
    singles = [part for part in block_parts if len(part) == 1]
    if len(singles) != 1:
        raise NotNicePartitionError(None)
    (k,) = singles[0]
    h = a.hyperplanes[k]
    # the paper leaves the singleton's vertex free; trying the larger endpoint
    # first reproduces the worked example, the retry covers the other case
    for candidate in (h.j, h.i):
        try:
            centers, arcs = _orient_block(g, a, block_parts, candidate)
            order = topological_order(g.n, arcs)
            if isinstance(order, DirectedCycle):
                continue
            order = tuple(v for v in order if v in vset)
            outgoing = {v: [] for v in verts}
            for u, w in arcs:
                outgoing[u].append(w)
            steps = []
            for v in reversed(order[:-1]):
                heads = sorted(outgoing[v])
                if not heads:
                    raise NotNicePartitionError(None)
                steps.append(a.edge_index(v, heads[0]))
        except NotNicePartitionError:
            continue
        return BlockPlan(tuple(verts), centers, order, tuple(steps))
    raise NotNicePartitionError(None)


def chain_construction_plan(g: Graph, pi: ArrangementPartition,
                            l: IntersectionLattice = None) -> ChainPlan:
    """Reconstruct a maximal modular chain inducing the nice partition pi.

    Per doubly connected block: find each part's star vertex, orient edges
    away from the star vertices, topologically order the orientation and
    intersect one outgoing hyperplane per vertex in reverse order.  Blocks
    are composed in order of their smallest edge.
    """
    a = graphical_arrangement(g)
    if l is None:
        l = build_lattice(a)
    cert = is_nice(a, l, pi)
    if not cert.nice:
        raise NotNicePartitionError(cert)

    block_of_edge = {}
    blks = blocks(g)
    for bi, b in enumerate(blks):
        for e in b.edges:
            block_of_edge[e] = bi
    parts_by_block = [[] for _ in blks]
    for part in pi.parts:
        owners = {block_of_edge[(a.hyperplanes[k].i, a.hyperplanes[k].j)] for k in part}
        # a part of a nice partition cannot straddle two blocks
        assert len(owners) == 1, "nice partition part spans multiple blocks"
        parts_by_block[next(iter(owners))].append(part)

    plans = []
    steps = []
    for block_parts in parts_by_block:
        plan = _plan_block(g, a, sorted(block_parts, key=min))
        plans.append(plan)
        steps.extend(plan.steps)

    flats = [l.flats[0]]
    acc = set()
    for k in steps:
        acc.add(k)
        flats.append(closure(a, acc))
    chain = FlatChain(tuple(flats))
    assert is_maximal_chain(l, chain)
    return ChainPlan(chain, tuple(plans))


def partition_to_modular_chain(g: Graph, pi: ArrangementPartition,
                               l: IntersectionLattice = None) -> FlatChain:
    """A maximal modular chain whose induced partition is pi (pi must be nice)."""
    return chain_construction_plan(g, pi, l).chain


def chains_inducing_partition(a: Arrangement, l: IntersectionLattice,
                              pi: ArrangementPartition) -> list:
    """All maximal modular chains whose induced partition equals pi.

    Several chains can induce the same partition; nothing beyond brute force
    is known about their number, so this simply filters the chain list.
    """
    from .lattice import maximal_modular_chains

    return [c for c in maximal_modular_chains(l) if chain_to_partition(a, c) == pi]


# ---------------------------------------------------------------------------
# enumeration


def iter_set_partitions(items):
    """All set partitions of a sequence, in restricted-growth order."""
    items = list(items)
    if not items:
        yield []
        return

    def rec(i, parts):
        if i == len(items):
            yield [list(p) for p in parts]
            return
        x = items[i]
        for p in parts:
            p.append(x)
            yield from rec(i + 1, parts)
            p.pop()
        parts.append([x])
        yield from rec(i + 1, parts)
        parts.pop()

    yield from rec(0, [])


def enumerate_nice_partitions(a: Arrangement, l: IntersectionLattice,
                              max_hyperplanes: int = DEFAULT_ENUMERATION_BOUND) -> list:
    """All nice partitions of a, canonically ordered; empty iff not factored.

    The backtracking search never puts two hyperplanes H, K in one part when
    the rank-2 flat they span has exactly two hyperplanes, and never lets a
    part swallow a whole rank-2 localization: a rank-2 flat X forces some
    part to meet A_X exactly once, so both states are dead ends.  Together
    with the cap of rank(A) many parts (a full section must be independent)
    the search stays feasible through K6.
    """
    m = a.m
    if m == 0:
        return [ArrangementPartition(())]
    if m > max_hyperplanes:
        raise EnumerationBoundExceeded(
            f"nice-partition enumeration is bounded at m <= {max_hyperplanes}"
        )
    top_rank = l.rank

    pair_flat = {}
    rank2_sets = {}
    for h, k in itertools.combinations(range(m), 2):
        members = closure(a, (h, k)).hyperplanes
        pair_flat[(h, k)] = members
        rank2_sets[frozenset(members)] = True
    rank2_containing = {h: [] for h in range(m)}
    for members in rank2_sets:
        for h in members:
            rank2_containing[h].append(members)

    def compatible(part, cand):
        for other in part:
            pair = pair_flat[(other, cand) if other < cand else (cand, other)]
            if len(pair) == 2:
                return False
        after = part | {cand}
        for members in rank2_containing[cand]:
            if members <= after:
                return False
        return True

    results = []
    parts = []

    def assign(h):
        if h == m:
            pi = ArrangementPartition.from_parts([frozenset(p) for p in parts])
            if is_nice(a, l, pi).nice:
                results.append(pi)
            return
        for p in parts:
            if compatible(p, h):
                p.add(h)
                assign(h + 1)
                p.remove(h)
        if len(parts) < top_rank:
            parts.append({h})
            assign(h + 1)
            parts.pop()

    assign(0)
    results.sort(key=lambda pi: tuple(tuple(sorted(p)) for p in pi.parts))
    return results


# ---------------------------------------------------------------------------
# theorem suite


@dataclass
class CheckOutcome:
    status: str  # "pass" | "fail" | "skipped"
    detail: str = ""
    witness: dict = None

    def as_dict(self) -> dict:
        out = {"status": self.status, "detail": self.detail}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


ALL_CHECKS = ("T1", "T2", "T3", "T4")
DEFAULT_BELL_BOUND = 115975  # Bell(10), the K5 worst case


def _bell(m: int) -> int:
    row = [1]
    for _ in range(m):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def theorem_suite(g: Graph, checks=ALL_CHECKS, bell_bound: int = DEFAULT_BELL_BOUND,
                  enum_bound: int = DEFAULT_ENUMERATION_BOUND, lattice_bound=None) -> dict:
    """Run the four theorem checks on one graph; returns name -> CheckOutcome.

    T1: a nice partition exists iff the graph is chordal.
    T2: every nice partition round-trips through a maximal modular chain.
    T3: niceness agrees with the characteristic-polynomial factorization test
        on every set partition of the hyperplanes.
    T4: a maximal chain induces a nice partition iff it is modular.
    """
    a = graphical_arrangement(g)
    l = build_lattice(a, lattice_bound)
    out = {}

    nice_list = None
    if "T1" in checks or "T2" in checks:
        try:
            nice_list = enumerate_nice_partitions(a, l, enum_bound)
        except EnumerationBoundExceeded as exc:
            for name in ("T1", "T2"):
                if name in checks:
                    out[name] = CheckOutcome("skipped", str(exc))

    if "T1" in checks and nice_list is not None:
        chordal = isinstance(chordality(g), EliminationOrdering)
        if chordal == bool(nice_list):
            out["T1"] = CheckOutcome("pass", f"chordal={chordal}, nice_partitions={len(nice_list)}")
        else:
            out["T1"] = CheckOutcome(
                "fail",
                "chordality and existence of nice partitions disagree",
                {"chordal": chordal, "nice_partitions": len(nice_list)},
            )

    if "T2" in checks and nice_list is not None:
        bad = None
        for pi in nice_list:
            chain = partition_to_modular_chain(g, pi, l)
            if not is_maximal_chain(l, chain):
                bad = (pi, "chain not maximal")
                break
            if not all(
                is_modular_element(l, f) and is_modular_brylawski(l, f) for f in chain.flats
            ):
                bad = (pi, "chain element not modular")
                break
            if chain_to_partition(a, chain) != pi:
                bad = (pi, "induced partition differs")
                break
        if bad is None:
            out["T2"] = CheckOutcome("pass", f"{len(nice_list)} nice partitions round-trip")
        else:
            out["T2"] = CheckOutcome(
                "fail", bad[1], {"partition": partition_labels(a, bad[0])}
            )

    if "T3" in checks:
        if _bell(a.m) > bell_bound:
            out["T3"] = CheckOutcome(
                "skipped", f"Bell({a.m}) exceeds the bound {bell_bound}"
            )
        else:
            bad = None
            count = 0
            for raw in iter_set_partitions(range(a.m)):
                pi = ArrangementPartition.from_parts([frozenset(p) for p in raw])
                count += 1
                nice = is_nice(a, l, pi).nice
                fact = verify_factorization(a, l, pi)[0]
                if nice != fact:
                    bad = (pi, nice, fact)
                    break
            if bad is None:
                out["T3"] = CheckOutcome("pass", f"{count} partitions agree")
            else:
                out["T3"] = CheckOutcome(
                    "fail",
                    "is_nice and verify_factorization disagree",
                    {
                        "partition": partition_labels(a, bad[0]),
                        "is_nice": bad[1],
                        "verify_factorization": bad[2],
                    },
                )

    if "T4" in checks:
        bad = None
        count = 0
        for chain in all_maximal_chains(l):
            count += 1
            pi = chain_to_partition(a, chain)
            nice = is_nice(a, l, pi).nice
            modular = all(is_modular_element(l, f) for f in chain.flats)
            if nice != modular:
                bad = (chain, nice, modular)
                break
        if bad is None:
            out["T4"] = CheckOutcome("pass", f"{count} maximal chains agree")
        else:
            out["T4"] = CheckOutcome(
                "fail",
                "niceness of the induced partition and chain modularity disagree",
                {
                    "chain": [sorted(f.hyperplanes) for f in bad[0].flats],
                    "nice": bad[1],
                    "modular": bad[2],
                },
            )

    return out
