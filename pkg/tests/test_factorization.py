import pytest

from arrangelab.arrangement import (
    bottom_flat,
    closure,
    graphical_arrangement,
    top_flat,
)
from arrangelab.factorization import (
    ArrangementPartition,
    EnumerationBoundExceeded,
    NotNicePartitionError,
    chain_construction_plan,
    chain_to_partition,
    circuits,
    enumerate_nice_partitions,
    is_independent_partition,
    is_nice,
    iter_set_partitions,
    localize_partition,
    partition_labels,
    partition_to_modular_chain,
    sections,
    star_vertex,
    theorem_suite,
    verify_factorization,
)
from arrangelab.graphs import Graph
from arrangelab.lattice import (
    FlatChain,
    build_lattice,
    is_maximal_chain,
    is_modular_brylawski,
    is_modular_element,
)
from arrangelab.oracle import independent_by_sections
from conftest import part_of_edges


def setup(g):
    a = graphical_arrangement(g)
    return a, build_lattice(a)


def all_partitions_of(a):
    for raw in iter_set_partitions(range(a.m)):
        yield ArrangementPartition.from_parts([frozenset(p) for p in raw])


# -- partitions and sections ------------------------------------------------------


def test_partition_canonical_form():
    p1 = ArrangementPartition.from_parts([{2, 1}, {0}])
    p2 = ArrangementPartition.from_parts([{0}, {1, 2}])
    assert p1 == p2
    assert p1.parts[0] == frozenset({0})
    with pytest.raises(ValueError):
        ArrangementPartition.from_parts([{0}, {0, 1}])
    with pytest.raises(ValueError):
        ArrangementPartition.from_parts([set()])


def test_section_count_formula(fig2_setup):
    a, l, pi = fig2_setup
    # part sizes 1, 2, 3, 3 -> 2*3*4*4 sections including the empty one
    assert sum(1 for _ in sections(pi)) == 96
    assert () in set(sections(pi))


def test_iter_set_partitions_counts():
    assert sum(1 for _ in iter_set_partitions(range(4))) == 15
    assert sum(1 for _ in iter_set_partitions(range(5))) == 52
    assert list(iter_set_partitions([])) == [[]]


# -- independence ------------------------------------------------------------------


def test_triangle_partition_dependent(k3):
    a, l = setup(k3)
    pi = ArrangementPartition.from_parts([{0}, {1}, {2}])
    ok, witness = is_independent_partition(a, pi)
    assert not ok
    assert witness == (0, 1, 2)


def test_k3_two_part_independent(k3):
    a, l = setup(k3)
    pi = ArrangementPartition.from_parts([{0}, {1, 2}])
    ok, witness = is_independent_partition(a, pi)
    assert ok and witness is None


def test_fig2_partition_independent(fig2_setup):
    a, l, pi = fig2_setup
    assert is_independent_partition(a, pi)[0]


def test_independence_matches_section_oracle(c4, k4):
    """Circuit-based independence must agree with brute force over all sections."""
    for g in (c4, k4):
        a, _ = setup(g)
        for pi in all_partitions_of(a):
            assert is_independent_partition(a, pi)[0] == independent_by_sections(a, pi)


def test_circuits_of_general_arrangement(k3):
    from arrangelab.arrangement import to_general

    a = graphical_arrangement(k3)
    b = to_general(a)
    assert circuits(a) == circuits(b) == ((0, 1, 2),)


# -- niceness -----------------------------------------------------------------------


def test_c4_has_no_nice_partition(c4):
    a, l = setup(c4)
    for pi in all_partitions_of(a):
        cert = is_nice(a, l, pi)
        assert not cert.nice
        # the failure witness re-validates
        if cert.dependent_section is not None:
            assert len(cert.dependent_section) > closure(a, cert.dependent_section).rank
        else:
            x = cert.uncovered_flat
            assert all(len(p & x.hyperplanes) != 1 for p in pi.parts)


def test_fig1_union_partition_nice(fig1_setup):
    a, l, pi = fig1_setup
    assert is_nice(a, l, pi).nice


def test_fig2_partition_nice(fig2_setup):
    a, l, pi = fig2_setup
    assert is_nice(a, l, pi).nice


# -- localization ---------------------------------------------------------------------


def test_localize_at_block_flat_recovers_block_partition(fig1_setup):
    a, l, pi = fig1_setup
    block1 = [(1, 2), (1, 4), (2, 3), (3, 4), (2, 4)]
    x = closure(a, [a.edge_index(*e) for e in block1])
    got = localize_partition(a, pi, x)
    expected = ArrangementPartition.from_parts(
        [
            part_of_edges(a, (2, 4)),
            part_of_edges(a, (1, 2), (1, 4)),
            part_of_edges(a, (2, 3), (3, 4)),
        ]
    )
    assert got == expected


def test_localize_at_bottom_is_empty(fig2_setup):
    a, l, pi = fig2_setup
    assert localize_partition(a, pi, bottom_flat(a)).parts == ()


def test_localize_rank2_shape(fig2_setup):
    a, l, pi = fig2_setup
    x = closure(a, [a.edge_index(3, 4), a.edge_index(4, 5)])
    got = localize_partition(a, pi, x)
    assert got == ArrangementPartition.from_parts(
        [part_of_edges(a, (3, 4)), part_of_edges(a, (3, 5), (4, 5))]
    )
    assert sorted(len(p) for p in got.parts) == [1, 2]
    assert got.length == x.rank == 2


def test_localized_part_count_equals_rank(fig2_setup, fig1_setup):
    for a, l, pi in (fig2_setup, fig1_setup):
        assert is_nice(a, l, pi).nice
        for f in l.flats:
            assert localize_partition(a, pi, f).length == f.rank


# -- factorization test -----------------------------------------------------------------


def test_verify_factorization_fig2(fig2_setup):
    a, l, pi = fig2_setup
    ok, witness = verify_factorization(a, l, pi)
    assert ok and witness is None


def test_verify_factorization_c4_all_fail(c4):
    a, l = setup(c4)
    for pi in all_partitions_of(a):
        ok, witness = verify_factorization(a, l, pi)
        assert not ok
        assert witness is not None


def test_verify_factorization_k2(k2):
    a, l = setup(k2)
    pi = ArrangementPartition.from_parts([{0}])
    assert verify_factorization(a, l, pi) == (True, None)


def test_nice_iff_factorization_small(k3, c4, k4):
    for g in (k3, c4, k4):
        a, l = setup(g)
        for pi in all_partitions_of(a):
            assert is_nice(a, l, pi).nice == verify_factorization(a, l, pi)[0]


# -- chain <-> partition ----------------------------------------------------------------


def test_chain_to_partition_fig2(fig2_setup):
    a, l, pi = fig2_setup
    flats = [bottom_flat(a)]
    acc = set()
    for e in [(3, 4), (4, 5), (1, 5), (1, 2)]:
        acc.add(a.edge_index(*e))
        flats.append(closure(a, acc))
    assert chain_to_partition(a, FlatChain(tuple(flats))) == pi


def test_chain_to_partition_fig4_listed_chain(fig4_setup, fig4):
    a, l, pi = fig4_setup
    flats = [bottom_flat(a)]
    acc = set()
    for e in [(3, 4), (3, 5), (1, 4), (2, 3), (6, 7), (5, 7), (5, 8)]:
        acc.add(a.edge_index(*e))
        flats.append(closure(a, acc))
    chain = FlatChain(tuple(flats))
    assert is_maximal_chain(l, chain)
    assert all(is_modular_element(l, f) for f in chain.flats)
    assert chain_to_partition(a, chain) == pi


def test_chain_to_partition_k2(k2):
    a, l = setup(k2)
    chain = FlatChain((bottom_flat(a), top_flat(a)))
    assert chain_to_partition(a, chain) == ArrangementPartition.from_parts([{0}])


def test_chain_to_partition_rejects_non_maximal(fig2_setup):
    a, l, pi = fig2_setup
    with pytest.raises(ValueError):
        chain_to_partition(a, FlatChain((bottom_flat(a), top_flat(a))))
    with pytest.raises(ValueError):
        chain_to_partition(a, FlatChain((top_flat(a),)))


# -- the constructive correspondence ------------------------------------------------------


def test_plan_fig2_golden(fig2, fig2_setup):
    a, l, pi = fig2_setup
    plan = chain_construction_plan(fig2, pi, l)
    assert len(plan.block_plans) == 1
    bp = plan.block_plans[0]
    assert bp.elimination_order == (2, 1, 5, 4, 3)
    centers = {tuple(sorted(p)): v for p, v in bp.centers.items()}
    assert centers[(a.edge_index(3, 4),)] == 4
    assert centers[tuple(sorted(part_of_edges(a, (3, 5), (4, 5))))] == 5
    assert centers[tuple(sorted(part_of_edges(a, (1, 3), (1, 4), (1, 5))))] == 1
    assert centers[tuple(sorted(part_of_edges(a, (1, 2), (2, 3), (2, 5))))] == 2
    assert chain_to_partition(a, plan.chain) == pi
    assert all(is_modular_element(l, f) for f in plan.chain.flats)


def test_partition_to_modular_chain_fig4(fig4, fig4_setup):
    a, l, pi = fig4_setup
    chain = partition_to_modular_chain(fig4, pi, l)
    assert is_maximal_chain(l, chain)
    assert len(chain.flats) == 8
    assert all(is_modular_element(l, f) for f in chain.flats)
    assert all(is_modular_brylawski(l, f) for f in chain.flats)
    assert chain_to_partition(a, chain) == pi


def test_partition_to_modular_chain_k2(k2):
    a, l = setup(k2)
    chain = partition_to_modular_chain(k2, ArrangementPartition.from_parts([{0}]), l)
    assert [f.rank for f in chain.flats] == [0, 1]


def test_partition_to_modular_chain_rejects_non_nice(k3):
    a, l = setup(k3)
    bad = ArrangementPartition.from_parts([{0}, {1}, {2}])
    with pytest.raises(NotNicePartitionError):
        partition_to_modular_chain(k3, bad, l)


def test_chains_inducing_partition(fig2, fig2_setup):
    from arrangelab.factorization import chains_inducing_partition

    a, l, pi = fig2_setup
    inducing = chains_inducing_partition(a, l, pi)
    assert partition_to_modular_chain(fig2, pi, l) in inducing
    for c in inducing:
        assert chain_to_partition(a, c) == pi


def test_star_vertex_examples(fig2, fig2_setup):
    a, l, pi = fig2_setup
    assert star_vertex(fig2, part_of_edges(a, (1, 3), (1, 4), (1, 5))) == 1
    assert star_vertex(fig2, part_of_edges(a, (3, 5), (4, 5))) == 5
    assert star_vertex(fig2, part_of_edges(a, (3, 4)), pi) == 4


def test_star_vertex_errors(fig2, fig2_setup):
    a, l, pi = fig2_setup
    with pytest.raises(ValueError, match="common vertex"):
        star_vertex(fig2, part_of_edges(a, (1, 2), (3, 4)))
    with pytest.raises(ValueError, match="full partition"):
        star_vertex(fig2, part_of_edges(a, (3, 4)))


# -- enumeration ----------------------------------------------------------------------------


def test_enumerate_k3(k3):
    a, l = setup(k3)
    out = enumerate_nice_partitions(a, l)
    assert [partition_labels(a, p) for p in out] == [
        [["1-2"], ["1-3", "2-3"]],
        [["1-2", "1-3"], ["2-3"]],
        [["1-2", "2-3"], ["1-3"]],
    ]


def test_enumerate_c4_empty(c4):
    a, l = setup(c4)
    assert enumerate_nice_partitions(a, l) == []


def test_enumerate_fig2_contains_paper_partition(fig2, fig2_setup):
    a, l, pi = fig2_setup
    out = enumerate_nice_partitions(a, l)
    assert pi in out


def test_enumerate_matches_brute_force(c4, k3, k4):
    paw = Graph.from_edges(4, [(1, 2), (1, 3), (2, 3), (3, 4)])
    for g in (k3, c4, k4, paw):
        a, l = setup(g)
        fast = set(enumerate_nice_partitions(a, l))
        slow = {pi for pi in all_partitions_of(a) if is_nice(a, l, pi).nice}
        assert fast == slow


def test_enumerate_edgeless():
    g = Graph.from_edges(3, [])
    a, l = setup(g)
    out = enumerate_nice_partitions(a, l)
    assert out == [ArrangementPartition(())]
    assert is_nice(a, l, out[0]).nice


def test_enumerate_bound():
    k6 = Graph.from_edges(6, [(i, j) for i in range(1, 7) for j in range(i + 1, 7)])
    a, l = setup(k6)
    with pytest.raises(EnumerationBoundExceeded):
        enumerate_nice_partitions(a, l, max_hyperplanes=12)


def test_block_composition_property(fig1, fig1_setup):
    """Nice partitions of fig1 are exactly unions of per-block nice partitions."""
    a, l, pi = fig1_setup
    block1 = [(1, 2), (1, 4), (2, 3), (2, 4), (3, 4)]
    block2 = [(4, 5), (4, 6), (5, 6)]
    idx1 = {a.edge_index(*e) for e in block1}
    idx2 = {a.edge_index(*e) for e in block2}
    full = enumerate_nice_partitions(a, l)
    assert pi in full
    for cand in full:
        for p in cand.parts:
            assert p <= idx1 or p <= idx2
    # every combination of restrictions appears
    left = {tuple(sorted(p for p in cand.parts if p <= idx1)) for cand in full}
    right = {tuple(sorted(p for p in cand.parts if p <= idx2)) for cand in full}
    assert len(full) == len(left) * len(right)


# -- theorem suite ---------------------------------------------------------------------------


def test_theorem_suite_c4(c4):
    out = theorem_suite(c4)
    assert {k: v.status for k, v in out.items()} == {
        "T1": "pass", "T2": "pass", "T3": "pass", "T4": "pass"
    }
    assert "15 partitions" in out["T3"].detail


def test_theorem_suite_fig2(fig2):
    out = theorem_suite(fig2)
    assert all(v.status == "pass" for v in out.values())


def test_theorem_suite_path():
    p3 = Graph.from_edges(3, [(1, 2), (2, 3)])
    out = theorem_suite(p3)
    assert all(v.status == "pass" for v in out.values())


def test_theorem_suite_reports_skips(fig2):
    out = theorem_suite(fig2, bell_bound=10)
    assert out["T3"].status == "skipped"
    assert "Bell(9)" in out["T3"].detail
