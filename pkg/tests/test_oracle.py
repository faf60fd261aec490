import pytest

from arrangelab.arrangement import graphical_arrangement, to_general
from arrangelab.graphs import EliminationOrdering, Graph, chordality, to_graph6
from arrangelab.lattice import build_lattice, characteristic_polynomial, is_modular_element
from arrangelab.oracle import (
    CampaignBoundError,
    all_graphs,
    brute_force_chordal,
    campaign,
    canonical_key,
    chromatic_polynomial_dc,
    connected_graphs,
    enumerate_flats_by_closure,
    naive_modular,
    naive_rank,
)
from arrangelab.polynomial import IntPolynomial


def test_chromatic_dc_examples(k3, c4):
    assert chromatic_polynomial_dc(k3) == IntPolynomial.from_coefficients((0, 2, -3, 1))
    assert chromatic_polynomial_dc(c4) == IntPolynomial.from_coefficients((0, -3, 6, -4, 1))
    # single edge in ambient dimension 4: t^2 - t times t^2
    edge = Graph.from_edges(4, [(1, 2)])
    assert chromatic_polynomial_dc(edge) == IntPolynomial.from_coefficients((0, 0, 0, -1, 1))


def test_chromatic_dc_bound():
    k6 = Graph.from_edges(6, [(i, j) for i in range(1, 7) for j in range(i + 1, 7)])
    with pytest.raises(ValueError):
        chromatic_polynomial_dc(k6, max_edges=10)


def test_chromatic_matches_lattice_small():
    for n in range(1, 6):
        for g in all_graphs(n):
            l = build_lattice(graphical_arrangement(g))
            assert characteristic_polynomial(l) == chromatic_polynomial_dc(g)


def test_naive_rank_examples(k3, c4, fig1):
    assert naive_rank(graphical_arrangement(k3), range(3)) == 2
    assert naive_rank(graphical_arrangement(c4), range(4)) == 3
    a1 = graphical_arrangement(fig1)
    assert naive_rank(a1, range(a1.m)) == 5


def test_naive_modular_requires_general(k3):
    a = graphical_arrangement(k3)
    l = build_lattice(a)
    with pytest.raises(ValueError):
        naive_modular(a, l, l.flats[0])


def test_naive_modular_agreement(k3, c4, fig2):
    for g in (k3, c4, fig2):
        a = to_general(graphical_arrangement(g))
        l = build_lattice(a)
        for f in l.flats:
            assert naive_modular(a, l, f) == is_modular_element(l, f)


def test_flat_closure_oracle_k3(k3):
    a = graphical_arrangement(k3)
    assert len(enumerate_flats_by_closure(a)) == 5


# -- corpus ------------------------------------------------------------------------


def test_graph_counts():
    assert [len(all_graphs(n)) for n in range(1, 8)] == [1, 2, 4, 11, 34, 156, 1044]
    assert [len(connected_graphs(n)) for n in range(1, 8)] == [1, 1, 2, 6, 21, 112, 853]


def test_canonical_key_is_iso_invariant():
    g = Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
    import random

    rng = random.Random(5)
    for _ in range(8):
        perm = list(range(1, 6))
        rng.shuffle(perm)
        relabeled = Graph.from_edges(5, [(perm[i - 1], perm[j - 1]) for i, j in g.edges])
        assert canonical_key(relabeled) == canonical_key(g)
    other = Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (3, 5)])
    assert canonical_key(other) != canonical_key(g)


def test_chordality_matches_brute_force():
    """MCS verdicts agree with trying every vertex ordering, for all n <= 7."""
    for n in range(1, 8):
        for g in all_graphs(n):
            assert isinstance(chordality(g), EliminationOrdering) == brute_force_chordal(g)


# -- campaign -----------------------------------------------------------------------


def test_campaign_n4_all_checks():
    rep = campaign(4)
    assert rep.graphs_checked == 6 + 2 + 1 + 1
    assert rep.counts_by_n == {1: 1, 2: 1, 3: 2, 4: 6}
    assert rep.failures == [] and rep.skipped == []
    assert rep.exit_code == 0


def test_campaign_corpus_input(c4, fig2):
    corpus = "\n".join(to_graph6(g) for g in (c4, fig2))
    rep = campaign(6, checks=("T1", "T4"), corpus_text=corpus)
    assert rep.graphs_checked == 2
    assert rep.exit_code == 0


def test_campaign_bounds():
    with pytest.raises(CampaignBoundError):
        campaign(9, checks=("T1",))
    with pytest.raises(CampaignBoundError):
        campaign(4, checks=("T9",))


def test_campaign_reports_skips(fig2):
    rep = campaign(6, checks=("T3",), corpus_text=to_graph6(fig2), bell_bound=10)
    assert rep.exit_code == 2
    assert rep.skipped and rep.skipped[0]["check"] == "T3"


def test_campaign_json_is_serializable():
    rep = campaign(3)
    text = rep.to_json()
    assert '"exit_code": 0' in text


def test_campaign_parallel_matches_serial():
    serial = campaign(4, checks=("T1",))
    parallel = campaign(4, checks=("T1",), workers=2)
    assert serial.as_dict() == parallel.as_dict()
