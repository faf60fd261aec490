"""Shared fixtures: the worked example graphs and their nice partitions."""

import pytest

from arrangelab import ArrangementPartition, Graph, build_lattice, graphical_arrangement


def part_of_edges(a, *edges):
    return frozenset(a.edge_index(i, j) for i, j in edges)


@pytest.fixture(scope="session")
def k2():
    return Graph.from_edges(2, [(1, 2)])


@pytest.fixture(scope="session")
def k3():
    return Graph.from_edges(3, [(1, 2), (1, 3), (2, 3)])


@pytest.fixture(scope="session")
def k4():
    return Graph.from_edges(4, [(i, j) for i in range(1, 5) for j in range(i + 1, 5)])


@pytest.fixture(scope="session")
def c4():
    return Graph.from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)])


@pytest.fixture(scope="session")
def fig1():
    """Two blocks glued at vertex 4: a chorded square and a triangle."""
    return Graph.from_edges(
        6, [(1, 2), (1, 4), (2, 3), (3, 4), (2, 4), (4, 5), (4, 6), (5, 6)]
    )


@pytest.fixture(scope="session")
def fig2():
    """Doubly connected chordal graph on 5 vertices with 9 edges."""
    return Graph.from_edges(
        5, [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 5), (3, 4), (3, 5), (4, 5)]
    )


@pytest.fixture(scope="session")
def fig4(fig2):
    """fig2 extended by a second block on vertices 5..8."""
    extra = [(5, 6), (5, 7), (5, 8), (6, 7), (7, 8)]
    return Graph.from_edges(8, list(fig2.edges) + extra)


@pytest.fixture(scope="session")
def fig2_setup(fig2):
    a = graphical_arrangement(fig2)
    l = build_lattice(a)
    pi = ArrangementPartition.from_parts(
        [
            part_of_edges(a, (3, 4)),
            part_of_edges(a, (3, 5), (4, 5)),
            part_of_edges(a, (1, 3), (1, 4), (1, 5)),
            part_of_edges(a, (1, 2), (2, 3), (2, 5)),
        ]
    )
    return a, l, pi


@pytest.fixture(scope="session")
def fig1_setup(fig1):
    a = graphical_arrangement(fig1)
    l = build_lattice(a)
    pi = ArrangementPartition.from_parts(
        [
            part_of_edges(a, (2, 4)),
            part_of_edges(a, (1, 2), (1, 4)),
            part_of_edges(a, (2, 3), (3, 4)),
            part_of_edges(a, (5, 6)),
            part_of_edges(a, (4, 5), (4, 6)),
        ]
    )
    return a, l, pi


@pytest.fixture(scope="session")
def fig4_setup(fig4):
    a = graphical_arrangement(fig4)
    l = build_lattice(a)
    pi = ArrangementPartition.from_parts(
        [
            part_of_edges(a, (3, 4)),
            part_of_edges(a, (3, 5), (4, 5)),
            part_of_edges(a, (1, 3), (1, 4), (1, 5)),
            part_of_edges(a, (1, 2), (2, 3), (2, 5)),
            part_of_edges(a, (6, 7)),
            part_of_edges(a, (5, 6), (5, 7)),
            part_of_edges(a, (5, 8), (7, 8)),
        ]
    )
    return a, l, pi
