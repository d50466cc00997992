import pytest

from paradoxlab import build_directed, build_undirected
from paradoxlab.generators import (complete_edges, cycle_edges, path_edges,
                                   star_edges)


def path(n):
    return build_undirected(n, path_edges(n))


def cycle(n):
    return build_undirected(n, cycle_edges(n))


def star(n):
    return build_undirected(n, star_edges(n))


def complete(n):
    return build_undirected(n, complete_edges(n))


@pytest.fixture
def p6():
    return path(6)


@pytest.fixture
def hub_digraph():
    """Arcs 0->1, 0->2, 1->0, 2->0: node 0 is the hub."""
    return build_directed(3, [(0, 1), (0, 2), (1, 0), (2, 0)])
