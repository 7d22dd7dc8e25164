import itertools

import pytest
from hypothesis import strategies as st

from binedge.graphs import Graph


def path(n):
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def cycle(n):
    return Graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete(n):
    return Graph(n, itertools.combinations(range(1, n + 1), 2))


def star(k):
    return Graph(k + 1, [(1, v) for v in range(2, k + 2)])


P3 = path(3)
P4 = path(4)
C4 = cycle(4)
K3 = complete(3)
K4 = complete(4)
CLAW = star(3)
BOWTIE = Graph(5, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)])
SPIDER = Graph(7, [(1, 2), (2, 3), (3, 4), (4, 5), (3, 6), (6, 7)])
# two leaves hanging off vertex 3
VEE = Graph(3, [(1, 3), (2, 3)])
# triangle with a pendant edge; adding {2,4} is the obstruction example
TRI_PENDANT = Graph(4, [(1, 2), (1, 3), (2, 3), (3, 4)])
NET = Graph(6, [(1, 2), (1, 3), (2, 3), (1, 4), (2, 5), (3, 6)])


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


@pytest.fixture
def named():
    return {
        "P3": P3, "P4": P4, "C4": C4, "K3": K3, "K4": K4, "claw": CLAW,
        "bowtie": BOWTIE, "spider": SPIDER, "vee": VEE, "tri_pendant": TRI_PENDANT, "net": NET,
    }
