import itertools
import math

import networkx as nx
import pytest
from hypothesis import given, settings

from binedge.errors import GraphParseError, PreconditionError
from binedge.graphs import (
    Graph,
    all_graphs,
    canonical_form,
    canonical_graphs,
    clique_facets,
    cone,
    diameter,
    distances,
    find_claw,
    find_induced_long_cycle,
    format_edge_list,
    format_graph6,
    free_vertices,
    geodesics,
    glue_at_free_vertices,
    independence_triangle,
    is_chordal,
    is_narrow,
    is_perfect_elimination_ordering,
    non_narrow_witness,
    parse_edge_list,
    parse_graph,
    parse_graph6,
    perfect_elimination_ordering,
)

from conftest import BOWTIE, C4, CLAW, TRI_PENDANT, K3, K4, P3, P4, SPIDER, complete, graphs


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


# ------------------------------------------------------------------ parsing


def test_parse_path():
    assert parse_graph("3\n1 2\n2 3") == Graph(3, [(1, 2), (2, 3)])


def test_parse_cycle():
    assert parse_graph("4\n1 2\n2 3\n3 4\n1 4") == C4


def test_parse_comments_and_blank_lines():
    text = "# a triangle\n3\n\n1 2  # first\n2 3\n1 3\n"
    assert parse_graph(text) == K3


@pytest.mark.parametrize(
    "text, line",
    [
        ("3\n1 2\n1 2", 3),
        ("3\n1 1", 2),
        ("3\n1 4", 2),
        ("x\n1 2", 1),
        ("3\n1 2 3", 2),
        ("0\n", 1),
    ],
)
def test_parse_errors_name_the_line(text, line):
    with pytest.raises(GraphParseError) as info:
        parse_edge_list(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_duplicate_edge_message():
    with pytest.raises(GraphParseError, match="duplicate"):
        parse_graph("3\n1 2\n1 2")


def test_graph6_known_strings():
    # reference strings from the graph6 format description
    assert format_graph6(complete(4)) == "C~"
    assert parse_graph6("Bw") == K3
    assert parse_graph(">>graph6<<Bw") == K3


def test_graph6_errors():
    with pytest.raises(GraphParseError, match="data bytes"):
        parse_graph6("Bww")
    with pytest.raises(GraphParseError, match="offset 1"):
        parse_graph6("B ")


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9))
def test_graph6_matches_networkx(g):
    ours = format_graph6(g)
    theirs = nx.to_graph6_bytes(to_nx(g), nodes=list(g.vertices), header=False).decode().strip()
    assert ours == theirs
    assert parse_graph6(ours) == g


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_edge_list_round_trip(g):
    assert parse_graph(format_edge_list(g)) == g
    assert format_edge_list(parse_graph(format_edge_list(g))) == format_edge_list(g)


def test_graph_rejects_loops_and_bad_endpoints():
    with pytest.raises(PreconditionError):
        Graph(3, [(2, 2)])
    with pytest.raises(PreconditionError):
        Graph(3, [(1, 4)])


# --------------------------------------------------------------- chordality


def test_chordal_examples():
    assert not is_chordal(C4)
    assert is_chordal(K4)
    assert is_chordal(TRI_PENDANT)


def test_long_cycle_witness():
    cyc = find_induced_long_cycle(C4)
    assert sorted(cyc) == [1, 2, 3, 4]
    assert find_induced_long_cycle(TRI_PENDANT) is None


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_chordality_matches_networkx(g):
    assert is_chordal(g) == nx.is_chordal(to_nx(g))


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_elimination_witness_rechecks(g):
    peo = perfect_elimination_ordering(g)
    cyc = find_induced_long_cycle(g)
    if peo is None:
        assert cyc is not None
    else:
        assert is_perfect_elimination_ordering(g, peo)
        assert cyc is None
    if cyc is not None:
        # consecutive vertices adjacent, no chords
        k = len(cyc)
        assert k >= 4
        for a, b in itertools.combinations(range(k), 2):
            adjacent = (b - a) in (1, k - 1)
            assert g.has_edge(cyc[a], cyc[b]) == adjacent


def test_peo_check_rejects_bad_order():
    assert not is_perfect_elimination_ordering(P3, [2, 1, 3])
    assert is_perfect_elimination_ordering(P3, [1, 2, 3])


# ------------------------------------------------------------ claws, distances


def test_claws():
    assert find_claw(CLAW) == (1, 2, 3, 4)
    assert find_claw(K4) is None
    three = Graph(3)
    c = find_claw(cone(three))
    assert c[0] == 4 and set(c[1:]) == {1, 2, 3}


def test_distances_examples():
    assert distances(P3)[1][3] == 2
    assert distances(Graph(2))[1][2] == math.inf


@settings(max_examples=80, deadline=None)
@given(graphs())
def test_distance_table_is_a_metric(g):
    d = distances(g)
    for u in g.vertices:
        assert d[u][u] == 0
        for v in g.vertices:
            assert d[u][v] == d[v][u]
            for w in g.vertices:
                assert d[u][w] <= d[u][v] + d[v][w]


def _all_geodesics_bruteforce(g, a, b):
    """Enumerate simple paths by permutation and keep the shortest ones."""
    others = [v for v in g.vertices if v not in (a, b)]
    found = []
    for k in range(len(others) + 1):
        for mid in itertools.permutations(others, k):
            seq = (a,) + mid + (b,)
            if all(g.has_edge(x, y) for x, y in zip(seq, seq[1:])):
                found.append(list(seq))
        if found:
            return found
    return found


def test_spider_not_narrow_bruteforce():
    # oracle: every 1-5 geodesic by permutation enumeration, distance of 7 to it
    d = distances(SPIDER)
    geos = _all_geodesics_bruteforce(SPIDER, 1, 5)
    assert geos == [[1, 2, 3, 4, 5]]
    assert min(d[7][p] for p in geos[0]) == 2
    assert diameter(SPIDER) == 4
    assert not is_narrow(SPIDER)
    assert not is_narrow(SPIDER, reading="every")
    v, geo = non_narrow_witness(SPIDER)
    assert min(d[v][p] for p in geo) >= 2


def test_narrow_examples():
    assert is_narrow(P4)
    assert is_narrow(cone(SPIDER))


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=6))
def test_geodesics_match_bruteforce(g):
    d = distances(g)
    for a, b in itertools.combinations(g.vertices, 2):
        if d[a][b] == math.inf:
            assert list(geodesics(g, a, b, d)) == []
        else:
            assert sorted(geodesics(g, a, b, d)) == sorted(_all_geodesics_bruteforce(g, a, b))


def test_universal_reading_breaks_on_cones():
    # geodesic 2-1-3 avoids the apex and vertex 4 only sees the apex
    g = Graph(4, [(1, 2), (1, 3)])
    c = cone(g)
    assert diameter(c) == 2
    assert is_narrow(c)
    assert not is_narrow(c, reading="every")


def test_narrow_rejects_unknown_reading():
    with pytest.raises(ValueError):
        is_narrow(P3, reading="most")


# ------------------------------------------------------------ clique complex


def test_facets_examples():
    assert clique_facets(BOWTIE) == [(1, 2, 3), (3, 4, 5)]
    assert clique_facets(P3) == [(1, 2), (2, 3)]
    assert clique_facets(K4) == [(1, 2, 3, 4)]
    assert clique_facets(Graph(2)) == [(1,), (2,)]


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_facets_match_networkx(g):
    ours = clique_facets(g)
    theirs = sorted(tuple(sorted(c)) for c in nx.find_cliques(to_nx(g)))
    assert ours == theirs
    # antichain covering every vertex
    for a, b in itertools.permutations(ours, 2):
        assert not set(a) <= set(b)
    assert set().union(*map(set, ours)) == set(g.vertices)


def test_free_vertices_examples():
    assert free_vertices(P3) == {1, 3}
    assert free_vertices(K4) == {1, 2, 3, 4}
    assert free_vertices(BOWTIE) == {1, 2, 4, 5}
    assert free_vertices(Graph(3, [(1, 2)])) == {1, 2, 3}


def test_independence_triangle_examples():
    assert independence_triangle(Graph(3)) == (1, 2, 3)
    assert independence_triangle(K3) is None
    # oracle: every one of the C(4,3) triples of P4 contains an edge
    for t in itertools.combinations(range(1, 5), 3):
        assert any(P4.has_edge(a, b) for a, b in itertools.combinations(t, 2))
    assert independence_triangle(P4) is None


# ------------------------------------------------------------ constructions


def test_cone_examples():
    assert cone(Graph(2, [(1, 2)])) == K3
    assert cone(Graph(3)) == Graph(4, [(1, 4), (2, 4), (3, 4)])
    w = cone(C4)
    assert w.n == 5 and w.m == 8


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=6))
def test_cone_invariants(g):
    c = cone(g)
    assert c.n == g.n + 1 and c.m == g.m + g.n
    assert (find_claw(c) is None) == (independence_triangle(g) is None)
    assert is_chordal(c) == is_chordal(g)
    assert diameter(c) <= 2
    assert is_narrow(c)


def test_glue_examples():
    k2 = Graph(2, [(1, 2)])
    assert glue_at_free_vertices(k2, 2, k2, 1) == P3
    assert glue_at_free_vertices(K3, 3, K3, 1) == BOWTIE
    with pytest.raises(PreconditionError, match="vertex 2"):
        glue_at_free_vertices(P3, 2, P3, 1)
    with pytest.raises(PreconditionError, match="second"):
        glue_at_free_vertices(P3, 1, P3, 2)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=5), graphs(max_n=5))
def test_glue_edge_count(g1, g2):
    for v in sorted(free_vertices(g1)):
        for w in sorted(free_vertices(g2)):
            glued = glue_at_free_vertices(g1, v, g2, w)
            assert glued.n == g1.n + g2.n - 1
            assert glued.m == g1.m + g2.m


# ---------------------------------------------------------------- enumeration


def test_all_graphs_count():
    assert sum(1 for _ in all_graphs(4)) == 64


def test_canonical_counts():
    # number of graphs on n unlabeled vertices (OEIS A000088)
    assert [len(canonical_graphs(n)) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6))
def test_canonical_form_is_isomorphism_invariant(g):
    c = canonical_form(g)
    assert nx.is_isomorphic(to_nx(c), to_nx(g))
    perm = list(reversed(range(1, g.n + 1)))
    assert canonical_form(g.relabel(perm)) == c
