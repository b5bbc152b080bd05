import pytest
from hypothesis import given, strategies as st

from matchbound.errors import ParameterError
from matchbound.graphs import (
    Graph,
    INFINITY,
    cartesian_product,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    dodecahedron,
    girth,
    has_short_cycles,
    make_classic,
    octahedron,
    path_graph,
    square_graph,
)


def test_complete_graph_basics():
    g = complete_graph(4)
    assert g.n == 4 and g.m == 6
    assert all(g.degree(v) == 3 for v in g.vertices())


def test_octahedron_is_4_regular():
    g = octahedron()
    assert g.n == 6 and g.m == 12
    assert all(g.degree(v) == 4 for v in g.vertices())
    # complement of the deleted matching
    for u, v in [(1, 2), (3, 4), (5, 6)]:
        assert not g.has_edge(u, v)


def test_cycle_girth_and_regularity():
    g = cycle_graph(5)
    assert girth(g) == 5
    assert all(g.degree(v) == 2 for v in g.vertices())


def test_make_classic_dispatch():
    assert make_classic("K_n", 4).edges == complete_graph(4).edges
    assert make_classic("dodecahedron").n == 20
    with pytest.raises(ParameterError):
        make_classic("C_n", 2)
    with pytest.raises(ParameterError):
        make_classic("nope")


def test_no_self_loops_or_bad_vertices():
    with pytest.raises(ParameterError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ParameterError):
        Graph.from_edges(3, [(1, 4)])


def test_cartesian_product_prism():
    p = cartesian_product(cycle_graph(4), complete_graph(2))
    assert p.n == 8 and p.m == 12
    assert all(p.degree(v) == 3 for v in p.vertices())


def test_cartesian_product_k4k2():
    q = cartesian_product(complete_graph(4), complete_graph(2))
    assert q.n == 8 and q.m == 16
    assert all(q.degree(v) == 4 for v in q.vertices())


def test_cartesian_product_identity_factor():
    g = cycle_graph(5)
    prod = cartesian_product(complete_graph(1), g)
    assert prod.n == g.n and prod.edges == g.edges


def test_girth_values():
    assert girth(complete_graph(4)) == 3
    assert girth(cycle_graph(7)) == 7
    assert girth(path_graph(5)) == INFINITY
    assert girth(complete_bipartite(3)) == 4
    assert girth(dodecahedron()) == 5


def test_has_short_cycles():
    assert has_short_cycles(octahedron()) == {"has3": True, "has4": True}
    prism = cartesian_product(cycle_graph(4), complete_graph(2))
    assert has_short_cycles(prism) == {"has3": False, "has4": True}
    assert has_short_cycles(dodecahedron()) == {"has3": False, "has4": False}


def test_square_graph_c4_diagonals():
    sq = square_graph(cycle_graph(4))
    assert sq.edges == frozenset({(1, 3), (2, 4)})


def test_square_graph_c6_two_triangles():
    sq = square_graph(cycle_graph(6))
    assert sq.edges == frozenset({(1, 3), (3, 5), (1, 5), (2, 4), (4, 6), (2, 6)})


def test_square_graph_k4_is_k4():
    assert square_graph(complete_graph(4)).edges == complete_graph(4).edges


@st.composite
def random_graphs(draw):
    n = draw(st.integers(min_value=1, max_value=9))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))
                  ) if pairs else []
    return Graph.from_edges(n, chosen)


@given(random_graphs())
def test_handshake_identity(g):
    assert sum(g.degrees()) == 2 * g.m


@given(random_graphs())
def test_square_graph_loop_free_and_symmetric(g):
    sq = square_graph(g)
    assert all(u != v for u, v in sq.edges)
    assert sq.n == g.n


@given(st.integers(min_value=2, max_value=6), st.integers(min_value=2, max_value=5))
def test_product_counts(a, b):
    g, h = cycle_graph(max(a, 3)), path_graph(b)
    p = cartesian_product(g, h)
    assert p.n == g.n * h.n
    assert p.m == g.n * h.m + h.n * g.m


def test_json_round_trip():
    g = dodecahedron()
    assert Graph.from_json(g.to_json()) == g
    assert g.to_json_dict()["edges"] == sorted(g.to_json_dict()["edges"])


def test_graph6_round_trip():
    from matchbound.graphs import from_graph6, to_graph6

    for g in (complete_graph(4), dodecahedron(), octahedron(),
              cycle_graph(12), complete_bipartite(3)):
        assert from_graph6(to_graph6(g)) == g
    assert to_graph6(complete_graph(4)) == "C~"
    assert from_graph6("C~") == complete_graph(4)


def _girth_by_edge_removal(g):
    # shortest cycle through an edge = 1 + shortest u-v path avoiding that edge
    from collections import deque

    best = INFINITY
    for u, v in g.edges:
        dist = {u: 0}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if (x, y) in ((u, v), (v, u)):
                    continue
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        if v in dist:
            best = min(best, dist[v] + 1)
    return best


@given(random_graphs())
def test_girth_matches_edge_removal_oracle(g):
    assert girth(g) == _girth_by_edge_removal(g)
