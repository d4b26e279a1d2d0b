import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from nmvc.cover import approx_vertex_cover, repair, solve_nmvc, verify_cover
from nmvc.graph import Graph, GraphError, is_maximal_matching
from nmvc.oracle import exact_nmvc, exact_vc
from nmvc.reduction import reduce
from nmvc.rng import RandomSource


def repair_addition_range(g, n):
    """Min and max additions over every possible witness order."""
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges())
    ball = {x: set(nx.single_source_shortest_path_length(h, x, cutoff=n)) for x in g.vertices}

    def explore(covered, added):
        uncovered = set(g.vertices) - covered
        if not uncovered:
            return {added}
        out = set()
        for w in uncovered:
            out |= explore(covered | ball[w], added + 1)
        return out

    counts = explore(set(), 0)
    return min(counts), max(counts)


def test_verify_fig1_claims(fig1, v):
    assert verify_cover(fig1, v.set("v4", "v9"), 3) == (True, None)
    assert verify_cover(fig1, v.set("v3", "v9"), 2) == (True, None)
    ok, witness = verify_cover(fig1, set(), 2)
    assert not ok and witness in fig1


def test_verify_rejects_unknown_vertices(fig1):
    with pytest.raises(GraphError):
        verify_cover(fig1, {99}, 2)


def test_avc_small_cases():
    rng = RandomSource(0)
    assert approx_vertex_cover(Graph([], [(0, 1)]), rng) == ({0, 1}, [(0, 1)])
    assert approx_vertex_cover(Graph([0, 1]), rng) == (set(), [])


def test_avc_on_fig1_reduced_graph(fig1, v):
    state, _ = reduce(fig1, 3, RandomSource(1, deterministic=True))
    cover, picks = approx_vertex_cover(state.graph, RandomSource(1, deterministic=True))
    assert v.labels(cover) == {"v1", "v4", "v11", "v13"}
    assert picks[0] == tuple(sorted(v("v1", "v4")))


def test_solve_fig1(fig1, v):
    sol = solve_nmvc(fig1, 3, RandomSource(1, deterministic=True))
    assert v.labels(sol.cover) == {"v1", "v4", "v11", "v13"}
    assert sol.repaired_count == 0


def test_solve_p7():
    p7 = Graph(range(7), [(i, i + 1) for i in range(6)])
    sol = solve_nmvc(p7, 3, RandomSource(0, deterministic=True))
    assert sol.cover == {0, 3}
    assert sol.reduced.edge_set() == {(0, 3), (3, 6)}
    for seed in range(10):
        sol = solve_nmvc(p7, 3, RandomSource(seed))
        assert verify_cover(p7, sol.cover, 3)[0]


def test_solve_isolated_vertex():
    for n in (1, 2, 4):
        sol = solve_nmvc(Graph([7]), n, RandomSource(0))
        assert sol.cover == {7}
        assert sol.repaired_count == 0


def test_solve_rejects_n_zero():
    with pytest.raises(GraphError):
        solve_nmvc(Graph([0]), 0, RandomSource(0))


def test_repair_examples():
    star = Graph(range(5), [(0, i) for i in range(1, 5)])
    assert repair(star, {0}, 1) == {0}
    assert repair(star, set(), 1) == {0}
    # enumerating witness orders: the center alone suffices, the worst order
    # adds all four leaves
    assert repair_addition_range(star, 1) == (1, 4)
    two_edges = Graph(range(4), [(0, 1), (2, 3)])
    assert repair_addition_range(two_edges, 1) == (2, 2)
    assert len(repair(two_edges, set(), 1)) == 2


@settings(max_examples=80, deadline=None)
@given(graphs(max_vertices=10), st.integers(1, 4), st.integers(0, 2**16))
def test_solution_invariants(g, n, seed):
    sol = solve_nmvc(g, n, RandomSource(seed))
    assert verify_cover(g, sol.cover, n)[0]
    assert len(sol.cover) == 2 * len(sol.matched_edges) + sol.repaired_count + len(sol.isolated)
    assert len(sol.cover) >= exact_nmvc(g, n).size


@settings(max_examples=80, deadline=None)
@given(graphs(max_vertices=10), st.integers(0, 2**16))
def test_avc_is_two_approximation(g, seed):
    cover, picks = approx_vertex_cover(g, RandomSource(seed))
    assert is_maximal_matching(g, picks)
    assert all(a in cover or b in cover for a, b in g.edges())
    assert len(cover) == 2 * len(picks) <= 2 * exact_vc(g).size


@given(graphs(max_vertices=9), st.integers(1, 4), st.data())
def test_verification_monotone(g, n, data):
    s = data.draw(st.sets(st.sampled_from(g.vertices)))
    if verify_cover(g, s, n)[0]:
        assert verify_cover(g, s, n + 1)[0]
        x = data.draw(st.sampled_from(g.vertices))
        assert verify_cover(g, s | {x}, n)[0]
