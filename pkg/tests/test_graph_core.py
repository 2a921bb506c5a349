from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import from_nx, random_graph, to_nx
from lovasz_cx.errors import (
    IndexOutOfRange,
    InvalidCharacter,
    LoopRejected,
    MalformedHeader,
    OrderTooLarge,
    TrailingBits,
)
from lovasz_cx.families import gen_petersen
from lovasz_cx.graph import (
    INF,
    complete_graph,
    cycle_graph,
    delete_vertices,
    from_edges,
    line_graph,
    metrics,
    path_graph,
)
from lovasz_cx.graph6 import decode_graph6, encode_graph6, read_graph6_file, write_graph6_file
from lovasz_cx.iso import is_isomorphism, isomorphic
from lovasz_cx.solvers import max_independent_set


@st.composite
def graphs(draw, max_order=12):
    n = draw(st.integers(0, max_order))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_edges(n, chosen)


# -- construction -----------------------------------------------------------


def test_triangle():
    g = from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert g.degrees() == [2, 2, 2]
    assert g.size == 3


def test_empty_graph():
    g = from_edges(4, [])
    assert g.size == 0 and g.order == 4


def test_gp_11_2_is_cubic_with_33_edges():
    g = gen_petersen(11, 2)
    h = from_edges(22, g.edges)
    assert h.size == 33 and set(h.degrees()) == {3}


def test_duplicates_collapse():
    g = from_edges(3, [(0, 1), (1, 0), (0, 1)])
    assert g.edges == ((0, 1),)


def test_errors():
    with pytest.raises(IndexOutOfRange):
        from_edges(2, [(0, 2)])
    with pytest.raises(LoopRejected):
        from_edges(2, [(1, 1)])
    with pytest.raises(IndexOutOfRange):
        delete_vertices(complete_graph(3), [5])


@given(graphs())
def test_handshake_and_symmetry(g):
    assert sum(g.degrees()) == 2 * g.size
    for u in range(g.order):
        assert not g.adj[u] >> u & 1
        for v in g.neighbors(u):
            assert g.has_edge(v, u)
    assert list(g.edges) == sorted(g.edges)


# -- deletion ----------------------------------------------------------------


def test_delete_from_triangle():
    h = delete_vertices(complete_graph(3), [0])
    assert h.order == 2 and h.size == 1
    assert h.index_map == (1, 2)


@given(graphs())
def test_delete_nothing_is_identity(g):
    assert delete_vertices(g, []).edges == g.edges


def test_delete_two_disjoint_edges_gp11():
    g = gen_petersen(11, 2)
    e1, e2 = g.edges[0], next(e for e in g.edges if not set(e) & set(g.edges[0]))
    h = delete_vertices(g, [*e1, *e2])
    assert h.order == 18
    assert max_independent_set(h).alpha == 8


@given(graphs(max_order=9), st.data())
def test_alpha_monotone_under_deletion(g, data):
    s = data.draw(st.sets(st.integers(0, max(g.order - 1, 0)))) if g.order else set()
    assert max_independent_set(delete_vertices(g, s)).alpha <= max_independent_set(g).alpha


# -- line graph -----------------------------------------------------------------


def test_line_graph_examples():
    assert line_graph(path_graph(3)).size == 1
    assert isomorphic(line_graph(complete_graph(3)), complete_graph(3))[0]
    star = from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert isomorphic(line_graph(star), complete_graph(3))[0]


@given(graphs())
def test_line_graph_degree_identity(g):
    lg = line_graph(g)
    for i, (u, v) in enumerate(g.edges):
        assert lg.degree(i) == g.degree(u) + g.degree(v) - 2


@given(graphs(max_order=9))
def test_line_graph_matches_networkx(g):
    assert nx.is_isomorphic(to_nx(line_graph(g)), nx.line_graph(to_nx(g)))


# -- metrics -------------------------------------------------------------------


def test_metrics_examples():
    m = metrics(gen_petersen(19, 7))
    assert (m.diameter, m.girth) == (5, 7)
    assert metrics(gen_petersen(11, 2)).girth == 5
    m = metrics(path_graph(4))
    assert m.girth == INF and m.diameter == 3
    m = metrics(from_edges(4, [(0, 1)]))
    assert not m.connected and m.diameter == INF
    assert m.as_dict()["diameter"] is None


def test_metrics_cgp_z35():
    from lovasz_cx.families import build

    m = metrics(build("cgp:2,cyclic:35,[5,7],[15,0]"))
    assert m.connected and (m.diameter, m.girth) == (5, 5)


@given(graphs(max_order=11))
def test_metrics_match_networkx(g):
    h = to_nx(g)
    m = metrics(g)
    assert m.connected == (g.order > 0 and nx.is_connected(h)) or g.order == 0
    gi = nx.girth(h)
    assert m.girth == gi
    if g.order and nx.is_connected(h):
        assert m.diameter == nx.diameter(h)
    if g.order:
        assert (m.degree_min, m.degree_max) == (min(g.degrees()), max(g.degrees()))


# -- graph6 --------------------------------------------------------------------


def test_graph6_examples():
    assert encode_graph6(complete_graph(3)) == "Bw"
    assert encode_graph6(path_graph(3)) == "Bg"
    assert decode_graph6("Bw").edges == complete_graph(3).edges
    g = decode_graph6("B?")
    assert g.order == 3 and g.size == 0


def test_graph6_against_networkx_reference():
    rng = random.Random(7)
    for _ in range(1000):
        n = rng.choice([0, 1, 2, 5, 13, 40, 62, 63, 70, 130])
        g = random_graph(rng, n, rng.random() * 0.3)
        s = encode_graph6(g)
        assert s == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert decode_graph6(s).edges == g.edges


@given(graphs(max_order=20))
def test_graph6_round_trip(g):
    h = decode_graph6(encode_graph6(g))
    assert h.order == g.order and h.edges == g.edges


def test_graph6_errors():
    with pytest.raises(TrailingBits):
        decode_graph6("Bw?")
    with pytest.raises(TrailingBits):
        decode_graph6("Bx")  # padding bit set
    with pytest.raises(InvalidCharacter):
        decode_graph6("B\x7f")
    with pytest.raises(MalformedHeader):
        decode_graph6("")
    with pytest.raises(MalformedHeader):
        decode_graph6("~?")


def test_graph6_order_too_large():
    from lovasz_cx.graph import Graph

    huge = Graph(1 << 36, (), ())
    with pytest.raises(OrderTooLarge):
        encode_graph6(huge)


def test_graph6_files(tmp_path):
    gs = [complete_graph(4), cycle_graph(5), gen_petersen(5, 2)]
    p = tmp_path / "g.g6"
    write_graph6_file(p, gs)
    back = read_graph6_file(p)
    assert [h.edges for h in back] == [g.edges for g in gs]


# -- isomorphism ---------------------------------------------------------------


def test_iso_examples():
    k3 = complete_graph(3)
    same, mapping = isomorphic(k3, from_edges(3, [(2, 0), (0, 1), (1, 2)]))
    assert same and is_isomorphism(k3, k3, mapping)
    assert not isomorphic(k3, path_graph(3))[0]
    q3 = from_nx(nx.hypercube_graph(3))
    same, mapping = isomorphic(gen_petersen(4, 1), q3)
    assert same and is_isomorphism(gen_petersen(4, 1), q3, mapping)


@given(graphs(max_order=10), st.randoms(use_true_random=False))
def test_iso_relabelled(g, r):
    from lovasz_cx.graph import relabel

    perm = list(range(g.order))
    r.shuffle(perm)
    h = relabel(g, perm)
    same, mapping = isomorphic(g, h)
    assert same and is_isomorphism(g, h, mapping)


@given(graphs(max_order=8), graphs(max_order=8))
def test_iso_matches_networkx(g, h):
    assert isomorphic(g, h)[0] == nx.is_isomorphic(to_nx(g), to_nx(h))


def test_iso_hard_regular_pairs():
    # same degree sequence, different structure
    assert not isomorphic(gen_petersen(8, 3), gen_petersen(8, 1))[0]
    # gp(n,k) ~ gp(n,l) when kl = +-1 mod n
    assert isomorphic(gen_petersen(7, 2), gen_petersen(7, 3))[0]
    assert isomorphic(gen_petersen(13, 5), gen_petersen(13, 8))[0]

