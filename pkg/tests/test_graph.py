import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tokengraphs.errors import InvalidFamilyError
from tokengraphs.graph import (
    Graph,
    adjacency,
    bipartite_classes,
    build_family,
    complete,
    components,
    cycle,
    delete_vertex,
    format_edge_list,
    is_connected,
    laplacian,
    parse_edge_list,
    path,
    read_edge_list,
    write_edge_list,
)
from tokengraphs.linalg import eig_sym
from tokengraphs.token import token_graph


def test_cycle4_edges():
    g = build_family("cycle:4")
    assert g.n == 4
    assert g.edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]


def test_odd3_is_petersen():
    g = build_family("odd:3")
    assert g.n == 10 and set(g.degrees()) == {3}
    eigs = eig_sym(laplacian(g)).values
    np.testing.assert_allclose(eigs, [0] + [2] * 5 + [5] * 4, atol=1e-10)


def test_odd2_is_triangle():
    assert build_family("odd:2") == complete(3)


@pytest.mark.parametrize("r", [2, 3, 4])
def test_odd_graph_regular(r):
    g = build_family(f"odd:{r}")
    from math import comb

    assert g.n == comb(2 * r - 1, r - 1)
    assert set(g.degrees()) == {r}


def test_hypercube_labels():
    g = build_family("hypercube:3")
    for u, v in g.edges():
        assert bin(u ^ v).count("1") == 1
    assert g.m == 12


def test_star_centre_zero():
    g = build_family("star:5")
    assert g.adj[0] == (1, 2, 3, 4)


def test_multipartite_blocks():
    g = build_family("complete_multipartite:2,2,2")
    assert g.n == 6 and set(g.degrees()) == {4}
    assert not g.has_edge(0, 1) and g.has_edge(1, 2)


@pytest.mark.parametrize(
    "spec",
    ["", "cycle", "cycle:2", "path:0", "odd:1", "hypercube:0", "star:1", "cycle:x", "wheel:5",
     "complete_multipartite:3", "complete_multipartite:", "petersen:3", "cycle:3,4"],
)
def test_bad_family_specs(spec):
    with pytest.raises(InvalidFamilyError):
        build_family(spec)


def test_laplacian_small_cases():
    np.testing.assert_array_equal(laplacian(cycle(3)), [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]])
    np.testing.assert_array_equal(laplacian(path(2)), [[1, -1], [-1, 1]])
    assert laplacian(cycle(3)).dtype == np.int64


def test_cycle4_spectrum():
    np.testing.assert_allclose(eig_sym(laplacian(cycle(4))).values, [0, 2, 2, 4], atol=1e-12)


def test_laplacian_rows(small_graph):
    lap = laplacian(small_graph)
    assert np.all(lap.sum(axis=1) == 0)
    assert np.array_equal(lap, lap.T)
    assert np.array_equal(np.diag(lap), small_graph.degrees())
    off = lap - np.diag(np.diag(lap))
    assert set(np.unique(off)) <= {0, -1}
    np.testing.assert_array_equal(off, -adjacency(small_graph))


def test_laplacian_psd(small_graph):
    vals = eig_sym(laplacian(small_graph)).values
    assert vals[0] >= -1e-9
    assert abs(vals.sum() - sum(small_graph.degrees())) <= 1e-8 * max(1, vals.sum())


def test_delete_vertex_examples():
    assert delete_vertex(cycle(4), 0) == path(3)
    assert delete_vertex(complete(5), 2) == complete(4)
    s = delete_vertex(build_family("star:5"), 0)
    assert s.n == 4 and s.m == 0


def test_delete_vertex_out_of_range():
    with pytest.raises(IndexError):
        delete_vertex(cycle(4), 4)
    with pytest.raises(IndexError):
        delete_vertex(cycle(4), -1)


def test_delete_commutes_with_laplacian(small_graph):
    for i in range(small_graph.n):
        lhs = laplacian(delete_vertex(small_graph, i))
        full = laplacian(small_graph)
        keep = [j for j in range(small_graph.n) if j != i]
        rhs = full[np.ix_(keep, keep)].copy()
        # deleting a vertex lowers the degree of its neighbours
        for j in small_graph.adj[i]:
            jj = j - (j > i)
            rhs[jj, jj] -= 1
        np.testing.assert_array_equal(lhs, rhs)


def test_bipartite_classes():
    assert bipartite_classes(cycle(8)) == [i % 2 for i in range(8)]
    assert bipartite_classes(cycle(9)) is None
    assert bipartite_classes(token_graph(cycle(8), 2)) is not None


def test_components():
    g = Graph.from_edges(5, [(0, 1), (2, 3)])
    assert components(g) == 3
    assert not is_connected(g)
    assert is_connected(cycle(5))


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, ((1,), ()))
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(2, ((1, 1), (0,)))


def test_edge_list_roundtrip(tmp_path, small_graph):
    p = tmp_path / "g.txt"
    write_edge_list(small_graph, p)
    assert p.read_bytes().endswith(b"\n") and b"\r" not in p.read_bytes()
    assert read_edge_list(p) == small_graph


@pytest.mark.parametrize(
    "text",
    ["", "3\n", "3 1\n0 0\n", "3 2\n0 1\n0 1\n", "3 1\n1 0\n", "3 2\n0 1\n", "3 1\na b\n"],
)
def test_edge_list_rejects(text):
    with pytest.raises(ValueError):
        parse_edge_list(text)


def test_format_edge_list():
    assert format_edge_list(path(3)) == "3 2\n0 1\n1 2\n"


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 9), st.data())
def test_relabel_preserves_spectrum(n, data):
    edges = data.draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] < e[1])))
    g = Graph.from_edges(n, edges)
    perm = data.draw(st.permutations(range(n)))
    h = g.relabel(perm)
    assert h.m == g.m
    np.testing.assert_allclose(eig_sym(laplacian(h)).values, eig_sym(laplacian(g)).values, atol=1e-9)
