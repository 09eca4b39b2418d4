import itertools
import math
import random
import warnings

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tokengraphs.combinatorics import colex_subsets, subset_rank, subset_unrank
from tokengraphs.errors import CapExceeded
from tokengraphs.graph import Graph, bipartite_classes, build_family, complete, cycle, laplacian, path
from tokengraphs.linalg import eig_sym, spectrum_contains
from tokengraphs.token import (
    algebraic_connectivity,
    binomial_matrix,
    kirkland_kappa,
    lift_eigvec,
    project_eigvec,
    token_graph,
    verify_connectivity_relations,
)

from conftest import SMALL_FAMILIES


def test_colex_examples():
    assert [subset_rank(s) for s in [(0, 1), (0, 2), (1, 2), (0, 3)]] == [0, 1, 2, 3]
    assert subset_unrank(5, 4, 2) == (2, 3)


def test_rank_roundtrip_all_10_3():
    subs = colex_subsets(10, 3)
    assert [subset_rank(s) for s in subs] == list(range(math.comb(10, 3)))
    assert all(subset_unrank(subset_rank(s), 10, 3) == s for s in subs)


def test_colex_order_definition():
    for s, t in itertools.combinations(colex_subsets(7, 3), 2):
        assert max(set(s) ^ set(t)) in t


@pytest.mark.parametrize("bad", [(-1, 2), (1, 1)])
def test_rank_rejects(bad):
    with pytest.raises(ValueError):
        subset_rank(bad)


def test_unrank_rejects():
    with pytest.raises(ValueError):
        subset_unrank(6, 4, 2)
    with pytest.raises(ValueError):
        subset_unrank(0, 3, 4)


def test_token_k1_is_identity(small_graph):
    assert token_graph(small_graph, 1) == small_graph


def test_token_cycle9_counts():
    g = token_graph(cycle(9), 2)
    assert (g.n, g.m) == (36, 63)


def test_token_johnson():
    g = token_graph(complete(4), 2)
    assert g.n == 6 and set(g.degrees()) == {4}


@pytest.mark.parametrize("spec", SMALL_FAMILIES)
@pytest.mark.parametrize("k", [2, 3])
def test_token_edge_count(spec, k):
    g = build_family(spec)
    if k >= g.n:
        pytest.skip("k out of range")
    tg = token_graph(g, k)
    assert tg.n == math.comb(g.n, k)
    assert tg.m == math.comb(g.n - 2, k - 1) * g.m


def test_token_adjacency_definition():
    g = build_family("odd:3")
    tg = token_graph(g, 2)
    subs = colex_subsets(g.n, 2)
    for a, b in itertools.combinations(range(tg.n), 2):
        diff = set(subs[a]) ^ set(subs[b])
        expect = len(diff) == 2 and g.has_edge(*sorted(diff))
        assert tg.has_edge(a, b) == expect


def test_token_k_range():
    with pytest.raises(ValueError):
        token_graph(cycle(5), 0)
    with pytest.raises(ValueError):
        token_graph(cycle(5), 5)
    with pytest.raises(CapExceeded):
        token_graph(cycle(20), 3, cap=100)


@pytest.mark.parametrize("spec", ["cycle:8", "path:5", "hypercube:3", "complete_multipartite:2,3"])
def test_token_bipartite(spec):
    g = build_family(spec)
    assert bipartite_classes(g) is not None
    for k in (2, 3):
        assert bipartite_classes(token_graph(g, k)) is not None


def test_binomial_matrix():
    np.testing.assert_array_equal(binomial_matrix(3, 2), [[1, 1, 0], [1, 0, 1], [0, 1, 1]])
    b = binomial_matrix(7, 3)
    assert set(b.sum(axis=1)) == {3}
    assert set(b.sum(axis=0)) == {15}
    with pytest.raises(ValueError):
        binomial_matrix(3, 4)


def test_lift_project_shapes():
    b = binomial_matrix(5, 2)
    assert lift_eigvec(b, np.ones(5)).shape == (10,)
    assert project_eigvec(b, np.ones(10)).shape == (5,)
    with pytest.raises(ValueError):
        lift_eigvec(b, np.ones(4))
    with pytest.raises(ValueError):
        project_eigvec(b, np.ones(5))


def _eigpairs(k_max=3, cap=500):
    for spec in SMALL_FAMILIES:
        g = build_family(spec)
        vals, vecs = eig_sym(laplacian(g), vectors=True)
        for k in range(2, min(k_max, g.n - 1) + 1):
            if math.comb(g.n, k) <= cap:
                yield g, k, vals, vecs


def test_lifted_eigenvectors():
    for g, k, vals, vecs in _eigpairs():
        b = binomial_matrix(g.n, k)
        lk = laplacian(token_graph(g, k)).astype(float)
        for j in range(g.n):
            u = lift_eigvec(b, vecs[:, j])
            scale = max(np.linalg.norm(u), 1e-300)
            assert np.linalg.norm(lk @ u - vals[j] * u) <= 1e-7 * scale


@pytest.mark.parametrize("spec", ["cycle:7", "path:6", "odd:3", "complete_multipartite:1,2,3"])
def test_spectrum_chain_inclusion(spec):
    g = build_family(spec)
    spectra = [eig_sym(laplacian(g))] + [eig_sym(laplacian(token_graph(g, k))) for k in range(2, g.n // 2 + 1)]
    for h in range(len(spectra) - 1):
        assert spectrum_contains(spectra[h + 1], spectra[h], 1e-8)


def test_algebraic_connectivity_values():
    assert algebraic_connectivity(cycle(9)) == pytest.approx(4 * math.sin(math.pi / 9) ** 2, abs=1e-12)
    assert algebraic_connectivity(complete(6)) == pytest.approx(6)
    with pytest.warns(UserWarning):
        assert algebraic_connectivity(Graph.from_edges(4, [(0, 1), (2, 3)])) == 0.0
    with pytest.raises(ValueError):
        algebraic_connectivity(path(1))


def test_algebraic_connectivity_relabel_invariant():
    rng = random.Random(7)
    g = build_family("odd:3")
    perm = list(range(g.n))
    rng.shuffle(perm)
    assert algebraic_connectivity(g.relabel(perm)) == pytest.approx(algebraic_connectivity(g), abs=1e-10)


def test_kappa_values():
    assert kirkland_kappa(build_family("petersen"), 0) == pytest.approx((3 - math.sqrt(3)) / 2, abs=1e-9)
    assert kirkland_kappa(complete(6), 3) == pytest.approx(5 / 6)
    assert kirkland_kappa(build_family("hypercube:3"), 0) == pytest.approx(2 * (1 - math.cos(2 * math.pi / 5)) / 2, abs=1e-9)
    with pytest.raises(ValueError):
        kirkland_kappa(build_family("star:5"), 0)


@pytest.mark.parametrize("parts", [(1, 2, 3), (2, 2, 3), (1, 1, 4)])
def test_multipartite_alpha_f2(parts):
    g = build_family("complete_multipartite:" + ",".join(map(str, parts)))
    assert algebraic_connectivity(token_graph(g, 2)) == pytest.approx(g.n - max(parts), abs=1e-8)


def test_relations_cycle9():
    rep = verify_connectivity_relations(cycle(9), 2)
    assert rep.passed
    eq = next(c for c in rep.checks if c.name == "alpha(F_2) == alpha(G)")
    assert abs(eq.lhs - eq.rhs) <= 1e-8


def test_relations_cycle4_tight():
    rep = verify_connectivity_relations(cycle(4), 2)
    bound = next(c for c in rep.checks if "P_(n-1)" in c.name)
    assert bound.note == "tight" and bound.lhs == pytest.approx(2)


def test_relations_odd3():
    rep = verify_connectivity_relations(build_family("odd:3"), 2)
    assert rep.passed
    assert rep.checks[-1].note == "premise holds"
    data = rep.to_json()
    assert data["graph"] == "odd:3" and data["k"] == 2
    assert set(data["checks"][0]) >= {"name", "pass", "lhs", "rhs", "tol"}


def test_relations_k3_chain():
    rep = verify_connectivity_relations(cycle(7), 3)
    assert rep.passed
    assert sum(1 for c in rep.checks if ">=" in c.name and "F_" in c.name) >= 2


def test_relations_disconnected_flag():
    g = Graph.from_edges(4, [(0, 1), (2, 3)], "two-edges")
    rep = verify_connectivity_relations(g, 2)
    assert rep.disconnected and not rep.passed
    assert rep.failures()[0].name == "connected"


def test_relations_cap():
    with pytest.raises(CapExceeded):
        verify_connectivity_relations(cycle(30), 3, cap=1000)


@settings(max_examples=25, deadline=None)
@given(st.integers(4, 8), st.data())
def test_aldous_on_random_graphs(n, data):
    edges = data.draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] < e[1]), min_size=n))
    g = Graph.from_edges(n, edges)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        a = algebraic_connectivity(g)
        a2 = algebraic_connectivity(token_graph(g, 2))
    assert a2 == pytest.approx(a, abs=1e-8)
