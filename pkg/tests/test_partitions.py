from fractions import Fraction

import numpy as np
import pytest

from tokengraphs.combinatorics import colex_subsets
from tokengraphs.errors import NonRegularPartition
from tokengraphs.graph import build_family, cycle, laplacian, path
from tokengraphs.linalg import eig_sym, spectrum_contains, spectrum_equal
from tokengraphs.partitions import (
    Partition,
    QuotientMatrix,
    f2_cycle_partition,
    is_regular,
    quotient_laplacian,
    regularity_witness,
)
from tokengraphs.reference import Q_PATH_C8, Q_PATH_C8_SPEC, Q_U_C8, Q_U_C8_SPEC
from tokengraphs.token import token_graph

from conftest import dense_eigs


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition.from_cells([[0, 1], [1, 2]])
    with pytest.raises(ValueError):
        Partition.from_cells([[0], []], 1)
    with pytest.raises(ValueError):
        Partition.from_cells([[0, 2]])


def test_partition_accessors():
    p = Partition.from_cells([[2, 0], [1, 3]])
    assert p.r == 2 and p.sizes() == [2, 2] and p.cell_of() == [0, 1, 0, 1]
    np.testing.assert_array_equal(p.characteristic_matrix().sum(axis=0), [2, 2])
    assert Partition.from_json(p.to_json()) == p
    assert Partition.from_json('{"cells": [[0, 2], [1, 3]]}') == p


def test_singletons_give_laplacian():
    g = build_family("petersen")
    q = quotient_laplacian(g, Partition.singletons(g.n))
    np.testing.assert_array_equal(q.to_int(), laplacian(g))


def test_non_regular_partition_witness():
    g = path(4)
    p = Partition.from_cells([[0, 1], [2, 3]])
    w = regularity_witness(g, p)
    assert w is not None and not is_regular(g, p)
    with pytest.raises(NonRegularPartition) as err:
        quotient_laplacian(g, p)
    assert err.value.witness == w


def test_witness_size_mismatch():
    with pytest.raises(ValueError):
        regularity_witness(path(3), Partition.singletons(4))


def test_rational_quotient():
    # star K_{1,3}: centre cell and leaf cell
    g = build_family("star:4")
    q = quotient_laplacian(g, Partition.from_cells([[0], [1, 2, 3]]))
    assert q.tolist() == [[3, -3], [-1, 1]]
    spec = q.spectrum()
    np.testing.assert_allclose(spec.values, [0, 4], atol=1e-12)


def test_fraction_entries():
    q = QuotientMatrix(((Fraction(1, 2), Fraction(-1, 2)), (Fraction(-1, 2), Fraction(1, 2))))
    assert not q.is_integral()
    assert q.tolist() == [["1/2", "-1/2"], ["-1/2", "1/2"]]
    with pytest.raises(ValueError):
        q.to_int()


def test_not_symmetrizable():
    q = QuotientMatrix(((Fraction(1), Fraction(-1)), (Fraction(0), Fraction(1))))
    with pytest.raises(ValueError):
        q.spectrum()


def test_c8_path_quotient():
    g = token_graph(cycle(8), 2)
    q = quotient_laplacian(g, f2_cycle_partition(8, "path"))
    np.testing.assert_array_equal(q.to_int(), Q_PATH_C8)
    assert spectrum_equal(q.spectrum(), Q_PATH_C8_SPEC, 5e-4)


def test_c8_u_quotient():
    g = token_graph(cycle(8), 2)
    q = quotient_laplacian(g, f2_cycle_partition(8, "u"))
    np.testing.assert_array_equal(q.to_int(), Q_U_C8)
    assert spectrum_equal(q.spectrum(), Q_U_C8_SPEC, 5e-4)


@pytest.mark.parametrize("n", range(4, 15))
def test_path_partition_regular(n):
    g = token_graph(cycle(n), 2)
    p = f2_cycle_partition(n, "path")
    assert p.r == n // 2
    q = quotient_laplacian(g, p)
    spec_l = eig_sym(laplacian(g))
    assert spectrum_contains(spec_l, q.spectrum(), 1e-8)
    np.testing.assert_allclose(q.spectrum().values, np.sort(np.linalg.eigvals(q.to_float()).real), atol=1e-8)


@pytest.mark.parametrize("n", [4, 6, 8, 10, 12])
def test_u_partition_regular(n):
    g = token_graph(cycle(n), 2)
    pu, pp = f2_cycle_partition(n, "u"), f2_cycle_partition(n, "path")
    qu, qp = quotient_laplacian(g, pu), quotient_laplacian(g, pp)
    assert pu.r == n - 1
    assert spectrum_contains(qu.spectrum(), qp.spectrum(), 1e-8)
    assert spectrum_contains(dense_eigs(laplacian(g)), qu.spectrum().values, 1e-8)


def test_partition_shape_errors():
    with pytest.raises(ValueError):
        f2_cycle_partition(7, "u")
    with pytest.raises(ValueError):
        f2_cycle_partition(8, "ring")
    with pytest.raises(ValueError):
        f2_cycle_partition(3)


def test_quotient_row_sums_zero():
    g = token_graph(build_family("hypercube:3"), 2)
    # orbits of pairs under the hypercube automorphism group are the Hamming distances
    cells = {1: [], 2: [], 3: []}
    for i, (a, b) in enumerate(colex_subsets(8, 2)):
        cells[bin(a ^ b).count("1")].append(i)
    q = quotient_laplacian(g, Partition.from_cells(cells.values()))
    assert all(sum(row) == 0 for row in q.entries)
