"""Regular (equitable) partitions and exact quotient Laplacians."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .combinatorics import subset_rank
from .errors import NonRegularPartition
from .graph import Graph, laplacian
from .linalg import Spectrum, eig_sym


@dataclass(frozen=True)
class Partition:
    n: int
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen: list[int] = []
        for c in self.cells:
            if not c:
                raise ValueError("partition has an empty cell")
            seen.extend(c)
        if sorted(seen) != list(range(self.n)):
            raise ValueError(f"cells do not partition range({self.n})")

    @classmethod
    def from_cells(cls, cells: Sequence[Sequence[int]], n: Optional[int] = None) -> "Partition":
        cells = tuple(tuple(sorted(int(v) for v in c)) for c in cells)
        if n is None:
            n = sum(len(c) for c in cells)
        return cls(n, cells)

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls(n, tuple((i,) for i in range(n)))

    @property
    def r(self) -> int:
        return len(self.cells)

    def sizes(self) -> list[int]:
        return [len(c) for c in self.cells]

    def cell_of(self) -> list[int]:
        owner = [0] * self.n
        for j, c in enumerate(self.cells):
            for v in c:
                owner[v] = j
        return owner

    def characteristic_matrix(self) -> np.ndarray:
        s = np.zeros((self.n, self.r), dtype=np.int64)
        for j, c in enumerate(self.cells):
            s[list(c), j] = 1
        return s

    def to_json(self) -> dict:
        return {"cells": [list(c) for c in self.cells]}

    @classmethod
    def from_json(cls, data: dict | str) -> "Partition":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_cells(data["cells"])


@dataclass(frozen=True)
class QuotientMatrix:
    """Exact rational ``r x r`` quotient matrix."""

    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def r(self) -> int:
        return len(self.entries)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.entries for x in row)

    def to_float(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.entries])

    def to_int(self) -> np.ndarray:
        if not self.is_integral():
            raise ValueError("quotient matrix has non-integer entries")
        return np.array([[int(x) for x in row] for row in self.entries], dtype=np.int64)

    def spectrum(self) -> Spectrum:
        """Eigenvalues via the symmetric similar matrix ``D^1/2 Q D^-1/2``.

        For a regular partition ``|V_i| b_ij = |V_j| b_ji``, so the off-diagonal
        entries become ``-sqrt(b_ij b_ji)``.
        """
        a = self.to_float()
        prod = a * a.T
        if np.any(prod < 0) or np.any((a == 0) != (a.T == 0)):
            raise ValueError("quotient matrix is not symmetrizable")
        sym = np.sign(a) * np.sqrt(prod)
        np.fill_diagonal(sym, np.diag(a))
        return eig_sym(sym)

    def tolist(self) -> list[list]:
        """Integers where exact, otherwise ``"p/q"`` strings (JSON friendly)."""
        return [[int(x) if x.denominator == 1 else str(x) for x in row] for row in self.entries]


def _neighbour_counts(g: Graph, p: Partition) -> np.ndarray:
    owner = p.cell_of()
    counts = np.zeros((g.n, p.r), dtype=np.int64)
    for u, nb in enumerate(g.adj):
        for v in nb:
            counts[u, owner[v]] += 1
    return counts


def regularity_witness(g: Graph, p: Partition) -> Optional[tuple[int, int, int]]:
    """``None`` for a regular partition, else ``(u, u2, j)`` breaking regularity."""
    if p.n != g.n:
        raise ValueError(f"partition of {p.n} vertices for a graph on {g.n}")
    counts = _neighbour_counts(g, p)
    for cell in p.cells:
        first = cell[0]
        for u in cell[1:]:
            diff = np.flatnonzero(counts[u] != counts[first])
            if diff.size:
                return first, u, int(diff[0])
    return None


def is_regular(g: Graph, p: Partition) -> bool:
    return regularity_witness(g, p) is None


def quotient_laplacian(g: Graph, p: Partition) -> QuotientMatrix:
    """``(S^T S)^-1 S^T L S`` computed in exact arithmetic."""
    witness = regularity_witness(g, p)
    if witness is not None:
        raise NonRegularPartition(witness)
    s = p.characteristic_matrix()
    stls = s.T @ laplacian(g) @ s
    sizes = p.sizes()
    return QuotientMatrix(
        tuple(tuple(Fraction(int(stls[i, j]), sizes[i]) for j in range(p.r)) for i in range(p.r))
    )


def _cycle_gap(a: int, b: int, n: int) -> tuple[int, int]:
    """``(d, start)``: cycle distance and the endpoint from which ``+d`` reaches the other."""
    fwd = (b - a) % n
    if fwd <= n - fwd:
        return fwd, a
    return n - fwd, b


def f2_cycle_partition(n: int, shape: str = "path") -> Partition:
    """Path- or U-shaped regular partition of ``F_2(C_n)`` (colex vertex ranks).

    ``path``: cell ``d-1`` holds the pairs at cycle distance ``d``, ``d = 1..n//2``.

    ``u`` (even ``n = 2v``): ``2v - 1`` cells. Pairs ``{a, a+d}`` with ``d < v``
    are split by the parity of ``a``; cell ``d-1`` takes even ``a`` and cell
    ``2v-1-d`` odd ``a``, with the ``v`` antipodal pairs in the middle cell ``v-1``.
    For ``n = 4r+2`` these cells are the vertex orbits of the voltage lift.
    """
    if n < 4:
        raise ValueError("need n >= 4")
    nu = n // 2
    if shape == "path":
        cells: list[list[int]] = [[] for _ in range(nu)]
    elif shape == "u":
        if n % 2:
            raise ValueError("the U-shaped partition needs even n")
        cells = [[] for _ in range(2 * nu - 1)]
    else:
        raise ValueError(f"unknown shape {shape!r}; use 'path' or 'u'")
    for a in range(n):
        for b in range(a + 1, n):
            d, start = _cycle_gap(a, b, n)
            rank = subset_rank((a, b))
            if shape == "path" or d == nu:
                cells[d - 1].append(rank)
            elif start % 2 == 0:
                cells[d - 1].append(rank)
            else:
                cells[2 * nu - 1 - d].append(rank)
    return Partition.from_cells(cells, n * (n - 1) // 2)
