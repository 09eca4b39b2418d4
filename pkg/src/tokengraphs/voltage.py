"""Cyclic voltage graphs, their lifts and Laplacian base matrices ``B(z)``."""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import LiftNotSimple
from .graph import Graph, laplacian
from .linalg import Spectrum, TOL_INTERNAL, eig_herm, eig_sym, spectrum_equal, spectrum_union

Poly = dict[int, int]


def _poly_add(acc: Poly, other: Poly, scale: int = 1) -> None:
    for e, c in other.items():
        acc[e] = acc.get(e, 0) + scale * c
        if acc[e] == 0:
            del acc[e]


def _poly_mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = e1 + e2
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _poly_str(p: Poly) -> str:
    if not p:
        return "0"
    terms = []
    for e in sorted(p):
        c = p[e]
        mono = "" if e == 0 else ("z" if e == 1 else f"z^{e}")
        if mono and abs(c) == 1:
            body = mono
        elif mono:
            body = f"{abs(c)}{mono}"
        else:
            body = str(abs(c))
        terms.append(("-" if c < 0 else "+") + body)
    s = "".join(terms)
    return s[1:] if s.startswith("+") else s


class LaurentMatrix:
    """Square matrix of integer Laurent polynomials in ``z``.

    Entry ``(i, j)`` is a dict ``{exponent: coefficient}`` with no zero
    coefficients, so structural equality is plain dict equality.
    """

    def __init__(self, entries: Sequence[Sequence[Poly]]):
        m = len(entries)
        if any(len(row) != m for row in entries):
            raise ValueError("Laurent matrix must be square")
        self.entries: tuple[tuple[Poly, ...], ...] = tuple(
            tuple({int(e): int(c) for e, c in p.items() if c} for p in row) for row in entries
        )

    @classmethod
    def zeros(cls, m: int) -> "LaurentMatrix":
        return cls([[{} for _ in range(m)] for _ in range(m)])

    @classmethod
    def constant(cls, a: np.ndarray) -> "LaurentMatrix":
        a = np.asarray(a)
        return cls([[{0: int(x)} if x else {} for x in row] for row in a])

    @property
    def m(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> Poly:
        i, j = ij
        return dict(self.entries[i][j])

    def __eq__(self, other):
        return isinstance(other, LaurentMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(tuple(tuple(tuple(sorted(p.items())) for p in row) for row in self.entries))

    def __matmul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        if self.m != other.m:
            raise ValueError("dimension mismatch")
        out = [[{} for _ in range(self.m)] for _ in range(self.m)]
        for i in range(self.m):
            for k in range(self.m):
                a = self.entries[i][k]
                if not a:
                    continue
                for j in range(self.m):
                    b = other.entries[k][j]
                    if b:
                        _poly_add(out[i][j], _poly_mul(a, b))
        return LaurentMatrix(out)

    def power(self, ell: int) -> "LaurentMatrix":
        if ell < 0:
            raise ValueError("negative power")
        result = LaurentMatrix.constant(np.eye(self.m, dtype=np.int64))
        base = self
        while ell:
            if ell & 1:
                result = result @ base
            ell >>= 1
            if ell:
                base = base @ base
        return result

    def trace(self) -> Poly:
        acc: Poly = {}
        for i in range(self.m):
            _poly_add(acc, self.entries[i][i])
        return acc

    def evaluate(self, z: complex) -> np.ndarray:
        out = np.zeros((self.m, self.m), dtype=complex)
        for i, row in enumerate(self.entries):
            for j, p in enumerate(row):
                out[i, j] = sum(c * z**e for e, c in p.items())
        return out

    def at_one(self) -> np.ndarray:
        return np.array([[sum(p.values()) for p in row] for row in self.entries], dtype=np.int64)

    def row_sums_at_one(self) -> np.ndarray:
        return self.at_one().sum(axis=1)

    def is_unitary_hermitian(self) -> bool:
        """True when ``B(z)^* = B(z)`` on ``|z| = 1``, i.e. entry ``(j,i)`` is ``(i,j)`` with ``z -> 1/z``."""
        for i in range(self.m):
            for j in range(self.m):
                mirrored = {-e: c for e, c in self.entries[j][i].items()}
                if mirrored != self.entries[i][j]:
                    return False
        return True

    def root_of_unity_trace_sum(self, ell: int, n: int) -> int:
        """``sum_{z^n = 1} tr(B(z)^ell)`` exactly: ``n`` times the coefficients at exponents ``= 0 mod n``."""
        tr = self.power(ell).trace()
        return n * sum(c for e, c in tr.items() if e % n == 0)

    def tolist(self) -> list[list[str]]:
        return [[_poly_str(p) for p in row] for row in self.entries]

    def __repr__(self):
        rows = ["[" + ", ".join(r) + "]" for r in self.tolist()]
        return "LaurentMatrix(" + ", ".join(rows) + ")"


@dataclass(frozen=True)
class Arc:
    tail: int
    head: int
    volt: int
    reverse: int


@dataclass(frozen=True)
class VoltageGraph:
    """Base digraph with ``Z_m`` voltages; every arc has a paired reverse arc.

    Loops and parallel arcs are allowed. ``labels`` names the base vertices.
    """

    n_base: int
    modulus: int
    arcs: tuple[Arc, ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("voltage group modulus must be >= 1")
        for idx, a in enumerate(self.arcs):
            if not (0 <= a.tail < self.n_base and 0 <= a.head < self.n_base):
                raise ValueError(f"arc {idx} has an endpoint out of range")
            if not 0 <= a.reverse < len(self.arcs):
                raise ValueError(f"arc {idx} is unpaired")
            b = self.arcs[a.reverse]
            if b.reverse != idx or b.tail != a.head or b.head != a.tail:
                raise ValueError(f"arc {idx} and its reverse {a.reverse} are not mutually paired")
            if (a.volt + b.volt) % self.modulus:
                raise ValueError(f"arc {idx}: reverse voltage is not the inverse")
            if a.reverse == idx and (2 * a.volt) % self.modulus:
                raise ValueError(f"arc {idx} is its own reverse but its voltage is not an involution")

    @classmethod
    def from_edges(
        cls,
        n_base: int,
        modulus: int,
        edges: Iterable[tuple[int, int, int]],
        labels: Sequence[str] = (),
    ) -> "VoltageGraph":
        """Each ``(u, v, volt)`` adds arc ``u -> v`` with ``volt`` and its reverse with ``-volt``.

        A loop ``(u, u, volt)`` therefore contributes the two arcs ``+-volt``.
        """
        arcs: list[Arc] = []
        for u, v, volt in edges:
            i = len(arcs)
            arcs.append(Arc(u, v, volt % modulus, i + 1))
            arcs.append(Arc(v, u, (-volt) % modulus, i))
        return cls(n_base, modulus, tuple(arcs), tuple(labels))

    def out_degree(self, u: int) -> int:
        return sum(1 for a in self.arcs if a.tail == u)

    def lift_index(self, u: int, g: int) -> int:
        return u * self.modulus + g % self.modulus


def _signed(volt: int, m: int) -> int:
    """Representative of ``volt mod m`` in ``(-m/2, m/2]`` for readable exponents."""
    v = volt % m
    return v - m if v > m // 2 else v


def laplacian_base_matrix(vg: VoltageGraph) -> LaurentMatrix:
    """``B(z)``: ``deg(u)`` on the diagonal minus ``z^volt`` for every arc ``u -> v``."""
    ent: list[list[Poly]] = [[{} for _ in range(vg.n_base)] for _ in range(vg.n_base)]
    for a in vg.arcs:
        _poly_add(ent[a.tail][a.tail], {0: 1})
        _poly_add(ent[a.tail][a.head], {_signed(a.volt, vg.modulus): -1})
    return LaurentMatrix(ent)


def lift_graph(vg: VoltageGraph) -> Graph:
    """Lift with vertex ``(u, g)`` at index ``u*m + g``; ``(u, g) ~ (v, g + volt)``."""
    m = vg.modulus
    nbrs: list[list[int]] = [[] for _ in range(vg.n_base * m)]
    for a in vg.arcs:
        for g in range(m):
            src = a.tail * m + g
            dst = a.head * m + (g + a.volt) % m
            if src == dst:
                raise LiftNotSimple(f"arc {a.tail}->{a.head} with voltage {a.volt} lifts to a loop")
            nbrs[src].append(dst)
    for i, row in enumerate(nbrs):
        if len(set(row)) != len(row):
            raise LiftNotSimple(f"lift vertex {i} has a repeated neighbour")
    return Graph(len(nbrs), tuple(tuple(sorted(r)) for r in nbrs))


def roots_of_unity(n: int) -> list[complex]:
    return [cmath.exp(2j * cmath.pi * r / n) for r in range(n)]


def lift_spectrum(vg: VoltageGraph, b: Optional[LaurentMatrix] = None) -> Spectrum:
    """Union over the ``m``-th roots of unity of ``spec B(z)``."""
    b = laplacian_base_matrix(vg) if b is None else b
    parts = [eig_herm(b.evaluate(z)) for z in roots_of_unity(vg.modulus)]
    return spectrum_union(*parts)


def lift_eigenvector(vg: VoltageGraph, r: int, f: np.ndarray) -> np.ndarray:
    """Lift vector ``y(u, g) = f_u zeta^(r g)`` for an eigenvector ``f`` of ``B(zeta^r)``."""
    f = np.asarray(f, dtype=complex)
    if f.shape != (vg.n_base,):
        raise ValueError(f"expected a vector of length {vg.n_base}")
    m = vg.modulus
    phase = np.exp(2j * np.pi * r * np.arange(m) / m)
    return np.outer(f, phase).ravel()


def lift_check(vg: VoltageGraph, tol: float = TOL_INTERNAL) -> bool:
    """Dense spectrum of the lift equals the union of the ``B(z)`` spectra."""
    return spectrum_equal(eig_sym(laplacian(lift_graph(vg))), lift_spectrum(vg), tol)
