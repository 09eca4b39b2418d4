"""Eigensolvers, Gershgorin endpoints and tolerance-aware spectrum multisets.

Dense real symmetric and complex Hermitian problems are reduced to a real
symmetric tridiagonal matrix by Householder reflections and then solved with
the implicit-shift QL iteration. Tridiagonal input given directly (the
``B*(r)`` matrices) is solved by Sturm-sequence bisection instead, so the
lift route and the dense oracle never share an eigenvalue kernel.
"""

from __future__ import annotations

import json
import math
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import MultisetMismatch, NotSymmetrizable, NumericalFailure

EPS = float(np.finfo(float).eps)

#: absolute tolerance for comparing internally computed spectra
TOL_INTERNAL = 1e-8
#: absolute tolerance for comparing against values printed to 4 decimals
TOL_PRINTED = 5e-4


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Ascending eigenvalue multiset. ``tol`` is only used for display clustering."""

    values: np.ndarray
    tol: float = TOL_INTERNAL

    def __post_init__(self):
        vals = np.sort(np.asarray(self.values, dtype=float).ravel())
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values.tolist())

    def __getitem__(self, i):
        return self.values[i]

    def __repr__(self):
        body = ", ".join(
            f"{v:.6g}" + (f"^{m}" if m > 1 else "") for v, m in self.clusters()
        )
        return f"Spectrum({{{body}}})"

    def clusters(self, tol: Optional[float] = None) -> list[tuple[float, int]]:
        """Group values whose consecutive gaps are within ``tol``.

        Returns ``(mean value, multiplicity)`` pairs in ascending order.
        """
        tol = self.tol if tol is None else tol
        out: list[list[float]] = []
        for v in self.values.tolist():
            if out and v - out[-1][-1] <= tol:
                out[-1].append(v)
            else:
                out.append([v])
        return [(sum(c) / len(c), len(c)) for c in out]

    def multiplicities(self, tol: Optional[float] = None) -> list[int]:
        return [m for _, m in self.clusters(tol)]

    def to_json(self) -> dict:
        return {"n": len(self), "tol": self.tol, "values": self.values.tolist()}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: dict | str) -> "Spectrum":
        if isinstance(data, str):
            data = json.loads(data)
        vals = data["values"]
        if len(vals) != data["n"]:
            raise ValueError(f"spectrum JSON says n={data['n']} but has {len(vals)} values")
        return cls(np.array(vals, dtype=float), float(data.get("tol", TOL_INTERNAL)))


@dataclass(frozen=True, eq=False)
class TriDiag:
    """Tridiagonal matrix; ``sub[i]`` is entry ``(i+1, i)``, ``sup[i]`` is ``(i, i+1)``."""

    diag: np.ndarray
    sub: np.ndarray
    sup: np.ndarray

    def __post_init__(self):
        d = np.asarray(self.diag, dtype=float).ravel().copy()
        lo = np.asarray(self.sub, dtype=float).ravel().copy()
        up = np.asarray(self.sup, dtype=float).ravel().copy()
        if len(d) == 0:
            raise ValueError("empty tridiagonal matrix")
        if len(lo) != len(d) - 1 or len(up) != len(d) - 1:
            raise ValueError(
                f"off-diagonals must have length {len(d) - 1}, got {len(lo)} and {len(up)}"
            )
        for name, arr in (("diag", d), ("sub", lo), ("sup", up)):
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @classmethod
    def symmetric(cls, diag: Sequence[float], off: Sequence[float]) -> "TriDiag":
        return cls(diag, off, off)

    @classmethod
    def from_dense(cls, a: np.ndarray) -> "TriDiag":
        a = np.asarray(a, dtype=float)
        return cls(np.diagonal(a), np.diagonal(a, -1), np.diagonal(a, 1))

    @property
    def m(self) -> int:
        return len(self.diag)

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.sub, self.sup))

    def to_dense(self) -> np.ndarray:
        return np.diag(self.diag) + np.diag(self.sub, -1) + np.diag(self.sup, 1)

    def leading(self, k: int) -> "TriDiag":
        """Leading principal ``k x k`` submatrix."""
        return TriDiag(self.diag[:k], self.sub[: k - 1], self.sup[: k - 1])


# -- dense solvers ---------------------------------------------------------

def _check_square(a: np.ndarray) -> None:
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")


_TINY = np.finfo(float).tiny


def _tridiagonalize(a: np.ndarray, want_q: bool):
    """Householder reduction ``Q^H A Q = T`` followed by a phase scaling.

    Returns ``(d, e, basis)`` with ``d``/``e`` the real diagonal/off-diagonal of
    the final tridiagonal matrix and ``basis`` (or None) the unitary mapping its
    eigenvectors back to eigenvectors of ``a``.
    """
    a = a.copy()
    n = a.shape[0]
    q = np.eye(n, dtype=a.dtype) if want_q else None
    for k in range(n - 2):
        x = a[k + 1 :, k]
        xnorm = np.linalg.norm(x)
        if xnorm == 0.0:
            continue
        x0 = x[0]
        phase = x0 / abs(x0) if abs(x0) >= _TINY else 1.0
        v = x.copy()
        v[0] += phase * xnorm
        v /= np.linalg.norm(v)
        vh = v.conj()
        block = a[k + 1 :, k:]
        block -= 2.0 * np.outer(v, vh @ block)
        block = a[k:, k + 1 :]
        block -= 2.0 * np.outer(block @ v, vh)
        if q is not None:
            qb = q[:, k + 1 :]
            qb -= 2.0 * np.outer(qb @ v, vh)
    d = np.real(np.diagonal(a)).copy()
    e_raw = np.diagonal(a, -1).copy()
    e = np.abs(e_raw).astype(float)
    # subnormal couplings are negligible on the unit-scaled matrix; dropping them keeps phases finite
    e[e < _TINY] = 0.0
    if q is None:
        return d, e, None
    # D^H T D has real non-negative off-diagonals
    phases = np.ones(n, dtype=a.dtype)
    for k in range(n - 1):
        phases[k + 1] = phases[k] * (e_raw[k] / e[k] if e[k] != 0 else 1.0)
    return d, e, q * phases


def _tql(d: Sequence[float], e: Sequence[float], z: Optional[np.ndarray] = None):
    """Implicit-shift QL on a real symmetric tridiagonal matrix.

    ``e[i]`` couples rows ``i`` and ``i+1``. If ``z`` is given its columns are
    rotated in place so that on exit they hold the eigenvectors (in the
    unsorted order of the returned values).
    """
    n = len(d)
    d = [float(x) for x in d]
    e = [float(x) for x in e] + [0.0]
    cap = 64 * max(n, 1)
    sweeps = 0
    # absolute floor as in tql2; a purely relative test stalls on near-underflow blocks
    floor = EPS * max((abs(x) + abs(y) for x, y in zip(d, e)), default=0.0)
    for l in range(n):
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= EPS * dd or abs(e[m]) <= floor:
                    break
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > cap:
                raise NumericalFailure(f"QL iteration did not converge within {cap} sweeps")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            i = m - 1
            deflated = False
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    deflated = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                if z is not None:
                    zi = z[:, i].copy()
                    z[:, i] = c * zi - s * z[:, i + 1]
                    z[:, i + 1] = s * zi + c * z[:, i + 1]
                i -= 1
            if deflated:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return np.array(d)


def _solve_dense(a: np.ndarray, vectors: bool):
    n = a.shape[0]
    if n == 1:
        vals = np.real(np.diagonal(a)).astype(float)
        return (Spectrum(vals), np.ones((1, 1), dtype=a.dtype)) if vectors else Spectrum(vals)
    # unit max-norm keeps the deflation test clear of underflow
    scale = float(np.abs(a).max())
    if scale == 0.0:
        vals = np.zeros(n)
        return (Spectrum(vals), np.eye(n, dtype=a.dtype)) if vectors else Spectrum(vals)
    # exact power-of-two factor, applied in halves so subnormal inputs cannot overflow it
    shift = -math.frexp(scale)[1]
    a = a * 2.0 ** (shift // 2) * 2.0 ** (shift - shift // 2)
    d, e, basis = _tridiagonalize(a, vectors)
    if not vectors:
        return Spectrum(np.ldexp(_tql(d, e), -shift))
    z = np.eye(n)
    vals = np.ldexp(_tql(d, e, z), -shift)
    order = np.argsort(vals, kind="stable")
    vecs = basis @ z[:, order]
    return Spectrum(vals[order]), vecs


def eig_sym(a: np.ndarray, vectors: bool = False):
    """All eigenvalues of a real symmetric matrix, ascending.

    With ``vectors=True`` returns ``(Spectrum, V)`` where the columns of ``V``
    are orthonormal eigenvectors in the same order.
    """
    a = np.array(a, dtype=float)
    _check_square(a)
    scale = max(1.0, float(np.max(np.abs(a)))) if a.size else 1.0
    if a.size and np.max(np.abs(a - a.T)) > 1e-12 * scale:
        raise ValueError("matrix is not symmetric")
    a = 0.5 * (a + a.T)
    return _solve_dense(a, vectors)


def eig_herm(a: np.ndarray, vectors: bool = False):
    """All (real) eigenvalues of a complex Hermitian matrix, ascending."""
    a = np.array(a, dtype=complex)
    _check_square(a)
    scale = max(1.0, float(np.max(np.abs(a)))) if a.size else 1.0
    if a.size and np.max(np.abs(a - a.conj().T)) > 1e-12 * scale:
        raise ValueError("matrix is not Hermitian")
    a = 0.5 * (a + a.conj().T)
    if not np.any(a.imag):
        out = _solve_dense(a.real.copy(), vectors)
        if vectors:
            return out[0], out[1].astype(complex)
        return out
    return _solve_dense(a, vectors)


# -- tridiagonal bisection -------------------------------------------------

def _sturm_counts(d: np.ndarray, e2: np.ndarray, x: np.ndarray, pivmin: np.ndarray) -> np.ndarray:
    """Number of eigenvalues below each shift, batched over matrices.

    ``d`` has shape (B, m), ``e2`` (B, m-1) squared off-diagonals, ``x`` (B, K).
    """
    q = d[:, :1] - x
    q = np.where(np.abs(q) < pivmin, -pivmin, q)
    count = (q < 0).astype(np.int64)
    for i in range(1, d.shape[1]):
        q = d[:, i : i + 1] - x - e2[:, i - 1 : i] / q
        q = np.where(np.abs(q) < pivmin, -pivmin, q)
        count += q < 0
    return count


def bisect_eigenvalues(d: np.ndarray, e: np.ndarray, which: Optional[Sequence[int]] = None) -> np.ndarray:
    """Selected eigenvalues of a batch of symmetric tridiagonal matrices.

    ``d`` (B, m) diagonals and ``e`` (B, m-1) off-diagonals. ``which`` lists
    0-based positions in ascending order (default: all ``m``). Returns an array
    of shape (B, len(which)).
    """
    d = np.atleast_2d(np.asarray(d, dtype=float))
    e = np.asarray(e, dtype=float).reshape(d.shape[0], d.shape[1] - 1)
    b, m = d.shape
    ks = np.arange(m) if which is None else np.asarray(which, dtype=np.int64)
    ae = np.abs(e)
    radius = np.zeros_like(d)
    radius[:, :-1] += ae
    radius[:, 1:] += ae
    lo = np.min(d - radius, axis=1, keepdims=True)
    hi = np.max(d + radius, axis=1, keepdims=True)
    span = np.maximum(np.maximum(np.abs(lo), np.abs(hi)), 1.0)
    lo = lo - 2 * EPS * span
    hi = hi + 2 * EPS * span
    e2 = e * e
    pivmin = np.maximum(np.max(e2, axis=1, keepdims=True) if m > 1 else 0.0, 1.0) * np.finfo(float).tiny
    pivmin = np.broadcast_to(pivmin, (b, 1))
    lo = np.repeat(lo, len(ks), axis=1)
    hi = np.repeat(hi, len(ks), axis=1)
    target = ks[None, :]
    stop = 4 * EPS * span
    cap = 64 * max(m, 1)
    for _ in range(cap):
        if np.all(hi - lo <= stop):
            break
        mid = 0.5 * (lo + hi)
        above = _sturm_counts(d, e2, mid, pivmin) > target
        hi = np.where(above, mid, hi)
        lo = np.where(above, lo, mid)
    else:
        raise NumericalFailure(f"bisection did not converge within {cap} rounds")
    return 0.5 * (lo + hi)


def eig_tridiag_sym(t: TriDiag) -> Spectrum:
    """Eigenvalues of a symmetric tridiagonal matrix by Sturm bisection."""
    if not t.is_symmetric():
        raise ValueError("tridiagonal matrix is not symmetric; use symmetrize_tridiag first")
    if t.m == 1:
        return Spectrum(t.diag.copy())
    return Spectrum(bisect_eigenvalues(t.diag[None, :], t.sub[None, :])[0])


def symmetrize_tridiag(t: TriDiag) -> TriDiag:
    """Diagonally similar symmetric matrix with off-diagonal ``sqrt(sub*sup)``."""
    prod = t.sub * t.sup
    bad = np.flatnonzero(prod < 0)
    if bad.size:
        raise NotSymmetrizable(f"sub*sup is negative at position {int(bad[0])}")
    off = np.sqrt(prod)
    return TriDiag(t.diag, off, off)


def gershgorin_left(t: TriDiag) -> np.ndarray:
    """Left endpoint of the Gershgorin interval of every row."""
    radius = np.zeros(t.m)
    radius[:-1] += np.abs(t.sup)
    radius[1:] += np.abs(t.sub)
    return t.diag - radius


def gershgorin_classes(t: TriDiag) -> tuple[float, float, float]:
    """``(first row, interior rows, last row)`` endpoints of a B*-shaped matrix."""
    if t.m < 3:
        raise ValueError("need at least 3 rows for first/interior/last classes")
    left = gershgorin_left(t)
    interior = left[1:-1]
    if np.ptp(interior) > 1e-12 * max(1.0, float(np.max(np.abs(interior)))):
        raise ValueError("interior rows do not share a Gershgorin endpoint")
    return float(left[0]), float(interior[0]), float(left[-1])


def rayleigh_quotient(lap: np.ndarray, v: np.ndarray) -> float:
    v = np.asarray(v, dtype=float)
    denom = float(v @ v)
    if denom == 0.0:
        raise ValueError("Rayleigh quotient of the zero vector")
    return float(v @ (np.asarray(lap, dtype=float) @ v)) / denom


def residual(a: np.ndarray, value: float, vec: np.ndarray) -> float:
    return float(np.linalg.norm(a @ vec - value * vec))


# -- multiset algebra ------------------------------------------------------

def _vals(s) -> np.ndarray:
    return s.values if isinstance(s, Spectrum) else np.sort(np.asarray(s, dtype=float).ravel())


def spectrum_union(*parts) -> Spectrum:
    tol = next((p.tol for p in parts if isinstance(p, Spectrum)), TOL_INTERNAL)
    if not parts:
        return Spectrum(np.empty(0), tol)
    return Spectrum(np.concatenate([_vals(p) for p in parts]), tol)


def spectrum_contains(a, b, tol: float = TOL_INTERNAL) -> bool:
    """True if ``b`` injects into ``a`` with every pair within ``tol``."""
    av, bv = _vals(a), _vals(b)
    i = 0
    for x in bv:
        while i < len(av) and av[i] < x - tol:
            i += 1
        if i == len(av) or av[i] > x + tol:
            return False
        i += 1
    return True


def spectrum_equal(a, b, tol: float = TOL_INTERNAL) -> bool:
    return len(_vals(a)) == len(_vals(b)) and spectrum_contains(a, b, tol)


def spectrum_subtract(a, b, tol: float = TOL_INTERNAL) -> Spectrum:
    """Remove from ``a`` one nearest element (within ``tol``) per element of ``b``."""
    pool = _vals(a).tolist()
    for x in _vals(b).tolist():
        i = bisect_left(pool, x)
        best = None
        for j in (i - 1, i):
            if 0 <= j < len(pool) and abs(pool[j] - x) <= tol:
                if best is None or abs(pool[j] - x) < abs(pool[best] - x):
                    best = j
        if best is None:
            raise MultisetMismatch(x, tol)
        pool.pop(best)
    return Spectrum(np.array(pool), a.tol if isinstance(a, Spectrum) else TOL_INTERNAL)


def max_deviation(a, b) -> float:
    """Largest elementwise gap between two equal-length sorted multisets."""
    av, bv = _vals(a), _vals(b)
    if len(av) != len(bv):
        raise ValueError(f"length mismatch: {len(av)} vs {len(bv)}")
    return float(np.max(np.abs(av - bv))) if len(av) else 0.0


def as_spectrum(values: Iterable[float], tol: float = TOL_INTERNAL) -> Spectrum:
    return Spectrum(np.fromiter(values, dtype=float), tol)
