"""Spectra of ``F_2(C_n)`` through cyclic lifts and the even-``n`` over-lift.

Odd ``n = 2v+1``: ``F_2(C_n)`` is the ``Z_n`` lift of a path ``u_1 .. u_v``
with doubled arcs and a loop at ``u_v``; each ``B(zeta^r)`` is diagonally
similar to the real tridiagonal ``B*(r)``.

Even ``n = 2v``: the ``Z_n`` over-lift counts each antipodal pair twice. Its
``B*(r)`` matrices give ``spec L`` plus ``v`` extra copies of the value 4.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .combinatorics import subset_rank
from .errors import MultisetMismatch, OverliftInconsistency
from .graph import cycle, laplacian
from .linalg import (
    Spectrum,
    TriDiag,
    bisect_eigenvalues,
    eig_herm,
    spectrum_subtract,
    spectrum_union,
)
from .reference import TRACE_SUMS_C8
from .token import token_graph
from .voltage import LaurentMatrix, VoltageGraph, laplacian_base_matrix

# eigenvalues this close to 4 may be dropped as over-lift extras
OVERLIFT_TOL = 1e-6


def _nu(n: int) -> int:
    return n // 2


def cycle_eigenvalue(n: int, j: int) -> float:
    """``theta_j = 4 sin^2(j pi / n)``, the Laplacian eigenvalues of ``C_n``."""
    return 4.0 * math.sin(j * math.pi / n) ** 2


# -- voltage bases ----------------------------------------------------------

def odd_cycle_base(n: int) -> VoltageGraph:
    """Base ``P+_v`` on ``Z_n``: vertex ``h-1`` is ``u_h`` (pairs at distance ``h``)."""
    if n % 2 == 0 or n < 5:
        raise ValueError(f"odd cycle base needs odd n >= 5, got {n}")
    nu = _nu(n)
    edges = []
    for h in range(nu - 1):
        edges.append((h, h + 1, 0))
        edges.append((h, h + 1, -1))
    edges.append((nu - 1, nu - 1, nu))
    return VoltageGraph.from_edges(nu, n, edges, tuple(f"u{h}" for h in range(1, nu + 1)))


def odd_vertex_map(n: int) -> np.ndarray:
    """Colex rank of the token vertex ``{j+h, j}`` for lift vertex ``(u_h, j)``."""
    nu = _nu(n)
    out = np.empty(nu * n, dtype=np.int64)
    for h in range(1, nu + 1):
        for j in range(n):
            out[(h - 1) * n + j] = subset_rank({(j + h) % n, j})
    return out


def even_4r2_base(n: int) -> VoltageGraph:
    """Base path ``u_-2r .. u_2r`` (index ``i + 2r``) on ``Z_{2r+1}`` for ``n = 4r+2``.

    Extra arcs ``u_-i -> u_{i-1}`` and ``u_i -> u_{1-i}`` carry ``+r`` for ``i = 1..2r``.
    """
    if n < 6 or n % 4 != 2:
        raise ValueError(f"n must have the form 4r+2 with r >= 1, got {n}")
    r = (n - 2) // 4
    idx = lambda i: i + 2 * r  # noqa: E731
    edges = [(idx(i), idx(i + 1), 0) for i in range(-2 * r, 2 * r)]
    for i in range(1, 2 * r + 1):
        edges.append((idx(-i), idx(i - 1), r))
        edges.append((idx(i), idx(1 - i), r))
    labels = tuple(f"u{i}" for i in range(-2 * r, 2 * r + 1))
    return VoltageGraph.from_edges(4 * r + 1, 2 * r + 1, edges, labels)


def even_4r2_vertex_map(n: int) -> np.ndarray:
    """Colex rank of the token vertex for each lift vertex ``(u_i, g)`` of :func:`even_4r2_base`.

    Copy 0 sends ``u_{-2r+j}`` to ``{0, j+1}`` and ``u_i`` (``i >= 1``) to
    ``{2r+1, 4r+2-i}``; copy ``g`` adds ``2g`` to both elements.
    """
    if n < 6 or n % 4 != 2:
        raise ValueError(f"n must have the form 4r+2 with r >= 1, got {n}")
    r = (n - 2) // 4
    m = 2 * r + 1
    copy0 = [(0, j + 1) for j in range(2 * r + 1)] + [(2 * r + 1, n - i) for i in range(1, 2 * r + 1)]
    out = np.empty(len(copy0) * m, dtype=np.int64)
    for u, (a, b) in enumerate(copy0):
        for g in range(m):
            out[u * m + g] = subset_rank({(a + 2 * g) % n, (b + 2 * g) % n})
    return out


def overlift_matrix(n: int) -> LaurentMatrix:
    """``v x v`` Laurent matrix ``B(z)`` of the even-``n`` over-lift on ``Z_n``.

    Row ``h`` stands for pairs at distance ``h+1``; the last row gathers the
    antipodal pairs, which the over-lift counts twice.
    """
    if n % 2 or n < 4:
        raise ValueError(f"over-lift needs even n >= 4, got {n}")
    nu = _nu(n)
    ent: list[list[dict]] = [[{} for _ in range(nu)] for _ in range(nu)]
    for h in range(nu):
        ent[h][h] = {0: 2 if h == 0 else 4}
    for h in range(nu - 1):
        ent[h][h + 1] = {0: -1, -1: -1}
        ent[h + 1][h] = {0: -1, 1: -1}
    last = ent[nu - 1][nu - 2]
    for e in (nu, nu + 1):
        last[e] = last.get(e, 0) - 1
    return LaurentMatrix(ent)


# -- B*(r) ----------------------------------------------------------------------

def bstar(n: int, r: int) -> TriDiag:
    """Real tridiagonal ``B*(r)`` similar to ``B(zeta^r)``, size ``v = floor(n/2)``.

    Diagonal ``(2, 4, ..., 4)`` and off-diagonals ``2 cos(r pi / n)``. For odd
    ``n`` the last diagonal entry is ``4 + 2 (-1)^(r+1) cos(r pi / n)``. For even
    ``n`` the last sub-diagonal entry is ``2 cos(r pi/n) + 2 cos(r (n-1) pi/n)``.
    """
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    if not 0 <= r < n:
        raise ValueError(f"need 0 <= r < n, got r={r} for n={n}")
    if n % 2 and n < 5:
        raise ValueError("odd n must be >= 5")
    nu = _nu(n)
    c = math.cos(r * math.pi / n)
    diag = np.full(nu, 4.0)
    diag[0] = 2.0
    off = np.full(nu - 1, 2.0 * c)
    sub = off.copy()
    if n % 2:
        diag[-1] = 4.0 + 2.0 * (-1) ** (r + 1) * c
    else:
        # cos(r(n-1) pi/n) = (-1)^r cos(r pi/n): the entry is 4c for even r, exactly 0 for odd r
        sub[-1] = 0.0 if r % 2 else 4.0 * c
    return TriDiag(diag, sub, off)


def _odd_batch(n: int, rs: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    nu = _nu(n)
    c = np.cos(rs * np.pi / n)
    d = np.full((len(rs), nu), 4.0)
    d[:, 0] = 2.0
    d[:, -1] = 4.0 + 2.0 * np.where(rs % 2 == 1, 1.0, -1.0) * c
    e = np.repeat(2.0 * c[:, None], nu - 1, axis=1)
    return d, e


def _even_batches(n: int, rs: np.ndarray):
    """Symmetric tridiagonal batches for even ``n``: (even r full, odd r leading block)."""
    nu = _nu(n)
    ev, od = rs[rs % 2 == 0], rs[rs % 2 == 1]
    ce = np.cos(ev * np.pi / n)
    d_e = np.full((len(ev), nu), 4.0)
    d_e[:, 0] = 2.0
    e_e = np.repeat(2.0 * np.abs(ce)[:, None], nu - 1, axis=1)
    e_e[:, -1] = 2.0 * math.sqrt(2.0) * np.abs(ce)
    co = np.cos(od * np.pi / n)
    d_o = np.full((len(od), nu - 1), 4.0)
    d_o[:, 0] = 2.0
    e_o = np.repeat(2.0 * co[:, None], max(nu - 2, 0), axis=1)
    return (ev, d_e, e_e), (od, d_o, e_o)


def _solve_batch(d: np.ndarray, e: np.ndarray, which=None) -> np.ndarray:
    if d.shape[0] == 0:
        return np.empty((0, d.shape[1] if which is None else len(which)))
    if d.shape[1] == 1:
        return d.copy() if which is None else d[:, list(which)]
    return bisect_eigenvalues(d, e, which)


def bstar_spectrum(n: int, r: int) -> Spectrum:
    """``spec B*(r)``; for even ``n`` the non-symmetric rows are reduced first."""
    return Spectrum(_per_r_eigs(n, np.array([r]))[r])


def _per_r_eigs(n: int, rs: np.ndarray) -> dict[int, np.ndarray]:
    out: dict[int, np.ndarray] = {}
    if n % 2:
        vals = _solve_batch(*_odd_batch(n, rs))
        for r, v in zip(rs.tolist(), vals):
            out[r] = np.sort(v)
        return out
    (ev, d_e, e_e), (od, d_o, e_o) = _even_batches(n, rs)
    for r, v in zip(ev.tolist(), _solve_batch(d_e, e_e)):
        out[r] = np.sort(v)
    for r, v in zip(od.tolist(), _solve_batch(d_o, e_o)):
        out[r] = np.sort(np.append(v, 4.0))
    return out


@dataclass
class CycleSpectrum:
    n: int
    method: str
    per_r: dict[int, np.ndarray]
    spectrum: Spectrum
    lambda_removed: list[float] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "method": self.method,
            "per_r": [{"r": r, "eigs": self.per_r[r].tolist()} for r in sorted(self.per_r)],
            "spectrum": self.spectrum.values.tolist(),
            "lambda_removed": list(self.lambda_removed),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def f2_cycle_decomposition(n: int) -> CycleSpectrum:
    """Per-``r`` spectra of ``B*(r)`` and the assembled ``spec L(F_2(C_n))``."""
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    per_r = _per_r_eigs(n, np.arange(n))
    union = spectrum_union(*(per_r[r] for r in range(n)))
    if n % 2:
        return CycleSpectrum(n, "lift", per_r, union)
    nu = _nu(n)
    near = np.abs(union.values - 4.0)
    if np.count_nonzero(near <= OVERLIFT_TOL) < nu:
        raise OverliftInconsistency(
            f"over-lift union for n={n} holds fewer than {nu} values within {OVERLIFT_TOL:g} of 4"
        )
    try:
        spectrum = spectrum_subtract(union, np.full(nu, 4.0), OVERLIFT_TOL)
    except MultisetMismatch as exc:  # pragma: no cover - guarded by the count above
        raise OverliftInconsistency(str(exc)) from exc
    removed = sorted(np.sort(union.values[np.argsort(near, kind="stable")[:nu]]).tolist())
    return CycleSpectrum(n, "overlift", per_r, spectrum, removed)


def f2_cycle_spectrum(n: int) -> Spectrum:
    """``spec L(F_2(C_n))`` with exactly ``C(n, 2)`` values."""
    return f2_cycle_decomposition(n).spectrum


def f2_cycle_lift_spectrum(n: int) -> CycleSpectrum:
    """Spectrum from the genuine lift bases via complex ``B(zeta^r)`` (odd ``n`` or ``n = 4r+2``)."""
    if n % 2:
        vg = odd_cycle_base(n)
    elif n % 4 == 2:
        vg = even_4r2_base(n)
    else:
        raise ValueError(f"no lift base for n={n}; n = 0 mod 4 needs the over-lift")
    b = laplacian_base_matrix(vg)
    m = vg.modulus
    per_r = {
        r: eig_herm(b.evaluate(complex(math.cos(2 * math.pi * r / m), math.sin(2 * math.pi * r / m)))).values.copy()
        for r in range(m)
    }
    return CycleSpectrum(n, "lift", per_r, spectrum_union(*per_r.values()))


def f2_cycle_alpha(n: int) -> float:
    """``alpha(F_2(C_n))`` from the two smallest eigenvalues of every ``B*(r)``."""
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    rs = np.arange(n)
    if n % 2:
        d, e = _odd_batch(n, rs)
        low = _solve_batch(d, e, [0, 1] if d.shape[1] > 1 else None).ravel()
    else:
        (ev, d_e, e_e), (od, d_o, e_o) = _even_batches(n, rs)
        parts = [_solve_batch(d_e, e_e, [0, 1]).ravel()]
        if d_o.shape[1] >= 2:
            parts.append(_solve_batch(d_o, e_o, [0, 1]).ravel())
        else:
            parts.append(d_o.ravel())
        low = np.concatenate(parts)
    low = np.sort(low)
    if low[1] > 4.0 - OVERLIFT_TOL:
        return float(f2_cycle_spectrum(n)[1])
    return float(low[1])


# -- eigenvectors -----------------------------------------------------------------

def base_eigenpairs(n: int, r: int):
    """``(Spectrum, F)`` for ``B(zeta^r)`` of the odd base; columns of ``F`` are eigenvectors."""
    b = laplacian_base_matrix(odd_cycle_base(n))
    z = np.exp(2j * np.pi * r / n)
    return eig_herm(b.evaluate(z), vectors=True)


def reconstruct_eigenvector(n: int, r: int, f: np.ndarray, tol: float = 1e-8) -> np.ndarray:
    """Token-graph eigenvector ``y({j+h, j}) = f_h zeta^(r j)`` indexed by colex rank.

    ``f`` must be an eigenvector of ``B(zeta^r)`` with relative residual at most ``tol``.
    """
    if n % 2 == 0:
        raise ValueError("eigenvector reconstruction is defined for odd n")
    f = np.asarray(f, dtype=complex)
    nu = _nu(n)
    if f.shape != (nu,):
        raise ValueError(f"expected a vector of length {nu}")
    norm = np.linalg.norm(f)
    if norm == 0:
        raise ValueError("zero vector")
    b = laplacian_base_matrix(odd_cycle_base(n)).evaluate(np.exp(2j * np.pi * r / n))
    bf = b @ f
    lam = np.vdot(f, bf).real / norm**2
    if np.linalg.norm(bf - lam * f) > tol * norm * (1 + np.max(np.abs(b).sum(axis=1))):
        raise ValueError(f"f is not an eigenvector of B(zeta^{r}) within {tol:g}")
    zeta = np.exp(2j * np.pi * r * np.arange(n) / n)
    y = np.zeros(n * (n - 1) // 2, dtype=complex)
    y[odd_vertex_map(n)] = np.outer(f, zeta).ravel()
    return y


def real_eigenvectors(y: np.ndarray) -> list[np.ndarray]:
    """Nonzero real and imaginary parts of ``y``; each is a real eigenvector for the same value."""
    out = []
    for part in (y.real, y.imag):
        if np.linalg.norm(part) > 1e-12 * max(1.0, np.linalg.norm(y)):
            out.append(np.array(part))
    return out


# -- closed forms and asymptotics -----------------------------------------------

def closed_form_quotient_eigs(n: int) -> list[float]:
    """Eigenvalues of the path-shaped quotient: ``8 sin^2`` (even ``n``) or ``8 cos^2`` (odd ``n``) of ``r pi/(n-1)``."""
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    nu = _nu(n)
    if n % 2 == 0:
        vals = [8 * math.sin(r * math.pi / (n - 1)) ** 2 for r in range(nu)]
    else:
        vals = [8 * math.cos(r * math.pi / (n - 1)) ** 2 for r in range(1, nu + 1)]
    return sorted(vals)


def spectral_radius_gap(n: int) -> tuple[float, float, float]:
    """``(max path-quotient eigenvalue, spectral radius of L(F_2(C_n)), radius - max)``.

    For even ``n`` the gap is zero; for odd ``n`` the quotient value is only a lower bound.
    """
    top = max(closed_form_quotient_eigs(n))
    radius = float(f2_cycle_spectrum(n)[-1])
    return top, radius, radius - top


def asymptotic_eigs(n: int, r: int) -> list[float]:
    """Large-``n`` approximations of ``spec B*(r)``, ascending.

    Odd ``n``: ``v`` values. Even ``n`` (odd ``r`` or ``r = v`` even): the
    ``v - 1`` values of the leading block, the eigenvalue 4 excluded.
    """
    if n < 4 or not 0 <= r < n:
        raise ValueError(f"need n >= 4 and 0 <= r < n, got n={n}, r={r}")
    nu = _nu(n)
    c = math.cos(r * math.pi / n)
    if n % 2:
        if r % 2:
            vals = [4 + 4 * c * math.cos((2 * k - 1) * math.pi / (n - 1)) for k in range(1, nu + 1)]
        else:
            vals = [4 + 4 * c * math.cos(2 * (k - 1) * math.pi / (n - 1)) for k in range(1, nu + 1)]
    else:
        if r % 2 == 0 and r != nu:
            raise ValueError(f"no asymptotic formula for even n with even r != n/2 (n={n}, r={r})")
        vals = [4 + 4 * c * math.cos((2 * k - 1) * math.pi / (n - 1)) for k in range(1, nu)]
    return sorted(vals)


def asymptotic_deviation(n: int, r: int) -> float:
    """Largest elementwise gap between :func:`asymptotic_eigs` and the exact ``B*(r)`` values it models."""
    approx = np.array(asymptotic_eigs(n, r))
    if n % 2:
        exact = bstar_spectrum(n, r).values
    else:
        lead = bstar(n, r).leading(_nu(n) - 1)
        exact = _solve_batch(lead.diag[None, :], lead.sup[None, :])[0]
    return float(np.max(np.abs(np.sort(exact) - approx)))


def alpha_estimates(n: int) -> tuple[float, float]:
    """``(closed-form estimate, exact alpha(F_2(C_n)))``."""
    if n < 5:
        raise ValueError(f"need n >= 5, got {n}")
    if n % 2:
        est = 4 + 4 * math.cos(math.pi / n) * math.cos((n - 2) * math.pi / (n - 1))
    else:
        est = 4 + 4 * math.cos(math.pi / n) * math.cos((n - 3) * math.pi / (n - 1))
    return est, f2_cycle_alpha(n)


# -- checks -----------------------------------------------------------------------

def gershgorin_bound(n: int, r: int, fold: bool = False) -> tuple[float, float]:
    """``(bound, min eig of B*(r))`` with bound ``4 sin^2(r' pi / (2n))``.

    By default ``r' = r``; this bound fails for ``r > n/2``. With ``fold`` the
    index is ``r' = min(r, n-r)``, the true first-row Gershgorin endpoint
    ``2 - 2|cos(r pi/n)|``, which holds for every ``r``.
    """
    if n % 2 == 0:
        raise ValueError("Gershgorin bound check is stated for odd n")
    if not 1 <= r < n:
        raise ValueError(f"need 1 <= r < n, got r={r}")
    rr = min(r, n - r) if fold else r
    bound = 4 * math.sin(rr * math.pi / (2 * n)) ** 2
    return bound, float(bstar_spectrum(n, r)[0])


def gershgorin_bound_check(n: int, r: int, fold: bool = False) -> bool:
    bound, low = gershgorin_bound(n, r, fold)
    return low >= bound - 1e-9


def exactly_one_cycle_eigenvalue(n: int, r: int, tol: float = 1e-7) -> bool:
    """``spec B*(r)`` meets ``spec L(C_n)`` in exactly one value, namely ``theta_r``."""
    if n % 2 == 0:
        raise ValueError("stated for odd n")
    thetas = np.array([cycle_eigenvalue(n, j) for j in range(n)])
    hits = [v for v in bstar_spectrum(n, r) if np.any(np.abs(thetas - v) <= tol)]
    return len(hits) == 1 and abs(hits[0] - cycle_eigenvalue(n, r)) <= tol


@dataclass
class TraceRow:
    ell: int
    lift_sum_exact: int
    lift_sum_float: float
    trace_l: int
    extra: int
    passed: bool
    printed_sum: Optional[int] = None
    printed_note: str = ""

    def to_json(self) -> dict:
        d = dict(self.__dict__)
        d["pass"] = d.pop("passed")
        return d


@dataclass
class TraceReport:
    n: int
    rows: list[TraceRow]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    def misprints(self) -> list[TraceRow]:
        return [r for r in self.rows if r.printed_note]

    def to_json(self) -> dict:
        return {"n": self.n, "pass": self.passed, "rows": [r.to_json() for r in self.rows]}


def trace_identity_check(n: int, lmax: int, rel_tol: float = 1e-6) -> TraceReport:
    """Compare ``sum_r tr(B*(r)^l)`` with ``tr(L^l) + v 4^l`` for ``l = 0..lmax``.

    The left side is computed twice: exactly from the Laurent matrix (only
    exponents divisible by ``n`` survive the root-of-unity sum) and in floating
    point from the ``B*(r)``. For ``n = 8`` the published sums are attached and
    any disagreement with the exact value is noted.
    """
    if n % 2 or n < 4:
        raise ValueError(f"trace identity needs even n >= 4, got {n}")
    if not 0 <= lmax <= 12:
        raise ValueError("lmax must lie in 0..12")
    nu = _nu(n)
    lap = laplacian(token_graph(cycle(n), 2)).astype(object)
    blaurent = overlift_matrix(n)
    dense = [bstar(n, r).to_dense() for r in range(n)]
    rows = []
    power = np.eye(lap.shape[0], dtype=np.int64).astype(object)
    for ell in range(lmax + 1):
        if ell:
            power = power @ lap
        tr_l = int(np.trace(power))
        extra = nu * 4**ell
        exact = blaurent.root_of_unity_trace_sum(ell, n)
        approx = float(sum(np.trace(np.linalg.matrix_power(b, ell)) for b in dense))
        ok = exact == tr_l + extra and abs(approx - (tr_l + extra)) <= rel_tol * max(1.0, abs(tr_l + extra))
        row = TraceRow(ell, exact, approx, tr_l, extra, ok)
        if n == 8 and ell < len(TRACE_SUMS_C8):
            row.printed_sum = TRACE_SUMS_C8[ell]
            if row.printed_sum != exact:
                row.printed_note = f"published value {row.printed_sum} differs from {exact}"
        rows.append(row)
    return TraceReport(n, rows)
