"""Named verification suites: published tables and internal invariants."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .cycles import (
    bstar,
    bstar_spectrum,
    cycle_eigenvalue,
    f2_cycle_decomposition,
    f2_cycle_lift_spectrum,
    f2_cycle_spectrum,
    spectral_radius_gap,
    trace_identity_check,
)
from .graph import build_family, cycle, delete_vertex, laplacian, path, star, complete_multipartite
from .linalg import TOL_INTERNAL, TOL_PRINTED, eig_sym, gershgorin_classes, spectrum_contains, spectrum_equal
from .partitions import f2_cycle_partition, quotient_laplacian
from .reference import (
    GERSHGORIN_C9,
    Q_PATH_C8,
    Q_PATH_C8_SPEC,
    Q_U_C8,
    Q_U_C8_SPEC,
    SPEC_F2_C8,
    TABLE_C6,
    TABLE_C8,
    TABLE_C9,
    TABLE_C9_CYCLE_COLUMN,
    TABLE_VT,
)
from .token import algebraic_connectivity, token_graph

SUITES = ("paper-tables", "invariants", "all")


@dataclass
class SuiteResult:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "pass": self.passed, "detail": self.detail}


@dataclass
class SuiteReport:
    suite: str
    results: list[SuiteResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def to_json(self) -> dict:
        return {"suite": self.suite, "pass": self.passed, "results": [r.to_json() for r in self.results]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    def summary(self) -> str:
        width = max((len(r.name) for r in self.results), default=4)
        lines = [f"{'check':<{width}}  result  detail"]
        for r in self.results:
            lines.append(f"{r.name:<{width}}  {'PASS' if r.passed else 'FAIL':<6}  {r.detail}")
        lines.append(f"{sum(r.passed for r in self.results)}/{len(self.results)} passed")
        return "\n".join(lines)


def _gap(a, b) -> float:
    return float(np.max(np.abs(np.asarray(a, dtype=float) - np.asarray(b, dtype=float))))


def _expand(pairs) -> np.ndarray:
    return np.array([v for v, m in pairs for _ in range(m)])


# -- published tables -------------------------------------------------------------

def table_c9(tol: float) -> SuiteResult:
    worst = max(_gap(bstar_spectrum(9, r).values, TABLE_C9[r]) for r in TABLE_C9)
    bold = max(
        abs(bstar_spectrum(9, r)[TABLE_C9_CYCLE_COLUMN[r]] - cycle_eigenvalue(9, r)) for r in TABLE_C9
    )
    ok = worst <= tol and bold <= TOL_INTERNAL
    return SuiteResult("table C9 spec B(zeta^r)", ok, f"max |printed-computed| {worst:.2e}; cycle entries {bold:.1e}")


def table_c9_gershgorin(tol: float) -> SuiteResult:
    worst = max(_gap(gershgorin_classes(bstar(9, r)), GERSHGORIN_C9[r]) for r in GERSHGORIN_C9)
    return SuiteResult("table C9 Gershgorin endpoints", worst <= TOL_INTERNAL, f"max gap {worst:.2e}")


def table_c6(tol: float) -> SuiteResult:
    per_r = f2_cycle_lift_spectrum(6).per_r
    worst = max(_gap(per_r[r], sorted(TABLE_C6[r])) for r in TABLE_C6)
    return SuiteResult("table C6 spec B(zeta^r) exact", worst <= 1e-10, f"max gap {worst:.2e}")


def table_c8(tol: float) -> SuiteResult:
    dec = f2_cycle_decomposition(8)
    worst = max(_gap(dec.per_r[r], TABLE_C8[r]) for r in TABLE_C8)
    conj = max(_gap(dec.per_r[r], dec.per_r[8 - r]) for r in range(1, 8))
    ok = worst <= tol and conj <= 1e-9
    return SuiteResult("table C8 spec B*(r)", ok, f"max gap {worst:.2e}; r vs n-r {conj:.1e}")


def spec_f2_c8(tol: float) -> SuiteResult:
    spec = f2_cycle_spectrum(8)
    expect = _expand(SPEC_F2_C8)
    profile = spec.multiplicities(1e-6)
    ok = spectrum_equal(spec, expect, tol) and profile == [m for _, m in SPEC_F2_C8]
    return SuiteResult("spec F2(C8) over-lift", ok, f"max gap {_gap(spec.values, expect):.2e}; profile {profile}")


def quotients_c8(tol: float) -> SuiteResult:
    g = token_graph(cycle(8), 2)
    qp = quotient_laplacian(g, f2_cycle_partition(8, "path"))
    qu = quotient_laplacian(g, f2_cycle_partition(8, "u"))
    exact = qp.to_int().tolist() == [list(r) for r in Q_PATH_C8] and qu.to_int().tolist() == [list(r) for r in Q_U_C8]
    sp, su = qp.spectrum(), qu.spectrum()
    spec_l = eig_sym(laplacian(g))
    ok = (
        exact
        and spectrum_equal(sp, Q_PATH_C8_SPEC, tol)
        and spectrum_equal(su, Q_U_C8_SPEC, tol)
        and spectrum_contains(su, sp, TOL_INTERNAL)
        and spectrum_contains(spec_l, su, TOL_INTERNAL)
    )
    return SuiteResult("C8 path and U quotients", ok, f"integer matrices match: {exact}")


def trace_c8(tol: float) -> SuiteResult:
    rep = trace_identity_check(8, 7)
    notes = "; ".join(r.printed_note for r in rep.misprints())
    return SuiteResult("trace identity C8 l=0..7", rep.passed, notes or "all published sums agree")


def table_connectivity(tol: float) -> SuiteResult:
    """Approximate entries are checked to one unit in their last printed digit."""
    tol_t = 5e-3
    bad = []
    for spec, a, b, i, unit in TABLE_VT:
        g = build_family(spec)
        t = max(tol_t, unit)
        if abs(algebraic_connectivity(g) - a) > t or abs(algebraic_connectivity(delete_vertex(g, i)) - b) > t:
            bad.append(spec)
    for d in (2, 3, 4, 5):
        g = build_family(f"hypercube:{d}")
        if abs(algebraic_connectivity(g) - 2) > tol_t or algebraic_connectivity(delete_vertex(g, 0)) < 1 - TOL_INTERNAL:
            bad.append(f"hypercube:{d}")
    for n in (5, 8, 12):
        p = path(n)
        if abs(algebraic_connectivity(delete_vertex(p, n - 1)) - 2 * (1 - math.cos(math.pi / (n - 1)))) > TOL_INTERNAL:
            bad.append(f"path:{n}")
        if abs(algebraic_connectivity(delete_vertex(star(n), n - 1)) - 1) > TOL_INTERNAL:
            bad.append(f"star:{n}")
    for n1, n2 in ((2, 3), (3, 5)):
        g = complete_multipartite(n1, n2)
        if abs(algebraic_connectivity(delete_vertex(g, n1)) - n1) > TOL_INTERNAL:
            bad.append(f"K_{n1},{n2}")
    return SuiteResult("vertex-deletion connectivity tables", not bad, "failed: " + ", ".join(bad) if bad else "")


# -- invariants ------------------------------------------------------------------------

def lift_vs_brute(tol: float) -> SuiteResult:
    bad = [
        n
        for n in range(4, 25)
        if not spectrum_equal(f2_cycle_spectrum(n), eig_sym(laplacian(token_graph(cycle(n), 2))), TOL_INTERNAL)
    ]
    return SuiteResult("lift/over-lift vs dense n=4..24", not bad, f"mismatch at {bad}" if bad else "")


def aldous_sweep(tol: float) -> SuiteResult:
    bad = []
    for spec in ("petersen", "odd:4", "hypercube:3", "complete:5", "complete_multipartite:2,2,3"):
        g = build_family(spec)
        if abs(algebraic_connectivity(token_graph(g, 2)) - algebraic_connectivity(g)) > TOL_INTERNAL:
            bad.append(spec)
    return SuiteResult("alpha(F2(G)) = alpha(G)", not bad, f"mismatch at {bad}" if bad else "")


def lift_bases(tol: float) -> SuiteResult:
    bad = []
    for n in (6, 10, 14, 5, 7, 9, 11, 13):
        if not spectrum_equal(f2_cycle_lift_spectrum(n).spectrum, f2_cycle_spectrum(n), TOL_INTERNAL):
            bad.append(n)
    return SuiteResult("genuine lift bases vs B*(r)", not bad, f"mismatch at {bad}" if bad else "")


def spectral_radius(tol: float) -> SuiteResult:
    """Even n: path-quotient maximum equals the radius. Odd n: it is a lower bound; the gap is reported."""
    bad = []
    odd_gaps = {}
    for n in range(4, 25):
        _, _, gap = spectral_radius_gap(n)
        if n % 2 == 0 and abs(gap) > TOL_INTERNAL:
            bad.append(n)
        if n % 2:
            odd_gaps[n] = gap
            if gap < -TOL_INTERNAL:
                bad.append(n)
    detail = f"odd-n gap {odd_gaps[5]:.3f} at n=5 down to {odd_gaps[23]:.3f} at n=23"
    return SuiteResult("path-quotient maximum vs spectral radius", not bad, f"mismatch at {bad}" if bad else detail)


PAPER_TABLES: tuple[Callable[[float], SuiteResult], ...] = (
    table_c9,
    table_c9_gershgorin,
    table_c6,
    table_c8,
    spec_f2_c8,
    quotients_c8,
    trace_c8,
    table_connectivity,
)
INVARIANTS: tuple[Callable[[float], SuiteResult], ...] = (lift_vs_brute, aldous_sweep, lift_bases, spectral_radius)


def verify_suite(name: str, tol: float = TOL_PRINTED) -> SuiteReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    checks = []
    if name in ("paper-tables", "all"):
        checks += PAPER_TABLES
    if name in ("invariants", "all"):
        checks += INVARIANTS
    report = SuiteReport(name)
    for check in checks:
        report.results.append(check(tol))
    return report
