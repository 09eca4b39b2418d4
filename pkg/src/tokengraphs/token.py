"""k-token graphs, binomial matrices and algebraic-connectivity checks."""

from __future__ import annotations

import json
import warnings
from dataclasses import asdict, dataclass, field
from math import comb
from typing import Optional

import numpy as np

from .combinatorics import colex_subsets, rank_table, subset_rank, subset_unrank
from .errors import CapExceeded
from .graph import Graph, delete_vertex, is_connected, laplacian, path
from .linalg import TOL_INTERNAL, eig_sym

__all__ = [
    "subset_rank",
    "subset_unrank",
    "token_graph",
    "binomial_matrix",
    "lift_eigvec",
    "project_eigvec",
    "algebraic_connectivity",
    "kirkland_kappa",
    "verify_connectivity_relations",
]

DEFAULT_CAP = 5000


def token_graph(g: Graph, k: int, cap: Optional[int] = None) -> Graph:
    """The k-token graph ``F_k(G)``, vertices indexed by colex rank of k-subsets.

    Two k-subsets are adjacent when their symmetric difference is an edge of ``g``.
    """
    if not 1 <= k <= g.n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got k={k} for n={g.n}")
    size = comb(g.n, k)
    if cap is not None and size > cap:
        raise CapExceeded(f"F_{k} of a {g.n}-vertex graph has {size} vertices > cap {cap}")
    subsets = colex_subsets(g.n, k)
    index = rank_table(subsets)
    nbrs: list[list[int]] = []
    for s in subsets:
        members = set(s)
        row = []
        for a in s:
            rest = [x for x in s if x != a]
            for b in g.adj[a]:
                if b not in members:
                    row.append(index[tuple(sorted(rest + [b]))])
        nbrs.append(sorted(row))
    name = f"F_{k}({g.name})" if g.name else ""
    return Graph(size, tuple(tuple(r) for r in nbrs), name)


def binomial_matrix(n: int, k: int) -> np.ndarray:
    """``C(n,k) x n`` 0/1 matrix whose rows are colex-ordered k-subset indicators."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    subsets = colex_subsets(n, k)
    b = np.zeros((len(subsets), n), dtype=np.int64)
    for i, s in enumerate(subsets):
        b[i, list(s)] = 1
    return b


def lift_eigvec(b: np.ndarray, v: np.ndarray) -> np.ndarray:
    v = np.asarray(v)
    if v.shape != (b.shape[1],):
        raise ValueError(f"vector of shape {v.shape} does not match {b.shape[1]} columns")
    return b @ v


def project_eigvec(b: np.ndarray, u: np.ndarray) -> np.ndarray:
    u = np.asarray(u)
    if u.shape != (b.shape[0],):
        raise ValueError(f"vector of shape {u.shape} does not match {b.shape[0]} rows")
    return b.T @ u


def algebraic_connectivity(g: Graph) -> float:
    """Second-smallest Laplacian eigenvalue; ``0.0`` for a disconnected graph."""
    if g.n < 2:
        raise ValueError("algebraic connectivity needs at least 2 vertices")
    if not is_connected(g):
        warnings.warn(f"{g!r} is disconnected; algebraic connectivity is 0", stacklevel=2)
        return 0.0
    return float(eig_sym(laplacian(g))[1])


def kirkland_kappa(g: Graph, i: int) -> float:
    """``alpha(G \\ i) / alpha(G)``."""
    if g.n < 3:
        raise ValueError("kappa needs at least 3 vertices")
    h = delete_vertex(g, i)
    if not is_connected(g) or not is_connected(h):
        raise ValueError(f"kappa({i}) undefined: graph or graph minus vertex is disconnected")
    a = algebraic_connectivity(g)
    if a < 1e-12:
        raise ValueError("algebraic connectivity too small to divide by")
    return algebraic_connectivity(h) / a


@dataclass
class Check:
    name: str
    passed: bool
    lhs: float
    rhs: float
    tol: float
    note: str = ""

    def to_json(self) -> dict:
        d = asdict(self)
        d["pass"] = d.pop("passed")
        return d


@dataclass
class ConnectivityReport:
    graph: str
    k: int
    checks: list[Check] = field(default_factory=list)
    disconnected: bool = False

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {"graph": self.graph, "k": self.k, "checks": [c.to_json() for c in self.checks]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def _is_cycle(g: Graph) -> bool:
    return g.n >= 3 and all(len(nb) == 2 for nb in g.adj) and is_connected(g)


def verify_connectivity_relations(
    g: Graph, k: int, tol: float = TOL_INTERNAL, cap: int = DEFAULT_CAP
) -> ConnectivityReport:
    """Run the algebraic-connectivity relations for ``F_2 .. F_k`` of ``g``.

    Checks the non-increasing chain ``alpha(G) >= alpha(F_2) >= ...``, the
    equality ``alpha(F_k(G)) = alpha(G)``, the cycle lower bound
    ``alpha(F_k(C_n)) >= k/(k-1) alpha(P_{n-1})`` when ``g`` is a cycle, and the
    vertex-deletion criterion ``min kappa(i) >= 1/2 => alpha(F_2) = alpha(G)``.
    The quantity ``xi = min_i alpha(F_{k-1}(G \\ i))`` is reported for
    information only.
    """
    if not 1 <= k <= g.n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got k={k} for n={g.n}")
    for j in range(2, k + 1):
        if comb(g.n, j) > cap:
            raise CapExceeded(f"C({g.n},{j}) = {comb(g.n, j)} exceeds cap {cap}")
    report = ConnectivityReport(g.name or f"graph(n={g.n})", k)
    report.disconnected = not is_connected(g)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        alphas = [algebraic_connectivity(g)]
        for j in range(2, k + 1):
            alphas.append(algebraic_connectivity(token_graph(g, j)))
    if report.disconnected:
        report.checks.append(Check("connected", False, 0.0, 0.0, tol, "input graph is disconnected; alpha taken as 0"))
    for j in range(1, len(alphas)):
        report.checks.append(
            Check(
                f"alpha(F_{j}) >= alpha(F_{j + 1})",
                alphas[j - 1] >= alphas[j] - tol,
                alphas[j - 1],
                alphas[j],
                tol,
            )
        )
    report.checks.append(
        Check(f"alpha(F_{k}) == alpha(G)", abs(alphas[-1] - alphas[0]) <= tol, alphas[-1], alphas[0], tol)
    )
    if _is_cycle(g) and k >= 2 and g.n > 3:
        bound = k / (k - 1) * algebraic_connectivity(path(g.n - 1))
        report.checks.append(
            Check(
                f"alpha(F_{k}(C_n)) >= k/(k-1) alpha(P_(n-1))",
                alphas[-1] >= bound - tol,
                alphas[-1],
                bound,
                tol,
                "tight" if abs(alphas[-1] - bound) <= tol else "",
            )
        )
    if k >= 2 and g.n > 3 and not report.disconnected:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            minus = [delete_vertex(g, i) for i in range(g.n)]
            if k - 1 == 1:
                xi = min(algebraic_connectivity(h) for h in minus)
            else:
                xi = min(algebraic_connectivity(token_graph(h, k - 1)) for h in minus)
        report.checks.append(
            Check(
                "xi(G-) = min_i alpha(F_(k-1)(G\\i))",
                True,
                xi,
                k / (k - 1) * xi,
                tol,
                "informational: rhs is the conditional lower bound k/(k-1) xi",
            )
        )
        if k == 2 and alphas[0] > 1e-12:
            kappa_min = xi / alphas[0]
            premise = kappa_min >= 0.5
            report.checks.append(
                Check(
                    "min kappa(i) >= 1/2 implies alpha(F_2) == alpha(G)",
                    (not premise) or abs(alphas[1] - alphas[0]) <= tol,
                    kappa_min,
                    0.5,
                    tol,
                    "premise holds" if premise else "premise fails; implication vacuous",
                )
            )
    return report
