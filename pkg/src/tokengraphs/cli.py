"""Command-line interface: ``tokengraphs <verb> [flags]``.

Exit codes: 0 success, 1 computation error or failed verification, 2 usage error.
Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from typing import Optional, Sequence

from .cycles import (
    asymptotic_eigs,
    bstar_spectrum,
    f2_cycle_decomposition,
    f2_cycle_lift_spectrum,
)
from .errors import CapExceeded, InvalidFamilyError, NumericalFailure, OverliftInconsistency
from .graph import Graph, build_family, delete_vertex, format_edge_list, laplacian, read_edge_list
from .linalg import TOL_PRINTED, Spectrum, eig_sym
from .partitions import f2_cycle_partition, quotient_laplacian
from .token import DEFAULT_CAP, algebraic_connectivity, token_graph, verify_connectivity_relations
from .verify import SUITES, verify_suite
from .combinatorics import subset_unrank


class UsageError(Exception):
    """Bad flag combination detected after parsing."""


def _g12(x: float) -> float:
    """Round to 12 significant digits so JSON and CSV carry identical values."""
    return float(f"{x:.12g}")


def _values(vals) -> list[float]:
    return [_g12(v) for v in vals]


def _emit_values(values: list[float], fmt: str, payload: dict, out) -> None:
    if fmt == "json":
        out.write(json.dumps(payload) + "\n")
    elif fmt == "csv":
        out.write("index,value\n")
        for i, v in enumerate(values):
            out.write(f"{i},{v:.12g}\n")
    else:
        for v, m in Spectrum(values).clusters(1e-8):
            out.write(f"{v:>18.12g}  x{m}\n")


def _graph(spec: str) -> Graph:
    if spec.startswith("file:"):
        try:
            return read_edge_list(spec[5:])
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read graph file: {exc}") from None
    try:
        return build_family(spec)
    except InvalidFamilyError as exc:
        raise UsageError(str(exc)) from None


def _cycle_n(g: Graph, spec: str) -> int:
    if not spec.startswith("cycle:"):
        raise UsageError("--method lift/overlift needs --graph cycle:<n>")
    return g.n


def cmd_spectrum(args, out) -> int:
    g = _graph(args.graph)
    if not 1 <= args.k <= g.n - 1:
        raise UsageError(f"--k must lie in 1..{g.n - 1}")
    if args.method == "brute":
        tg = token_graph(g, args.k, cap=args.cap)
        vals = _values(eig_sym(laplacian(tg)).values)
        payload = {"graph": args.graph, "k": args.k, "method": "brute", "n": len(vals), "spectrum": vals}
        _emit_values(vals, args.format, payload, out)
        return 0
    if args.k != 2:
        raise UsageError("--method lift/overlift is defined for --k 2")
    n = _cycle_n(g, args.graph)
    if args.method == "lift":
        if n % 2 == 0 and n % 4 != 2:
            raise UsageError(f"no lift base for n={n}; use --method overlift")
        res = f2_cycle_decomposition(n) if n % 2 else f2_cycle_lift_spectrum(n)
    else:
        if n % 2:
            raise UsageError("--method overlift needs even n; use --method lift")
        res = f2_cycle_decomposition(n)
    payload = res.to_json()
    payload["spectrum"] = _values(payload["spectrum"])
    payload["lambda_removed"] = _values(payload["lambda_removed"])
    for row in payload["per_r"]:
        row["eigs"] = _values(row["eigs"])
    _emit_values(payload["spectrum"], args.format, payload, out)
    return 0


def cmd_token(args, out) -> int:
    g = _graph(args.graph)
    if not 1 <= args.k <= g.n - 1:
        raise UsageError(f"--k must lie in 1..{g.n - 1}")
    tg = token_graph(g, args.k, cap=args.cap)
    if args.format == "json":
        verts = [list(subset_unrank(i, g.n, args.k)) for i in range(tg.n)]
        out.write(json.dumps({"n": tg.n, "m": tg.m, "vertices": verts, "edges": tg.edges()}) + "\n")
    else:
        out.write(format_edge_list(tg))
    return 0


def cmd_alpha(args, out) -> int:
    g = _graph(args.graph)
    if args.delete is not None:
        if not 0 <= args.delete < g.n:
            raise UsageError(f"--delete must lie in 0..{g.n - 1}")
        g = delete_vertex(g, args.delete)
    if not 1 <= args.k <= g.n - 1:
        raise UsageError(f"--k must lie in 1..{g.n - 1}")
    if args.relations:
        report = verify_connectivity_relations(g, args.k, cap=args.cap)
        out.write(report.dumps() + "\n")
        return 0 if report.passed else 1
    h = g if args.k == 1 else token_graph(g, args.k, cap=args.cap)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        a = algebraic_connectivity(h)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    if args.format == "json":
        out.write(json.dumps({"graph": args.graph, "k": args.k, "delete": args.delete, "alpha": _g12(a)}) + "\n")
    else:
        out.write(f"{a:.12g}\n")
    return 0


def cmd_quotient(args, out) -> int:
    if args.n < 4:
        raise UsageError("--n must be >= 4")
    if args.shape == "u" and args.n % 2:
        raise UsageError("--shape u needs even --n")
    part = f2_cycle_partition(args.n, args.shape)
    q = quotient_laplacian(token_graph(build_family(f"cycle:{args.n}"), 2), part)
    vals = _values(q.spectrum().values)
    if args.format == "json":
        out.write(json.dumps({"n": args.n, "shape": args.shape, "partition": part.to_json(),
                              "matrix": q.tolist(), "spectrum": vals}) + "\n")
    elif args.format == "csv":
        _emit_values(vals, "csv", {}, out)
    else:
        for row in q.tolist():
            out.write(" ".join(f"{str(x):>6}" for x in row) + "\n")
        out.write("spectrum: " + ", ".join(f"{v:.6g}" for v in vals) + "\n")
    return 0


def cmd_overlift(args, out) -> int:
    if args.n < 4 or args.n % 2:
        raise UsageError("--n must be even and >= 4")
    res = f2_cycle_decomposition(args.n).to_json()
    res["spectrum"] = _values(res["spectrum"])
    res["lambda_removed"] = _values(res["lambda_removed"])
    res["per_r"] = [{"r": row["r"], "eigs": _values(row["eigs"])} for row in res["per_r"]] if args.per_r else []
    if args.format == "json":
        out.write(json.dumps(res) + "\n")
    elif args.format == "csv" and args.per_r:
        out.write("r,index,value\n")
        for row in res["per_r"]:
            for i, v in enumerate(row["eigs"]):
                out.write(f"{row['r']},{i},{v:.12g}\n")
    else:
        _emit_values(res["spectrum"], args.format, res, out)
    return 0


def cmd_asympt(args, out) -> int:
    n, r = args.n, args.r
    if n < 4 or not 0 <= r < n:
        raise UsageError("need --n >= 4 and 0 <= --r < n")
    if n % 2 and n < 5:
        raise UsageError("odd --n must be >= 5")
    try:
        approx = asymptotic_eigs(n, r)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    exact = sorted(bstar_spectrum(n, r).values.tolist())
    if n % 2 == 0:
        exact.remove(min(exact, key=lambda v: abs(v - 4.0)))
    dev = max(abs(a - b) for a, b in zip(approx, exact))
    payload = {"n": n, "r": r, "asymptotic": _values(approx), "exact": _values(exact), "max_deviation": _g12(dev)}
    _emit_values(payload["asymptotic"], args.format, payload, out)
    return 0


def cmd_verify(args, out) -> int:
    report = verify_suite(args.suite, args.tol)
    if args.format == "json":
        out.write(report.dumps() + "\n")
    else:
        out.write(report.summary() + "\n")
    if not report.passed:
        print(f"verification suite {args.suite!r} has failures", file=sys.stderr)
    return report.exit_code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tokengraphs", description="Spectra of token graphs and cyclic lifts.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    s = sub.add_parser("spectrum", help="Laplacian spectrum of F_k(G)")
    s.add_argument("--graph", required=True, help="family spec such as cycle:9, or file:PATH")
    s.add_argument("--k", type=int, default=1)
    s.add_argument("--method", choices=("brute", "lift", "overlift"), default="brute")
    s.add_argument("--format", choices=("json", "csv", "table"), default="table")
    s.add_argument("--cap", type=int, default=DEFAULT_CAP, help="max token-graph order for dense solves")
    s.set_defaults(func=cmd_spectrum)

    s = sub.add_parser("token", help="edge list of F_k(G)")
    s.add_argument("--graph", required=True)
    s.add_argument("--k", type=int, default=2)
    s.add_argument("--format", choices=("edges", "json"), default="edges")
    s.add_argument("--cap", type=int, default=DEFAULT_CAP)
    s.set_defaults(func=cmd_token)

    s = sub.add_parser("alpha", help="algebraic connectivity of F_k(G) or F_k(G minus a vertex)")
    s.add_argument("--graph", required=True)
    s.add_argument("--k", type=int, default=1)
    s.add_argument("--delete", type=int, default=None, metavar="I")
    s.add_argument("--relations", action="store_true", help="run the connectivity relation checks")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.add_argument("--cap", type=int, default=DEFAULT_CAP)
    s.set_defaults(func=cmd_alpha)

    s = sub.add_parser("quotient", help="quotient Laplacian of F_2(C_n)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--shape", choices=("path", "u"), default="path")
    s.add_argument("--format", choices=("json", "csv", "table"), default="table")
    s.set_defaults(func=cmd_quotient)

    s = sub.add_parser("overlift", help="even-n over-lift spectrum of F_2(C_n)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--per-r", action="store_true", help="include the per-r B*(r) spectra")
    s.add_argument("--format", choices=("json", "csv", "table"), default="json")
    s.set_defaults(func=cmd_overlift)

    s = sub.add_parser("asympt", help="large-n approximations of spec B*(r)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--format", choices=("json", "csv", "table"), default="json")
    s.set_defaults(func=cmd_asympt)

    s = sub.add_parser("verify", help="run a verification suite")
    s.add_argument("--suite", choices=SUITES, default="all")
    s.add_argument("--tol", type=float, default=TOL_PRINTED)
    s.add_argument("--format", choices=("json", "table"), default="table")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"tokengraphs {args.verb}: error: {exc}", file=sys.stderr)
        return 2
    except (CapExceeded, NumericalFailure, OverliftInconsistency, ArithmeticError, ValueError, MemoryError) as exc:
        print(f"tokengraphs {args.verb}: computation failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
