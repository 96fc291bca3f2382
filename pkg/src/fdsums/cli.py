"""Command-line front end.

Exit codes: 0 success, 1 a verification found failures (or an oracle
mismatch), 2 invalid input, 3 parameters not coprime where required.
"""
from __future__ import annotations

import argparse
import csv
import io
import sys
from fractions import Fraction
from typing import Callable, Sequence

from . import analysis, reciprocity, sweeps
from .errors import FDError, NotCoprime
from .fourier_dedekind import (
    FDSpec,
    fd_vector,
    fd_vector_complex,
    fd_vector_linear_comb,
    fd_vector_pair,
)
from .periodic import fd_vector_cramer
from .records import Kind, OutputRecord, format_rational
from .report import VerificationReport

EXIT_OK, EXIT_FAIL, EXIT_INVALID, EXIT_NOT_COPRIME = 0, 1, 2, 3

EXACT_METHODS = ("reduced", "linear", "pair", "cramer")
ALL_METHODS = EXACT_METHODS + ("complex",)
COMPLEX_TOL = 1e-9


class UsageError(Exception):
    pass


def _parse_int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}")


def _parse_t(text: str | None) -> list[int] | None:
    """``"5"``, ``"0..3"`` (inclusive) or ``"0:4"`` (half-open)."""
    if text is None:
        return None
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        if ":" in text:
            lo, hi = text.split(":")
            return list(range(int(lo), int(hi)))
        return [int(text)]
    except ValueError:
        raise UsageError(f"bad --t value {text!r}")


def _method_vector(method: str, spec: FDSpec) -> tuple:
    if method == "reduced":
        return fd_vector(spec)
    if method == "linear":
        if spec.d < 1:
            raise UsageError("linear method needs d >= 1")
        return fd_vector_linear_comb(spec)
    if method == "pair":
        if spec.d != 2:
            raise UsageError("pair method needs exactly two parameters")
        return fd_vector_pair(spec.a[0], spec.a[1], spec.b)
    if method == "cramer":
        if spec.d < 1 or spec.b < 2:
            raise UsageError("cramer method needs d >= 1 and b >= 2")
        return fd_vector_cramer(spec, backend="flint")
    if method == "complex":
        if spec.b < 2:
            raise UsageError("complex method needs b >= 2")
        spec.check_coprime()
        return tuple(complex(z) for z in fd_vector_complex(spec))
    raise UsageError(f"unknown method {method!r}")


def _applicable(spec: FDSpec) -> list[str]:
    out = ["reduced"]
    if spec.d >= 1:
        out.append("linear")
    if spec.d == 2:
        out.append("pair")
    if spec.d >= 1 and spec.b >= 2:
        out.append("cramer")
    if spec.b >= 2:
        out.append("complex")
    return out


def _agree(values: dict[str, object]) -> bool:
    ref = values["reduced"]
    for name, v in values.items():
        if name == "complex":
            if abs(v - float(ref)) >= COMPLEX_TOL:
                return False
        elif v != ref:
            return False
    return True


def _approx(v) -> str:
    if isinstance(v, complex):
        return f"{v.real:.12g}"
    return f"{float(v):.12g}"


def _csv_cell(v) -> str:
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, complex):
        return f"{v.real!r}{v.imag:+}j"
    return str(v)


def cmd_compute(args: argparse.Namespace) -> int:
    spec = FDSpec(_parse_int_list(args.a), args.b)
    methods = _applicable(spec) if args.method == "all" else [args.method]
    if args.method == "all" or methods != ["reduced"]:
        spec.check_coprime()
    vectors = {m: _method_vector(m, spec) for m in methods}
    ts = _parse_t(args.t)
    single = ts is not None and len(ts) == 1
    if ts is None:
        ts = list(range(spec.b))
    rows = []
    for t in ts:
        vals = {m: vectors[m][t % spec.b] for m in methods}
        row = {"t": t, "values": vals}
        if args.approx:
            row["approx"] = {m: _approx(v) for m, v in vals.items()}
        if len(methods) > 1:
            row["agree"] = _agree(vals)
        rows.append(row)

    if args.format == "csv":
        header = ["t"] + methods
        if args.approx:
            header += [f"{m}_approx" for m in methods]
        if len(methods) > 1:
            header.append("agree")
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            line = [row["t"]] + [_csv_cell(row["values"][m]) for m in methods]
            if args.approx:
                line += [row["approx"][m] for m in methods]
            if len(methods) > 1:
                line.append(str(row["agree"]).lower())
            w.writerow(line)
        sys.stdout.write(buf.getvalue())
    else:
        payload: dict = {"spec": str(spec), "a": list(spec.a), "b": spec.b, "methods": methods}
        if single:
            payload.update(rows[0])
            kind = Kind.VALUE
        else:
            payload["rows"] = rows
            if len(methods) == 1:
                payload["vector"] = [r["values"][methods[0]] for r in rows]
            kind = Kind.VECTOR
        if len(methods) > 1:
            payload["all_agree"] = all(r["agree"] for r in rows)
        print(OutputRecord(kind, payload).to_json())
    if len(methods) > 1 and not all(r["agree"] for r in rows):
        return EXIT_FAIL
    return EXIT_OK


def _need_pos(name: str, value: int | None, default: int, minimum: int = 1) -> int:
    if value is None:
        return default
    if value < minimum:
        raise UsageError(f"--{name} must be >= {minimum}")
    return value


def _run_verify(args: argparse.Namespace) -> VerificationReport:
    th = args.theorem
    max_a, max_b, dims = args.max_a, args.max_b, args.dims
    if th == "reciprocity":
        return reciprocity.verify_rademacher_grid(_need_pos("max-a", max_a, 10), _need_pos("dims", dims, 3))
    if th == "determinant":
        return sweeps.verify_determinant(_need_pos("max-b", max_b, 12, 2), _need_pos("dims", dims, 3))
    if th == "group":
        return sweeps.verify_group(_need_pos("max-b", max_b, 12, 2), _need_pos("dims", dims, 2, 0))
    if th == "avg":
        return analysis.verify_avg(max_b=_need_pos("max-b", max_b, 30, 3), max_d=_need_pos("dims", dims, 2))
    if th == "bounds":
        mb = _need_pos("max-b", max_b, 50, 2)
        rep = analysis.verify_bounds(mb, branch=args.branch)
        if not args.skip_corollary:
            rep = VerificationReport.combine(
                "pair_bounds", f"{rep.grid}; Dedekind sums b<={min(mb, 30)}",
                [rep, analysis.verify_dedekind_corollary(min(mb, 30))])
        return rep
    if th == "extrema":
        return analysis.verify_extrema(_need_pos("max-b", max_b, 60, 2))
    if th == "concavity":
        return analysis.verify_concavity(_need_pos("max-b", max_b, 20, 2))
    if th == "rshift":
        rep = analysis.verify_rshift(_need_pos("max-a", max_a, 25))
        pairs = [(2, 3), (11, 10), (64, 75)]
        return VerificationReport.combine(
            "r_shift_bound", f"{rep.grid}; reciprocity bound pairs {pairs}",
            [rep] + [analysis.bounds_recip_corollary(a, b) for a, b in pairs])
    if th == "constancy":
        return sweeps.verify_constancy()
    if th == "pie":
        return reciprocity.verify_pie_grid(_need_pos("max-b", max_b, 20, 2), _need_pos("dims", dims, 3))
    if th == "fiveway":
        return sweeps.verify_five_way(_need_pos("max-b", max_b, 12, 2), _need_pos("dims", dims, 3))
    if th == "lattice":
        return reciprocity.verify_lattice_grid(_need_pos("max-a", max_a, 8), 4)
    raise UsageError(f"unknown theorem {th!r}")


def _report_payload(rep: VerificationReport, max_witnesses: int) -> dict:
    lim = None if max_witnesses < 0 else max_witnesses
    failures = sorted(rep.failures, key=lambda w: repr(sorted(w.params.items())))
    return {
        "theorem_id": rep.theorem_id,
        "grid": rep.grid,
        "passed": rep.passed,
        "checked": rep.checked,
        "failure_count": len(rep.failures),
        "failures": failures[:lim],
        "observation_count": len(rep.observations),
        "summary": rep.summary(),
    }


def cmd_verify(args: argparse.Namespace) -> int:
    rep = _run_verify(args)
    print(OutputRecord(Kind.REPORT, _report_payload(rep, args.max_witnesses)).to_json())
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_lattice(args: argparse.Namespace) -> int:
    tri = reciprocity.TriangleSpec(args.e, args.f, args.r)
    if args.t_max < 0:
        raise UsageError("--t-max must be >= 0")
    rows = []
    for t in range(args.t_max + 1):
        row = {"t": t, "formula": reciprocity.lattice_count_formula(tri, t)}
        if args.oracle:
            row["brute"] = reciprocity.lattice_count_brute(tri, t)
            row["match"] = row["brute"] == row["formula"]
        rows.append(row)
    if args.format == "csv":
        cols = ["t", "formula"] + (["brute", "match"] if args.oracle else [])
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for row in rows:
            w.writerow([str(row[c]).lower() if isinstance(row[c], bool) else row[c] for c in cols])
        sys.stdout.write(buf.getvalue())
    else:
        payload = {"e": tri.e, "f": tri.f, "r": tri.r, "rows": rows}
        print(OutputRecord(Kind.VECTOR, payload).to_json())
    if args.oracle and not all(r["match"] for r in rows):
        return EXIT_FAIL
    return EXIT_OK


VERIFY_CHOICES = (
    "reciprocity", "determinant", "group", "avg", "bounds", "extrema",
    "concavity", "rshift", "constancy", "pie", "fiveway", "lattice",
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fdsums", description="Exact Fourier-Dedekind sums and identity checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="evaluate S_(a;b)(t)")
    p.add_argument("--a", required=True, help="comma-separated parameters, e.g. 1,3 (empty for d=0)")
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--t", help="an integer, an inclusive range lo..hi, or half-open lo:hi; omit for a full period")
    p.add_argument("--method", choices=ALL_METHODS + ("all",), default="reduced")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--approx", action="store_true", help="add decimal approximations (labelled approximate)")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="check an identity over a parameter grid")
    p.add_argument("theorem", choices=VERIFY_CHOICES)
    p.add_argument("--max-a", type=int)
    p.add_argument("--max-b", type=int)
    p.add_argument("--dims", type=int)
    p.add_argument("--branch", choices=("all", "t0", "nonzero"), default="all", help="bounds only")
    p.add_argument("--skip-corollary", action="store_true", help="bounds only: omit the classical Dedekind-sum part")
    p.add_argument("--max-witnesses", type=int, default=50, help="failures listed in full (-1 for all)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lattice", help="count lattice points in dilates of a right triangle")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--f", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--t-max", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="also count by enumeration")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_lattice)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler: Callable[[argparse.Namespace], int] = args.func
    try:
        return handler(args)
    except NotCoprime as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_COPRIME
    except (UsageError, FDError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
