"""Command-line entry point.

Every command builds one report dictionary; ``--format table`` renders it
for reading and ``--format machine`` dumps it as JSON, so the exit code and
both renderings come from the same object.

Exit codes: 0 success, 1 parse or I/O error, 2 constraint failure,
3 infeasible data, 4 worked-example mismatch, 5 oracle-check failure.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict

from . import basis_family, context_data, sweep
from .context_data import PAIR_LABELS
from .errors import (
    DegenerateDenominator,
    InfeasibleRow,
    InvalidData,
    NoUnitaryCombination,
    ParseError,
    QLRAError,
)
from .interference import table as interference_table
from .representation import DEFAULT_TOL_PHASE, DEFAULT_TOL_UNITARY, represent
from .scalars import Field

EXIT_OK = 0
EXIT_IO = 1
EXIT_CONSTRAINT = 2
EXIT_INFEASIBLE = 3
EXIT_MISMATCH = 4
EXIT_ORACLE = 5

DEFAULT_EXAMPLE_OUT = "paper_example.json"


def _positive(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {text}")
    return value


def _count(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {text}")
    return value


def _emit(report: dict, fmt: str, render) -> None:
    if fmt == "machine":
        print(json.dumps(report, indent=2, allow_nan=True))
    else:
        print(render(report))


def _load(path):
    """``(data, None)`` or ``(None, error report)``."""
    try:
        return context_data.load(path), None
    except ParseError as exc:
        return None, {"status": "parse_error", "path": str(path), "error": str(exc)}
    except OSError as exc:
        return None, {"status": "io_error", "path": str(path), "error": f"{exc.strerror or exc}"}


def _render_error(report: dict) -> str:
    return f"{report['status']}: {report['error']}"


def _matrix_lines(name, parts, field):
    unit = "i" if field == "complex" else "j"
    lines = [f"{name}:"]
    for row in parts:
        lines.append("  " + "  ".join(f"{x:+.6f}{y:+.6f}{unit}" for x, y in row))
    return lines


# -- commands -------------------------------------------------------------


def cmd_validate(args) -> int:
    data, err = _load(args.file)
    if err:
        _emit(err, args.format, _render_error)
        return EXIT_IO
    report = context_data.validate(data, args.tol)
    out = {"status": "pass" if report.passed else "fail", **report.to_dict()}
    _emit(out, args.format, lambda _: report.format())
    return EXIT_OK if report.passed else EXIT_CONSTRAINT


def cmd_classify(args) -> int:
    data, err = _load(args.file)
    if err:
        _emit(err, args.format, _render_error)
        return EXIT_IO
    report = context_data.validate(data, args.tol)
    if not report.passed:
        out = {"status": "invalid", **report.to_dict()}
        _emit(out, args.format, lambda _: report.format())
        return EXIT_CONSTRAINT
    try:
        tbl = interference_table(data)
    except DegenerateDenominator as exc:
        _emit({"status": "infeasible", "error": str(exc)}, args.format, _render_error)
        return EXIT_INFEASIBLE
    _emit({"status": "ok", **tbl.to_dict()}, args.format, lambda _: tbl.format())
    return EXIT_OK


def _render_representation(doc: dict) -> str:
    lines = []
    coeffs = doc["interference"]["coefficients"]
    lines.append("l    " + "  ".join(f"{'lambda_' + lab:>11}" for lab in PAIR_LABELS))
    for l in range(3):
        lines.append(f"{l + 1:<4} " + "  ".join(f"{coeffs[lab][l]:11.6f}" for lab in PAIR_LABELS))
    lines.append(f"class: {doc['interference']['class']}")
    lines.append(f"field: {doc['field']}")
    lines.append("phases (theta, eps):")
    for phi, eps in zip(doc["phases"]["phi"], doc["phases"]["eps"]):
        lines.append("  " + "  ".join(f"{p:+.6f} ({e:+d})" for p, e in zip(phi, eps)))
    lines.extend(_matrix_lines("U", doc["U"], doc["field"]))
    diag = doc["diagnostics"]
    lines.append(f"unitarity residual: {diag['unitarity_residual']:.3e}")
    lines.append("reconstructed p_b: " + "  ".join(f"{p:.6f}" for p in doc["reconstructed_b"]))
    if "born_vs_b_priors" in diag:
        lines.append(f"|reconstructed - p_b|: {diag['born_vs_b_priors']:.3e}")
    return "\n".join(lines)


def cmd_represent(args) -> int:
    data, err = _load(args.file)
    if err:
        _emit(err, args.format, _render_error)
        return EXIT_IO
    try:
        rep = represent(data, tol_phase=args.tol_phase, tol_unitary=args.tol_unitary, tol_validate=args.tol)
    except InvalidData as exc:
        out = {"status": "invalid", **exc.report.to_dict()}
        _emit(out, args.format, lambda _: exc.report.format())
        return EXIT_CONSTRAINT
    except (InfeasibleRow, NoUnitaryCombination, DegenerateDenominator) as exc:
        out = {"status": "infeasible", "error_type": type(exc).__name__, "error": str(exc)}
        row = getattr(exc, "row", None)
        if row is not None:
            out["row"] = row + 1
        _emit(out, args.format, lambda d: f"infeasible ({d['error_type']}): {d['error']}")
        return EXIT_INFEASIBLE
    if args.field != "auto" and Field.parse(args.field) is not rep.field:
        out = {
            "status": "infeasible",
            "error_type": "FieldMismatch",
            "error": f"data has {rep.table.kind.value} interference and needs the {rep.field.value} field, "
                     f"not {args.field}",
        }
        _emit(out, args.format, lambda d: f"infeasible ({d['error_type']}): {d['error']}")
        return EXIT_INFEASIBLE
    _emit({"status": "ok", **rep.to_dict()}, args.format, _render_representation)
    return EXIT_OK


def cmd_paper_example(args) -> int:
    data, q, report = basis_family.reproduce_example()
    out = {"status": "pass" if report.passed else "mismatch", **report.to_dict(), "out": str(args.out)}
    try:
        context_data.save(data, args.out)
    except OSError as exc:
        _emit({"status": "io_error", "error": f"cannot write {args.out}: {exc.strerror or exc}"},
              args.format, _render_error)
        return EXIT_IO
    _emit(out, args.format, lambda d: report.format() + f"\nwrote {d['out']}")
    return EXIT_OK if report.passed else EXIT_MISMATCH


def _render_oracle(doc: dict) -> str:
    s = doc["stats"]
    lines = [
        f"field: {doc['field']}  seed: {doc['seed']}  trials: {s['count']}",
        f"draws: {s['draws']}  acceptance rate: {s['acceptance_rate']:.4f}",
        f"max closed-form relative error: {s['max_oracle_rel']:.3e} (tol {sweep.ORACLE_RTOL:g})",
        f"max basis Gram residual:        {s['max_basis_gram']:.3e} (tol {sweep.UNITARY_TOL:g})",
        f"max transition unitarity:       {s['max_unitarity']:.3e} (tol {sweep.UNITARY_TOL:g})",
        f"max Born round-trip error:      {s['max_born']:.3e} (tol {sweep.BORN_TOL:g})",
        "classes: " + ", ".join(f"{k}={v}" for k, v in s["classes"].items()),
    ]
    fail = doc.get("first_failure")
    if fail:
        lines.append(f"FAIL at instance {fail['index']} (seed {fail['seed']}): {fail.get('error') or 'tolerance exceeded'}")
        lines.append("  params: " + json.dumps({k: fail[k] for k in _PARAM_KEYS}))
    lines.append(f"verdict: {doc['status']}")
    return "\n".join(lines)


_PARAM_KEYS = ("field", "a23", "a32", "a33", "eps23", "eps32", "eps33", "u", "s", "t", "v", "gamma")


def cmd_oracle_check(args) -> int:
    start = time.perf_counter()
    result = sweep.evaluate(args.trials, args.seed, args.field)
    fail = sweep.first_failure(result)
    out = {"status": "pass" if fail is None else "fail", "field": result.field, "seed": result.seed,
           "stats": result.stats}
    if fail is not None:
        rec = asdict(fail)
        out["first_failure"] = {k: rec[k] for k in ("index", "seed", "error", "oracle_rel", "basis_gram",
                                                    "unitarity", "born", "interference_class") + _PARAM_KEYS}
    _emit(out, args.format, _render_oracle)
    # wall time is not deterministic, keep it off stdout
    print(f"elapsed: {time.perf_counter() - start:.2f} s", file=sys.stderr)
    return EXIT_OK if fail is None else EXIT_ORACLE


def _render_sweep(doc: dict) -> str:
    s = doc["stats"]
    lines = [
        f"field: {doc['field']}  seed: {doc['seed']}  records: {s['count']}",
        f"draws: {s['draws']}  acceptance rate: {s['acceptance_rate']:.4f}",
        "classes: " + ", ".join(f"{k}={v}" for k, v in s["classes"].items()),
        f"admissible: {s['admissible']}",
    ]
    if doc.get("out"):
        lines.append(f"wrote {doc['out']} ({doc['out_format']})")
    return "\n".join(lines)


def cmd_sweep(args) -> int:
    try:
        ranges = basis_family.Ranges(
            magnitude=(args.mag_min, args.mag_max),
            phase=(args.phase_min, args.phase_max),
            v=(args.v_min, args.v_max),
            v_gap=args.v_gap,
        )
    except ValueError as exc:
        _emit({"status": "invalid", "error": str(exc)}, args.format, _render_error)
        return EXIT_CONSTRAINT
    try:
        result = sweep.evaluate(args.count, args.seed, args.field, ranges, args.max_attempts)
    except QLRAError as exc:
        _emit({"status": "infeasible", "error": str(exc)}, args.format, _render_error)
        return EXIT_INFEASIBLE
    text = result.to_csv() if args.out_format == "csv" else result.to_json()
    if args.out is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        _emit({"status": "io_error", "error": f"cannot write {args.out}: {exc.strerror or exc}"},
              args.format, _render_error)
        return EXIT_IO
    out = {"status": "ok", "field": result.field, "seed": result.seed, "stats": result.stats,
           "out": str(args.out), "out_format": args.out_format}
    _emit(out, args.format, _render_sweep)
    return EXIT_OK


# -- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "machine"), default="table",
                        help="human-readable table or JSON (default: table)")

    parser = argparse.ArgumentParser(prog="qlra", description="Quantum-like representation of two trichotomous observables.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check a data file")
    p.add_argument("file")
    p.add_argument("--tol", type=_positive, default=context_data.DEFAULT_TOL)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("represent", parents=[common], help="build amplitudes and a transition matrix")
    p.add_argument("file")
    p.add_argument("--tol", type=_positive, default=context_data.DEFAULT_TOL, help="validation tolerance")
    p.add_argument("--tol-phase", type=_positive, default=DEFAULT_TOL_PHASE)
    p.add_argument("--tol-unitary", type=_positive, default=DEFAULT_TOL_UNITARY)
    p.add_argument("--field", choices=("auto", "complex", "hyperbolic"), default="auto",
                   help="auto: complex unless the interference forces hyperbolic")
    p.set_defaults(func=cmd_represent)

    p = sub.add_parser("classify", parents=[common], help="interference coefficients and class")
    p.add_argument("file")
    p.add_argument("--tol", type=_positive, default=context_data.DEFAULT_TOL, help="validation tolerance")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("paper-example", parents=[common], help="reproduce the published worked example")
    p.add_argument("--out", default=DEFAULT_EXAMPLE_OUT, help=f"data file to write (default: {DEFAULT_EXAMPLE_OUT})")
    p.set_defaults(func=cmd_paper_example)

    p = sub.add_parser("oracle-check", parents=[common], help="closed forms vs direct computation, plus round trips")
    p.add_argument("--trials", type=_count, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--field", choices=("complex", "hyperbolic"), default="hyperbolic")
    p.set_defaults(func=cmd_oracle_check)

    p = sub.add_parser("sweep", parents=[common], help="sample the basis family and record each instance")
    p.add_argument("--count", type=_count, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--field", choices=("complex", "hyperbolic"), default="hyperbolic")
    d = basis_family.Ranges()
    p.add_argument("--mag-min", type=float, default=d.magnitude[0], help="range for |A23|, |A32|, |A33|")
    p.add_argument("--mag-max", type=float, default=d.magnitude[1])
    p.add_argument("--phase-min", type=float, default=d.phase[0], help="range for u, s, t and the state phases")
    p.add_argument("--phase-max", type=float, default=d.phase[1])
    p.add_argument("--v-min", type=float, default=d.v[0], help="range for the state magnitudes")
    p.add_argument("--v-max", type=float, default=d.v[1])
    p.add_argument("--v-gap", type=float, default=d.v_gap, help="minimum distance of |v| from 0")
    p.add_argument("--max-attempts", type=_count, default=100_000, help="draws per instance before giving up")
    p.add_argument("--out", default=None, help="output file (default: stdout)")
    p.add_argument("--out-format", choices=("csv", "json"), default="csv", help="record format (default: csv)")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
