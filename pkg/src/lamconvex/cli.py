"""Command-line interface.

Subcommands:
    params     twelve lamination parameters of a laminate file
    combine    build and verify a convex combination of two laminates
    gsequence  parameter convergence table of the interleaving sequence
    oscillate  witness indices showing pointwise oscillation at a point

Exit codes: 0 all verdicts pass, 1 verdict failure, 2 usage or file
errors, 3 numeric-domain errors (alpha out of range, search cap, ...).

Note: write --x=-1/2 (with '='), otherwise the leading '-' of the value
is taken for an option.
"""

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .convexity import convex_combine, verify_combination
from .errors import InvariantViolation, LamConvexError, ParseError
from .fileio import load_laminate, save_laminate
from .interleaving import (
    DEFAULT_SEARCH_CAP,
    convergence_table,
    oscillation_witness,
)
from .parameters import lamination_parameters
from .step import StepLaminate

DEFAULT_TOLERANCE = 1e-12

EXIT_PASS = 0
EXIT_VERDICT_FAILURE = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3


@dataclass
class Report:
    operation: str
    inputs: dict
    payload: dict
    verdicts: list = field(default_factory=list)

    def add_verdict(self, name: str, value: float, tolerance: float, passed: bool):
        self.verdicts.append({
            "name": name,
            "value": value,
            "tolerance": tolerance,
            "passed": bool(passed),
        })

    @property
    def passed(self) -> bool:
        return all(v["passed"] for v in self.verdicts)

    def to_json(self) -> str:
        doc = {
            "operation": self.operation,
            "inputs": self.inputs,
            "payload": self.payload,
            "verdicts": self.verdicts,
            "passed": self.passed,
        }
        return json.dumps(doc, sort_keys=True, indent=2, allow_nan=False) + "\n"

    def to_text(self) -> str:
        lines = [f"operation: {self.operation}"]
        for key, value in self.inputs.items():
            lines.append(f"  {key}: {value}")
        lines.extend(_payload_lines(self.payload, indent="  "))
        for v in self.verdicts:
            state = "PASS" if v["passed"] else "FAIL"
            lines.append(
                f"verdict {v['name']}: {state} (value={v['value']:.6e}, "
                f"tolerance={v['tolerance']:.6e})")
        return "\n".join(lines) + "\n"


def _payload_lines(obj, indent: str) -> list[str]:
    lines = []
    for key, value in obj.items():
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.extend(_payload_lines(value, indent + "  "))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{indent}{key}:")
            for row in value:
                cells = ", ".join(f"{k}={_fmt(v)}" for k, v in row.items())
                lines.append(f"{indent}  {cells}")
        else:
            lines.append(f"{indent}{key}: {_fmt(value)}")
    return lines


def _fmt(value) -> str:
    if isinstance(value, float):
        return format(value, ".12g")
    if isinstance(value, list):
        return "[" + ", ".join(_fmt(v) for v in value) + "]"
    return str(value)


def _params_payload(params) -> dict:
    return params.as_dict()


def _parse_x(text: str):
    """'p/q' becomes an exact Fraction; anything else parses as float."""
    if "/" in text:
        num, _, den = text.partition("/")
        try:
            return Fraction(int(num.strip()), int(den.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise argparse.ArgumentTypeError(f"invalid rational {text!r}: {exc}")
    try:
        return float(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid number {text!r}: {exc}")


def _parse_n_list(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid integer list {text!r}: {exc}")
    if not values:
        raise argparse.ArgumentTypeError("empty n list")
    return values


def _frac_json(value):
    return str(value) if isinstance(value, Fraction) else value


def cmd_params(args) -> Report:
    t = load_laminate(args.file, normalize=args.normalize)
    params = lamination_parameters(t)
    report = Report(
        operation="params",
        inputs={"file": str(args.file), "normalize": args.normalize},
        payload={"ply_count": t.ply_count, "parameters": _params_payload(params)},
    )
    worst = max(abs(v) for v in params.flat())
    report.add_verdict("parameter_bounds", worst, 1.0 + args.tolerance,
                       worst <= 1.0 + args.tolerance)
    return report


def cmd_combine(args) -> Report:
    t1 = load_laminate(args.file1, normalize=args.normalize)
    t2 = load_laminate(args.file2, normalize=args.normalize)
    result = convex_combine(t1, t2, args.alpha)
    check = verify_combination(t1, t2, args.alpha, result, tolerance=args.tolerance)
    if args.out:
        save_laminate(result, args.out, name=f"combine(alpha={args.alpha})")
    report = Report(
        operation="combine",
        inputs={
            "file1": str(args.file1),
            "file2": str(args.file2),
            "alpha": args.alpha,
            "out": str(args.out) if args.out else None,
        },
        payload={
            "ply_count": result.ply_count,
            "parameters": _params_payload(check.actual),
            "expected": _params_payload(check.expected),
            "residuals": list(check.residuals),
            "max_residual": check.max_residual,
        },
    )
    report.add_verdict("combination_residual", check.max_residual,
                       check.tolerance, check.passed)
    return report


def cmd_gsequence(args) -> Report:
    t1 = load_laminate(args.file1, normalize=args.normalize)
    t2 = load_laminate(args.file2, normalize=args.normalize)
    rows = convergence_table(t1, t2, args.alpha, args.n, swap_limit=args.swap_limit)
    payload_rows = [
        {
            "n": row.n,
            "residual_a": row.residual_a,
            "residual_b": row.residual_b,
            "residual_d": row.residual_d,
            "residual_max": row.residual_max,
        }
        for row in rows
    ]
    return Report(
        operation="gsequence",
        inputs={
            "file1": str(args.file1),
            "file2": str(args.file2),
            "alpha": args.alpha,
            "n": list(args.n),
            "swap_limit": args.swap_limit,
        },
        payload={"rows": payload_rows},
    )


# Demonstration pair used when oscillate is not given explicit laminates:
# 0 and 90 degrees, disagreeing everywhere.
_OSC_T1 = StepLaminate((-1.0, 1.0), (0.0,))
_OSC_T2 = StepLaminate((-1.0, 1.0), (math.pi / 2,))


def cmd_oscillate(args) -> Report:
    table = oscillation_witness(_OSC_T1, _OSC_T2, args.alpha, args.x,
                                args.count, cap=args.cap)
    y = (args.x + 1) / 2 if isinstance(args.x, Fraction) else (args.x + 1.0) / 2.0
    payload = {
        "y": _frac_json(y),
        "below": [[n, _frac_json(fr)] for n, fr in table.below],
        "above": [[n, _frac_json(fr)] for n, fr in table.above],
        "undefined_at": list(table.undefined_at),
        "angle1": table.angle1,
        "angle2": table.angle2,
        "distinct_values": table.distinct_values,
    }
    if table.distinct_values is False:
        payload["note"] = "sources agree at x; oscillation is vacuous here"
    return Report(
        operation="oscillate",
        inputs={
            "x": str(args.x) if isinstance(args.x, Fraction) else args.x,
            "alpha": args.alpha,
            "count": args.count,
            "cap": args.cap,
        },
        payload=payload,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lamconvex",
        description="Lamination parameters of step layups: exact values, "
                    "constructive convex combinations, interleaving diagnostics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE,
                       help="verdict tolerance (default 1e-12)")
        p.add_argument("--normalize", action="store_true",
                       help="affinely map file breakpoints onto [-1, 1]")

    p = sub.add_parser("params", help="lamination parameters of a laminate file")
    p.add_argument("file")
    add_common(p)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("combine", help="convex combination of two laminates")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--alpha", type=float, required=True,
                   help="weight on the second laminate, in [0, 1]")
    p.add_argument("--out", help="write the constructed laminate here")
    add_common(p)
    p.set_defaults(func=cmd_combine)

    p = sub.add_parser("gsequence", help="interleaving-sequence convergence table")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--alpha", type=float, required=True,
                   help="cell fraction taking the first laminate, in (0, 1)")
    p.add_argument("--n", type=_parse_n_list, required=True,
                   help="comma-separated cell counts, e.g. 16,32,64")
    p.add_argument("--swap-limit", action="store_true",
                   help="compare against the opposite limit orientation")
    add_common(p)
    p.set_defaults(func=cmd_gsequence)

    p = sub.add_parser("oscillate", help="pointwise oscillation witnesses")
    p.add_argument("--x", type=_parse_x, required=True,
                   help="evaluation point; 'p/q' runs exactly (write --x=-1/2)")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--count", type=int, default=5,
                   help="indices per region (default 5)")
    p.add_argument("--cap", type=int, default=DEFAULT_SEARCH_CAP,
                   help="search cap for indices (default 10^7)")
    add_common(p)
    p.set_defaults(func=cmd_oscillate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except (ParseError, InvariantViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (LamConvexError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    sys.stdout.write(report.to_json() if args.json else report.to_text())
    return EXIT_PASS if report.passed else EXIT_VERDICT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
