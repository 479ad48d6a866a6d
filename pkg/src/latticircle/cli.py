"""Command line front end: generate, validate, pi, sweep, area.

Exit codes: 0 success, 1 usage or input error, 2 path-validity failure,
3 arithmetic failure inside the core.  CSV output is UTF-8 with LF line
endings and 12 significant digits for real values.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from typing import Sequence

from latticircle.area import area_report
from latticircle.estimators import (
    Estimator,
    arithmetic_mean_pi,
    harmonic_mean_pi,
    pi_sequence,
    sweep,
    sweep_target,
)
from latticircle.lattice import Point, check_path, l1_norm
from latticircle.reference import DiscretizationSource
from latticircle.signum import CostVariant, assemble_full_circle, generate_quadrant
from latticircle.svg import render_path_svg


class _CliError(Exception):
    def __init__(self, message: str, code: int = 1):
        super().__init__(message)
        self.message = message
        self.code = code


class _Parser(argparse.ArgumentParser):
    """argparse parser whose usage errors exit with code 1, not 2."""

    def error(self, message):
        raise _CliError(f"{self.prog}: {message}", 1)


def format_real(v: float) -> str:
    """12 significant digits, always with a decimal point (3.0 not 3)."""
    s = f"{v:.12g}"
    if not any(ch in s for ch in ".eE") and s.strip("-").isdigit():
        s += ".0"
    return s


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_radii_spec(spec: str) -> list[int]:
    """Radii from 'a,b,c', 'min:max:step' or 'log:a:b:k', deduped ascending."""
    try:
        if spec.startswith("log:"):
            _, lo_s, hi_s, k_s = spec.split(":")
            lo, hi, k = int(lo_s), int(hi_s), int(k_s)
            if lo < 1 or hi < lo or k < 1:
                raise ValueError
            if k == 1:
                radii = [lo]
            else:
                step = (math.log(hi) - math.log(lo)) / (k - 1)
                radii = [round(math.exp(math.log(lo) + i * step)) for i in range(k)]
        elif ":" in spec:
            lo_s, hi_s, step_s = spec.split(":")
            lo, hi, step = int(lo_s), int(hi_s), int(step_s)
            if lo < 1 or hi < lo or step < 1:
                raise ValueError
            radii = list(range(lo, hi + 1, step))
        else:
            radii = [int(part) for part in spec.split(",")]
    except ValueError:
        raise _CliError(f"bad radii spec {spec!r}", 1)
    if not radii or any(r < 1 for r in radii):
        raise _CliError(f"bad radii spec {spec!r}", 1)
    return sorted(set(radii))


def _worker_cap() -> int:
    raw = os.environ.get("LATTICIRCLE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise _CliError(f"LATTICIRCLE_THREADS must be an integer, not {raw!r}", 1)


def _trace_csv(trace) -> str:
    lines = ["n,x,y,s,a,S"]
    for n in range(2 * trace.radius):
        lines.append(
            f"{n},{trace.xs[n]},{trace.ys[n]},{trace.signs[n]},"
            f"{trace.l1_dists[n]},{trace.sign_sums[n]}"
        )
    return "\n".join(lines) + "\n"


def _full_circle_csv(trace) -> str:
    circle = assemble_full_circle(trace)
    period = 2 * trace.radius
    lines = ["n,x,y,s,a,S"]
    for n, (x, y) in enumerate(circle.points):
        m = n % period
        lines.append(
            f"{n},{x},{y},{trace.signs[m]},{l1_norm((x, y))},{trace.sign_sums[m]}"
        )
    return "\n".join(lines) + "\n"


def _cmd_generate(args) -> int:
    trace = generate_quadrant(args.radius, CostVariant(args.cost))
    if args.format == "csv":
        if args.extent == "full":
            text = _full_circle_csv(trace)
        else:
            text = _trace_csv(trace)
    else:
        if args.extent == "full":
            points: Sequence[Point] = assemble_full_circle(trace).points
            closed = True
        else:
            points = trace.points
            closed = False
        text = render_path_svg(points, args.radius, closed, args.overlay_circle)
    _emit(text, args.out)
    return 0


def _read_points_csv(path: str) -> list[Point]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            rows = [line.rstrip("\n").rstrip("\r") for line in fh]
    except OSError as e:
        raise _CliError(str(e), 1)
    rows = [row for row in rows if row != ""]
    if not rows:
        raise _CliError(f"{path}: empty file", 1)
    header = rows[0].split(",")
    try:
        ix = header.index("x")
        iy = header.index("y")
    except ValueError:
        raise _CliError(f"{path}: header must name x and y columns", 1)
    points = []
    for lineno, row in enumerate(rows[1:], start=2):
        cells = row.split(",")
        try:
            points.append((int(cells[ix]), int(cells[iy])))
        except (IndexError, ValueError):
            raise _CliError(f"{path}:{lineno}: malformed row {row!r}", 1)
    return points


def _cmd_validate(args) -> int:
    points = _read_points_csv(args.path)
    report = check_path(points, mode=args.mode)
    ok = report.is_closed_valid if args.mode == "closed" else report.is_valid
    note = f" note={report.note}" if report.note else ""
    print(f"mode={args.mode} points={len(points)} valid={'true' if ok else 'false'}{note}")
    for index, neighbors in report.violations:
        print(f"index={index} neighbors={neighbors}")
    return 0 if ok else 2


def _record_line(rec) -> str:
    target_cell = "pi (no closed form)" if rec.target_note else format_real(rec.target)
    return (
        f"{rec.radius},{rec.estimator.value},{rec.source.value},"
        f"{format_real(rec.value)},{target_cell},{format_real(rec.abs_error)}"
    )


def _cmd_pi(args) -> int:
    source = DiscretizationSource(args.source)
    estimator = Estimator(args.estimator)
    seq = pi_sequence(args.radius, source, CostVariant(args.cost))
    value = arithmetic_mean_pi(seq) if estimator is Estimator.ARITHMETIC else harmonic_mean_pi(seq)
    target, note = sweep_target(estimator, source)
    target_cell = "pi (no closed form)" if note else format_real(target)
    print(
        f"{args.radius},{estimator.value},{source.value},"
        f"{format_real(value)},{target_cell},{format_real(abs(value - target))}"
    )
    return 0


def _cmd_sweep(args) -> int:
    radii = _parse_radii_spec(args.radii)
    records = sweep(
        radii,
        Estimator(args.estimator),
        DiscretizationSource(args.source),
        CostVariant(args.cost),
        max_workers=_worker_cap(),
    )
    lines = ["r,estimator,source,value,target,abs_error"]
    lines.extend(_record_line(rec) for rec in records)
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_area(args) -> int:
    report = area_report(args.radius, CostVariant(args.cost))
    if args.with_bounds:
        print(
            f"{report.radius},{report.area},{report.inner},{report.outer},"
            f"{format_real(report.ratio)}"
        )
    else:
        print(f"{report.radius},{report.area},,,{format_real(report.ratio)}")
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="latticircle", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_cost(p):
        p.add_argument(
            "--cost",
            choices=[v.value for v in CostVariant],
            default="exact",
            help="step decider driving the recursion (default exact)",
        )

    g = sub.add_parser("generate", help="emit one constructed circle as CSV or SVG")
    g.add_argument("--radius", type=int, required=True)
    add_cost(g)
    g.add_argument("--extent", choices=["quadrant", "full"], default="quadrant")
    g.add_argument("--format", choices=["csv", "svg"], default="csv")
    g.add_argument("--out", help="output file (default stdout)")
    g.add_argument(
        "--overlay-circle",
        action="store_true",
        help="draw the real circle behind the path (svg only)",
    )
    g.set_defaults(func=_cmd_generate)

    v = sub.add_parser("validate", help="check a CSV point list for path validity")
    v.add_argument("path", help="CSV file with at least x and y columns")
    v.add_argument("--mode", choices=["open", "closed"], default="open")
    v.set_defaults(func=_cmd_validate)

    p = sub.add_parser("pi", help="one pi estimate for one radius")
    p.add_argument("--radius", type=int, required=True)
    p.add_argument(
        "--estimator", choices=[e.value for e in Estimator], default="arithmetic"
    )
    p.add_argument(
        "--source",
        choices=[s.value for s in DiscretizationSource if s is not DiscretizationSource.MIDPOINT],
        default="signum",
    )
    add_cost(p)
    p.set_defaults(func=_cmd_pi)

    s = sub.add_parser("sweep", help="pi estimates over a range of radii, as CSV")
    s.add_argument(
        "--radii",
        required=True,
        help="comma list '1,2,3', range 'min:max:step' or 'log:a:b:k'",
    )
    s.add_argument(
        "--estimator", choices=[e.value for e in Estimator], default="arithmetic"
    )
    s.add_argument(
        "--source",
        choices=[src.value for src in DiscretizationSource if src is not DiscretizationSource.MIDPOINT],
        default="signum",
    )
    add_cost(s)
    s.add_argument("--out", help="output file (default stdout)")
    s.set_defaults(func=_cmd_sweep)

    a = sub.add_parser("area", help="quarter-disc area and pi ratio for one radius")
    a.add_argument("--radius", type=int, required=True)
    add_cost(a)
    a.add_argument(
        "--with-bounds",
        action="store_true",
        help="include the inner and outer cell-count bounds",
    )
    a.set_defaults(func=_cmd_area)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _CliError as e:
        print(e.message, file=sys.stderr)
        return e.code
    except ValueError as e:
        print(str(e), file=sys.stderr)
        return 1
    except (OverflowError, MemoryError) as e:
        print(f"arithmetic failure: {e}", file=sys.stderr)
        return 3
    except OSError as e:
        print(str(e), file=sys.stderr)
        return 1
    except SystemExit as e:  # argparse --help
        return int(e.code or 0)


def main() -> None:
    sys.exit(run())
