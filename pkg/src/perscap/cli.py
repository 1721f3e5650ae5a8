"""Command-line interface.

Exit codes: 0 success, 1 invalid input or validation failure (details on
stderr), 2 usage error.  Thresholds such as ``-inf`` must be attached with
``=`` (``--a=-inf``) so they are not read as flags.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io as pio
from .algebra import FieldSpec, INF, format_extended, parse_extended
from .builders import FIXTURES, grid_sublevel, lower_star, symmetric_fixture
from .complex import WindowSpec, validate
from .equivariant import (
    equivariant_capacity, equivariant_persist, equivariant_windowed, validate_action,
)
from .errors import DeadAtZero, InvalidAction, InvalidComplex, PerscapError
from .metrics import bottleneck
from .modules import SurrogateSpec, auto_spec, capacity
from .persistence import class_persistence, diagram, reduce, windowed_homology
from .plot import render


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.from_flag(text)
    except PerscapError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _ext(text: str):
    try:
        return parse_extended(text)
    except PerscapError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load(args):
    cx = pio.load_complex(args.complex, args.field)
    report = validate(cx)
    if not report.ok:
        raise InvalidComplex(report)
    return cx


def _load_action(args, cx):
    action = pio.load_action(args.action, cx.field, args.k)
    report = validate_action(cx, action)
    if not report.ok:
        raise InvalidAction(report)
    return action


def _fmt_capacity(value) -> str:
    if value == INF:
        return "inf (unbounded)\n"
    return format_extended(value) + "\n"


# -- subcommands ------------------------------------------------------------

def cmd_validate(args) -> int:
    cx = pio.load_complex(args.complex, args.field)
    report = validate(cx)
    if report.ok and args.action:
        report = validate_action(cx, pio.load_action(args.action, cx.field, args.k))
    if not report.ok:
        print(report, file=sys.stderr)
        return 1
    print("OK")
    return 0


def cmd_persist(args) -> int:
    cx = _load(args)
    _emit(pio.diagram_to_csv(diagram(reduce(cx))), args.out)
    return 0


def cmd_window(args) -> int:
    cx = _load(args)
    degrees = [args.degree] if args.degree is not None else list(range(max(cx.max_dim, 0) + 1))
    if args.action:
        if args.cap is None:
            raise PerscapError("--action requires --cap")
        action = _load_action(args, cx)
        dims = [equivariant_windowed(cx, action, WindowSpec(args.a, args.b, p), args.cap) for p in degrees]
    else:
        dims = [windowed_homology(cx, WindowSpec(args.a, args.b, p)) for p in degrees]
    if args.degree is not None:
        print(dims[0])
    else:
        print("degree,dimension")
        for p, d in zip(degrees, dims):
            print(f"{p},{d}")
    return 0


def cmd_class_rho(args) -> int:
    cx = _load(args)
    mu = pio.class_from_json(pio.read_json(args.cls), cx.field)
    print(format_extended(class_persistence(reduce(cx), mu)))
    return 0


def _surrogate(args, cx):
    if args.spec is None:
        return None, "auto"
    return pio.surrogate_from_json(pio.read_json(args.spec), cx.field)


def cmd_capacity(args) -> int:
    cx = _load(args)
    mu, kill = _surrogate(args, cx)
    spec = auto_spec(cx, args.degree, args.eps) if kill == "auto" else SurrogateSpec(tuple(kill))
    try:
        value = capacity(cx, mu, args.degree, spec, args.eps)
    except DeadAtZero:
        print("0 (dead at zero)")
        return 0
    sys.stdout.write(_fmt_capacity(value))
    return 0


def cmd_equiv_persist(args) -> int:
    cx = _load(args)
    action = _load_action(args, cx)
    _emit(pio.diagram_to_csv(equivariant_persist(cx, action, args.cap)), args.out)
    return 0


def cmd_equiv_capacity(args) -> int:
    cx = _load(args)
    action = _load_action(args, cx)
    mu, kill = _surrogate(args, cx)
    spec = None if kill == "auto" else SurrogateSpec(tuple(kill))
    try:
        value = equivariant_capacity(cx, action, args.degree, spec, args.cap, mu, args.eps)
    except DeadAtZero:
        print("0 (dead at zero)")
        return 0
    sys.stdout.write(_fmt_capacity(value))
    return 0


def cmd_bottleneck(args) -> int:
    a, b = pio.load_diagram(args.first), pio.load_diagram(args.second)
    if args.degree is not None:
        print(format_extended(bottleneck(a, b, args.degree)))
        return 0
    print("degree,distance")
    for p in sorted(set(a.degrees()) | set(b.degrees())):
        print(f"{p},{format_extended(bottleneck(a, b, p))}")
    return 0


def cmd_fixture(args) -> int:
    heights = None
    if args.heights:
        heights = [parse_extended(h) for h in args.heights.split(",")]
        if len(heights) != 3:
            raise PerscapError("--heights takes three values: south,equator,north")
    cx, action = symmetric_fixture(args.name, args.k, args.m, args.field or FieldSpec.prime(2), heights)
    _emit(pio.dumps(pio.complex_to_json(cx)), args.out)
    if args.action_out:
        Path(args.action_out).write_text(pio.dumps(pio.action_to_json(action, cx.field)))
    return 0


def cmd_sublevel(args) -> int:
    obj = pio.read_json(args.input)
    if isinstance(obj, list):
        cx = grid_sublevel(pio.grid_from_json(obj), args.field or FieldSpec.prime(2))
    else:
        cx = lower_star(pio.vertex_function_from_json(obj, args.field))
    report = validate(cx)
    if not report.ok:
        raise InvalidComplex(report)
    _emit(pio.dumps(pio.complex_to_json(cx)), args.out)
    return 0


def cmd_plot(args) -> int:
    dgm = pio.load_diagram(args.diagram)
    _emit(render(dgm, args.kind), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="perscap", description="Persistent homology, equivariant persistence and capacities.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def common(p, action=False):
        p.add_argument("complex", help="complex JSON")
        if action:
            p.add_argument("action", help="action JSON")
        p.add_argument("--field", type=_field, default=None, help="prime q or 'rational' (default: as declared)")

    p = sub.add_parser("validate", help="check a complex (and optionally an action)")
    common(p)
    p.add_argument("--action", default=None)
    p.add_argument("--k", type=int, default=None)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("persist", help="persistence diagram as CSV")
    common(p)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_persist)

    p = sub.add_parser("window", help="dimension of homology in the window (a, b]")
    common(p)
    p.add_argument("--a", type=_ext, required=True)
    p.add_argument("--b", type=_ext, required=True)
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--action", default=None, help="action JSON for equivariant window homology")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_window)

    p = sub.add_parser("class-rho", help="persistence of a homology class")
    common(p)
    p.add_argument("--class", dest="cls", required=True, help="class JSON")
    p.set_defaults(func=cmd_class_rho)

    p = sub.add_parser("capacity", help="capacity in the surrogate relative module")
    common(p)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--spec", default=None, help="surrogate spec JSON (default: automatic class and kill-classes)")
    p.add_argument("--eps", type=_ext, default=None)
    p.set_defaults(func=cmd_capacity)

    p = sub.add_parser("equiv-persist", help="Borel Z_k-equivariant persistence diagram")
    common(p, action=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--cap", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_equiv_persist)

    p = sub.add_parser("equiv-capacity", help="Z_k-equivariant capacity")
    common(p, action=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--cap", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--spec", default=None)
    p.add_argument("--eps", type=_ext, default=None)
    p.set_defaults(func=cmd_equiv_capacity)

    p = sub.add_parser("bottleneck", help="bottleneck distance between two diagram CSVs")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--degree", type=int, default=None)
    p.set_defaults(func=cmd_bottleneck)

    p = sub.add_parser("fixture", help="write a symmetric fixture and its action")
    p.add_argument("name", choices=FIXTURES)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--field", type=_field, default=None)
    p.add_argument("--heights", default=None, help="south,equator,north for bipyramid-sphere")
    p.add_argument("--out", default=None)
    p.add_argument("--action-out", default=None)
    p.set_defaults(func=cmd_fixture)

    p = sub.add_parser("sublevel", help="lower-star complex from a grid or vertex function JSON")
    p.add_argument("input")
    p.add_argument("--field", type=_field, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_sublevel)

    p = sub.add_parser("plot", help="render a diagram CSV as SVG")
    p.add_argument("diagram")
    p.add_argument("--kind", choices=("diagram", "barcode"), default="diagram")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_plot)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (InvalidComplex, InvalidAction) as exc:
        print(exc.report, file=sys.stderr)
        return 1
    except PerscapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
