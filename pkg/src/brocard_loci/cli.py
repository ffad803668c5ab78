"""Command-line front end: ``brocard-loci {locus,verify,sweep,render}``.

Exit codes: 0 on success (or all claims verified), 1 when a verified claim
fails, 2 on bad arguments.
"""

import argparse
import logging
import sys
from pathlib import Path

from . import figures, tracking, verify
from .errors import GeometryError

AREA_N = 4096
RESIDUAL_N = 256


class UsageError(Exception):
    pass


def _point(text):
    try:
        x, y = (float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'x,y', got {text!r}") from None
    return (x, y)


def _family_args(p, default="center-top"):
    p.add_argument("--family", choices=tracking.FAMILIES, default=default)
    p.add_argument("--a", type=float)
    p.add_argument("--b", type=float)
    p.add_argument("--x1", type=float, help="V1 = (x1, 0) for custom-mounted")
    p.add_argument("--v1", type=_point, metavar="X,Y")
    p.add_argument("--v2", type=_point, metavar="X,Y")


def _params(args):
    return {k: getattr(args, k) for k in ("a", "b", "x1", "v1", "v2")}


def build_parser():
    parser = argparse.ArgumentParser(prog="brocard-loci", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("locus", help="sample a tracked point over a family and write CSV")
    _family_args(p)
    p.add_argument("--track", choices=sorted(tracking.TRACKS), default="omega1")
    p.add_argument("--n", type=int, default=RESIDUAL_N)
    p.add_argument("--phase", type=float, default=0.5,
                   help="grid offset in steps; the half-step default avoids members that degenerate at t = k pi/2")
    p.add_argument("--out", type=Path, help="CSV path (stdout if omitted)")
    p.add_argument("--format", choices=["csv"], default="csv")

    p = sub.add_parser("verify", help="check every closed-form claim and print a JSON report")
    p.add_argument("--only", action="append", metavar="GROUP",
                   help="restrict to a group (repeatable): " + ", ".join(list(verify.GROUPS) + list(verify.ALIASES)))
    p.add_argument("--a", type=float)
    p.add_argument("--b", type=float)
    p.add_argument("--n", type=int, help=f"samples for area claims (default {AREA_N})")
    p.add_argument("--out", type=Path)
    p.add_argument("--format", choices=["json"], default="json")

    p = sub.add_parser("sweep", help="multi-panel SVG of the loci as V1 slides along the x axis")
    p.add_argument("--family", choices=["custom-mounted"], default="custom-mounted")
    p.add_argument("--a", type=float, default=1.0)
    p.add_argument("--n", type=int, default=1024)
    p.add_argument("--count", type=int, default=16)
    p.add_argument("--out", type=Path, default=Path("sweep.svg"))
    p.add_argument("--format", choices=["svg"], default="svg")

    p = sub.add_parser("render", help="SVG of one family with its loci")
    _family_args(p)
    p.add_argument("--n", type=int, default=720)
    p.add_argument("--out", type=Path)
    p.add_argument("--format", choices=["svg"], default="svg")
    return parser


def cmd_locus(args):
    try:
        samples = tracking.sample_track(args.family, args.track, args.n, args.phase, **_params(args))
    except (GeometryError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    if args.out is None:
        samples.to_csv(sys.stdout)
    else:
        samples.to_csv(args.out)
    return 0


def cmd_verify(args):
    try:
        report = verify.run(args.only, a=args.a, b=args.b, n=args.n)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from exc
    except GeometryError as exc:
        raise UsageError(str(exc)) from exc
    text = report.to_json(indent=2)
    if args.out is None:
        print(text)
    else:
        args.out.write_text(text + "\n")
    for e in report.failures:
        print(f"FAIL {e.id}: expected {e.expected!r}, measured {e.measured!r}, tol {e.tol!r}", file=sys.stderr)
    return 0 if report.passed else 1


def cmd_sweep(args):
    if args.count < 1 or args.a <= 0:
        raise UsageError("need --count >= 1 and --a > 0")
    try:
        panels = figures.render_sweep(args.out, a=args.a, count=args.count, n=args.n)
    except (GeometryError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    for panel in panels:
        r1, r2 = panel["area_ratio"]
        e1, e2 = panel["analytic_ratio"]
        print(f"x1={panel['x1']:.6f} A1/pi a^2={r1:.6f} ({e1:.6f}) A2/pi a^2={r2:.6f} ({e2:.6f})")
    return 0


def cmd_render(args):
    out = args.out or Path(f"{args.family}.svg")
    try:
        figures.render_family(args.family, out, n=args.n, **_params(args))
    except (GeometryError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    print(out)
    return 0


COMMANDS = {"locus": cmd_locus, "verify": cmd_verify, "sweep": cmd_sweep, "render": cmd_render}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"brocard-loci: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
