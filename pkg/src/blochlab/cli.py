"""Command line front end.

Three subcommands:

  seminorm   estimate a Bloch seminorm for a catalog entry or a typed formula
  distance   pseudohyperbolic and hyperbolic distance between two points
  verify     run the verification suites and optionally write a report

All output is deterministic for fixed flags, so reruns diff clean.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog as cat
from . import expressions as ex
from . import seminorms as sn
from . import suites
from .errors import ArityError, ParseError
from .geometry import INF, BallSpace, hyperbolic, pseudo_distance


def parse_space(text: str) -> BallSpace:
    parts = text.split(":")
    try:
        if parts[0] == "linf" and len(parts) == 2:
            return BallSpace(int(parts[1]), INF)
        if parts[0] == "l2" and len(parts) == 2:
            return BallSpace(int(parts[1]), 2.0)
        if parts[0] == "lp" and len(parts) == 3:
            return BallSpace(int(parts[2]), float(parts[1]))
    except (ValueError, IndexError) as exc:
        raise argparse.ArgumentTypeError(f"bad space {text!r}: {exc}") from exc
    raise argparse.ArgumentTypeError(
        f"bad space {text!r}; use linf:<n>, l2:<n>, or lp:<p>:<n>"
    )


def parse_point(text: str) -> tuple:
    out = []
    for part in text.split(","):
        # accept mathematician's i for the imaginary unit
        s = part.strip().replace("i", "j")
        try:
            out.append(complex(s))
        except ValueError:
            raise argparse.ArgumentTypeError(
                f"bad complex number {part!r}; write e.g. 0.3+0.4i"
            ) from None
    return tuple(out)


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _resolve_function(args):
    """Return (expr, space, label) or raise SystemExit-friendly errors."""
    by_name = {e.name: e for e in cat.all_entries()}
    entry = by_name.get(args.fn)
    if entry is not None:
        space = args.space if args.space is not None else entry.space
        f = entry.expr
    else:
        if args.space is None:
            raise _UsageError(
                f"{args.fn!r} is not a catalog name, so --space is required "
                "to parse it as a formula"
            )
        space = args.space
        try:
            f = ex.parse(args.fn, space.n)
        except (ParseError, ArityError) as exc:
            raise _UsageError(f"cannot parse {args.fn!r}: {exc}") from exc
    if ex.max_variable(f) > space.n:
        raise _UsageError(
            f"function uses x{ex.max_variable(f)} but the space has "
            f"dimension {space.n}"
        )
    return f, space


class _UsageError(Exception):
    pass


def _witness_text(witness):
    if witness is None:
        return "none"
    return "(" + ", ".join(repr(w) for w in witness) + ")"


def _witness_json(witness):
    if witness is None:
        return None
    return [[w.real, w.imag] for w in witness]


def _cmd_seminorm(args) -> int:
    f, space = _resolve_function(args)
    est = sn.estimate_sup(args.kind, f, space, args.budget, args.seed)
    if args.json:
        doc = {
            "kind": args.kind,
            "space": space.describe(),
            "fn": args.fn,
            "budget": args.budget,
            "seed": args.seed,
            "estimate": est.value,
            "witness": _witness_json(est.witness),
            "samples_used": est.samples_used,
            "poisoned_count": est.poisoned_count,
            "divergence": None
            if est.divergence is None
            else {
                "path": est.divergence.path,
                "slope": est.divergence.slope,
                "stderr": est.divergence.stderr,
            },
        }
        print(json.dumps(doc, indent=2))
    else:
        print(f"kind      {args.kind}")
        print(f"space     {space.describe()}")
        print(f"estimate  {est.value!r}")
        print(f"witness   {_witness_text(est.witness)}")
        print(f"samples   {est.samples_used} (poisoned {est.poisoned_count})")
        if est.divergence is None:
            print("divergence  none detected")
        else:
            d = est.divergence
            print(
                f"divergence  suspected: {d.path} "
                f"(slope {d.slope:.3f}, stderr {d.stderr:.3f})"
            )
    return 0


def _cmd_distance(args) -> int:
    space = args.space
    for label, pt in (("--x", args.x), ("--y", args.y)):
        if len(pt) != space.n:
            raise _UsageError(
                f"{label} has {len(pt)} coordinates but the space has {space.n}"
            )
    try:
        rho = pseudo_distance(space, args.x, args.y)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    beta = hyperbolic(rho)
    if args.json:
        print(
            json.dumps(
                {"space": space.describe(), "rho": rho, "beta": beta}, indent=2
            )
        )
    else:
        print(f"rho   {rho!r}")
        print(f"beta  {beta!r}")
    return 0


def _cmd_verify(args) -> int:
    if args.suite == "all":
        names = None
    elif args.suite in suites.SUITE_NAMES:
        names = [args.suite]
    else:
        raise _UsageError(
            f"unknown suite {args.suite!r}; known: all, "
            + ", ".join(suites.SUITE_NAMES)
        )
    results = suites.run_all(names, args.seed, args.budget)
    print(suites.render_table(results))
    if args.json_out:
        suites.emit_report(results, "json", args.json_out, args.seed)
    if args.csv_out:
        suites.emit_report(results, "csv", args.csv_out, args.seed)
    return 1 if suites.has_failures(results) else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blochlab",
        description="Bloch seminorms and hyperbolic geometry on unit balls",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seminorm", help="estimate a Bloch seminorm supremum")
    p.add_argument("--kind", choices=("nat", "inv"), required=True)
    p.add_argument("--space", type=parse_space, default=None)
    p.add_argument(
        "--fn",
        required=True,
        help="catalog entry name, or a formula in x1..xn",
    )
    p.add_argument("--budget", type=_positive_int, default=2048)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_seminorm)

    p = sub.add_parser("distance", help="pseudohyperbolic distance")
    p.add_argument("--space", type=parse_space, required=True)
    p.add_argument("--x", type=parse_point, required=True)
    p.add_argument("--y", type=parse_point, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_distance)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suite", help="suite name or 'all'")
    p.add_argument("--budget", type=_positive_int, default=2048)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json-out", default=None)
    p.add_argument("--csv-out", default=None)
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
