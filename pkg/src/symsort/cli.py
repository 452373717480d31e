"""Command line: ``symsort verify | run | table``.

Exit codes: 0 success, 1 failed checks or runtime error, 2 invalid usage
(unknown algorithm, pattern, metric or missing input columns).
"""

from __future__ import annotations

import argparse
import sys

from . import verify
from .bench import RunConfig, cmd_run, read_csv
from .core import AggregationError, CapacityError, ConfigurationError
from .metrics import METRICS, format_markdown, ratio_table


def _ints(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")


def _names(text):
    return [x.strip() for x in text.split(",") if x.strip()]


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="symsort", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the self-check suites")
    v.add_argument("--algo", help="only the suite of this algorithm or check")

    r = sub.add_parser("run", help="measure a benchmark grid")
    r.add_argument("--algos", type=_names, required=True)
    r.add_argument("--patterns", type=_names, required=True)
    r.add_argument("--sizes", type=_ints, required=True)
    r.add_argument("--reps", type=int, default=25)
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--out", required=True)
    r.add_argument("--format", choices=("csv", "markdown"), default="csv")

    t = sub.add_parser("table", help="ratio-of-medians table from a CSV")
    t.add_argument("--input", required=True)
    t.add_argument("--num", required=True)
    t.add_argument("--den", required=True)
    t.add_argument("--metric", type=_names, required=True,
                   help=f"comma separated, from: {', '.join(METRICS)}")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return 0 if verify.run(args.algo) else 1
        if args.command == "run":
            cfg = RunConfig(args.algos, args.patterns, args.sizes, args.reps,
                            args.seed, args.out, args.format)
            cfg.validate()
            records = cmd_run(cfg)
            print(f"wrote {len(records)} rows to {args.out}")
            return 0
        rows = ratio_table(read_csv(args.input), args.num, args.den, args.metric)
        sys.stdout.write(format_markdown(rows, args.metric, f"{args.num} / {args.den}"))
        return 0
    except (ConfigurationError, AggregationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (CapacityError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
