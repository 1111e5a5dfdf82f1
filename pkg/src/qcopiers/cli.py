"""``qcopiers eval | sweep | verify``.

Exit codes: 0 success, 1 verification failure, 2 domain error, 3 I/O error.
"""
from __future__ import annotations

import argparse
import json
import sys

from .copiers import CopierFamily
from .exceptions import DomainError
from .sweep import FIELDS, SweepConfig, evaluate, format_number, write_sweep
from .verify import run_verification

EXIT_OK, EXIT_VERIFY, EXIT_DOMAIN, EXIT_IO = 0, 1, 2, 3


def _parse_copiers(text: str) -> tuple[CopierFamily, ...]:
    if text.strip().lower() == "all":
        return tuple(CopierFamily)
    return tuple(CopierFamily.parse(tag) for tag in text.split(",") if tag.strip())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qcopiers", description="Copier indicators for two nonorthogonal qubit states.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="indicators of one copier at one overlap")
    p_eval.add_argument("--f", type=float, required=True, help="squared overlap of the two inputs, in [0, 1]")
    p_eval.add_argument("--copier", required=True, help=", ".join(c.value for c in CopierFamily))
    p_eval.add_argument("--json", action="store_true", help="print a JSON object instead of a table")

    p_sweep = sub.add_parser("sweep", help="indicator table over a uniform grid of overlaps")
    p_sweep.add_argument("--f-min", type=float, default=0.0)
    p_sweep.add_argument("--f-max", type=float, default=1.0)
    p_sweep.add_argument("--steps", type=int, default=101)
    p_sweep.add_argument("--copiers", default="all", help="comma-separated tags or 'all'")
    p_sweep.add_argument("--baselines", action="store_true", help="add rows tagged 'input' for the uncopied states")
    p_sweep.add_argument("--out", default=None, help="output file (default: stdout)")
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sweep.add_argument("--jobs", type=int, default=1, help="worker processes")

    p_verify = sub.add_parser("verify", help="check all invariants over a grid of overlaps")
    p_verify.add_argument("--steps", type=int, default=21)
    return parser


def cmd_eval(args) -> int:
    rec = evaluate(args.f, CopierFamily.parse(args.copier))
    values = {k: v if k == "copier" else float(format_number(v)) for k, v in rec.as_dict().items()}
    if args.json:
        print(json.dumps(values))
    else:
        for k in FIELDS:
            print(f"{k:>9}  {values[k]}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    config = SweepConfig(
        f_min=args.f_min, f_max=args.f_max, steps=args.steps,
        copiers=_parse_copiers(args.copiers), output_path=args.out,
        format=args.format, include_baselines=args.baselines, jobs=args.jobs,
    )
    text = write_sweep(config)
    if args.out is None:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.steps < 2:
        raise DomainError(f"steps must be >= 2, got {args.steps}")
    results = run_verification(args.steps)
    for res in results:
        print(res.line())
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} invariants hold on {args.steps} grid points")
    return EXIT_VERIFY if failed else EXIT_OK


COMMANDS = {"eval": cmd_eval, "sweep": cmd_sweep, "verify": cmd_verify}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except DomainError as exc:
        print(f"qcopiers: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"qcopiers: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
