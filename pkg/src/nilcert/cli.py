"""Command line front end: ``nilcert verify --b0 1 --field q``."""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .certificate import STEP_IDS, CurveParameters, run_certificate
from .fields import field_from_descriptor


def _positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {n}")
    return n


def _nonneg_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected an integer >= 0, got {n}")
    return n


def _field(text: str):
    try:
        return field_from_descriptor(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _steps(text: str) -> list[str]:
    steps = [s.strip().upper() for s in text.split(",") if s.strip()]
    bad = [s for s in steps if s not in STEP_IDS]
    if bad or not steps:
        raise argparse.ArgumentTypeError(f"steps must be a comma list drawn from {','.join(STEP_IDS)}")
    return steps


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nilcert")
    sub = parser.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run the certificate pipeline for one b0")
    v.add_argument("--b0", type=_positive_int, default=1)
    v.add_argument("--field", type=_field, default="fp:32003", help="q or fp:P (default fp:32003)")
    v.add_argument("--steps", type=_steps, default=None, help="comma list of S1..S7")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--hilbert-bound", type=_nonneg_int, default=None)
    v.add_argument("--box", type=_nonneg_int, default=3, help="witness search box radius")
    v.add_argument("-v", "--verbose", action="count", default=0)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose > 1 else logging.INFO if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        params = CurveParameters(args.b0, args.field)
    except ValueError as exc:
        parser.error(str(exc))
    report = run_certificate(params, steps=args.steps, hilbert_bound=args.hilbert_bound, box=args.box)
    if args.format == "json":
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(report.format_text(verbose=bool(args.verbose)))
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
