"""Command-line entry point: ``ncresidue verify``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .jets.tables import AMBIGUOUS_READINGS
from .report import MODES, build_report, emit_report, exit_code

__all__ = ["main"]


def _case_id(text: str) -> int:
    v = int(text)
    if not 1 <= v <= 15:
        raise argparse.ArgumentTypeError("case must be in 1..15")
    return v


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ncresidue", description="Exact verification of the boundary residue cases.")
    sub = p.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="compute cases and compare with the stated values")
    v.add_argument("--case", type=_case_id, action="append", dest="cases", metavar="N", help="case id (repeatable)")
    v.add_argument("--mode", choices=MODES, default="report")
    v.add_argument("--oracle", action="store_true", help="confirm every case numerically")
    v.add_argument("--format", choices=("text", "structured"), default="text")
    v.add_argument("--reading", choices=AMBIGUOUS_READINGS, default="diagonal",
                   help="reading of the two jet entries with an unbound index")
    v.add_argument("--out", type=Path, help="write the report here instead of stdout")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        doc = build_report(args.cases, mode=args.mode, oracle=args.oracle, reading=args.reading)
        blob = emit_report(doc, args.format)
    except Exception as exc:  # exit-code contract: 2 on internal error
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        args.out.write_bytes(blob)
    else:
        sys.stdout.buffer.write(blob)
        sys.stdout.flush()
    return exit_code(doc)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
