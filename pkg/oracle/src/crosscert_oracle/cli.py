"""Oracle command line: emit the reference table, or diff two table files."""

from __future__ import annotations

import argparse
import sys

from .core import OracleStructureError, oracle_table
from .diff import SchemaError, oracle_diff


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="crosscert-oracle")
    sub = parser.add_subparsers(dest="verb", required=True)

    p_table = sub.add_parser("table", help="emit the reference table as canonical JSON")
    p_table.add_argument("--rmin", type=int, default=15)
    p_table.add_argument("--rmax", type=int, default=26)
    p_table.add_argument("--out", default=None)

    p_diff = sub.add_parser("diff", help="diff two table-v1 files cell-for-cell")
    p_diff.add_argument("primary")
    p_diff.add_argument("oracle")

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        if args.verb == "table":
            data = oracle_table(args.rmin, args.rmax)
            if args.out is None:
                sys.stdout.write(data.decode("utf-8") + "\n")
            else:
                with open(args.out, "wb") as fh:
                    fh.write(data)
            return 0
        mismatches = oracle_diff(args.primary, args.oracle)
        if not mismatches:
            print("tables agree cell-for-cell")
            return 0
        for mismatch in mismatches:
            print(mismatch)
        return 1
    except SchemaError as exc:
        sys.stderr.write(f"schema error: {exc}\n")
        return 2
    except (OracleStructureError, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
