#!/usr/bin/env python3
"""
Command-line entry point for the Yang-Baxter toolkit.

Exit codes: 0 pass, 1 validation failure, 2 usage error.
"""

import sys
import argparse
import logging

from config import config
from cli import COMMANDS, EXIT_FAIL, EXIT_USAGE, UsageError, render
from braid import BraidWordError
from tools import MatrixFileError

logger = logging.getLogger("run")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Unitary Yang-Baxter R-matrix toolkit")
    parser.add_argument("--json", action="store_true", help="emit sorted-key JSON instead of text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gaussian", help="write the Gaussian R-matrix G_d")
    p.add_argument("--dim", type=int, required=True, help="base dimension d >= 2")
    p.add_argument("--normalize", choices=["none", "hecke"], default="none",
                   help="rescale to spectrum {-1, q} with Im q >= 0")
    p.add_argument("--tensor-id", type=int, default=1, help="take the ⊠ product with 1_m")
    p.add_argument("--out", help="output matrix file")

    for name, text in (("verify", "check unitarity and the Yang-Baxter equation"),
                       ("classify", "class label, dimension-2 canonical form or fingerprint"),
                       ("invariants", "trace, partial traces and spectrum"),
                       ("certify", "necessary conditions for a class [q, eta, d]")):
        p = sub.add_parser(name, help=text)
        p.add_argument("file", help="matrix file")

    p = sub.add_parser("character", help="evaluate the character on a braid word")
    p.add_argument("file", help="matrix file")
    p.add_argument("--word", required=True, help='braid word, e.g. "1 2 -1"')

    p = sub.add_parser("search", help="numerical search in a class [q, eta, d]")
    p.add_argument("--q", required=True, help='e.g. "i" or "exp(i*pi/3)"')
    p.add_argument("--eta", required=True, help='rational, e.g. "1/2"')
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--restarts", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--max-iters", type=int)
    p.add_argument("--workers", type=int)
    p.add_argument("--gradient", choices=["analytic", "finite-difference"])
    p.add_argument("--out", help="write the best matrix found")

    p = sub.add_parser("boxtimes", help="⊠ product of two R-matrices")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--out", required=True)

    p = sub.add_parser("flip", help="swap the spectral projections of a Hecke R-matrix")
    p.add_argument("file")
    p.add_argument("--out")

    p = sub.add_parser("wenzl", help="Wenzl trace values and recursion coefficients")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--k", type=int)

    p = sub.add_parser("dim2-empty", help="certify that [exp(i*pi/3), 1/2, 2] is empty")
    p.add_argument("--draws", type=int, default=20)
    p.add_argument("--seed", type=int)
    return parser


def main(argv=None) -> int:
    """Main entry point for the script."""
    config.configure_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else 0

    try:
        result = COMMANDS[args.command](args)
    except (UsageError, MatrixFileError, BraidWordError) as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as e:
        # domain errors all derive from ValueError
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_FAIL

    print(render(result.report, args.json))
    return result.code


if __name__ == '__main__':
    sys.exit(main())
