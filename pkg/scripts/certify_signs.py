#!/usr/bin/env python3
"""Re-run the empirical certification of the chart sign convention.

Builds the sum-root charts under every candidate sign rule and tests them
against sampled orbit points; prints the unique surviving rule per kind.
The shipped default (CONVENTIONS.md) was produced by exactly this run.

Usage:
    python scripts/certify_signs.py [--max-n 4] [--trials 50] [--seed 314159]
"""

from __future__ import annotations

import argparse
import sys

from coadorbits.oracle import DEFAULT_SEED, resolve_sign_conventions
from coadorbits.orbits import CERTIFIED_SIGN_RULE, SIGN_RULES


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=4)
    parser.add_argument("--trials", type=int, default=50)
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    args = parser.parse_args()

    print(f"candidate rules: {', '.join(sorted(SIGN_RULES))}")
    convention = resolve_sign_conventions(args.max_n, args.trials, args.seed)
    for kind, rule in sorted(convention.rules.items()):
        marker = "(shipped default)" if rule == CERTIFIED_SIGN_RULE else "(DIFFERS FROM DEFAULT)"
        print(f"kind {kind}: certified rule = {rule} {marker}")
    ok = all(rule == CERTIFIED_SIGN_RULE for rule in convention.rules.values())
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
