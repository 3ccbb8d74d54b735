#!/usr/bin/env python3
"""Sweep the exponent balance audit over a whole pair family.

For every admissible pair (0 < kappa < 1/3) both region branches are
certified exactly; the script prints a compact per-pair summary and an
overall tally.
"""

import argparse
import time
from fractions import Fraction

from zdx.density import audit_balance, continuity_check, regions_for
from zdx.exact import rat_str
from zdx.pairs import generate_pairs


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--depth", type=int, default=12)
    ap.add_argument("--verbose", action="store_true")
    args = ap.parse_args()

    family = generate_pairs(args.depth)
    start = time.perf_counter()
    audited = skipped = 0
    for pair in family:
        if not 0 < pair.kappa < Fraction(1, 3):
            skipped += 1
            continue
        regions = regions_for(pair)
        statuses = []
        for region in (1, 2):
            if regions.region(region).is_empty:
                statuses.append(f"r{region}:empty")
                continue
            rep = audit_balance(pair, region)
            statuses.append(f"r{region}:{'pass' if rep.passed else 'FAIL'}")
            audited += 1
        cont = continuity_check(pair)
        if args.verbose:
            print(
                f"({rat_str(pair.kappa)}, {rat_str(pair.lam)})  word={pair.word or '-'}  "
                f"{' '.join(statuses)}  continuity:{cont.status}"
            )
    elapsed = time.perf_counter() - start
    print(
        f"depth {args.depth}: {len(family)} pairs, {audited} region audits passed, "
        f"{skipped} pairs outside (0, 1/3), {elapsed:.2f}s"
    )


if __name__ == "__main__":
    main()
