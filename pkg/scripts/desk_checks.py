#!/usr/bin/env python3
"""Run the arithmetic and analytic desk checks in one go.

Covers the tau-table identities (convolution inverse, multiplicativity,
prime-power recursion, divisor-count bound), the bilinear inequality
harness, and the gamma-kernel quadrature.
"""

import argparse
import time

from zdx.hecke import (
    compute_tau,
    convolution_identity_check,
    deligne_check,
    hecke_recursion_failures,
    mollifier_from,
    multiplicativity_failures,
)
from zdx.probes import hm_random_trials, mellin_probe


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--limit", type=int, default=10_000)
    ap.add_argument("--trials", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    t0 = time.perf_counter()
    table = compute_tau(args.limit)
    moll = mollifier_from(table)
    conv = convolution_identity_check(table, args.limit, moll)
    rec = hecke_recursion_failures(table)
    mult = multiplicativity_failures(table)
    deligne = deligne_check(table)
    print(
        f"tau table to {args.limit}: convolution failures {len(conv)}, "
        f"recursion failures {len(rec)}, multiplicativity failures {len(mult)}, "
        f"divisor bound ok {deligne.ok} (max ratio {deligne.max_ratio_decimal}) "
        f"[{time.perf_counter() - t0:.2f}s]"
    )

    t0 = time.perf_counter()
    rep = hm_random_trials(args.trials, seed=args.seed)
    print(
        f"bilinear inequality: {rep.trials} seeded systems, "
        f"max relative slack {rep.max_rel_slack:.3e} "
        f"({'ok' if rep.ok else 'VIOLATION'}) [{time.perf_counter() - t0:.2f}s]"
    )

    t0 = time.perf_counter()
    for x in (0.5, 1.0, 2.0):
        res = mellin_probe(x)
        print(
            f"gamma-kernel quadrature x={x}: value {res.value:.12f} "
            f"error {res.abs_error:.2e} imag {res.imag_residual:.2e}"
        )
    print(f"[{time.perf_counter() - t0:.2f}s]")


if __name__ == "__main__":
    main()
