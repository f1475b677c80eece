#!/usr/bin/env python3
"""Timing sweep: sign / re-sign / verify cost per level on both backends.

Signatures grow by two elements per translation, so verification cost is
expected to rise linearly with the level; this script prints the measured
wall-clock numbers next to the element counts.

Usage: python scripts/bench_levels.py [--trials N] [--max-level L]
"""

import argparse
import random
import time

from prsig import CurveGroup, MockGroup, rom, waters


def bench(label, fn, trials):
    t0 = time.monotonic()
    for _ in range(trials):
        fn()
    return (time.monotonic() - t0) / trials * 1000.0


def sweep(ctx_name, ctx, trials, max_level):
    rng = random.Random(1)
    print(f"\n== {ctx_name} backend ==")
    print(f"{'scheme':8} {'level':>5} {'elems':>5} {'sign ms':>9} {'resign ms':>10} {'verify ms':>10}")
    for mod, name in ((rom, "hash"), (waters, "waters")):
        if mod is rom:
            params = rom.setup(ctx, max_level)
        else:
            params = waters.setup(ctx, 64, max_level, rng)
        src = mod.keygen(params, rng)
        dst = mod.keygen(params, rng)
        rekey = mod.rekeygen(src.public, dst.secret)
        msg = b"benchmark message"
        for level in range(1, max_level + 1):
            sig = mod.sign(params, level, src.secret, msg, rng)
            sign_ms = bench("sign", lambda: mod.sign(params, level, src.secret, msg, rng), trials)
            verify_ms = bench(
                "verify", lambda: mod.verify(params, level, msg, sig, src.public), trials
            )
            if level < max_level:
                resign_ms = bench(
                    "resign",
                    lambda: mod.resign(params, msg, sig, rekey, src.public, dst.public, rng),
                    trials,
                )
                resign_txt = f"{resign_ms:10.3f}"
            else:
                resign_txt = f"{'-':>10}"
            print(
                f"{name:8} {level:>5} {len(sig.elems):>5} {sign_ms:9.3f} "
                f"{resign_txt} {verify_ms:10.3f}"
            )


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=20)
    ap.add_argument("--max-level", type=int, default=6)
    ap.add_argument("--skip-curve", action="store_true")
    args = ap.parse_args()
    sweep("mock", MockGroup(), args.trials, args.max_level)
    if not args.skip_curve:
        sweep("curve (BLS12-381)", CurveGroup(), args.trials, args.max_level)


if __name__ == "__main__":
    main()
