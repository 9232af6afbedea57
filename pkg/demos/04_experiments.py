"""Reproducing the ratio-distribution experiment.

Generates random segment-length instances, compares the worst-case share
against the exact MinMaxShare of every instance, and prints the 0.1-wide
bucket counts.  The same data is available from the command line via
`fairchores experiment synthetic --n 3 --m 8,9,10 --count 100 --seed 42`.
"""

import random

from fairchores import (
    ExperimentConfig,
    RatioHistogram,
    gen_synthetic,
    instance_ratio,
    run_histogram,
)

print("a few synthetic vectors (segment lengths of [0,1], exact rationals)")
rng = random.Random(7)
for _ in range(3):
    v = gen_synthetic(5, rng)
    print(" ", [str(x) for x in v.values], "sum =", v.total())

print()
print("single-instance ratio record")
rec = instance_ratio(gen_synthetic(8, rng), 3)
print(f"  alpha {rec.alpha}, hill {rec.hill}, mms {rec.mms}, ratio {float(rec.ratio):.4f}")

print()
print("histogram for n = 3, m in {8, 9, 10}, 100 instances each, seed 42")
cfg = ExperimentConfig(3, (8, 9, 10), 100, 42)
hist = run_histogram(cfg)
for (n, m), buckets in sorted(hist.counts.items()):
    for b in sorted(buckets):
        lo, hi = RatioHistogram.bucket_bounds(b)
        bar = "#" * buckets[b]
        print(f"  n={n} m={m} [{float(lo):.1f},{float(hi):.1f}): {buckets[b]:3d} {bar}")
