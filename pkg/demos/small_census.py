"""Exhaustive census of all oriented graphs on five vertices.

Each isomorphism class is bucketed by its generalized skew spectrum and the
mate count of every F_5 class is compared with its bound.
"""

import collections
import time

from skewspec.census import run_census

t0 = time.perf_counter()
result = run_census(5)
print(f"{len(result.records)} classes in {time.perf_counter() - t0:.1f}s")

members = [r for r in result.records if r.in_fn]
print(len(members), "classes lie in F_5")

# how many mates do F_5 classes actually have, against their bound?
tally = collections.Counter((r.bound, r.mate_class_count) for r in members)
for (bound, count), freq in sorted(tally.items()):
    print(f"  bound {bound}  mates {count}  classes {freq}")

print("bound violations:", len(result.violations))

# the largest spectral buckets
big = sorted(result.buckets, key=len, reverse=True)[:3]
for bucket in big:
    print(len(bucket), "classes share a spectrum, e.g.", bucket[0])
