"""Which crossing numbers are achievable for a fixed coloring.

Run with: python3 demos/03_spectrum_exploration.py
"""

from convexmatch import Coloring, crossing_number, find_with_k, spectrum

# The spectrum of a coloring is the set of crossing numbers over all of
# its perfect bichromatic matchings, here found by pruned exhaustive
# search with one witness matching per value.
col = Coloring("RB" * 7)
spec = spectrum(col)
print("coloring  :", col)
print("achievable:", spec.achievable)
print("missing   :", spec.missing)

# 1 and 2 are never achievable for this coloring, and a window above 15
# is skipped as well; every witness checks out.
for k in (0, 3, 15, 21):
    m = spec.witnesses[k]
    assert crossing_number(col, m) == k
    print(f"k={k:2d} witness:", m.sorted_edges)

# find_with_k answers a single membership question and is faster than
# computing the whole spectrum; None is a verified negative.
print("\nfind k=2 :", find_with_k(col, 2))
print("find k=17:", find_with_k(col, 17).sorted_edges)
