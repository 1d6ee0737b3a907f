"""The k-sequence coordinate on [0,1).

Numbers in [0,1) correspond one-to-one with sequences (k_1, k_2, ...) of
natural numbers via theta = [0, 1, k_1, 1, k_2, ...]; finitely supported
sequences land on the rationals.  The zero-padded form collapses to an
ordinary simple continued fraction, read off from the support.
"""

from fractions import Fraction

from cfkit import KSequence, k_to_simple, k_value, k_value_bounds, simple_to_k, expand_simple

print("k-sequence -> simple CF -> value:")
print()
for entries in ((1,), (2,), (0, 2), (1, 1), (3, 0, 1)):
    k = KSequence(entries)
    cf = k_to_simple(k)
    print(f"  k = {k!s:<10} simple form {cf!s:<18} value {k_value(k)}")
    assert simple_to_k(cf) == k

print()
print("The reverse reading: expand a rational with even parity, then pair")
print("off the terms (gap, entry) to rebuild the sequence.")
print()
for r in (Fraction(2, 5), Fraction(3, 5), Fraction(17, 43)):
    k = simple_to_k(expand_simple(r, "even"))
    print(f"  {r!s:<8} -> k = {k}")

print()
print("Truncating an (a priori infinite) sequence gives exact interval")
print("bounds on the limit; the intervals are nested and shrink:")
print()
prefix = [1, 1, 1, 1, 1, 1, 1, 1]  # the golden-ratio-like tail
for depth in range(0, len(prefix) + 1, 2):
    lo, hi = k_value_bounds(prefix, depth)
    print(f"  depth {depth}: [{lo}, {hi}]  width {hi - lo}")
