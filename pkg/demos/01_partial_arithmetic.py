"""Continued fractions with zero terms, evaluated over Q + {inf}.

Ordinary continued-fraction evaluation breaks down the moment a partial
quotient is 0: the fold hits 1/0.  Extending the rationals by a single
point at infinity makes every integer-term fraction evaluable.
"""

from fractions import Fraction

from cfkit import ContinuedFraction, eval_cf, eval_terms, expand_simple, finite

print("The fold v <- a + 1/v over Q + {inf}:")
print()

for terms in ([1, 0], [0, 0, 5], [1, 0, 1, 0, 1, 0, 1], [0, 2, 2]):
    cf = ContinuedFraction(terms[0], tuple(terms[1:]))
    print(f"  {cf!s:<24} = {eval_cf(cf)}")

print()
print("Zero-pair tails are invisible: appending (1,0) blocks, or 1 followed")
print("by (0,1) blocks, perturbs a value in a completely controlled way.")
print()

x = Fraction(7, 3)
for n in (1, 2, 5):
    left = eval_terms([x, *(1, 0) * n])
    right = eval_terms([x, 1, *(0, 1) * (n - 1)])
    print(f"  [7/3,(1,0)^{n}] = {left}    [7/3,1,(0,1)^{n-1}] = {right} (= 7/3 + 1/{n})")

print()
print("Each rational in (0,1) has exactly two simple expansions, one of each")
print("parity of the last term's index; both evaluate back to the number.")
print()

for r in (Fraction(1, 2), Fraction(2, 5), Fraction(5, 8)):
    even = expand_simple(r, "even")
    odd = expand_simple(r, "odd")
    assert eval_cf(even) == eval_cf(odd) == finite(r)
    print(f"  {r}:  even {even}   odd {odd}")
