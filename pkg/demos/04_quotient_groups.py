"""The isomorphism invariant: Z^2/(Za + nZ^2) and defect classes.

An extension descriptor (n, index pair, defect pair) is classified by n,
the index orbit under negation/swap, and the image of the defect pair in
the quotient group D = Z^2/(Za + nZ^2) ~ Z/d + Z/n.  The closed-form
projection is checked against a brute-force coset enumeration.
"""

from cfkit import (
    ExtensionDescriptor,
    brute_force_quotient,
    build_quotient,
    is_isomorphic,
    project,
    projection_matches_brute_force,
    tensor_factor,
)

print("Quotient groups, closed form vs. coset enumeration:")
print()
for a, n in (((-1, 1), 5), ((2, 4), 6), ((1, 0), 3), ((3, -2), 12)):
    q = build_quotient(a, n)
    bf = brute_force_quotient(a, n)
    ok = projection_matches_brute_force(q, bf)
    print(f"  a={a} n={n}:  c={q.c} d={q.d}  order {bf.order} = d*n = {q.order}  "
          f"projection bijective: {ok}")

print()
print("For the standard index (-1,1), d = 1 and the projection collapses to")
print("(k+ + k-) mod n, so e.g. defect pairs (0,2) and (1,1) are the same class:")
print()
q = build_quotient((-1, 1), 5)
for defects in ((0, 2), (1, 1), (2, 0), (0, 3)):
    print(f"  defects {defects} -> class {project(defects, q)[1]} mod 5")

print()
print("Isomorphism decisions (index may be adjusted by negation and swap):")
print()
e = ExtensionDescriptor(5, (-1, 1), (0, 2))
for f in (
    ExtensionDescriptor(5, (-1, 1), (1, 1)),
    ExtensionDescriptor(5, (1, -1), (2, 0)),
    ExtensionDescriptor(5, (-1, 1), (0, 3)),
    ExtensionDescriptor(7, (-1, 1), (0, 2)),
):
    print(f"  {e.n},{e.index},{e.defects} ~ {f.n},{f.index},{f.defects}: "
          f"{is_isomorphic(e, f)}")

print()
print("Tensoring with a t x t matrix factor scales both n and the class:")
big = ExtensionDescriptor(6, (-1, 1), (2, 0))
print(f"  (n=6, m=2) = M_2 tensor (n, m) = {tensor_factor(big, 2)}")
