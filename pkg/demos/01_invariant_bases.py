"""A tour of the U-invariant spaces S_{n,g}.

S_{n,g} collects the polynomials in a0, a1, ... of degree n and weight g
killed by the lowering derivation D = sum a_(i-1) d/da_i.  This script
builds a few of them two independent ways and checks the dimension table
against its generating function.
"""

from perpetuants import (
    derivation_D,
    dim_series,
    is_translation_invariant,
    kernel_oracle,
    span_equal,
    u_basis,
)

print("The smallest interesting space: degree 3, weight 3")
for u in u_basis(3, 3):
    print(f"  U_{{{','.join(map(str, u.k))}}} = {u.poly}")
    print(f"  D applied to it: {derivation_D(u.poly)}")
    print(f"  invariant under translation: {is_translation_invariant(u.poly)}")

print()
print("Cross-check against the brute-force kernel of D:")
for n, g in [(2, 4), (3, 6), (4, 8), (5, 10)]:
    basis = [u.poly for u in u_basis(n, g)]
    kernel = kernel_oracle(n, g)
    equal, ra, rb, ru = span_equal(basis, kernel)
    print(f"  (n={n}, g={g}): basis rank {ra}, kernel rank {rb}, "
          f"union {ru} -> {'same space' if equal else 'MISMATCH'}")

print()
print("Dimension table dim S_{3,g}, g = 0..12, from 1/((1-x^2)(1-x^3)):")
print(" ", dim_series(3, 12).coefficients)
print("Each coefficient doubles as the number of partitions of g with")
print("parts between 2 and 3 -- the module checks both routes agree.")
