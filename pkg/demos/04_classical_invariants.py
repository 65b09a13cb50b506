"""Classical invariants of the cubic and the quartic, recovered exactly.

Shifting x -> x - a1/a0 in a monic polynomial produces U-invariants c_k of
degree and weight k; classical relations among them yield the cubic
discriminant D and the quartic invariants B and C, and show that D --
indecomposable among the invariants of the cubic -- becomes decomposable
once quartics are allowed.
"""

from perpetuants import (
    c_k,
    covariant_order,
    discriminant_decomposable_check,
    verify_s3,
    verify_s4,
)

print("The first shift invariants:")
for k in (2, 3, 4):
    print(f"  c_{k} = {c_k(k)}")

print()
d = verify_s3()
print("8 c2^3 + 9 c3^2 = a0^2 D with the cubic discriminant")
print("  D =", d)
print("  profile:", covariant_order(3, 4, 6))

print()
b, c = verify_s4()
print("2 c4 + c2^2 = a0^2 B and 6 c2 B - D = -a0 C give")
print("  B =", b)
print("  C =", c)

print()
report = discriminant_decomposable_check()
print("Membership of the discriminant:")
print("  D = 6 c2 B + a0 C holds:", report.identity_holds)
print("  D decomposable among quartic invariants:", report.in_limit_decomposables)
print("  D indecomposable within cubic invariants:",
      report.indecomposable_in_cubic_algebra)
