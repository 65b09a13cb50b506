"""The lambda side: potenziante expansions, transition matrices, and the
distinguished symmetric function q_n whose leading exponent explains the
threshold vector.
"""

from perpetuants import (
    bar_reduce,
    e_monomial,
    leading_exponent,
    potenziante,
    q_n,
    threshold,
    transition_alpha,
    transition_beta,
)

print("The (3,3) expansion pairs monomial sums with coefficient monomials:")
print(" ", potenziante(3, 3))
print("and rewritten through e-monomials each pairing yields a U-invariant:")
for k, u in potenziante(3, 3).e_rows:
    print(f"  e^{k} paired with {u}")

print()
print("The change of basis behind that rewriting at (3,3):")
beta = transition_beta(3, 3)
alpha = transition_alpha(3, 3)
print("  rows   :", [str(p) for p in beta.rows])
print("  columns:", beta.cols)
print("  beta   :", beta.entries)
print("  alpha  :", alpha.entries, "(exact inverse)")

print()
print("q_n = p_1 ... p_floor(n/2) after reducing modulo L1+...+Ln:")
print("  q_3 =", q_n(3))
for n in (3, 4, 5):
    lead = leading_exponent(q_n(n)).as_tuple(n - 1, first_index=1)
    print(f"  leading exponent of q_{n}: {lead}")

print()
print("The same leading exponent comes from the threshold e-monomial:")
for n in (4, 5):
    k = (0,) + threshold(n).k
    reduced = bar_reduce(e_monomial(k, n), n)
    print(f"  n={n}: e^{k} reduces with leading exponent "
          f"{leading_exponent(reduced).as_tuple(n - 1, first_index=1)}")
