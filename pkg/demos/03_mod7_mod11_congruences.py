"""
a_3(7n+4) and a_5(11n+10)
=========================

a_c(n) counts partitions of n whose even parts come in c colors.  Both
progressions vanish modulo the step, and the reason can be seen in the
binary form x^2 + y^2, which has only the trivial zero mod 7 and mod 11.
"""

# %%
from cubic_congruences import build_thm11_claims, generalized_cubic_series, quadratic_form_zero_count, verify_claim

a3 = generalized_cubic_series(3, 40)
print([a3[7 * n + 4] for n in range(5)])
print([a3[7 * n + 4] % 7 for n in range(5)])

# %%
for claim in build_thm11_claims():
    print(claim, verify_claim(claim, 1000).to_dict())

# %%
for p in (5, 7, 11, 13):
    print(p, quadratic_form_zero_count(1, 1, p))
