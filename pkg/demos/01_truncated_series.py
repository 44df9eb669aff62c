"""
Truncated power series over ZZ and ZZ/mZZ
=========================================

Build Euler products, invert them, and move between exact and residue
coefficients.
"""

# %%
# ``f_1 = prod (1 - q^n)`` comes straight from the pentagonal number theorem:
# only O(sqrt N) coefficients are nonzero.
from cubic_congruences import CoefficientRing, euler_product_series, extract_progression, invert, reduce_mod

f1 = euler_product_series(1, 30)
print(f1)

# %%
# Its inverse counts ordinary partitions.
p = invert(f1)
print(p.coeffs[:12])

# %%
# Every fifth coefficient from 4 on is a multiple of 5.
fifth = extract_progression(p, 5, 4)
print(fifth.coeffs)
print(reduce_mod(fifth, 5).coeffs)

# %%
# Reading past the truncation order is an error, not a silent zero.
try:
    p[31]
except IndexError as exc:
    print("refused:", exc)

# %%
# The same pipeline run directly mod 7 agrees with the exact one reduced afterwards.
mod7 = CoefficientRing(7)
assert invert(euler_product_series(1, 30, mod7)) == reduce_mod(p, 7)
