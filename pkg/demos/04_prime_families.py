"""
Infinite families for p not 1 mod 8
====================================

For p = 5, 7 (mod 8): a_{p-4}(pn + l) = 0 (mod p) with p | 8l + 3.
For p >= 7, p = 3, 7 (mod 8): a_{p-6}(pn + 13(p^2-1)/24) = 0 (mod p).
"""

# %%
from cubic_congruences import build_thm31_claim, build_thm32_claim, legendre_symbol, verify_claim
from cubic_congruences.arith import primes_up_to

for p in primes_up_to(60):
    if p % 8 in (5, 7):
        claim = build_thm31_claim(p)
        print(f"{str(claim):32s} (-2/p)={legendre_symbol(-2, p):+d}", verify_claim(claim, 100).passed)

# %%
for p in primes_up_to(50):
    if p >= 7 and p % 8 in (3, 7):
        claim = build_thm32_claim(p)
        print(f"{str(claim):34s}", verify_claim(claim, 60).passed)

# %%
# Primes outside the classes are rejected rather than checked.
try:
    build_thm32_claim(13)
except ValueError as exc:
    print("rejected:", exc)
