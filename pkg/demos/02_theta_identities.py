"""
Theta-type sums against eta-quotients
=====================================

Each bilateral sum is compared with the product it equals, exactly, to a
few thousand terms.  Chan's cubic-partition identity and Ramanujan's
p(5n+4) identity are checked the same way.
"""

# %%
from cubic_congruences import BilateralKind, check_classical_identities, check_identity
from cubic_congruences.theta import bilateral_series, check_ahlgren_relation

for kind in BilateralKind:
    print(kind.label, kind.quotient, bilateral_series(kind, 12))
    print("   ", check_identity(kind, 3000).to_dict())

# %%
for report in check_classical_identities(1000):
    print(report.to_dict())

# %%
# Putting an alternating sign on 6n+1 breaks the f1^5/f2^2 identity at q^1.
bad = check_identity(BilateralKind.RAMANUJAN_F15_F22, 50, weight=lambda n: (-1) ** (n % 2) * (6 * n + 1))
print(bad.to_dict())

# %%
# f_2^7/f_1 satisfies a Hecke-type relation for p = 7, 11 (mod 12).
for p in (7, 11, 19, 23):
    print(check_ahlgren_relation(p, 60).to_dict())
