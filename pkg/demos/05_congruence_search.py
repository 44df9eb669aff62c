"""
Scanning for congruences
========================

Every a_c(pn + r) = 0 (mod p) that survives 200 terms, for small c and p,
then re-checked at twice the depth.  Rows beyond the known families are
empirical candidates only.
"""

# %%
from cubic_congruences import search_congruences
from cubic_congruences.congruences import confirm_claims, reports_to_csv

claims = search_congruences(c_max=6, p_max=13, depth=200)
reports = confirm_claims(claims, 400)
print(reports_to_csv(reports))
