"""Exact truncated q-series arithmetic for congruences of generalized cubic partitions.

a_c(n) counts partitions of n whose even parts come in c colors; its
generating function is 1/(f_1 f_2^(c-1)) with f_m = prod (1 - q^{mk}).
"""

from .arith import epsilon_sign, legendre_symbol, mod_inverse, quadratic_form_zero_count, thm31_offset, thm32_offset
from .congruences import (
    ClaimTag,
    CongruenceClaim,
    VerificationReport,
    build_thm11_claims,
    build_thm31_claim,
    build_thm32_claim,
    search_congruences,
    verify_claim,
)
from .eta import EtaQuotient, eta_quotient_series, euler_product_series, generalized_cubic_series
from .oracle import count_colored_partitions, enumerate_colored_partitions
from .series import (
    EXACT,
    CoefficientRing,
    TruncatedSeries,
    coefficient_at,
    extract_progression,
    invert,
    linear_combine,
    multiply,
    pow_int,
    reduce_mod,
    substitute_power,
)
from .theta import BilateralKind, check_ahlgren_relation, check_classical_identities, check_identity

__version__ = "0.1.0"
