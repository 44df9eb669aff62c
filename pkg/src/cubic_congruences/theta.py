"""Bilateral theta-type sums and exact checks of the classical identities.

Every check here runs over ZZ.  A check returns an :class:`IdentityReport`
instead of raising, so failures can be inspected and serialized.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable

from .arith import epsilon_sign, is_prime
from .eta import EtaQuotient, eta_quotient_series, euler_product_series, generalized_cubic_series
from .exceptions import HypothesisError
from .series import EXACT, CoefficientRing, TruncatedSeries, extract_progression, pow_int, reduce_mod, substitute_power

__all__ = [
    "BilateralKind",
    "IdentityReport",
    "bilateral_terms",
    "bilateral_series",
    "check_identity",
    "check_classical_identities",
    "ahlgren_A_series",
    "ahlgren_offset",
    "check_ahlgren_relation",
    "check_binomial_congruence",
]


def _pentagonal(n: int) -> int:
    return n * (3 * n + 1) // 2


class BilateralKind(enum.Enum):
    """The three bilateral sums, with their exponent, weight and eta-quotient."""

    EULER_PENTAGONAL = ("euler", _pentagonal, lambda n: (-1) ** (n % 2), ((1, 1),))
    # no alternating sign here: the sign is carried by 6n+1 itself
    RAMANUJAN_F15_F22 = ("ramanujan22", _pentagonal, lambda n: 6 * n + 1, ((1, 5), (2, -2)))
    RAMANUJAN_F25_F12 = ("ramanujan32", lambda n: 3 * n * n + 2 * n, lambda n: (-1) ** (n % 2) * (3 * n + 1), ((1, -2), (2, 5)))

    def __init__(self, label, exponent, weight, factors):
        self.label = label
        self.exponent = exponent
        self.weight = weight
        self.quotient = EtaQuotient(factors)


@dataclass
class IdentityReport:
    name: str
    order: int
    passed: bool
    first_mismatch: int | None = None
    lhs: int | None = None
    rhs: int | None = None
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.passed and self.first_mismatch is not None:
            raise ValueError("a passing report cannot carry a mismatch index")
        if self.first_mismatch is not None and self.first_mismatch > self.order:
            raise ValueError("mismatch index beyond the checked order")

    def to_dict(self) -> dict:
        out = {"identity": self.name, "order": self.order, "pass": self.passed, "first_mismatch": self.first_mismatch}
        if self.first_mismatch is not None:
            out["lhs"] = str(self.lhs)
            out["rhs"] = str(self.rhs)
        out.update(self.details)
        return out


def bilateral_terms(exponent: Callable[[int], int], N: int):
    """Yield each integer n once, in the order 0, -1, 1, -2, 2, ..., with exponent(n) <= N.

    Stops once both directions have passed N; the exponents used here are
    quadratics with positive leading term, so nothing is missed.
    """
    if exponent(0) <= N:
        yield 0
    k = 1
    while True:
        live = False
        for n in (-k, k):
            e = exponent(n)
            if e <= N:
                live = True
                yield n
        if not live and exponent(-k) > exponent(-k + 1) and exponent(k) > exponent(k - 1):
            return
        k += 1


def bilateral_series(kind: BilateralKind, N: int, ring: CoefficientRing = EXACT, *,
                     exponent: Callable[[int], int] | None = None,
                     weight: Callable[[int], int] | None = None) -> TruncatedSeries:
    """Sum of weight(n) q^exponent(n) over all integers n with exponent(n) <= N.

    ``exponent`` and ``weight`` override the kind's own, which is how the
    mutation tests build deliberately wrong sums.
    """
    if N < 0:
        raise ValueError(f"order must be >= 0, got {N}")
    exponent = exponent or kind.exponent
    weight = weight or kind.weight
    coeffs = [0] * (N + 1)
    for n in bilateral_terms(exponent, N):
        e = exponent(n)
        if e >= 0:
            coeffs[e] += weight(n)
    return TruncatedSeries(coeffs, ring, N)


def _compare(name: str, lhs: TruncatedSeries, rhs: TruncatedSeries, **details) -> IdentityReport:
    order = min(lhs.order, rhs.order)
    for n, (a, b) in enumerate(zip(lhs.coeffs[: order + 1], rhs.coeffs[: order + 1])):
        if a != b:
            return IdentityReport(name, order, False, n, a, b, details)
    return IdentityReport(name, order, True, details=details)


def check_identity(kind: BilateralKind, N: int, *,
                   exponent: Callable[[int], int] | None = None,
                   weight: Callable[[int], int] | None = None) -> IdentityReport:
    """Compare a bilateral sum with its eta-quotient coefficient by coefficient."""
    lhs = bilateral_series(kind, N, EXACT, exponent=exponent, weight=weight)
    rhs = eta_quotient_series(kind.quotient, N, EXACT)
    return _compare(kind.label, lhs, rhs, quotient=str(kind.quotient))


def check_classical_identities(N: int) -> list[IdentityReport]:
    """Chan's a(3n+2) identity and Ramanujan's p(5n+4) identity to order N."""
    chan_lhs = extract_progression(generalized_cubic_series(2, 3 * N + 2), 3, 2)
    chan_rhs = 3 * eta_quotient_series(EtaQuotient([(3, 3), (6, 3), (1, -4), (2, -4)]), N)
    ram_lhs = extract_progression(generalized_cubic_series(1, 5 * N + 4), 5, 4)
    ram_rhs = 5 * eta_quotient_series(EtaQuotient([(5, 5), (1, -6)]), N)
    return [
        _compare("chan", chan_lhs, chan_rhs, quotient="3*f3^3*f6^3/(f1^4*f2^4)"),
        _compare("ramanujan-p5", ram_lhs, ram_rhs, quotient="5*f5^5/f1^6"),
    ]


def ahlgren_A_series(N: int) -> TruncatedSeries:
    """sum A(n) q^n = f_2^7 / f_1 over ZZ."""
    return eta_quotient_series(EtaQuotient([(1, -1), (2, 7)]), N, EXACT)


def ahlgren_offset(p: int) -> int:
    return 13 * (p * p - 1) // 24


def check_ahlgren_relation(p: int, N: int, A: TruncatedSeries | None = None) -> IdentityReport:
    """Check A(pn + 13(p^2-1)/24) = eps * p^2 * A(n/p) for 0 <= n <= N.

    A(n/p) is zero unless p | n.  Only primes p = 7, 11 (mod 12) are
    accepted.  A precomputed ``A`` may be passed; it must reach order
    p*N + 13(p^2-1)/24.
    """
    if not is_prime(p):
        raise HypothesisError(f"p={p} is not prime")
    if p % 12 not in (7, 11):
        raise HypothesisError(f"p ≡ {p % 12} (mod 12) violates p ≡ 7,11 (mod 12)")
    eps = epsilon_sign(p)
    offset = ahlgren_offset(p)
    need = p * N + offset
    if A is None:
        A = ahlgren_A_series(need)
    elif A.order < need:
        raise ValueError(f"A is known to order {A.order}, relation needs order {need}")
    coeffs = A.coeffs
    details = {"p": p, "epsilon": eps, "offset": offset}
    for n in range(N + 1):
        lhs = coeffs[p * n + offset]
        rhs = eps * p * p * coeffs[n // p] if n % p == 0 else 0
        if lhs != rhs:
            return IdentityReport(f"ahlgren-p{p}", N, False, n, lhs, rhs, details)
    return IdentityReport(f"ahlgren-p{p}", N, True, details=details)


def check_binomial_congruence(p: int, N: int, scale: int = 1) -> IdentityReport:
    """f_{scale}^p = f_{scale*p} (mod p) to order N."""
    if not is_prime(p):
        raise HypothesisError(f"p={p} is not prime")
    f = euler_product_series(scale, N)
    lhs = reduce_mod(pow_int(f, p), p)
    rhs = reduce_mod(substitute_power(f, p), p)
    return _compare(f"binomial-p{p}", lhs, rhs, p=p, scale=scale)
