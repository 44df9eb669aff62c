"""Euler products f_m, eta-quotients and the generalized cubic generating function."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .series import EXACT, CoefficientRing, TruncatedSeries, invert, multiply, one, pow_int

__all__ = [
    "EtaQuotient",
    "parse_eta_quotient",
    "pentagonal_exponents",
    "euler_product_series",
    "euler_product_dense",
    "eta_quotient_series",
    "generalized_cubic_series",
]


@dataclass(frozen=True)
class EtaQuotient:
    """The formal product of ``f_m ** e`` over ``factors``.

    Scales are distinct and kept in ascending order; exponents are nonzero.

    >>> EtaQuotient([(2, -2), (1, -1)])
    EtaQuotient('f1^-1*f2^-2')
    """

    factors: tuple[tuple[int, int], ...]

    def __init__(self, factors: Iterable[tuple[int, int]]):
        pairs = tuple((int(m), int(e)) for m, e in factors)
        scales = [m for m, _ in pairs]
        if len(set(scales)) != len(scales):
            raise ValueError(f"duplicate scale in eta-quotient {pairs}")
        for m, e in pairs:
            if m < 1:
                raise ValueError(f"scale must be a positive integer, got {m}")
            if e == 0:
                raise ValueError(f"zero exponent on f{m}")
        object.__setattr__(self, "factors", tuple(sorted(pairs)))

    @classmethod
    def parse(cls, text: str) -> "EtaQuotient":
        return parse_eta_quotient(text)

    def __str__(self):
        return "*".join(f"f{m}^{e}" for m, e in self.factors)

    def __repr__(self):
        return f"EtaQuotient({str(self)!r})"


_FACTOR = re.compile(r"f([1-9][0-9]*)\^(-?[0-9]+)")


def parse_eta_quotient(text: str) -> EtaQuotient:
    """Parse ``"f1^-1*f2^-2"`` style notation; anything else is rejected."""
    text = text.strip()
    if not text:
        raise ValueError("empty eta-quotient")
    factors = []
    for token in text.split("*"):
        match = _FACTOR.fullmatch(token.strip())
        if match is None:
            raise ValueError(f"malformed factor {token!r} in {text!r}; expected f<m>^<e>")
        factors.append((int(match.group(1)), int(match.group(2))))
    return EtaQuotient(factors)


def pentagonal_exponents(N: int):
    """Yield ``(n, n(3n+1)/2)`` for n = 0, -1, 1, -2, 2, ... while exponents stay <= N."""
    yield 0, 0
    k = 1
    while True:
        emitted = False
        for n in (-k, k):
            e = n * (3 * n + 1) // 2
            if e <= N:
                emitted = True
                yield n, e
        if not emitted:
            return
        k += 1


def euler_product_series(m: int, N: int, ring: CoefficientRing = EXACT) -> TruncatedSeries:
    """f_m = prod_{n>=1} (1 - q^{mn}) to order N, from the pentagonal number theorem."""
    if m < 1:
        raise ValueError(f"scale must be >= 1, got {m}")
    if N < 0:
        raise ValueError(f"order must be >= 0, got {N}")
    coeffs = [0] * (N + 1)
    for n, e in pentagonal_exponents(N // m):
        coeffs[m * e] += -1 if n % 2 else 1
    return TruncatedSeries(coeffs, ring, N)


def euler_product_dense(m: int, N: int, ring: CoefficientRing = EXACT) -> TruncatedSeries:
    """The same product by multiplying in each factor (1 - q^{mk}); a test oracle."""
    coeffs = [0] * (N + 1)
    coeffs[0] = 1
    for step in range(m, N + 1, m):
        for i in range(N, step - 1, -1):
            coeffs[i] -= coeffs[i - step]
    return TruncatedSeries(coeffs, ring, N)


def eta_quotient_series(Q: EtaQuotient | str, N: int, ring: CoefficientRing = EXACT) -> TruncatedSeries:
    """Expand ``Q`` to order N, factors taken in ascending scale."""
    if isinstance(Q, str):
        Q = parse_eta_quotient(Q)
    result = one(N, ring)
    for m, e in Q.factors:
        base = euler_product_series(m, N, ring)
        if e < 0:
            base = invert(base)
        result = multiply(result, pow_int(base, abs(e)))
    return result


def generalized_cubic_series(c: int, N: int, ring: CoefficientRing = EXACT) -> TruncatedSeries:
    """sum a_c(n) q^n = 1/(f_1 f_2^(c-1)) to order N."""
    if c < 1:
        raise ValueError(f"number of colors must be >= 1, got {c}")
    factors = [(1, -1)]
    if c > 1:
        factors.append((2, -(c - 1)))
    return eta_quotient_series(EtaQuotient(factors), N, ring)
