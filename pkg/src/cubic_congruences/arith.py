"""Elementary number theory behind the congruence families.

Legendre symbols, modular inverses, the residue-class bookkeeping for the
two infinite families, the Ahlgren sign, and brute-force zero counts of the
binary forms ``a*x^2 + b*y^2`` modulo a prime.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exceptions import HypothesisError

__all__ = [
    "is_prime",
    "primes_up_to",
    "PrimeClass",
    "legendre_symbol",
    "jacobi_symbol",
    "mod_inverse",
    "thm31_offset",
    "thm32_offset",
    "epsilon_sign",
    "quadratic_form_zero_count",
]


def is_prime(n: int) -> bool:
    """Deterministic trial division."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def primes_up_to(n: int) -> list[int]:
    return [k for k in range(2, n + 1) if is_prime(k)]


def _require_prime(p: int, what: str = "p"):
    if not is_prime(p):
        raise HypothesisError(f"{what}={p} is not prime")


@dataclass(frozen=True)
class PrimeClass:
    """A prime with its residues mod 8, 12 and 24."""

    p: int

    def __post_init__(self):
        if self.p < 3 or not is_prime(self.p):
            raise HypothesisError(f"p={self.p} is not a prime >= 3")

    @property
    def residue_mod_8(self) -> int:
        return self.p % 8

    @property
    def residue_mod_12(self) -> int:
        return self.p % 12

    @property
    def residue_mod_24(self) -> int:
        return self.p % 24


def legendre_symbol(a: int, p: int) -> int:
    """(a/p) via Euler's criterion a^((p-1)/2) mod p."""
    if p == 2 or not is_prime(p):
        raise HypothesisError(f"Legendre symbol needs an odd prime, got {p}")
    t = pow(a % p, (p - 1) // 2, p)
    return -1 if t == p - 1 else t


def jacobi_symbol(a: int, n: int) -> int:
    """Jacobi symbol by the reciprocity ladder; equals (a/n) for prime n.

    Kept as an independent route to :func:`legendre_symbol`.
    """
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"Jacobi symbol needs a positive odd modulus, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def mod_inverse(a: int, m: int) -> int:
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    if math.gcd(a, m) != 1:
        raise ValueError(f"{a} has no inverse modulo {m}")
    return pow(a, -1, m)


def thm31_offset(p: int) -> int:
    """The residue l in [0, p) with p | 8l + 3, for primes p = 5, 7 (mod 8)."""
    _require_prime(p)
    if p % 8 not in (5, 7):
        raise HypothesisError(f"p ≡ {p % 8} (mod 8) violates p ≡ 5,7 (mod 8)")
    return (-3 * mod_inverse(8, p)) % p


def thm32_offset(p: int) -> int:
    """13(p^2 - 1)/24 for primes p >= 7 with p = 3, 7 (mod 8).

    The residue class mod p is just ``thm32_offset(p) % p``.
    """
    _require_prime(p)
    if p < 7:
        raise HypothesisError(f"p={p} violates p ≥ 7")
    if p % 8 not in (3, 7):
        raise HypothesisError(f"p ≡ {p % 8} (mod 8) violates p ≡ 3,7 (mod 8)")
    num = 13 * (p * p - 1)
    assert num % 24 == 0
    return num // 24


def epsilon_sign(p: int) -> int:
    _require_prime(p)
    if p % 8 == 7:
        return 1
    if p % 8 == 3:
        return -1
    raise HypothesisError(f"p ≡ {p % 8} (mod 8) violates p ≡ 3,7 (mod 8)")


def quadratic_form_zero_count(a: int, b: int, p: int) -> int:
    """Number of (x, y) in [0, p)^2 with a*x^2 + b*y^2 = 0 (mod p), by brute force."""
    _require_prime(p)
    if a % p == 0 or b % p == 0:
        raise ValueError(f"coefficients must be prime to p={p}, got a={a}, b={b}")
    count = 0
    for x in range(p):
        ax2 = a * x * x
        for y in range(p):
            if (ax2 + b * y * y) % p == 0:
                count += 1
    return count
