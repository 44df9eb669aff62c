"""Ramanujan-type congruence claims a_c(p*n + r) = 0 (mod m): build, verify, search.

Verification expands 1/(f_1 f_2^(c-1)) once in ZZ/mZZ and scans the
progression.  A short prefix is recomputed with the partition-counting
oracle over ZZ and compared after reduction; any disagreement raises
:class:`OracleMismatchError` rather than producing a report.
"""

from __future__ import annotations

import csv
import enum
import io
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .arith import primes_up_to, thm31_offset, thm32_offset
from .eta import generalized_cubic_series
from .exceptions import OracleMismatchError, ResourceLimitError
from .oracle import colored_partition_counts
from .series import CoefficientRing, TruncatedSeries

__all__ = [
    "ClaimTag",
    "CongruenceClaim",
    "VerificationReport",
    "DEFAULT_DEPTH",
    "DEFAULT_ORDER_CEILING",
    "ORDER_CEILING_ENV",
    "order_ceiling",
    "build_thm11_claims",
    "build_thm31_claim",
    "build_thm32_claim",
    "verify_claim",
    "verify_claims",
    "search_congruences",
    "confirm_claims",
    "reports_to_csv",
]

log = logging.getLogger(__name__)

DEFAULT_DEPTH = 200
DEFAULT_ORDER_CEILING = 10**6
ORDER_CEILING_ENV = "CUBIC_CONGRUENCES_MAX_ORDER"
ORACLE_PREFIX = 8


def order_ceiling() -> int:
    """Largest expansion order allowed; overridable through the environment."""
    raw = os.environ.get(ORDER_CEILING_ENV)
    if raw is None:
        return DEFAULT_ORDER_CEILING
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ORDER_CEILING_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{ORDER_CEILING_ENV} must be positive, got {value}")
    return value


class ClaimTag(str, enum.Enum):
    THM11 = "THM11"
    THM31 = "THM31"
    THM32 = "THM32"
    SEARCH = "SEARCH"
    CUSTOM = "CUSTOM"


@dataclass(frozen=True)
class CongruenceClaim:
    """a_c(p*n + r) = 0 (mod m) for all n >= 0.

    ``r`` may exceed ``p``; it is kept as stated.
    """

    c: int
    p: int
    r: int
    m: int
    tag: ClaimTag = ClaimTag.CUSTOM

    def __post_init__(self):
        if self.c < 1:
            raise ValueError(f"colors must be >= 1, got {self.c}")
        if self.p < 2:
            raise ValueError(f"step must be >= 2, got {self.p}")
        if self.r < 0:
            raise ValueError(f"offset must be >= 0, got {self.r}")
        if self.m < 2:
            raise ValueError(f"modulus must be >= 2, got {self.m}")
        object.__setattr__(self, "tag", ClaimTag(self.tag))

    @property
    def key(self) -> tuple[int, int, int, int]:
        return (self.c, self.p, self.r, self.m)

    def order_for(self, depth: int) -> int:
        return self.p * (depth - 1) + self.r

    def to_dict(self) -> dict:
        return {"c": self.c, "p": self.p, "r": self.r, "m": self.m, "tag": self.tag.value}

    def __str__(self):
        return f"a_{self.c}({self.p}n+{self.r}) ≡ 0 (mod {self.m})"


@dataclass(frozen=True)
class VerificationReport:
    claim: CongruenceClaim
    depth: int
    order: int
    passed: bool
    first_fail_n: int | None = None
    residue: int | None = None

    def __post_init__(self):
        if self.passed and self.first_fail_n is not None:
            raise ValueError("a passing report cannot record a failure")

    def to_dict(self) -> dict:
        return {
            "claim": self.claim.to_dict(),
            "depth": self.depth,
            "order": self.order,
            "pass": self.passed,
            "first_fail_n": self.first_fail_n,
            "residue": self.residue,
        }


CSV_FIELDS = ["c", "p", "r", "m", "tag", "depth", "order", "pass", "first_fail_n", "residue"]


def reports_to_csv(reports) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for rep in reports:
        row = dict(rep.claim.to_dict())
        row.update(depth=rep.depth, order=rep.order, **{"pass": rep.passed},
                   first_fail_n="" if rep.first_fail_n is None else rep.first_fail_n,
                   residue="" if rep.residue is None else rep.residue)
        writer.writerow(row)
    return buf.getvalue()


def build_thm11_claims() -> tuple[CongruenceClaim, CongruenceClaim]:
    return (
        CongruenceClaim(3, 7, 4, 7, ClaimTag.THM11),
        CongruenceClaim(5, 11, 10, 11, ClaimTag.THM11),
    )


def build_thm31_claim(p: int) -> CongruenceClaim:
    """a_{p-4}(p*n + l) = 0 (mod p) where p | 8l + 3, for primes p = 5, 7 (mod 8)."""
    l = thm31_offset(p)
    return CongruenceClaim(p - 4, p, l, p, ClaimTag.THM31)


def build_thm32_claim(p: int) -> CongruenceClaim:
    """a_{p-6}(p*n + 13(p^2-1)/24) = 0 (mod p) for primes p >= 7, p = 3, 7 (mod 8)."""
    r = thm32_offset(p)
    return CongruenceClaim(p - 6, p, r, p, ClaimTag.THM32)


def _check_ceiling(order: int, ceiling: int | None):
    limit = order_ceiling() if ceiling is None else ceiling
    if order > limit:
        raise ResourceLimitError(f"expansion order {order} exceeds ceiling {limit} (set {ORDER_CEILING_ENV} to raise it)")


def _scan(claim: CongruenceClaim, depth: int, series: TruncatedSeries,
          counts: list[int] | None = None) -> VerificationReport:
    order = claim.order_for(depth)
    vals = series.to_numpy()[claim.r: order + 1: claim.p]
    prefix = min(depth, ORACLE_PREFIX)
    if counts is None or len(counts) <= claim.order_for(prefix):
        counts = colored_partition_counts(claim.order_for(prefix), claim.c)
    for n in range(prefix):
        idx = claim.p * n + claim.r
        if counts[idx] % claim.m != int(vals[n]):
            raise OracleMismatchError(
                f"{claim}: series gives {int(vals[n])} at q^{idx} but the oracle gives "
                f"{counts[idx]} ≡ {counts[idx] % claim.m} (mod {claim.m})")
    bad = np.flatnonzero(vals)
    if len(bad):
        n = int(bad[0])
        return VerificationReport(claim, depth, order, False, n, int(vals[n]))
    return VerificationReport(claim, depth, order, True)


def verify_claim(claim: CongruenceClaim, depth: int = DEFAULT_DEPTH, *, ceiling: int | None = None) -> VerificationReport:
    """Check the claim for 0 <= n < depth.

    The report gives the smallest failing n and its nonzero residue.
    """
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    order = claim.order_for(depth)
    _check_ceiling(order, ceiling)
    series = generalized_cubic_series(claim.c, order, CoefficientRing(claim.m))
    return _scan(claim, depth, series)


def _verify_star(args):
    claim, depth, ceiling = args
    return verify_claim(claim, depth, ceiling=ceiling)


def verify_claims(claims, depth: int = DEFAULT_DEPTH, *, jobs: int = 1, ceiling: int | None = None) -> list[VerificationReport]:
    """Verify several claims, optionally in worker processes; output order follows input."""
    claims = list(claims)
    for claim in claims:
        _check_ceiling(claim.order_for(depth), ceiling)
    if jobs <= 1 or len(claims) <= 1:
        return [verify_claim(c, depth, ceiling=ceiling) for c in claims]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_verify_star, [(c, depth, ceiling) for c in claims]))


def search_congruences(c_max: int, p_max: int, depth: int = DEFAULT_DEPTH, *,
                       ceiling: int | None = None) -> list[CongruenceClaim]:
    """All (c, p, r) with c <= c_max, prime p <= p_max, 0 <= r < p whose
    progression vanishes mod p for the first ``depth`` terms.

    One expansion per (c, p) serves every residue r.  Results are sorted by
    (c, p, r) and tagged SEARCH; they are empirical candidates only.
    """
    if min(c_max, p_max, depth) < 1:
        raise ValueError("c_max, p_max and depth must all be >= 1")
    found = []
    for p in primes_up_to(p_max):
        order = p * depth - 1
        _check_ceiling(order, ceiling)
        for c in range(1, c_max + 1):
            series = generalized_cubic_series(c, order, CoefficientRing(p))
            counts = colored_partition_counts(p * min(depth, ORACLE_PREFIX) - 1, c)
            for r in range(p):
                claim = CongruenceClaim(c, p, r, p, ClaimTag.SEARCH)
                if _scan(claim, depth, series, counts).passed:
                    found.append(claim)
    found.sort(key=lambda cl: (cl.c, cl.p, cl.r))
    return found


def confirm_claims(claims, depth: int, *, jobs: int = 1, ceiling: int | None = None) -> list[VerificationReport]:
    """Re-verify claims at a larger depth and log every one that no longer holds."""
    reports = verify_claims(claims, depth, jobs=jobs, ceiling=ceiling)
    for rep in reports:
        if not rep.passed:
            log.warning("%s fails at n=%d when re-checked to depth %d", rep.claim, rep.first_fail_n, depth)
    return reports

