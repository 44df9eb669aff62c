"""Truncated formal power series in q over ZZ or ZZ/mZZ.

A :class:`TruncatedSeries` stores the coefficients of q^0 .. q^N together
with its truncation order N and a :class:`CoefficientRing`.  Values are
immutable; every operation returns a new series.

Exact coefficients are Python integers.  Products of long exact series go
through Kronecker substitution (pack the coefficients into one big integer,
multiply with GMP, unpack), which is what makes order ~10^4 identity checks
practical.  Residue coefficients live in read-only ``int64`` numpy arrays
and are multiplied by direct convolution whenever the accumulated sums are
guaranteed to fit in 63 bits.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, Sequence

import gmpy2
import numpy as np

from .exceptions import NotAUnitError, RingMismatchError, TruncationError

__all__ = [
    "CoefficientRing",
    "EXACT",
    "TruncatedSeries",
    "linear_combine",
    "multiply",
    "invert",
    "pow_int",
    "substitute_power",
    "extract_progression",
    "coefficient_at",
    "reduce_mod",
    "one",
    "zero",
]

_INT64_LIMIT = 2**63 - 1
# below this length schoolbook products beat packing overhead
_SCHOOLBOOK_LEN = 24
# numpy direct convolution is O(N^2); beyond this Kronecker wins
_CONVOLVE_MAX_LEN = 1500


@dataclass(frozen=True)
class CoefficientRing:
    """Either the integers (``modulus is None``) or residues mod ``modulus``."""

    modulus: int | None = None

    def __post_init__(self):
        if self.modulus is not None:
            if isinstance(self.modulus, bool) or not isinstance(self.modulus, (int, np.integer)):
                raise TypeError(f"modulus must be an integer, got {self.modulus!r}")
            if self.modulus < 2:
                raise ValueError(f"modulus must be >= 2, got {self.modulus}")
            object.__setattr__(self, "modulus", int(self.modulus))

    @classmethod
    def exact(cls) -> "CoefficientRing":
        return cls(None)

    @classmethod
    def mod(cls, m: int) -> "CoefficientRing":
        return cls(m)

    @property
    def kind(self) -> str:
        return "EXACT_INTEGER" if self.modulus is None else "MOD_M"

    @property
    def is_exact(self) -> bool:
        return self.modulus is None

    def reduce(self, x: int) -> int:
        x = int(x)
        return x if self.modulus is None else x % self.modulus

    def inverse(self, x: int) -> int:
        """Inverse of a unit; raises :class:`NotAUnitError` otherwise."""
        x = self.reduce(x)
        if self.modulus is None:
            if x not in (1, -1):
                raise NotAUnitError(x, self)
            return x
        if math.gcd(x, self.modulus) != 1:
            raise NotAUnitError(x, self)
        return pow(x, -1, self.modulus)

    def to_json(self):
        return "exact" if self.modulus is None else {"mod": self.modulus}

    @classmethod
    def from_json(cls, obj) -> "CoefficientRing":
        if obj == "exact":
            return cls(None)
        if isinstance(obj, dict) and set(obj) == {"mod"}:
            return cls(int(obj["mod"]))
        raise ValueError(f"unrecognised ring tag {obj!r}")

    def __str__(self):
        return "ZZ" if self.modulus is None else f"ZZ/{self.modulus}ZZ"


EXACT = CoefficientRing()


class TruncatedSeries:
    """Coefficients ``c_0 .. c_N`` of a power series known modulo q^(N+1).

    ``coeffs`` shorter than ``order + 1`` are padded with zeros; longer input
    is cut at ``order``.  If ``order`` is omitted it is ``len(coeffs) - 1``.

    >>> s = TruncatedSeries([1, -1], order=3)
    >>> s.coeffs
    (1, -1, 0, 0)
    >>> (s * s.invert()).coeffs
    (1, 0, 0, 0)
    """

    __slots__ = ("_ring", "_order", "_data")

    def __init__(self, coeffs: Iterable[int], ring: CoefficientRing = EXACT, order: int | None = None):
        coeffs = list(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs
        if order is None:
            order = len(coeffs) - 1
            if order < 0:
                raise ValueError("an empty coefficient list needs an explicit order")
        if order < 0:
            raise ValueError(f"order must be >= 0, got {order}")
        self._ring = ring
        self._order = int(order)
        if ring.is_exact:
            data = [int(c) for c in coeffs[: order + 1]]
            data.extend([0] * (order + 1 - len(data)))
            self._data = tuple(data)
        else:
            m = ring.modulus
            if isinstance(coeffs, np.ndarray) and coeffs.dtype == np.int64 and m <= _INT64_LIMIT:
                arr = np.zeros(order + 1, dtype=np.int64)
                k = min(len(coeffs), order + 1)
                arr[:k] = coeffs[:k] % m
            elif m <= _INT64_LIMIT:
                arr = np.zeros(order + 1, dtype=np.int64)
                vals = [int(c) % m for c in coeffs[: order + 1]]
                arr[: len(vals)] = vals
            else:
                vals = [int(c) % m for c in coeffs[: order + 1]]
                vals.extend([0] * (order + 1 - len(vals)))
                arr = np.array(vals, dtype=object)
            arr.flags.writeable = False
            self._data = arr

    @classmethod
    def _wrap(cls, data, ring: CoefficientRing) -> "TruncatedSeries":
        # trusted fast constructor: data is already canonical and sized
        obj = cls.__new__(cls)
        obj._ring = ring
        if ring.is_exact:
            obj._data = tuple(data)
        else:
            if isinstance(data, np.ndarray):
                data.flags.writeable = False
            obj._data = data
        obj._order = len(obj._data) - 1
        return obj

    @property
    def ring(self) -> CoefficientRing:
        return self._ring

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> tuple[int, ...]:
        if self._ring.is_exact:
            return self._data
        return tuple(int(c) for c in self._data.tolist())

    def to_numpy(self) -> np.ndarray:
        """Coefficients as a read-only array (``object`` dtype for exact series)."""
        if self._ring.is_exact:
            arr = np.array(self._data, dtype=object)
            arr.flags.writeable = False
            return arr
        return self._data

    def __len__(self):
        return self._order + 1

    def __getitem__(self, n: int) -> int:
        return coefficient_at(self, n)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._ring == other._ring and self._order == other._order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self._ring, self._order, self.coeffs))

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self._order >= 8 else ""
        return f"TruncatedSeries([{shown}{tail}], ring={self._ring}, order={self._order})"

    def __str__(self):
        terms = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if n == 0 else ("q" if n == 1 else f"q^{n}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{'*' if mono else ''}{mono}")
        body = " + ".join(terms).replace("+ -", "- ") or "0"
        return f"{body} + O(q^{self._order + 1})"

    def nonzero_terms(self) -> list[tuple[int, int]]:
        return [(n, c) for n, c in enumerate(self.coeffs) if c]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self._order:
            raise TruncationError(f"cannot raise order {self._order} to {order} without re-expanding")
        if order < 0:
            raise ValueError("order must be >= 0")
        return TruncatedSeries._wrap(self._data[: order + 1], self._ring)

    # arithmetic sugar -----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            return linear_combine(1, self, 1, other)
        if isinstance(other, (int, np.integer)):
            return self + _constant(other, self._order, self._ring)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return linear_combine(-1, self, 0, self)

    def __sub__(self, other):
        if isinstance(other, TruncatedSeries):
            return linear_combine(1, self, -1, other)
        if isinstance(other, (int, np.integer)):
            return self + (-int(other))
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return multiply(self, other)
        if isinstance(other, (int, np.integer)):
            return linear_combine(other, self, 0, self)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return pow_int(self, e)

    def invert(self, method: str = "auto") -> "TruncatedSeries":
        return invert(self, method=method)

    def reduce_mod(self, m: int) -> "TruncatedSeries":
        return reduce_mod(self, m)

    def substitute_power(self, k: int) -> "TruncatedSeries":
        return substitute_power(self, k)

    def extract_progression(self, p: int, r: int) -> "TruncatedSeries":
        return extract_progression(self, p, r)

    # serialization ----------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "ring": self._ring.to_json(),
            "order": self._order,
            "coeffs": [str(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "TruncatedSeries":
        ring = CoefficientRing.from_json(obj["ring"])
        order = int(obj["order"])
        raw = obj["coeffs"]
        if len(raw) != order + 1:
            raise ValueError(f"expected {order + 1} coefficients, got {len(raw)}")
        coeffs = [int(c) for c in raw]
        if not ring.is_exact and any(not 0 <= c < ring.modulus for c in coeffs):
            raise ValueError("modular coefficients must be canonical residues")
        return cls(coeffs, ring, order)


def one(order: int, ring: CoefficientRing = EXACT) -> TruncatedSeries:
    return _constant(1, order, ring)


def zero(order: int, ring: CoefficientRing = EXACT) -> TruncatedSeries:
    return _constant(0, order, ring)


def _constant(c: int, order: int, ring: CoefficientRing) -> TruncatedSeries:
    return TruncatedSeries([c], ring, order)


def _check_same_ring(S: TruncatedSeries, T: TruncatedSeries):
    if S.ring != T.ring:
        raise RingMismatchError(f"cannot combine series over {S.ring} and {T.ring}")


def linear_combine(a: int, S: TruncatedSeries, b: int, T: TruncatedSeries) -> TruncatedSeries:
    """``a*S + b*T`` truncated to the smaller of the two orders."""
    _check_same_ring(S, T)
    n = min(S.order, T.order) + 1
    ring = S.ring
    if ring.is_exact:
        a, b = int(a), int(b)
        data = [a * x + b * y for x, y in zip(S._data[:n], T._data[:n])]
        return TruncatedSeries._wrap(data, ring)
    m = ring.modulus
    a, b = int(a) % m, int(b) % m
    x, y = S._data[:n], T._data[:n]
    if x.dtype == np.int64 and (m - 1) * (m - 1) * 2 <= _INT64_LIMIT:
        data = (a * x + b * y) % m
    else:
        data = np.array([(a * int(u) + b * int(v)) % m for u, v in zip(x, y)], dtype=x.dtype)
    return TruncatedSeries._wrap(data, ring)


# multiplication engines ----------------------------------------------------

def _schoolbook(a: Sequence[int], b: Sequence[int], size: int) -> list[int]:
    out = [0] * size
    for i, x in enumerate(a[:size]):
        if x:
            for j, y in enumerate(b[: size - i]):
                out[i + j] += x * y
    return out


def _pack(vals: Sequence[int], nbytes: int) -> int:
    pos = b"".join((v if v > 0 else 0).to_bytes(nbytes, "little") for v in vals)
    neg = b"".join((-v if v < 0 else 0).to_bytes(nbytes, "little") for v in vals)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _kronecker(a: Sequence[int], b: Sequence[int], size: int) -> list[int]:
    """Signed integer convolution ``a*b`` truncated to ``size`` terms."""
    a = a[:size]
    b = b[:size]
    ma = max((abs(v) for v in a), default=0)
    mb = max((abs(v) for v in b), default=0)
    if ma == 0 or mb == 0:
        return [0] * size
    bound = ma * mb * min(len(a), len(b))
    nbytes = (bound.bit_length() + 1 + 7) // 8
    prod = int(gmpy2.mpz(_pack(a, nbytes)) * gmpy2.mpz(_pack(b, nbytes)))
    # bias every slot by 2^(8*nbytes-1) so each slot reads as an unsigned digit
    width = 8 * nbytes * size
    bias = int.from_bytes((b"\x00" * (nbytes - 1) + b"\x80") * size, "little")
    raw = ((prod + bias) & ((1 << width) - 1)).to_bytes(nbytes * size, "little")
    half = 1 << (8 * nbytes - 1)
    return [int.from_bytes(raw[k * nbytes:(k + 1) * nbytes], "little") - half for k in range(size)]


def _mul_exact(a: Sequence[int], b: Sequence[int], size: int) -> list[int]:
    if min(len(a), len(b), size) <= _SCHOOLBOOK_LEN:
        return _schoolbook(a, b, size)
    return _kronecker(a, b, size)


def _mul_mod(a: np.ndarray, b: np.ndarray, size: int, m: int) -> np.ndarray:
    a = a[:size]
    b = b[:size]
    if a.dtype == np.int64 and (m - 1) ** 2 * min(len(a), len(b)) <= _INT64_LIMIT:
        nz_a = np.flatnonzero(a)
        nz_b = np.flatnonzero(b)
        if len(nz_b) < len(nz_a):
            a, b, nz_a = b, a, nz_b
        if len(nz_a) * 8 < size:
            # one sparse factor (Euler products): shifted vector updates
            out = np.zeros(size, dtype=np.int64)
            for i in nz_a.tolist():
                out[i:] += int(a[i]) * b[: size - i]
                out[i:] %= m
            return out
        if size <= _CONVOLVE_MAX_LEN:
            return np.convolve(a, b)[:size] % m
    vals = _kronecker([int(x) for x in a], [int(x) for x in b], size)
    dtype = np.int64 if m <= _INT64_LIMIT else object
    return np.array([v % m for v in vals], dtype=dtype)


def multiply(S: TruncatedSeries, T: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to ``min(S.order, T.order)``."""
    _check_same_ring(S, T)
    size = min(S.order, T.order) + 1
    if S.ring.is_exact:
        return TruncatedSeries._wrap(_mul_exact(S._data, T._data, size), S.ring)
    return TruncatedSeries._wrap(_mul_mod(S._data, T._data, size, S.ring.modulus), S.ring)


# inversion -------------------------------------------------------------------

def _invert_recurrence(S: TruncatedSeries) -> TruncatedSeries:
    """Term-by-term inverse: b_n = -b_0 * sum_{k>=1} a_k b_{n-k}.

    Only the nonzero a_k are visited, so a sparse input of length N costs
    O(N * nnz) instead of O(N^2).
    """
    ring = S.ring
    N = S.order
    coeffs = S.coeffs
    inv0 = ring.inverse(coeffs[0])
    ks = [k for k in range(1, N + 1) if coeffs[k]]
    vals = [coeffs[k] for k in ks]
    if ring.is_exact:
        b = [0] * (N + 1)
        b[0] = inv0
        for n in range(1, N + 1):
            cnt = bisect_right(ks, n)
            acc = 0
            for i in range(cnt):
                acc += vals[i] * b[n - ks[i]]
            b[n] = -inv0 * acc
        return TruncatedSeries._wrap(b, ring)
    m = ring.modulus
    if m <= _INT64_LIMIT and (m - 1) ** 2 * max(len(ks), 1) <= _INT64_LIMIT:
        b = np.zeros(N + 1, dtype=np.int64)
        b[0] = inv0
        ks_arr = np.array(ks, dtype=np.int64)
        vals_arr = np.array(vals, dtype=np.int64)
        for n in range(1, N + 1):
            cnt = bisect_right(ks, n)
            if cnt:
                acc = int(np.dot(vals_arr[:cnt], b[n - ks_arr[:cnt]]))
                b[n] = (-inv0 * acc) % m
        return TruncatedSeries._wrap(b, ring)
    b = [0] * (N + 1)
    b[0] = inv0
    for n in range(1, N + 1):
        cnt = bisect_right(ks, n)
        acc = sum(vals[i] * b[n - ks[i]] for i in range(cnt))
        b[n] = (-inv0 * acc) % m
    return TruncatedSeries(b, ring, N)


def _invert_newton(S: TruncatedSeries) -> TruncatedSeries:
    """Newton doubling g <- g*(2 - S*g); exact in any ring where S[0] is a unit."""
    ring = S.ring
    N = S.order
    g = TruncatedSeries([ring.inverse(S.coeffs[0])], ring, 0)
    prec = 1
    while prec < N + 1:
        prec = min(2 * prec, N + 1)
        Sp = S.truncate(prec - 1)
        gp = TruncatedSeries(g.coeffs, ring, prec - 1)
        err = multiply(Sp, gp)
        g = multiply(gp, linear_combine(2, one(prec - 1, ring), -1, err))
    return g


def invert(S: TruncatedSeries, method: str = "auto") -> TruncatedSeries:
    """Multiplicative inverse of ``S`` to the same order.

    ``method`` is ``"recurrence"`` (the O(N^2) baseline, sparse-aware),
    ``"newton"`` or ``"auto"``; both paths return identical coefficients.
    Raises :class:`NotAUnitError` when ``S[0]`` is not a unit.
    """
    ring = S.ring
    ring.inverse(S.coeffs[0])
    if method == "recurrence":
        return _invert_recurrence(S)
    if method == "newton":
        return _invert_newton(S)
    if method != "auto":
        raise ValueError(f"unknown inversion method {method!r}")
    N = S.order
    nnz = sum(1 for c in S.coeffs if c)
    if N < 64 or nnz * nnz <= 16 * N:
        return _invert_recurrence(S)
    return _invert_newton(S)


def pow_int(S: TruncatedSeries, e: int) -> TruncatedSeries:
    """``S**e`` by binary exponentiation; a negative ``e`` inverts once first."""
    if e < 0:
        S = invert(S)
        e = -e
    result = one(S.order, S.ring)
    base = S
    while e:
        if e & 1:
            result = multiply(result, base)
        e >>= 1
        if e:
            base = multiply(base, base)
    return result


def substitute_power(S: TruncatedSeries, k: int) -> TruncatedSeries:
    """Replace q by q^k, keeping the order of ``S``."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    N = S.order
    if S.ring.is_exact:
        data = [0] * (N + 1)
        data[::k] = S._data[: N // k + 1]
        return TruncatedSeries._wrap(data, S.ring)
    data = np.zeros(N + 1, dtype=S._data.dtype)
    data[::k] = S._data[: N // k + 1]
    return TruncatedSeries._wrap(data, S.ring)


def extract_progression(S: TruncatedSeries, p: int, r: int) -> TruncatedSeries:
    """Series ``sum_n S[p*n + r] q^n`` of order ``(S.order - r) // p``."""
    if p < 1:
        raise ValueError(f"step must be >= 1, got {p}")
    if not 0 <= r < p:
        raise ValueError(f"residue must satisfy 0 <= r < p, got r={r}, p={p}")
    if r > S.order:
        raise TruncationError(f"offset {r} exceeds series order {S.order}")
    return TruncatedSeries._wrap(S._data[r::p], S.ring)


def coefficient_at(S: TruncatedSeries, n: int) -> int:
    if n < 0:
        raise IndexError(f"negative coefficient index {n}")
    if n > S.order:
        raise TruncationError(f"coefficient q^{n} requested from a series known only to order {S.order}")
    return int(S._data[n])


def reduce_mod(S: TruncatedSeries, m: int) -> TruncatedSeries:
    """Map an exact series into ZZ/mZZ."""
    if not S.ring.is_exact:
        raise ValueError(f"series is already over {S.ring}")
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    return TruncatedSeries(S._data, CoefficientRing(m), S.order)
