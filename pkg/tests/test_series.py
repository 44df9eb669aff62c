import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubic_congruences.exceptions import NotAUnitError, RingMismatchError, TruncationError
from cubic_congruences.series import (
    EXACT,
    CoefficientRing,
    TruncatedSeries,
    _kronecker,
    _schoolbook,
    coefficient_at,
    extract_progression,
    invert,
    linear_combine,
    multiply,
    one,
    pow_int,
    reduce_mod,
    substitute_power,
    zero,
)

from conftest import naive_mul, naive_product_coeffs, series

MOD7 = CoefficientRing(7)


def f(m, N, ring=EXACT):
    return TruncatedSeries(naive_product_coeffs(m, N), ring, N)


# ring tags ---------------------------------------------------------------

def test_ring_validation():
    with pytest.raises(ValueError):
        CoefficientRing(1)
    with pytest.raises(TypeError):
        CoefficientRing(True)
    assert CoefficientRing(5).kind == "MOD_M"
    assert EXACT.kind == "EXACT_INTEGER"


def test_modular_coefficients_are_canonical():
    s = series([-1, 15, 7, -8], CoefficientRing(7))
    assert s.coeffs == (6, 1, 0, 6)


def test_constructor_pads_and_truncates():
    assert series([1, 2], order=3).coeffs == (1, 2, 0, 0)
    assert series([1, 2, 3, 4], order=1).coeffs == (1, 2)
    assert len(series([0], order=0)) == 1


# linear_combine ------------------------------------------------------------

def test_linear_combine_cancels():
    s = series([1, 1])
    assert linear_combine(1, s, -1, s).coeffs == (0, 0)


def test_linear_combine_doubles_f1():
    # expansion of prod(1-q^n) doubled, from the plain-list product
    assert linear_combine(1, f(1, 5), 1, f(1, 5)).coeffs == (2, -2, -2, 0, 0, 2)


def test_linear_combine_scalar_vanishes_mod_3():
    ring = CoefficientRing(3)
    s = one(2, ring)
    assert linear_combine(3, s, 0, s) == zero(2, ring)


def test_linear_combine_truncates_to_min_order():
    assert linear_combine(1, series([1, 2, 3]), 1, series([1, 1])).coeffs == (2, 3)


def test_ring_mismatch_rejected():
    with pytest.raises(RingMismatchError):
        linear_combine(1, one(3), 1, one(3, MOD7))
    with pytest.raises(RingMismatchError):
        multiply(one(3, CoefficientRing(5)), one(3, MOD7))


# multiply --------------------------------------------------------------------

def test_multiply_difference_of_squares():
    assert multiply(series([1, 1], order=2), series([1, -1], order=2)).coeffs == (1, 0, -1)


def test_multiply_f1_squared():
    # frozen from a plain-list convolution of the product expansion
    assert multiply(f(1, 7), f(1, 7)).coeffs == (1, -2, -1, 2, 1, 2, -2, 0)


def test_multiply_f1_by_inverse_is_one():
    s = f(1, 50)
    assert multiply(s, invert(s)) == one(50)


def test_kronecker_matches_schoolbook_with_huge_signed_coefficients():
    rng = np.random.default_rng(7)
    for _ in range(50):
        a = [int(x) * 10**int(e) for x, e in zip(rng.integers(-999, 999, 60), rng.integers(0, 40, 60))]
        b = [int(x) for x in rng.integers(-5, 5, 45)]
        size = int(rng.integers(1, 110))
        assert _kronecker(a, b, size) == _schoolbook(a, b, size)


def test_modular_multiply_paths_agree_with_exact():
    rng = np.random.default_rng(3)
    for size in (10, 200, 1600, 2500):
        a = [int(x) for x in rng.integers(-50, 50, size)]
        b = [int(x) for x in rng.integers(-50, 50, size)]
        exact = multiply(series(a), series(b))
        for m in (2, 7, 31, 10**9 + 7, 2**70 + 25):
            ring = CoefficientRing(m)
            assert multiply(series(a, ring), series(b, ring)) == reduce_mod(exact, m)


def test_sparse_modular_multiply():
    ring = CoefficientRing(11)
    dense = invert(f(1, 3000, ring))
    assert multiply(f(2, 3000, ring), dense) == reduce_mod(multiply(f(2, 3000), invert(f(1, 3000))), 11)


# invert ------------------------------------------------------------------------

def test_invert_geometric():
    assert invert(series([1, -1], order=4)).coeffs == (1, 1, 1, 1, 1)


def test_invert_f1_gives_partition_numbers():
    # values from count_colored_partitions(n, 1)
    assert invert(f(1, 6)).coeffs == (1, 1, 2, 3, 5, 7, 11)


def test_invert_non_unit_reports_coefficient():
    with pytest.raises(NotAUnitError) as err:
        invert(series([2, 1], CoefficientRing(4)))
    assert err.value.value == 2
    assert err.value.ring == CoefficientRing(4)
    with pytest.raises(NotAUnitError):
        invert(series([3, 1]))


@pytest.mark.parametrize("ring", [EXACT, CoefficientRing(7), CoefficientRing(10**12 + 39), CoefficientRing(2**80)])
def test_newton_and_recurrence_agree(ring):
    rng = np.random.default_rng(11)
    coeffs = [1] + [int(x) for x in rng.integers(-9, 9, 700)]
    s = series(coeffs, ring)
    assert invert(s, method="newton") == invert(s, method="recurrence")


def test_invert_unit_constant_mod_m():
    ring = CoefficientRing(9)
    s = series([4, 1, 0, 5, 2], ring)
    assert multiply(s, invert(s)) == one(4, ring)


def test_invert_unknown_method():
    with pytest.raises(ValueError):
        invert(one(3), method="magic")


# pow_int ---------------------------------------------------------------------

def test_pow_zero_is_one():
    assert pow_int(f(1, 10), 0) == one(10)


def test_pow_binomial():
    assert pow_int(series([1, 1], order=2), 2).coeffs == (1, 2, 1)


def test_pow_seven_mod_seven_is_dilation():
    s = f(1, 20, MOD7)
    assert pow_int(s, 7) == substitute_power(s, 7)


def test_negative_pow_matches_repeated_inverse():
    s = f(1, 40)
    assert pow_int(s, -3) == multiply(multiply(invert(s), invert(s)), invert(s))


def test_negative_pow_non_unit():
    with pytest.raises(NotAUnitError):
        pow_int(series([2, 1]), -1)


# substitute_power ---------------------------------------------------------------

def test_substitute_power_simple():
    assert substitute_power(series([1, 1], order=6), 3).coeffs == (1, 0, 0, 1, 0, 0, 0)


def test_substitute_power_f1_to_f2():
    assert substitute_power(f(1, 14), 2).coeffs == tuple(naive_product_coeffs(2, 14))
    assert substitute_power(f(1, 14), 2).nonzero_terms() == [(0, 1), (2, -1), (4, -1), (10, 1), (14, 1)]


def test_substitute_power_identity_and_bad_k():
    s = f(1, 9)
    assert substitute_power(s, 1) == s
    with pytest.raises(ValueError):
        substitute_power(s, 0)


# extract_progression ------------------------------------------------------------

def test_extract_odd_indices():
    assert extract_progression(series([1, 2, 3, 4]), 2, 1).coeffs == (2, 4)


def test_extract_partition_progression():
    # p(4), p(9), p(14) from the counting oracle
    ext = extract_progression(invert(f(1, 49)), 5, 4)
    assert ext.order == 9
    assert ext.coeffs[:3] == (5, 30, 135)


def test_extract_full_progression():
    s = f(1, 12)
    assert extract_progression(s, 1, 0) == s


def test_extract_rejects_bad_residue():
    with pytest.raises(ValueError):
        extract_progression(f(1, 12), 3, 3)


# coefficient_at ----------------------------------------------------------------

def test_coefficient_at():
    assert coefficient_at(invert(f(1, 10)), 4) == 5
    assert coefficient_at(f(1, 10), 3) == 0
    with pytest.raises(TruncationError):
        coefficient_at(f(1, 10), 11)
    with pytest.raises(TruncationError):
        f(1, 10)[11]


# reduce_mod ----------------------------------------------------------------------

def test_reduce_mod_basic():
    s = reduce_mod(series([3, 7, 10]), 7)
    assert s.coeffs == (3, 0, 3)
    assert s.ring == MOD7


def test_reduce_mod_cubic_progression_vanishes():
    a3 = invert(multiply(f(1, 25), pow_int(f(2, 25), 2)))
    red = reduce_mod(a3, 7)
    assert [red[i] for i in (4, 11, 18, 25)] == [0, 0, 0, 0]


def test_reduce_mod_zero_and_errors():
    assert reduce_mod(zero(5), 3) == zero(5, CoefficientRing(3))
    with pytest.raises(ValueError):
        reduce_mod(one(2), 1)
    with pytest.raises(ValueError):
        reduce_mod(one(2, MOD7), 3)


def test_order_zero_series_everywhere():
    s = series([1])
    assert multiply(s, s) == s
    assert invert(s) == s
    assert pow_int(s, -4) == s
    assert substitute_power(s, 5) == s
    assert extract_progression(s, 3, 0) == s
    assert reduce_mod(s, 2).coeffs == (1,)


# serialization ---------------------------------------------------------------------

def test_json_round_trip():
    big = invert(f(1, 500))
    blob = json.dumps(big.to_json())
    assert json.loads(blob)["coeffs"][500] == str(big[500])
    assert TruncatedSeries.from_json(json.loads(blob)) == big
    red = reduce_mod(big, 13)
    assert red.to_json()["ring"] == {"mod": 13}
    assert TruncatedSeries.from_json(red.to_json()) == red


def test_json_rejects_bad_payloads():
    with pytest.raises(ValueError):
        TruncatedSeries.from_json({"ring": "exact", "order": 2, "coeffs": ["1"]})
    with pytest.raises(ValueError):
        TruncatedSeries.from_json({"ring": {"mod": 5}, "order": 0, "coeffs": ["7"]})
    with pytest.raises(ValueError):
        TruncatedSeries.from_json({"ring": "float", "order": 0, "coeffs": ["1"]})


def test_values_are_immutable():
    s = reduce_mod(f(1, 5), 7)
    with pytest.raises(ValueError):
        s.to_numpy()[0] = 3
    with pytest.raises(AttributeError):
        s.order = 3


def test_operator_sugar():
    s = f(1, 6)
    assert (s + s) == 2 * s
    assert (s - s) == zero(6)
    assert -s == (-1) * s
    assert s ** 2 == multiply(s, s)
    assert (1 - s).coeffs[:3] == (0, 1, 1)
    assert str(series([1, -1, 0, 2])) == "1 - q + 2*q^3 + O(q^4)"


# properties ------------------------------------------------------------------------

ints = st.integers(-10**6, 10**6)
rings = st.sampled_from([EXACT, CoefficientRing(2), CoefficientRing(7), CoefficientRing(121), CoefficientRing(10**9 + 7)])


@st.composite
def series_triples(draw):
    ring = draw(rings)
    n = draw(st.integers(0, 64))
    make = lambda: TruncatedSeries(draw(st.lists(ints, min_size=n + 1, max_size=n + 1)), ring, n)
    return make(), make(), make()


@st.composite
def unit_series(draw):
    ring = draw(rings)
    n = draw(st.integers(0, 64))
    head = draw(st.sampled_from([1, -1]))
    tail = draw(st.lists(ints, min_size=n, max_size=n))
    return TruncatedSeries([head] + tail, ring, n)


@settings(max_examples=60, deadline=None)
@given(series_triples())
def test_ring_axioms(triple):
    S, T, U = triple
    assert multiply(S, T) == multiply(T, S)
    assert multiply(multiply(S, T), U) == multiply(S, multiply(T, U))
    assert multiply(linear_combine(3, S, -2, T), U) == linear_combine(3, multiply(S, U), -2, multiply(T, U))


@settings(max_examples=60, deadline=None)
@given(series_triples())
def test_multiply_matches_naive_convolution(triple):
    S, T, _ = triple
    expected = naive_mul(list(S.coeffs), list(T.coeffs), S.order)
    assert multiply(S, T) == TruncatedSeries(expected, S.ring, S.order)


@settings(max_examples=60, deadline=None)
@given(unit_series())
def test_invert_two_sided(S):
    inv = invert(S)
    unit = one(S.order, S.ring)
    assert multiply(S, inv) == unit
    assert multiply(inv, S) == unit
    assert invert(S, method="newton") == invert(S, method="recurrence")


@settings(max_examples=60, deadline=None)
@given(series_triples(), st.integers(1, 6))
def test_substitution_is_multiplicative(triple, k):
    S, T, _ = triple
    assert substitute_power(multiply(S, T), k) == multiply(substitute_power(S, k), substitute_power(T, k))


@settings(max_examples=60, deadline=None)
@given(series_triples(), st.integers(1, 9))
def test_progressions_reassemble(triple, p):
    S = triple[0]
    top = p * (S.order // p)
    rebuilt = [0] * (top + 1)
    for r in range(min(p, S.order + 1)):
        part = extract_progression(S, p, r)
        for j, c in enumerate(part.coeffs):
            if p * j + r <= top:
                rebuilt[p * j + r] += c
    assert TruncatedSeries(rebuilt, S.ring, top) == S.truncate(top)


@settings(max_examples=60, deadline=None)
@given(st.lists(ints, min_size=1, max_size=65), st.lists(ints, min_size=1, max_size=65), st.integers(2, 10**6))
def test_reduce_mod_is_homomorphism(a, b, m):
    n = min(len(a), len(b)) - 1
    S, T = series(a, order=n), series(b, order=n)
    assert reduce_mod(multiply(S, T), m) == multiply(reduce_mod(S, m), reduce_mod(T, m))


@settings(max_examples=40, deadline=None)
@given(unit_series(), st.integers(-4, 6), st.integers(2, 50))
def test_exact_then_reduce_equals_modular_pipeline(S, e, m):
    if not S.ring.is_exact:
        return
    exact = extract_progression(pow_int(S, e), 2, 0) if S.order >= 0 else S
    modular = extract_progression(pow_int(reduce_mod(S, m), e), 2, 0)
    assert reduce_mod(exact, m) == modular
