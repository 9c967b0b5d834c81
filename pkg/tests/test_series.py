import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qgordon.series import (
    INFINITE,
    BiSeries,
    DivergentProduct,
    LaurentSeries,
    Monomial,
    NonTruncating,
    NotAUnit,
    UnsafeEvaluation,
    evaluate_x,
    invert_unit,
    mul,
    pochhammer,
    qpochhammer,
    theta_sum,
)


def laurent(draw_lo=-3, draw_hi=6, size=8):
    return st.builds(
        lambda lo, cs, extra: LaurentSeries.from_list(cs, lo + len(cs) - 1 + extra, lo),
        st.integers(draw_lo, draw_hi),
        st.lists(st.integers(-5, 5), min_size=1, max_size=size),
        st.integers(0, 4),
    )


def test_small_product_expansion():
    s = qpochhammer(1, 1, 3, 10)
    assert s.coeffs == {0: 1, 1: -1, 2: -1, 4: 1, 5: 1, 6: -1}


def test_partition_numbers_from_reciprocal():
    s = qpochhammer(1, 1, INFINITE, 12, invert=True)
    assert s.coefficient_list(0, 12) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]


def test_rogers_ramanujan_product_coefficient():
    # parts congruent to 1 or 4 mod 5: 6 = 6 = 4+1+1 = 1*6
    s = qpochhammer(1, 5, INFINITE, 20, invert=True) * qpochhammer(4, 5, INFINITE, 20, invert=True)
    assert s[6] == 3


def test_truncation_is_absolute():
    s = LaurentSeries({0: 1, 3: 2}, 5)
    assert s.trunc_order == 5
    assert s[4] == 0
    with pytest.raises(IndexError):
        s[6]
    with pytest.raises(ValueError):
        s.truncate(6)


def test_guard_rule_for_negative_valuation():
    s = LaurentSeries({-2: 1}, 10)
    t = LaurentSeries({0: 1, 1: 1}, 10)
    assert (s * t).trunc_order == 8
    assert (s * t).coeffs == {-2: 1, -1: 1}


def test_zero_series_product_keeps_window():
    z = LaurentSeries.zero(7)
    assert (z * LaurentSeries.one(7)).trunc_order == 7


def test_shift_moves_truncation():
    s = LaurentSeries({1: 3}, 4).shift(-3)
    assert s.coeffs == {-2: 3}
    assert s.trunc_order == 1


def test_binomial_division_matches_geometric_series():
    s = LaurentSeries.one(9).div_binomial(2, 3)
    assert s.coeffs == {0: 1, 3: 2, 6: 4, 9: 8}
    back = s.mul_binomial(2, 3)
    assert back == LaurentSeries.one(9)


def test_first_mismatch_reports_lowest_exponent():
    a = LaurentSeries({0: 1, 2: 5, 4: 1}, 6)
    b = LaurentSeries({0: 1, 2: 4, 4: 2}, 6)
    assert a.first_mismatch(b) == (2, 5, 4)
    assert a.first_mismatch(a) is None


def test_repr_shows_big_o():
    assert repr(LaurentSeries({0: 1, 1: -1}, 4)) == "1 - q + O(q^5)"


@settings(max_examples=60, deadline=None)
@given(laurent(), laurent(), laurent())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    lhs = (a * b) * c
    rhs = a * (b * c)
    n = min(lhs.trunc_order, rhs.trunc_order)
    assert lhs.truncate(n) == rhs.truncate(n)
    lhs = a * (b + c)
    rhs = a * b + a * c
    n = min(lhs.trunc_order, rhs.trunc_order)
    assert lhs.truncate(n) == rhs.truncate(n)


@settings(max_examples=60, deadline=None)
@given(st.integers(-3, 3), st.sampled_from([1, -1]), st.lists(st.integers(-4, 4), max_size=8), st.integers(0, 5))
def test_inverse_of_unit(v, lead, tail, extra):
    s = LaurentSeries.from_list([lead] + tail, v + len(tail) + extra, v)
    t = invert_unit(s)
    prod = s * t
    assert prod.truncate(prod.trunc_order) == LaurentSeries.one(prod.trunc_order)


def test_non_unit_rejected():
    with pytest.raises(NotAUnit):
        invert_unit(LaurentSeries({0: 2}, 5))
    with pytest.raises(NotAUnit):
        invert_unit(LaurentSeries.zero(5))


def test_bivariate_inverse():
    s = BiSeries({(0, 0): 1, (1, 1): -1, (2, 3): 2}, 4, 10)
    prod = mul(s, invert_unit(s))
    assert prod == BiSeries.one(prod.x_trunc, prod.q_trunc)


def test_bivariate_binomial_division_roundtrip():
    s = BiSeries.one(6, 20).div_binomial(1, 1, 2)
    assert s[(3, 6)] == 1 and s[(3, 5)] == 0
    assert s.mul_binomial(1, 1, 2) == BiSeries.one(6, 20)


def test_pochhammer_in_x():
    # 1/(xq; q)_inf counts partitions by number of parts
    s = pochhammer(Monomial(1, 1, 1), 1, INFINITE, 6, 12, invert=True)
    assert s[(3, 7)] == 4  # 5+1+1, 4+2+1, 3+3+1, 3+2+2


def test_divergent_product_rejected():
    with pytest.raises(DivergentProduct):
        pochhammer(Monomial(1, 0, -1), 1, INFINITE, 0, 5)
    with pytest.raises(DivergentProduct):
        pochhammer(Monomial(1, 0, 1), 0, INFINITE, 0, 5)


def test_zero_factor_kills_product():
    assert qpochhammer(0, 1, 3, 5).is_zero()
    with pytest.raises(NotAUnit):
        qpochhammer(0, 1, 3, 5, invert=True)


def test_theta_sum_needs_interior_exponent():
    with pytest.raises(NonTruncating):
        theta_sum(0, 5, 10)
    with pytest.raises(NonTruncating):
        theta_sum(5, 5, 10)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 12).flatmap(lambda M: st.tuples(st.integers(1, M - 1), st.just(M))), st.integers(0, 60))
def test_triple_product_property(am, N):
    a, M = am
    product = qpochhammer(a, M, INFINITE, N) * qpochhammer(M - a, M, INFINITE, N) * qpochhammer(M, M, INFINITE, N)
    assert theta_sum(a, M, N) == product


def test_evaluate_at_one_needs_certificate():
    s = BiSeries({(2, 1): 1}, 3, 10)
    with pytest.raises(UnsafeEvaluation):
        evaluate_x(s, 0)


def test_evaluate_at_one_of_parts_generating_function():
    s = pochhammer(Monomial(1, 1, 1), 1, INFINITE, 15, 15, invert=True)
    p = evaluate_x(s, 0)
    assert p.trunc_order == 15
    assert p == qpochhammer(1, 1, INFINITE, 15, invert=True)


def test_monomial_substitution():
    m = Monomial(-1, 2, 3)
    assert m.substitute(2) == Monomial(-1, 2, 7)
    assert m.substitute(1, collapse=True) == Monomial(-1, 0, 5)
    with pytest.raises(ValueError):
        Monomial(2, 0, 0)
