import pytest

from qgordon.gordon import GordonParams, Legacy, ParamDomain, Variant
from qgordon.report import FAIL, PASS
from qgordon.verify import (
    TERM_IDENTITIES,
    bracket_outcomes,
    check_bracket,
    check_count_recurrences,
    check_counts_vs_series,
    check_functional_eqs,
    check_jtp,
    check_legacy,
    check_oracle,
    check_pentagonal,
    check_q_recurrence,
    check_theorem,
    constraint_set,
    negative_control,
    selected_brackets,
    term_identity_sides,
)


def test_constraint_set_per_variant():
    p = GordonParams(2, 2, 1, 1, 1)
    even = constraint_set(p, Variant.EVEN)
    odd = constraint_set(p, Variant.ODD_OVERLINE)
    assert (even.pair_bound, even.initial_bound) == (5, 3)
    assert (odd.pair_bound, odd.initial_bound) == (5, 2)


@pytest.mark.parametrize("params", [(1, 2, 1, 2, 1), (2, 2, 1, 1, 1)])
def test_counts_vs_series(params):
    r = check_counts_vs_series(GordonParams(*params), Variant.EVEN, 30, 30)
    assert r.status == PASS and r.first_mismatch is None
    assert r.order == (30, 30)


def test_counts_vs_series_relaxed_e_fails():
    p = GordonParams.relax(3, 3, 2, 1, 1)
    r = check_counts_vs_series(p, Variant.EVEN, 20, 60)
    assert r.status == FAIL and r.expected_status == FAIL and r.as_expected
    assert r.first_mismatch.q_exp <= 60


def test_rogers_ramanujan_theorem():
    r = check_theorem(GordonParams(1, 1, 1, 1, 1), Variant.EVEN, 100)
    assert r.status == PASS


@pytest.mark.parametrize(
    "params, variant",
    [((1, 2, 1, 2, 1), Variant.EVEN), ((2, 3, 2, 3, 2), Variant.EVEN), ((2, 3, 2, 2, 1), Variant.ODD_OVERLINE)],
)
def test_theorem_instances(params, variant):
    p = GordonParams(*params)
    assert check_theorem(p, variant, 60).status == PASS
    assert check_theorem(p, variant, 60, method="theta").status == PASS


def test_oracle():
    r = check_oracle(GordonParams(3, 3, 3, 2, 1), Variant.ODD_OVERLINE, 20)
    assert r.status == PASS


def test_count_recurrences():
    assert check_count_recurrences(GordonParams(1, 2, 1, 1, 1), 20).status == PASS
    assert check_count_recurrences(GordonParams(2, 2, 1, 2, 2), 16).status == PASS


def test_count_recurrences_rejects_large_depth():
    with pytest.raises(ValueError):
        check_count_recurrences(GordonParams(1, 1, 1, 1, 1), 26)


def test_functional_equations():
    r = check_functional_eqs(GordonParams(2, 2, 1, 1, 1), 25, 25, 5)
    assert r.status == PASS


def test_term_identity_at_zero_is_monomial_level():
    p = GordonParams(2, 2, 2, 1, 2)
    for which in TERM_IDENTITIES:
        lhs, rhs = term_identity_sides(p, which, 0, 10, 20)
        assert lhs.first_mismatch(rhs, 10, 20) is None


def test_other_bracket_reading_breaks_the_identities():
    p = GordonParams(3, 3, 3, 1, 1)
    outcomes = bracket_outcomes(p, 15, 15, 2)
    assert selected_brackets(outcomes) == ("B",)
    assert outcomes["A"].mismatch is not None
    r = check_bracket(p, 15, 15, 2)
    assert r.status == PASS and r.params["variant"] == "B"


def test_bracket_indistinguishable_without_lower_classes():
    # with e = 1 no class f < e exists, so both readings coincide
    r = check_bracket(GordonParams(2, 2, 1, 1, 1), 15, 15, 2)
    assert r.params["variant"] == "A=B"


@pytest.mark.parametrize("theorem, k, a", [(Legacy.T2_1, 3, 2), (Legacy.T2_2, 3, 3), (Legacy.T2_3, 3, 2), (Legacy.T2_2_OVERLINE, 3, 2)])
def test_legacy(theorem, k, a):
    r = check_legacy(theorem, k, a, 60)
    assert r.status == PASS


def test_legacy_domain_violation():
    with pytest.raises(ParamDomain):
        check_legacy(Legacy.T2_2, 3, 2, 20)


def test_q_recurrence():
    assert check_q_recurrence(3, 2, 25, 25).status == PASS


@pytest.mark.parametrize("a, modulus, N", [(2, 5, 80), (1, 2, 40), (3, 8, 80)])
def test_jtp(a, modulus, N):
    assert check_jtp(a, modulus, N).status == PASS


def test_pentagonal():
    assert check_pentagonal(100).status == PASS


@pytest.mark.parametrize("d, e, where", [(3, 1, 21), (3, 2, 23), (4, 3, 39)])
def test_negative_controls_fail(d, e, where):
    r = negative_control(d, d, e, 1, 1, 60)
    assert r.status == FAIL and r.as_expected
    assert r.first_mismatch.q_exp == where


def test_negative_control_valid_contrast():
    r = negative_control(3, 3, 3, 1, 1, 60)
    assert r.status == PASS and r.expected_status == PASS


def test_reports_are_deterministic():
    a = check_theorem(GordonParams(2, 2, 1, 2, 2), Variant.EVEN, 40)
    b = check_theorem(GordonParams(2, 2, 1, 2, 2), Variant.EVEN, 40)
    assert a.to_json(timing=False) == b.to_json(timing=False)
