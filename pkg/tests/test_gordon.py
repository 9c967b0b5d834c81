import pytest

from qgordon.gordon import (
    Family,
    GordonParams,
    Legacy,
    ParamDomain,
    TermKind,
    Variant,
    andrews_Q,
    c_beta_spec,
    expand,
    legacy_rhs,
    product_rhs,
    series_C,
    series_C_exponent,
    series_T,
    term_spec,
    triple_product,
    valid_params,
)
from qgordon.partitions import ConstraintSet, Parity, dp_counts, dp_genfun
from qgordon.series import INFINITE, BiSeries, LaurentSeries, qpochhammer


def test_params_domain():
    GordonParams(2, 3, 1, 3, 2)
    for bad in [(3, 2, 3, 1, 1), (2, 2, 1, 3, 1), (2, 2, 1, 0, 1), (3, 3, 2, 1, 1), (2, 2, 2, 1, 3)]:
        with pytest.raises(ParamDomain):
            GordonParams(*bad)
    relaxed = GordonParams.relax(3, 3, 2, 1, 1)
    assert not relaxed.valid
    with pytest.raises(ParamDomain):
        GordonParams.relax(2, 2, 3, 1, 1)


def test_derived_bounds():
    p = GordonParams(2, 3, 1, 2, 2)
    assert p.pair_bound == 7 and p.initial_bound == 6 and p.overline_bound == 4
    assert p.modulus == 16


def test_grid_size_and_order():
    grid = valid_params(4, 4)
    assert len(grid) == len(set(grid))
    assert grid[0].astuple() == (1, 1, 1, 1, 1)
    assert all(g.valid for g in grid)


def test_residue_wraps_zero_to_d():
    fam = Family(3, 3, 3)
    assert [fam.residue(E) for E in range(0, 7)] == [3, 1, 2, 3, 1, 2, 3]


def test_triple_product_zero_exponent():
    assert triple_product(7, 7, 20).is_zero()


def test_triple_product_methods_agree():
    assert triple_product(3, 8, 60, "theta") == triple_product(3, 8, 60)


def test_rogers_ramanujan_through_general_product():
    # pair bound 2 and initial bound 2: no repeated or consecutive parts
    p = GordonParams(1, 1, 1, 1, 1)
    rhs = product_rhs(p, Variant.EVEN, 40)
    expected = qpochhammer(1, 5, INFINITE, 40, invert=True) * qpochhammer(4, 5, INFINITE, 40, invert=True)
    assert rhs == expected
    assert rhs[6] == 3


@pytest.mark.parametrize("params", [(2, 2, 2, 1, 1), (2, 2, 1, 1, 1), (2, 3, 1, 2, 2), (3, 3, 3, 2, 2), (4, 4, 2, 1, 3)])
def test_product_cases_against_counts(params):
    p = GordonParams(*params)
    for variant, bound, parity in ((Variant.EVEN, p.initial_bound, Parity.EVEN_PARTS), (Variant.ODD_OVERLINE, p.overline_bound, Parity.ODD_PARTS)):
        counts = dp_counts(ConstraintSet(p.pair_bound, bound, p.d, parity), 40)
        assert counts == product_rhs(p, variant, 40)


def test_series_at_x_one_equals_product():
    p = GordonParams(2, 2, 1, 1, 2)
    assert series_C(p, 0, 40, collapse=True) == product_rhs(p, Variant.EVEN, 40)
    assert series_T(p, 0, 40, collapse=True) == product_rhs(p, Variant.ODD_OVERLINE, 40)


def test_bivariate_series_matches_counts():
    p = GordonParams(3, 3, 3, 1, 2)
    assert series_C(p, 20, 20) == dp_genfun(ConstraintSet(p.pair_bound, p.initial_bound, 3, Parity.EVEN_PARTS), 20, 20)
    assert series_T(p, 20, 20) == dp_genfun(ConstraintSet(p.pair_bound, p.overline_bound, 3, Parity.ODD_PARTS), 20, 20)


def test_series_at_zero_initial_bound_vanishes():
    fam = Family(4, 4, 2)
    assert series_C_exponent(fam, 0, 15, 15).is_zero()


def test_bracket_candidates_disagree_only_below_e():
    fam = Family(3, 3, 3)
    a = expand(c_beta_spec(fam, 1, 0, "A"), 20, 60)
    b = expand(c_beta_spec(fam, 1, 0, "B"), 20, 60)
    assert a.first_mismatch(b, 20, 60) == (0, 0, -2, -1)
    assert expand(c_beta_spec(fam, 3, 2, "A"), 12, 30) == expand(c_beta_spec(fam, 3, 2, "B"), 12, 30)
    with pytest.raises(ValueError):
        c_beta_spec(fam, 1, 2, "C")


def test_terms_do_not_depend_on_initial_bound():
    fam = Family(2, 2, 1)
    bare = [term_spec(TermKind.C_ALPHA, fam, 2, E, attached=False) for E in (1, 3, 5)]
    assert bare[0] == bare[1] == bare[2]


def test_negative_index_term_is_empty():
    fam = Family(2, 2, 2)
    assert expand(term_spec(TermKind.T_ALPHA, fam, -1, 2), 5, 5).is_zero()


def test_legacy_domains():
    with pytest.raises(ParamDomain):
        legacy_rhs(Legacy.T2_2, 3, 2, 10)
    with pytest.raises(ParamDomain):
        legacy_rhs(Legacy.T2_3, 3, 3, 10)
    with pytest.raises(ParamDomain):
        legacy_rhs(Legacy.T2_2_OVERLINE, 4, 2, 10)
    with pytest.raises(ParamDomain):
        legacy_rhs(Legacy.T2_1, 2, 3, 10)


def test_gordon_legacy_against_counts():
    assert dp_counts(ConstraintSet(3, 2), 50) == legacy_rhs(Legacy.T2_1, 3, 2, 50)


def test_q_series_matches_counts():
    Q = legacy_rhs(Legacy.Q_SERIES, 3, 2, 20)
    assert Q == dp_genfun(ConstraintSet(3, 2), 20, 20)
    assert andrews_Q(3, 0, 10, 10).is_zero()
    assert andrews_Q(3, 3, 10, 10).at_x_zero() == LaurentSeries.one(10)


def test_substitution_is_symbolic():
    # shifting x before expanding equals shifting the expanded series termwise
    fam = Family(2, 2, 2)
    spec = term_spec(TermKind.T_ALPHA, fam, 1, 2)
    shifted = expand(spec, 10, 30, shift=1)
    plain = expand(spec, 10, 30)
    rows = [plain.row(m).shift(m).truncate(30) if m <= 10 else None for m in range(11)]
    assert shifted == BiSeries.from_rows(rows, 10, 30)
