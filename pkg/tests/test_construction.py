import pytest

from qgordon.construction import (
    Which,
    adjugate_matrix,
    check_d1_reduction,
    check_initial_conditions,
    check_iterated_forms,
    check_matrix_adjugate,
    check_simplified_recurrences,
    defined_spec,
    iterated_spec,
    relation_sides,
    solved_sides,
    system_matrix,
)
from qgordon.gordon import GordonParams, expand
from qgordon.report import FAIL, PASS


def test_matrix_shape():
    m = system_matrix(3, 2, Which.ALPHA)
    assert m.size == 3
    assert adjugate_matrix(3, 2, Which.BETA).size == 3


@pytest.mark.parametrize("n", [0, 1, 3])
def test_one_by_one_system(n):
    for which in Which:
        assert check_matrix_adjugate(1, 1, n, which, 10, 30).status == PASS


def test_adjugate_alpha_three_by_three():
    r = check_matrix_adjugate(3, 1, 2, Which.ALPHA, 10, 40)
    assert r.status == PASS
    assert r.params["variant"] == "alpha:n=2"


def test_adjugate_beta_four_by_four():
    assert check_matrix_adjugate(4, 2, 1, Which.BETA, 20, 40).status == PASS


def test_positive_corner_breaks_the_inverse():
    r = check_matrix_adjugate(3, 1, 2, Which.ALPHA, 10, 40, corner=1)
    assert r.status == FAIL and r.expected_status == FAIL


def test_adjugate_rejects_bad_arguments():
    with pytest.raises(ValueError):
        check_matrix_adjugate(2, 3, 1, Which.ALPHA, 5, 5)


def test_simplified_relation_instance():
    p = GordonParams(2, 2, 1, 1, 1)
    lhs, rhs = relation_sides(p, "c_alpha", 1, 1)
    assert expand(lhs, 20, 25).first_mismatch(expand(rhs, 20, 25), 20, 25) is None


def test_simplified_recurrences():
    r = check_simplified_recurrences(GordonParams(2, 2, 1, 1, 1), 3, 20, 25)
    assert r.status == PASS


def test_solved_forms_with_class_zero():
    p = GordonParams(3, 3, 3, 1, 1)
    for which in ("c_alpha", "c_beta"):
        for f in range(3):
            lhs, rhs = solved_sides(p, which, 1, f)
            assert expand(lhs, 12, 30).first_mismatch(expand(rhs, 12, 30), 12, 30) is None


def test_iterated_form_base_case():
    p = GordonParams(2, 2, 2, 1, 1)
    for which in ("t_alpha", "t_beta"):
        a = expand(iterated_spec(p, which, 0), 10, 20)
        b = expand(defined_spec(p, which, 0), 10, 20)
        assert a.first_mismatch(b, 10, 20) is None


def test_iterated_forms():
    r = check_iterated_forms(GordonParams(2, 2, 2, 1, 1), 2, 20, 30)
    assert r.status == PASS


def test_initial_conditions_valid():
    r = check_initial_conditions(GordonParams(2, 2, 1, 1, 1), 1, 20, 30)
    assert r.status == PASS


def test_initial_conditions_relaxed_fail():
    r = check_initial_conditions(GordonParams.relax(3, 3, 2, 1, 1), 1, 20, 30)
    assert r.status == FAIL and r.as_expected


def test_d1_reduction():
    assert check_d1_reduction(3, 2, 3, 20, 30).status == PASS
    with pytest.raises(ValueError):
        check_d1_reduction(2, 3, 1, 5, 5)
