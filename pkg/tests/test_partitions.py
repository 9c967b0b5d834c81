import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qgordon.series import INFINITE, qpochhammer
from qgordon.partitions import (
    ConstraintSet,
    FrequencyProfile,
    Parity,
    brute_count,
    brute_table,
    dp_counts,
    dp_genfun,
    iter_partitions,
    residue_genfun,
)


def test_partition_counts():
    assert [sum(1 for _ in iter_partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert brute_count(5, None, ConstraintSet(99, 99)) == 7


def test_rogers_ramanujan_count():
    # no repeated or consecutive parts: 6, 5+1, 4+2
    c = ConstraintSet(2, 2)
    assert brute_count(6, None, c) == 3
    assert dp_counts(c, 6)[6] == 3


def test_profile_helpers():
    p = FrequencyProfile.from_parts([5, 3, 2, 2, 1])
    assert p.weight == 13 and p.parts == 5
    assert p.f(2) == 2 and p.f(4) == 0 and p.f(0) == 0
    assert p.as_parts() == [5, 3, 2, 2, 1]


def test_admits_each_condition():
    p = FrequencyProfile.from_parts([2, 2, 1])
    assert ConstraintSet(4, 2, 2, Parity.EVEN_PARTS).admits(p)
    assert not ConstraintSet(3, 2).admits(p)  # f_1 + f_2 = 3
    assert not ConstraintSet(4, 1).admits(p)  # f_1 = 1
    assert not ConstraintSet(4, 2, 2, Parity.ODD_PARTS).admits(p)  # f_1 odd


def test_divisor_one_ignores_parity():
    assert ConstraintSet(3, 2, 1, Parity.EVEN_PARTS) == ConstraintSet(3, 2)


def test_invalid_constraint_set():
    with pytest.raises(ValueError):
        ConstraintSet(0, 1)


def test_negative_arguments_count_nothing():
    c = ConstraintSet(3, 2)
    assert brute_count(-1, None, c) == 0
    assert brute_count(3, -1, c) == 0


def test_zero_initial_bound_is_empty():
    c = ConstraintSet(3, 0)
    assert brute_table(c, 8) == {}
    assert dp_genfun(c, 8).is_zero()


def test_genfun_by_number_of_parts():
    c = ConstraintSet(3, 2)
    g = dp_genfun(c, 12, 12)
    for (m, n), v in brute_table(c, 12).items():
        assert g[(m, n)] == v


@settings(max_examples=40, deadline=None)
@given(
    st.integers(1, 6),
    st.integers(0, 6),
    st.integers(1, 3),
    st.sampled_from(list(Parity)),
)
def test_dp_matches_brute_force(K, A, d, parity):
    c = ConstraintSet(K, A, d, parity)
    N = 14
    g = dp_genfun(c, N, N)
    table = brute_table(c, N)
    for m in range(N + 1):
        for n in range(N + 1):
            assert g[(m, n)] == table.get((m, n), 0)


def test_object_dtype_beyond_int64_range():
    # unrestricted partitions up to 420: p(420) no longer fits in int64
    N = 420
    s = dp_counts(ConstraintSet(N + 1, N + 1), N)
    euler = qpochhammer(1, 1, INFINITE, N, invert=True)
    assert s == euler
    assert s[N] > 2**63


def test_residue_genfun():
    assert residue_genfun([1, 4], 5, 6)[6] == 3
    with pytest.raises(ValueError):
        residue_genfun([1], 0, 6)
