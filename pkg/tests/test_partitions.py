from collections import Counter

import pytest
from hypothesis import given

from conftest import all_partitions, moduli, partitions
from sconj.oracle import brute_c_stat, partitions_of
from sconj.partitions import (
    DomainError,
    Partition,
    arm,
    bf_stat,
    blow_up,
    c_stat,
    column_positions,
    conjugate,
    delta,
    hook,
    is_core,
    leg,
    parse_partition,
    r_stat,
    reduce,
    remainder_sequence,
    row_positions,
    s_cells,
    weak_descents,
    wmaj,
)


def test_partition_validation():
    assert Partition([3, 1]) == (3, 1)
    assert Partition().size == 0 and Partition().length == 0
    with pytest.raises(DomainError):
        Partition([1, 2])
    with pytest.raises(DomainError):
        Partition([2, 0])
    assert parse_partition("") == ()
    assert parse_partition("19,16,14") == (19, 16, 14)
    with pytest.raises(DomainError):
        parse_partition("3,x")


@pytest.mark.parametrize("p,z,a,l,h", [
    ((6, 4, 4, 1), (1, 2), 4, 2, 7),
    ((1,), (1, 1), 0, 0, 1),
    ((6, 4, 4, 1), (3, 3), 1, 0, 2),
    ((6, 4, 4, 1), (1, 1), 5, 3, 9),
    ((3, 2, 1), (1, 1), 2, 2, 5),
])
def test_arm_leg_hook(p, z, a, l, h):
    assert arm(p, z) == a
    assert leg(p, z) == l
    assert hook(p, z) == h


def test_cell_outside_diagram():
    for f in (arm, leg, hook):
        with pytest.raises(DomainError):
            f((6, 4, 4, 1), (2, 5))
        with pytest.raises(DomainError):
            f((), (1, 1))


@pytest.mark.parametrize("p,expected", [
    ((6, 4, 4, 1), (4, 3, 3, 3, 1, 1)),
    ((), ()),
    ((3, 1), (2, 1, 1)),
])
def test_conjugate(p, expected):
    assert conjugate(p) == expected


def test_s_cells():
    assert s_cells((6, 4, 4, 1), 2) == [(1, 5), (3, 3)]
    assert s_cells((), 3) == []
    assert s_cells((7,), 3) == [(1, 2), (1, 5)]


@pytest.mark.parametrize("p,s,r", [
    ((6, 4, 4, 1), 2, 3),
    ((3, 2, 1), 2, 1),
    ((20, 20, 18, 16, 12, 8, 3), 4, 5),
])
def test_r_stat(p, s, r):
    assert r_stat(p, s) == r


@pytest.mark.parametrize("p,s,c", [
    ((6, 4, 4, 1), 2, 2),
    ((3, 2, 1), 2, 0),
    ((19, 16, 14, 12, 7, 5, 4, 3), 3, 3),
    ((), 4, 0),
])
def test_c_stat(p, s, c):
    assert c_stat(p, s) == c


def test_remainder_and_positions(fig5, fig7):
    assert remainder_sequence((12, 9, 5, 4, 4, 3, 2), 4) == (1, 1, 3, 2)
    assert remainder_sequence((5, 3, 1), 1) == ()
    assert remainder_sequence(fig5, 4) == (1, 2, 3)
    assert row_positions(fig5, 4) == (1, 3, 6)
    assert row_positions((6, 3), 3) == ()
    assert row_positions(fig7, 3) == (1, 2, 3, 5, 6, 7)
    assert column_positions(fig5, 4) == (5, 4, 2)
    assert column_positions((6, 3), 3) == ()
    assert column_positions((4, 2, 2, 1), 3) == (2, 1, 1, 1)


def test_delta_examples():
    p = (9, 7, 5, 3)
    assert delta(p, 3) == (9, 7, 3, 3)
    assert c_stat(delta(p, 3), 3) == c_stat(p, 3) + 1
    p = (9, 8, 4, 3)
    assert delta(p, 3) == (9, 8, 3, 3)
    assert c_stat(delta(p, 3), 3) == c_stat(p, 3)
    assert delta((7,), 3) == (6,)
    assert c_stat((7,), 3) == c_stat((6,), 3) == 2
    with pytest.raises(DomainError):
        delta((6, 3), 3)


def test_reduce_and_blow_up(fig5, fig7):
    assert reduce(fig5, 4) == (4, 4, 3, 3, 2, 1)
    assert reduce((2, 1), 3) == ()
    assert reduce(fig7, 3) == (6, 5, 4, 4, 2, 1, 1, 1)
    assert blow_up((2, 1, 1), 2) == (4, 2, 2)
    assert blow_up((), 5) == ()
    assert reduce(blow_up((5, 3, 1), 7), 7) == (5, 3, 1)


def test_weak_descents_and_wmaj():
    assert weak_descents((2, 1, 1, 2, 1)) == [1, 2, 4]
    assert weak_descents((1, 2, 3)) == []
    assert weak_descents((1, 1, 2, 1, 2, 1)) == [1, 3, 5]
    assert wmaj((2, 1, 1, 2, 1)) == 7
    assert wmaj(()) == 0
    assert wmaj((1, 1, 2, 1, 2, 1)) == 9


def test_bf_stat_examples():
    assert bf_stat((6, 4, 4, 1), 2, 0) == 2
    assert bf_stat((), 3, 4) == 0
    # checked cell by cell: no cell of (2,1) has leg == arm + 1
    assert bf_stat((2, 1), 1, 1) == 0
    assert bf_stat((1, 1, 1), 1, 1) == 1


def test_is_core_examples():
    assert is_core((3, 2, 1), 2)
    assert is_core((), 5)
    assert not is_core((2,), 2)
    cores = [p for p in partitions_of(6) if is_core(p, 2)]
    assert cores == [(3, 2, 1)]


@given(partitions)
def test_conjugate_involutive(p):
    q = conjugate(p)
    assert conjugate(q) == p
    assert q.size == sum(p)
    assert len(q) == (p[0] if p else 0)


@given(partitions, moduli)
def test_c_stat_matches_definition(p, s):
    assert c_stat(p, s) == len(s_cells(p, s)) == brute_c_stat(p, s)


@given(partitions, moduli)
def test_blow_up_reduce(p, s):
    assert reduce(blow_up(p, s), s) == p
    assert (blow_up(reduce(p, s), s) == p) == (remainder_sequence(p, s) == ())


def test_s_equal_one_counts_rows_and_columns():
    for p in all_partitions(18):
        assert c_stat(p, 1) == (p[0] if p else 0)
        assert r_stat(p, 1) == len(p)


def _delete_keeps_c(p, s):
    rv = remainder_sequence(p, s)
    g = row_positions(p, s)
    m = len(rv)
    if m == 1:
        return g[0] == 1
    return g[-2] == g[-1] - 1 and rv[-2] >= rv[-1]


def test_delete_dichotomy_small():
    for s in range(2, 5):
        for p in all_partitions(16):
            if not remainder_sequence(p, s):
                continue
            d = delta(p, s)
            step = brute_c_stat(d, s) - brute_c_stat(p, s)
            assert step == (0 if _delete_keeps_c(p, s) else 1), (p, s)
            assert sum(p) - d.size == remainder_sequence(p, s)[-1]
            last = p[row_positions(p, s)[-1] - 1]
            assert r_stat(d, s) == r_stat(p, s) + (last > s)


def test_bf_equidistribution_small():
    # only alpha + beta matters for the distribution
    for n in range(9):
        parts = list(partitions_of(n))
        for total in (2, 3):
            ref = Counter(c_stat(p, total) for p in parts)
            for alpha in range(1, total + 1):
                beta = total - alpha
                assert Counter(bf_stat(p, alpha, beta) for p in parts) == ref


def test_marginal_equidistribution_small():
    for s in range(1, 5):
        for n in range(16):
            parts = list(partitions_of(n))
            assert Counter(c_stat(p, s) for p in parts) == Counter(r_stat(p, s) for p in parts)
