import itertools
from math import comb

import pytest

from g2minaff.core import POSITIVE_ROOTS, Root, Weight
from g2minaff.limit import (
    EmptySubsetError,
    TruncatedSeries,
    convergence_check,
    diagonal_input,
    exponent_table,
    normalized_truncated_char,
    product_series,
)
from g2minaff.minaff import graded_limit_character

ORDER = [Root(1, 0), Root(0, 1), Root(1, 1), Root(1, 2), Root(1, 3), Root(2, 3)]


def row(J):
    table = exponent_table(J)
    return tuple(table[a] for a in ORDER)


def test_exponent_table_rows():
    assert row({1}) == (1, 0, 1, 1, 1, 2)
    assert row({2}) == (0, 1, 1, 2, 3, 3)
    assert row({1, 2}) == (1, 1, 1, 2, 3, 3)
    assert all(v >= 1 for v in row({1, 2}))
    assert row({1, 2}) == tuple(max(x, y) for x, y in zip(row({1}), row({2})))
    with pytest.raises(EmptySubsetError):
        exponent_table(set())
    with pytest.raises(ValueError):
        exponent_table({3})


def brute_product(J, D):
    """Coefficient at (m, n): sum over j_alpha with sum j_alpha alpha = (m, n) of prod C(j + e - 1, e - 1)."""
    table = exponent_table(J)
    out = {}
    ranges = [range(D + 1) if table[a] else range(1) for a in ORDER]
    for js in itertools.product(*ranges):
        m = sum(j * a.m for j, a in zip(js, ORDER))
        n = sum(j * a.n for j, a in zip(js, ORDER))
        if m > D or n > D:
            continue
        c = 1
        for j, a in zip(js, ORDER):
            e = table[a]
            c *= comb(j + e - 1, e - 1) if e else 1
        out[m, n] = out.get((m, n), 0) + c
    return TruncatedSeries(D, out)


@pytest.mark.parametrize("J", [{1}, {2}, {1, 2}])
@pytest.mark.parametrize("D", [1, 3, 5])
def test_product_series_matches_brute_force(J, D):
    assert product_series(J, D) == brute_product(J, D)


def test_product_series_examples():
    for J in ({1}, {2}, {1, 2}):
        assert product_series(J, 4).coeff(0, 0) == 1
    s = product_series({1}, 3)
    assert s.coeff(1, 0) == 1 and s.coeff(0, 1) == 0
    assert product_series({1, 2}, 2).coeff(1, 1) == 2


@pytest.mark.parametrize("perm", list(itertools.permutations(POSITIVE_ROOTS))[::97])
def test_product_factors_commute(perm):
    assert product_series({1, 2}, 5, order=perm) == product_series({1, 2}, 5)


def full_normalized(k, l, D):
    """Independent path: full character, shifted by -lam, reindexed and cut to the box."""
    chi = graded_limit_character((k, l))
    lm, ln = Weight(k, l).root_coords
    out = {}
    for w, c in chi.items():
        m, n = w.root_coords
        out[lm - m, ln - n] = c
    return TruncatedSeries(D, out)


@pytest.mark.parametrize("k, l", [(0, 0), (1, 0), (0, 1), (1, 1), (2, 3), (3, 2), (4, 4)])
@pytest.mark.parametrize("D", [1, 3, 6])
def test_normalized_char_matches_full_character(k, l, D):
    assert normalized_truncated_char((k, l), D) == full_normalized(k, l, D)


def test_normalized_char_examples():
    assert normalized_truncated_char((1, 0), 1).coeff(1, 0) == 1
    assert normalized_truncated_char((0, 0), 4) == TruncatedSeries(4, {(0, 0): 1})
    for inp in [(2, 5), (3, 0)]:
        assert normalized_truncated_char(inp, 3).coeff(0, 0) == 1


@pytest.mark.parametrize("J", [{1}, {2}, {1, 2}])
@pytest.mark.parametrize("D", [1, 2, 3, 4])
def test_monotone_and_bounded(J, D):
    target = product_series(J, D)
    prev = TruncatedSeries(D, {(0, 0): 1})
    for n in range(1, 9):
        cur = normalized_truncated_char(diagonal_input(J, n), D)
        assert cur.dominates(prev)
        assert target.dominates(cur)
        prev = cur


def test_convergence_examples():
    assert convergence_check({1, 2}, 1, 12) <= 2
    # regression pin: stabilization index observed for this truncation
    assert convergence_check({2}, 2, 8) == 2
    assert convergence_check({1, 2}, 6, 12) is not None
    assert convergence_check({1, 2}, 6, 5) is None


def test_series_json():
    s = TruncatedSeries(2, {(1, 0): 2, (0, 0): 1, (0, 1): 0, (3, 0): 5})
    assert s.to_json() == {"D": 2, "coeffs": [{"m": 0, "n": 0, "c": 1}, {"m": 1, "n": 0, "c": 2}]}
    with pytest.raises(ValueError):
        TruncatedSeries(0)
