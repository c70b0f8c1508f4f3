import pytest
from hypothesis import given, strategies as st

from g2minaff.affine import (
    AffineRealRoot,
    AffineWeightAtom,
    NonPositiveRootError,
    affine_coroot_pairing,
    demazure_sequence,
    positive_real_roots,
    rho,
    rho_atoms,
    rho_table,
    rho_table_json,
)
from g2minaff.core import ROOTS, InvalidRootError, Root, Weight
from g2minaff.minaff import HighestWeightInput


def gamma(m, n, p):
    return AffineRealRoot(Root(m, n), p)


def test_coroot_pairing_examples():
    assert affine_coroot_pairing(gamma(1, 0, 0), AffineWeightAtom(Weight(1, 0), 0)) == 1
    assert affine_coroot_pairing(gamma(-1, -2, 1), AffineWeightAtom(Weight(0, 1), 1)) == 1
    for k in range(5):
        atom = AffineWeightAtom(Weight(1, 0), 1) * k
        assert affine_coroot_pairing(gamma(-2, -3, 1), atom) == -k


def test_k_coefficient():
    for a in ROOTS:
        for p in range(-3, 4):
            g = AffineRealRoot(a, p)
            assert g.k_coefficient == (p if a.is_long() else 3 * p)


def test_invalid_root():
    with pytest.raises(InvalidRootError):
        AffineRealRoot((2, 1), 1)


@given(st.sampled_from(ROOTS), st.integers(0, 4), st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5), st.integers(-6, 6))
def test_pairing_linear_in_atom(a, p, c1, c2, level, n):
    g = AffineRealRoot(a, p)
    atom = AffineWeightAtom(Weight(c1, c2), level)
    assert affine_coroot_pairing(g, atom * n) == n * affine_coroot_pairing(g, atom)


def test_positive_real_roots():
    roots = positive_real_roots(4)
    assert len(roots) == 6 + 4 * 12
    assert all(g.is_positive() for g in roots)
    assert not gamma(-1, 0, 0).is_positive()
    assert gamma(-1, 0, 1).is_positive()


def test_rho_rejects_negative_roots():
    with pytest.raises(NonPositiveRootError):
        rho(gamma(-1, 0, 0), (1, 1))


def test_rho_atoms():
    atoms = rho_atoms(HighestWeightInput(2, 5))
    assert atoms == (
        AffineWeightAtom(Weight(2, 0), 2),
        AffineWeightAtom(Weight(0, 3), 1),
        AffineWeightAtom(Weight(0, 2), 1),
    )


@pytest.mark.parametrize("k, l", [(k, l) for k in range(4) for l in range(8)])
def test_rho_closed_forms(k, l):
    inp = HighestWeightInput(k, l)
    r, d = inp.r, int(inp.s == 2)
    assert rho(gamma(-1, -2, 1), inp) == 3 * r + d
    assert rho(gamma(-1, -3, 1), inp) == 2 * r + d
    assert rho(gamma(-2, -3, 1), inp) == k + 2 * r + d
    assert rho(gamma(-1, -3, 2), inp) == r
    assert rho(gamma(-2, -3, 2), inp) == r
    assert rho(gamma(0, 1, 0), inp) == 0


def test_rho_table_examples():
    assert set(rho_table((0, 0)).values()) == {0}
    nonzero = sorted(v for v in rho_table((0, 3)).values() if v)
    assert nonzero == [1, 1, 2, 2, 3]
    assert rho_table((1, 2))[gamma(-1, -2, 1)] == 1
    with pytest.raises(ValueError):
        rho_table((1, 1), p_max=1)


def test_rho_table_json_order():
    rows = rho_table_json(rho_table((1, 3), 2))
    keys = [(row["root"][2], row["root"][0], row["root"][1]) for row in rows]
    assert keys == sorted(keys)
    assert len(rows) == 6 + 2 * 12


def test_demazure_sequence():
    assert demazure_sequence((2, 0)) == ((Weight(-2, 0), 2),)
    assert demazure_sequence((0, 3)) == ((Weight(0, -3), 1),)
    assert demazure_sequence((1, 4)) == ((Weight(-1, 0), 1), (Weight(0, -3), 1), (Weight(0, -1), 1))
    assert demazure_sequence((0, 0)) == ()
    assert demazure_sequence((3, 8)) == ((Weight(-3, 0), 3), (Weight(0, -6), 2), (Weight(0, -2), 1))
