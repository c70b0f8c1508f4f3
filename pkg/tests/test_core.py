import pytest
from hypothesis import given, strategies as st

from g2minaff.core import (
    ALPHA1,
    ALPHA2,
    IDENTITY,
    OMEGA1,
    OMEGA2,
    POSITIVE_ROOTS,
    RHO,
    ROOTS,
    InvalidRootError,
    Root,
    Weight,
    WeylElement,
    coroot_pairing,
    dominant_representative,
    longest_element,
    pairing,
    simple_reflection,
    weyl_group,
)

ints = st.integers(min_value=-50, max_value=50)
weights = st.builds(Weight, ints, ints)


def test_gram_entries():
    assert pairing(ALPHA1, ALPHA1) == 6
    assert pairing(ALPHA1, ALPHA2) == -3
    assert pairing(ALPHA2, ALPHA2) == 2
    # 6 - 12 + 8
    assert pairing(Root(1, 2), Root(1, 2)) == 2


def test_fundamental_weights_in_root_coords():
    assert OMEGA1.root_coords == (2, 3)
    assert OMEGA2.root_coords == (1, 2)


@pytest.mark.parametrize(
    "alpha, lam, expected",
    [(ALPHA1, OMEGA1, 1), (ALPHA2, OMEGA1, 0), (ALPHA1, OMEGA2, 0), (ALPHA2, OMEGA2, 1), (Root(1, 2), OMEGA2, 2)],
)
def test_coroot_pairing(alpha, lam, expected):
    assert coroot_pairing(alpha, lam) == expected


def test_coroot_pairing_rejects_non_roots():
    with pytest.raises(InvalidRootError):
        coroot_pairing((1, 4), OMEGA1)
    with pytest.raises(InvalidRootError):
        Root(1, -1)


def test_long_and_short_roots():
    long = {a for a in POSITIVE_ROOTS if a.is_long()}
    short = {a for a in POSITIVE_ROOTS if a.is_short()}
    assert long == {Root(1, 0), Root(1, 3), Root(2, 3)}
    assert short == {Root(0, 1), Root(1, 1), Root(1, 2)}
    assert len(ROOTS) == 12


def test_rho_pairs_to_one():
    assert coroot_pairing(ALPHA1, RHO) == coroot_pairing(ALPHA2, RHO) == 1


def test_simple_reflections():
    assert simple_reflection(1, OMEGA1) == OMEGA1 - ALPHA1.as_weight()
    assert simple_reflection(2, OMEGA1) == OMEGA1


def test_orbit_of_omega1_by_alternating_reflections():
    orbit = {OMEGA1}
    frontier = [OMEGA1]
    while frontier:
        lam = frontier.pop()
        for i in (1, 2):
            mu = simple_reflection(i, lam)
            if mu not in orbit:
                orbit.add(mu)
                frontier.append(mu)
    assert len(orbit) == 6
    assert orbit == {a.as_weight() for a in ROOTS if a.is_long()}


def test_weyl_group_size_and_closure():
    group = weyl_group()
    assert len(group) == 12
    assert IDENTITY in group
    assert all(x * y in group for x in group for y in group)
    assert IDENTITY.det == 1


def test_weyl_group_sign_character():
    for w in weyl_group():
        assert w.det == (-1) ** w.length_parity
        # a non-reduced word for the same element has the same parity
        longer = WeylElement.from_word(w.word + (1, 1))
        assert longer == w and longer.det == w.det


def test_longest_element_negates_positive_roots():
    w0 = longest_element()
    assert len(w0.word) == 6
    assert {w0(a) for a in POSITIVE_ROOTS} == {-a for a in POSITIVE_ROOTS}


@pytest.mark.parametrize(
    "lam, expected_mu, expected_w",
    [
        (OMEGA1, OMEGA1, IDENTITY),
        (simple_reflection(1, OMEGA1), OMEGA1, WeylElement.from_word((1,))),
        (Weight(-1, -1), Weight(1, 1), longest_element()),
    ],
)
def test_dominant_representative_examples(lam, expected_mu, expected_w):
    mu, w = dominant_representative(lam)
    assert mu == expected_mu
    assert w == expected_w


def test_weight_json_roundtrip():
    assert Weight(3, -2).to_json() == [3, -2]
    assert Weight.from_json([3, -2]) == Weight(3, -2)


def test_weight_overflow_is_loud():
    with pytest.raises(OverflowError):
        Weight(2**63, 0)


@given(ints, ints)
def test_coordinate_roundtrip(c1, c2):
    lam = Weight(c1, c2)
    assert Weight.from_root_coords(*lam.root_coords) == lam


@given(weights, weights)
def test_pairing_is_w_invariant_and_symmetric(x, y):
    assert pairing(x, y) == pairing(y, x)
    for w in weyl_group():
        assert pairing(w(x), w(y)) == pairing(x, y)


@given(weights)
def test_reflections_are_involutions(lam):
    for i in (1, 2):
        assert simple_reflection(i, simple_reflection(i, lam)) == lam


@given(weights)
def test_dominant_representative_property(lam):
    mu, w = dominant_representative(lam)
    assert mu.is_dominant()
    assert w(lam) == mu


def test_roots_closed_under_w():
    for w in weyl_group():
        assert {w(a) for a in ROOTS} == set(ROOTS)
