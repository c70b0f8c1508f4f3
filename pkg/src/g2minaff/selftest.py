"""Invariant checks run by ``g2minaff selftest``.

Each check returns ``None`` on success or a short failure message.  Bounds
grow linearly with ``scale``.
"""
from __future__ import annotations

from collections.abc import Callable

from .affine import positive_real_roots, rho
from .characters import (
    alternating_sum_character,
    decompose_character,
    dominant_weights_below,
    irreducible_character,
    weight_multiplicity_kostant,
    weyl_dimension,
)
from .core import ROOTS, Weight, pairing, weyl_group
from .limit import convergence_check
from .minaff import (
    HighestWeightInput,
    decompose_graded_limit,
    factorial_matrix_det,
    graded_limit_character,
    in_polytope,
    point_weight,
    polytope_points,
    target_weight,
)


def _pairs(total: int):
    for k in range(total + 1):
        for l in range(total + 1 - k):  # noqa: E741
            yield HighestWeightInput(k, l)


def check_weyl_group(scale: int) -> str | None:
    group = weyl_group()
    if len(group) != 12:
        return f"|W| = {len(group)}"
    roots = set(ROOTS)
    for w in group:
        if {w(a) for a in ROOTS} != roots:
            return "W does not permute the roots"
        for x in ROOTS:
            for y in ROOTS:
                if pairing(w(x), w(y)) != pairing(x, y):
                    return "pairing not W-invariant"
    return None


def check_oracles(scale: int) -> str | None:
    bound = 3 * scale
    for inp in _pairs(bound):
        lam = inp.weight
        chi = irreducible_character(lam)
        if chi != alternating_sum_character(lam):
            return f"Freudenthal and Kostant disagree for {lam}"
        if chi.dimension != weyl_dimension(lam):
            return f"dimension mismatch for {lam}"
        if decompose_character(chi) != {lam: 1}:
            return f"decomposition roundtrip fails for {lam}"
    return None


def check_polytope(scale: int) -> str | None:
    bound = 4 * scale
    for inp in _pairs(bound):
        pts = polytope_points(inp)
        bigger = [HighestWeightInput(inp.k + 1, inp.l), HighestWeightInput(inp.k, inp.l + 1)]
        for a in pts:
            if not target_weight(a, inp).is_dominant():
                return f"non-dominant target for {tuple(a)} in S({inp.k},{inp.l})"
            if any(not in_polytope(a, b) for b in bigger):
                return f"monotonicity fails at {tuple(a)}"
            point_weight(a)
        if decompose_graded_limit(inp).get(inp.weight) != 1:
            return f"top multiplicity != 1 for ({inp.k},{inp.l})"
    return None


def check_graded_limits(scale: int) -> str | None:
    bound = 2 * scale
    for inp in _pairs(bound):
        chi = graded_limit_character(inp)
        if decompose_character(chi) != decompose_graded_limit(inp):
            return f"oracle roundtrip fails for ({inp.k},{inp.l})"
        bound_chi = graded_limit_character((inp.k, 0)) * graded_limit_character((0, inp.l))
        if not bound_chi.dominates(chi):
            return f"tensor bound fails for ({inp.k},{inp.l})"
    return None


def check_rho(scale: int) -> str | None:
    bound = 4 * scale
    special = {(-1, -2, 1), (-1, -3, 1), (-2, -3, 1), (-1, -3, 2), (-2, -3, 2)}
    for inp in _pairs(bound):
        r, d, k = inp.r, int(inp.s == 2), inp.k
        expected = {
            (-1, -2, 1): 3 * r + d,
            (-1, -3, 1): 2 * r + d,
            (-2, -3, 1): k + 2 * r + d,
            (-1, -3, 2): r,
            (-2, -3, 2): r,
        }
        for g in positive_real_roots(4):
            key = tuple(g.to_json())
            if rho(g, inp) != (expected[key] if key in special else 0):
                return f"rho({g}) wrong for ({inp.k},{inp.l})"
    return None


def check_factorial_matrix(scale: int) -> str | None:
    for r in range(1, 5 * scale + 1):
        if factorial_matrix_det(r) == 0:
            return f"singular factorial matrix at r={r}"
    return None


def check_limit(scale: int) -> str | None:
    D = min(2 * scale, 6)
    for J in ({1}, {2}, {1, 2}):
        if convergence_check(J, D, 2 * D + 2) is None:
            return f"no stabilization for J={sorted(J)}, D={D}"
    return None


def check_kostant_dominant(scale: int) -> str | None:
    # Kostant's sum must vanish exactly off the dominant weights below lam.
    lam = Weight(scale, scale)
    below = set(dominant_weights_below(lam))
    for m in range(lam.root_coords[0] + 2):
        for n in range(lam.root_coords[1] + 2):
            mu = Weight.from_root_coords(m, n)
            if mu.is_dominant() and mu not in below and weight_multiplicity_kostant(lam, mu):
                return f"Kostant multiplicity nonzero above {lam} at {mu}"
    return None


CHECKS: dict[str, Callable[[int], str | None]] = {
    "weyl-group": check_weyl_group,
    "char-oracles": check_oracles,
    "polytope": check_polytope,
    "graded-limits": check_graded_limits,
    "rho-table": check_rho,
    "factorial-matrix": check_factorial_matrix,
    "limit-character": check_limit,
    "kostant-support": check_kostant_dominant,
}


def run_all(scale: int = 1):
    """Yield ``(name, message)`` per check; ``message`` is None on success."""
    for name, check in CHECKS.items():
        yield name, check(scale)
