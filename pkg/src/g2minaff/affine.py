"""Affine G2 data: real roots ``alpha + p*delta``, their coroots, and rho.

The coroot of ``gamma = alpha + p*delta`` is ``alpha^vee + (6p/(alpha, alpha)) K``.
Weights are taken modulo ``C*delta``, so an affine weight is just a finite
weight plus a level (the ``Lambda0`` coefficient).
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import POSITIVE_ROOTS, ROOTS, Root, Weight, coroot_pairing
from .minaff import HighestWeightInput, _as_input


class NonPositiveRootError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class AffineRealRoot:
    p: int
    finite: Root

    def __init__(self, finite, p: int = 0):
        if not isinstance(finite, Root):
            finite = Root(*finite)
        object.__setattr__(self, "finite", finite)
        object.__setattr__(self, "p", p)

    def is_positive(self) -> bool:
        return self.p > 0 or (self.p == 0 and self.finite.is_positive())

    @property
    def k_coefficient(self) -> int:
        """Coefficient of K in the coroot: ``p`` for long, ``3p`` for short roots."""
        return 6 * self.p // self.finite.norm

    def to_json(self) -> list[int]:
        return [self.finite.m, self.finite.n, self.p]

    def __str__(self):
        if self.p == 0:
            return str(self.finite)
        d = "d" if self.p == 1 else f"{self.p}d"
        return f"{self.finite}+{d}"


@dataclass(frozen=True)
class AffineWeightAtom:
    finite: Weight
    level: int

    def __mul__(self, n: int) -> AffineWeightAtom:
        return AffineWeightAtom(self.finite * n, self.level * n)

    __rmul__ = __mul__


def affine_coroot_pairing(gamma: AffineRealRoot, atom: AffineWeightAtom) -> int:
    return coroot_pairing(gamma.finite, atom.finite) + gamma.k_coefficient * atom.level


def rho_atoms(inp) -> tuple[AffineWeightAtom, ...]:
    """``k(omega1 + L0)``, ``r(3 omega2 + L0)``, ``s omega2 + L0``."""
    inp = _as_input(inp)
    return (
        AffineWeightAtom(Weight(1, 0), 1) * inp.k,
        AffineWeightAtom(Weight(0, 3), 1) * inp.r,
        AffineWeightAtom(Weight(0, inp.s), 1),
    )


def rho(gamma: AffineRealRoot, inp) -> int:
    if not gamma.is_positive():
        raise NonPositiveRootError(f"{gamma} is not a positive real root")
    return sum(max(0, -affine_coroot_pairing(gamma, atom)) for atom in rho_atoms(inp))


def positive_real_roots(p_max: int) -> list[AffineRealRoot]:
    """Positive real roots with ``p <= p_max``, sorted by ``(p, m, n)``."""
    roots = [AffineRealRoot(a, 0) for a in POSITIVE_ROOTS]
    roots += [AffineRealRoot(a, p) for p in range(1, p_max + 1) for a in ROOTS]
    return sorted(roots, key=lambda g: (g.p, g.finite.m, g.finite.n))


def rho_table(inp, p_max: int = 4) -> dict[AffineRealRoot, int]:
    if p_max < 2:
        raise ValueError("p_max must be at least 2")
    inp = _as_input(inp)
    return {g: rho(g, inp) for g in positive_real_roots(p_max)}


def rho_table_json(table: dict[AffineRealRoot, int]) -> list[dict]:
    rows = sorted(table.items(), key=lambda gv: (gv[0].p, gv[0].finite.m, gv[0].finite.n))
    return [{"root": g.to_json(), "rho": v} for g, v in rows]


def demazure_sequence(inp) -> tuple[tuple[Weight, int], ...]:
    """Extremal weights ``(finite part, Lambda0 multiplier)`` defining T(lam).

    ``k(-omega1 + L0)``, ``r(-3 omega2 + L0)`` and, when ``s != 0``,
    ``-s omega2 + L0``; factors with zero multiplier are dropped.
    """
    inp = _as_input(inp)
    seq = [(Weight(-inp.k, 0), inp.k), (Weight(0, -3 * inp.r), inp.r)]
    if inp.s:
        seq.append((Weight(0, -inp.s), 1))
    return tuple((w, n) for w, n in seq if n)


__all__ = [
    "AffineRealRoot",
    "AffineWeightAtom",
    "HighestWeightInput",
    "NonPositiveRootError",
    "affine_coroot_pairing",
    "demazure_sequence",
    "positive_real_roots",
    "rho",
    "rho_atoms",
    "rho_table",
    "rho_table_json",
]
