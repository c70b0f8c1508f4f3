"""Limits of normalized characters ``e^{-lam_n} ch L(lam_n)``.

Normalized characters live in ``Z[[e^{-alpha1}, e^{-alpha2}]]``; a term
``e^{-(m alpha1 + n alpha2)}`` is indexed by ``(m, n)``.  Everything here is
truncated to the box ``0 <= m, n <= D``, which is closed under
multiplication.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .core import POSITIVE_ROOTS, Root, Weight, dominant_conjugate
from .characters import dominant_multiplicities
from .minaff import HighestWeightInput, _as_input, decompose_graded_limit


class EmptySubsetError(ValueError):
    pass


def _normalize_subset(J) -> frozenset[int]:
    J = frozenset(int(j) for j in J)
    if not J:
        raise EmptySubsetError("J must be a nonempty subset of {1, 2}")
    if not J <= {1, 2}:
        raise ValueError(f"J must be a subset of {{1, 2}}, got {sorted(J)}")
    return J


def exponent_table(J) -> dict[Root, int]:
    """``max_{j in J} <omega_j^vee, alpha>`` for each positive root; ``<omega_1^vee, alpha>`` is the alpha1-coefficient."""
    J = _normalize_subset(J)
    return {a: max(a.root_coords[j - 1] for j in J) for a in POSITIVE_ROOTS}


@dataclass(frozen=True)
class TruncatedSeries:
    D: int
    coeffs: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.D < 1:
            raise ValueError(f"D must be positive, got {self.D}")
        clean = {
            (m, n): c for (m, n), c in self.coeffs.items() if c and 0 <= m <= self.D and 0 <= n <= self.D
        }
        object.__setattr__(self, "coeffs", clean)

    def coeff(self, m: int, n: int) -> int:
        return self.coeffs.get((m, n), 0)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.D == other.D and self.coeffs == other.coeffs

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        if self.D != other.D:
            raise ValueError("truncation degrees differ")
        D = self.D
        out: dict[tuple[int, int], int] = {}
        for (m1, n1), c1 in self.coeffs.items():
            for (m2, n2), c2 in other.coeffs.items():
                m, n = m1 + m2, n1 + n2
                if m <= D and n <= D:
                    out[m, n] = out.get((m, n), 0) + c1 * c2
        return TruncatedSeries(D, out)

    def dominates(self, other: TruncatedSeries) -> bool:
        keys = set(self.coeffs) | set(other.coeffs)
        return all(self.coeff(*k) >= other.coeff(*k) for k in keys)

    def to_json(self) -> dict:
        return {
            "D": self.D,
            "coeffs": [{"m": m, "n": n, "c": c} for (m, n), c in sorted(self.coeffs.items())],
        }


def _inverse_power_series(root: Root, exponent: int, D: int) -> TruncatedSeries:
    """``(1 - e^{-root})^{-exponent} = sum_j C(j + e - 1, e - 1) e^{-j root}``."""
    if exponent == 0:
        return TruncatedSeries(D, {(0, 0): 1})
    out = {}
    j = 0
    while j * root.m <= D and j * root.n <= D:
        out[j * root.m, j * root.n] = comb(j + exponent - 1, exponent - 1)
        j += 1
    return TruncatedSeries(D, out)


def product_series(J, D: int, order=None) -> TruncatedSeries:
    """Box-truncated ``prod_{alpha > 0} (1 - e^{-alpha})^{-e_alpha}``.

    ``order`` optionally permutes the factors (a sequence of positive roots).
    """
    table = exponent_table(J)
    result = TruncatedSeries(D, {(0, 0): 1})
    for alpha in order if order is not None else POSITIVE_ROOTS:
        result = result * _inverse_power_series(alpha, table[alpha], D)
    return result


def normalized_truncated_char(inp, D: int) -> TruncatedSeries:
    """Box-truncated ``e^{-lam} ch L(lam)``.

    Only summands ``V(mu)`` with ``lam - mu`` inside the box can contribute,
    and for those only the dominant multiplicity table of ``V(mu)`` is needed.
    """
    inp = _as_input(inp)
    lam = inp.weight
    lm, ln = lam.root_coords
    out: dict[tuple[int, int], int] = {}
    for mu, mult in decompose_graded_limit(inp).items():
        mm, mn = mu.root_coords
        om, on = lm - mm, ln - mn
        if om > D or on > D:
            continue
        table = dominant_multiplicities(mu)
        for i in range(D - om + 1):
            for j in range(D - on + 1):
                nu = dominant_conjugate(Weight.from_root_coords(mm - i, mn - j))
                c = table.get(nu, 0)
                if c:
                    key = (om + i, on + j)
                    out[key] = out.get(key, 0) + mult * c
    return TruncatedSeries(D, out)


def diagonal_input(J, n: int) -> HighestWeightInput:
    """``lam_n = n * sum_{j in J} omega_j``."""
    J = _normalize_subset(J)
    return HighestWeightInput(n if 1 in J else 0, n if 2 in J else 0)


def convergence_check(J, D: int, n_max: int) -> int | None:
    """Smallest ``n`` with both ``n`` and ``n + 1`` (each ``<= n_max``) matching the product.

    Returns ``None`` when no such pair exists.
    """
    target = product_series(J, D)
    previous_ok = False
    for n in range(1, n_max + 1):
        ok = normalized_truncated_char(diagonal_input(J, n), D) == target
        if ok and previous_ok:
            return n - 1
        previous_ok = ok
    return None
