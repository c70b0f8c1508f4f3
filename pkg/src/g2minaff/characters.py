"""Formal characters of G2-modules and their decomposition into irreducibles.

Two independent routes compute weight multiplicities of ``V(lam)``:

* Freudenthal's recursion (:func:`weight_multiplicity_freudenthal`), used to
  build :func:`irreducible_character`;
* Kostant's alternating sum over the Weyl group with the partition function
  of the six positive roots (:func:`weight_multiplicity_kostant`).

Neither divides by the Weyl denominator.
"""
from __future__ import annotations

from collections.abc import Mapping
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType

from .core import (
    POSITIVE_ROOTS,
    RHO,
    Weight,
    dominant_conjugate,
    pairing,
    weyl_group,
    weyl_orbit,
)

# Coefficients and dimensions are held to signed 128-bit range.
COEFF_LIMIT = 2**127 - 1


class CharacterOverflowError(OverflowError):
    pass


class NonDominantWeightError(ValueError):
    pass


class NotAModuleCharacterError(ValueError):
    pass


def _check_width(value: int) -> int:
    if not -COEFF_LIMIT - 1 <= value <= COEFF_LIMIT:
        raise CharacterOverflowError(f"coefficient {value} exceeds the 128-bit limit")
    return value


def _require_dominant(lam: Weight) -> None:
    if not lam.is_dominant():
        raise NonDominantWeightError(f"{lam} is not dominant")


class FormalCharacter:
    """Finitely supported integer combination of ``e^mu``, ``mu`` in the weight lattice.

    Immutable; zero coefficients are never stored.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Weight, int] | None = None):
        clean = {}
        for w, c in (terms or {}).items():
            if c:
                clean[w] = _check_width(int(c))
        self._terms = MappingProxyType(clean)

    @classmethod
    def monomial(cls, weight: Weight, coeff: int = 1) -> FormalCharacter:
        return cls({weight: coeff})

    @classmethod
    def zero(cls) -> FormalCharacter:
        return cls()

    @classmethod
    def one(cls) -> FormalCharacter:
        return cls({Weight(0, 0): 1})

    def coeff(self, mu: Weight) -> int:
        return self._terms.get(mu, 0)

    __getitem__ = coeff

    def items(self):
        return self._terms.items()

    def support(self) -> frozenset[Weight]:
        return frozenset(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        body = " + ".join(f"{c}*e^({w})" for w, c in self.sorted_items())
        return f"FormalCharacter({body or '0'})"

    def __add__(self, other: FormalCharacter) -> FormalCharacter:
        out = dict(self._terms)
        for w, c in other.items():
            out[w] = out.get(w, 0) + c
        return FormalCharacter(out)

    def __neg__(self) -> FormalCharacter:
        return FormalCharacter({w: -c for w, c in self.items()})

    def __sub__(self, other: FormalCharacter) -> FormalCharacter:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return FormalCharacter({w: other * c for w, c in self.items()})
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        out: dict[Weight, int] = {}
        for w1, c1 in self.items():
            m1, n1 = w1.c1, w1.c2
            for w2, c2 in other.items():
                key = Weight(m1 + w2.c1, n1 + w2.c2)
                out[key] = out.get(key, 0) + c1 * c2
        return FormalCharacter(out)

    __rmul__ = __mul__

    def shift(self, weight: Weight) -> FormalCharacter:
        """Multiply by ``e^weight``."""
        return FormalCharacter({w + weight: c for w, c in self.items()})

    @property
    def dimension(self) -> int:
        return _check_width(sum(self._terms.values()))

    def is_weyl_invariant(self) -> bool:
        group = weyl_group()
        return all(self.coeff(w(mu)) == c for mu, c in self.items() for w in group)

    def dominates(self, other: FormalCharacter) -> bool:
        """True when every coefficient of ``self`` is >= the matching one of ``other``."""
        keys = set(self._terms) | set(other._terms)
        return all(self.coeff(k) >= other.coeff(k) for k in keys)

    def sorted_items(self):
        return sorted(self.items(), key=lambda wc: (wc[0].c1, wc[0].c2), reverse=True)

    def to_json(self) -> list[dict]:
        return [{"weight": w.to_json(), "coeff": c} for w, c in self.sorted_items()]

    @classmethod
    def from_json(cls, records) -> FormalCharacter:
        return cls({Weight.from_json(r["weight"]): int(r["coeff"]) for r in records})


class IrrDecomposition(Mapping):
    """Multiplicities ``[M : V(mu)]`` keyed by dominant weight."""

    def __init__(self, parts: Mapping[Weight, int] | None = None):
        clean = {}
        for mu, mult in (parts or {}).items():
            _require_dominant(mu)
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} for {mu}")
            if mult:
                clean[mu] = int(mult)
        self._parts = MappingProxyType(clean)

    def __getitem__(self, mu):
        return self._parts[mu]

    def __iter__(self):
        return iter(self._parts)

    def __len__(self):
        return len(self._parts)

    def __repr__(self):
        body = ", ".join(f"{mu}: {m}" for mu, m in self.sorted_items())
        return f"IrrDecomposition({{{body}}})"

    def sorted_items(self):
        return sorted(self._parts.items(), key=lambda wm: (wm[0].c1, wm[0].c2), reverse=True)

    def character(self) -> FormalCharacter:
        total = FormalCharacter()
        for mu, mult in self.sorted_items():
            total = total + irreducible_character(mu) * mult
        return total

    @property
    def dimension(self) -> int:
        return _check_width(sum(m * weyl_dimension(mu) for mu, m in self.items()))

    def to_json(self) -> list[dict]:
        return [{"weight": mu.to_json(), "mult": m} for mu, m in self.sorted_items()]

    @classmethod
    def from_json(cls, records) -> IrrDecomposition:
        return cls({Weight.from_json(r["weight"]): int(r["mult"]) for r in records})


def weyl_dimension(lam: Weight) -> int:
    """``prod_{alpha > 0} (lam + rho, alpha) / (rho, alpha)``."""
    _require_dominant(lam)
    shifted = lam + RHO
    dim = Fraction(1)
    for alpha in POSITIVE_ROOTS:
        dim *= Fraction(pairing(shifted, alpha), pairing(RHO, alpha))
    assert dim.denominator == 1
    return _check_width(dim.numerator)


def dominant_weights_below(lam: Weight) -> list[Weight]:
    """Dominant ``nu`` with ``lam - nu`` in Q+, highest first."""
    big_m, big_n = lam.root_coords
    out = []
    for i in range(big_m + 1):
        for j in range(big_n + 1):
            nu = Weight.from_root_coords(big_m - i, big_n - j)
            if nu.is_dominant():
                out.append(nu)
    out.sort(key=lambda nu: (nu.height, nu.root_coords), reverse=True)
    return out


@lru_cache(maxsize=512)
def dominant_multiplicities(lam: Weight) -> Mapping[Weight, int]:
    """Freudenthal multiplicities of ``V(lam)`` at its dominant weights."""
    _require_dominant(lam)
    top = lam + RHO
    top_norm = pairing(top, top)
    top_height = lam.height
    mult: dict[Weight, int] = {lam: 1}
    for nu in dominant_weights_below(lam):
        if nu == lam:
            continue
        total = 0
        nm, nn = nu.root_coords
        for alpha in POSITIVE_ROOTS:
            am, an = alpha.m, alpha.n
            j = 1
            while nm + nn + j * (am + an) <= top_height:
                x = (nm + j * am, nn + j * an)
                m_x = mult.get(dominant_conjugate(Weight.from_root_coords(*x)), 0)
                if m_x:
                    total += pairing(x, alpha) * m_x
                j += 1
        shifted = nu + RHO
        denom = top_norm - pairing(shifted, shifted)
        value, rem = divmod(2 * total, denom)
        assert rem == 0, "Freudenthal recursion produced a non-integer"
        if value:
            mult[nu] = _check_width(value)
    return MappingProxyType(mult)


def weight_multiplicity_freudenthal(lam: Weight, mu: Weight) -> int:
    _require_dominant(lam)
    return dominant_multiplicities(lam).get(dominant_conjugate(mu), 0)


@lru_cache(maxsize=None)
def irreducible_character(lam: Weight) -> FormalCharacter:
    """Character of ``V(lam)`` assembled from Freudenthal's dominant multiplicities."""
    _require_dominant(lam)
    terms = {}
    for nu, m in dominant_multiplicities(lam).items():
        for mu in weyl_orbit(nu):
            terms[mu] = m
    return FormalCharacter(terms)


@lru_cache(maxsize=None)
def _partition(m: int, n: int, start: int = 0) -> int:
    if m < 0 or n < 0:
        return 0
    if start == len(POSITIVE_ROOTS) - 1:
        # last root is 2a1+3a2
        return 1 if m % 2 == 0 and 3 * (m // 2) == n else 0
    alpha = POSITIVE_ROOTS[start]
    total = 0
    t = 0
    while m - t * alpha.m >= 0 and n - t * alpha.n >= 0:
        total += _partition(m - t * alpha.m, n - t * alpha.n, start + 1)
        t += 1
    return total


def kostant_partition(m: int, n: int) -> int:
    """Number of ways to write ``m*alpha1 + n*alpha2`` as a sum of positive roots."""
    return _partition(m, n, 0)


def weight_multiplicity_kostant(lam: Weight, mu: Weight) -> int:
    """``sum_w det(w) P(w(lam + rho) - (mu + rho))``."""
    _require_dominant(lam)
    top = lam + RHO
    sm, sn = (mu + RHO).root_coords
    total = 0
    for w in weyl_group():
        wm, wn = w(top).root_coords
        total += w.det * kostant_partition(wm - sm, wn - sn)
    return total


def alternating_sum_character(lam: Weight) -> FormalCharacter:
    """Character of ``V(lam)`` computed purely from Kostant's formula."""
    _require_dominant(lam)
    terms = {}
    for nu in dominant_weights_below(lam):
        m = weight_multiplicity_kostant(lam, nu)
        if m:
            for mu in weyl_orbit(nu):
                terms[mu] = m
    return FormalCharacter(terms)


def _peel_key(w: Weight):
    return (w.height, w.root_coords)


def decompose_character(chi: FormalCharacter) -> IrrDecomposition:
    """Split a W-invariant character into irreducibles by repeatedly removing the top term."""
    if not chi.is_weyl_invariant():
        raise NotAModuleCharacterError("character is not Weyl-invariant")
    remaining = dict(chi.items())
    parts: dict[Weight, int] = {}
    bound = sum(1 for w in remaining if w.is_dominant()) + 1
    for _ in range(bound):
        dominant = [w for w in remaining if w.is_dominant()]
        if not dominant:
            break
        top = max(dominant, key=_peel_key)
        c = remaining[top]
        if c < 0:
            raise NotAModuleCharacterError(f"negative multiplicity {c} at {top}")
        parts[top] = c
        for w, m in irreducible_character(top).items():
            v = remaining.get(w, 0) - c * m
            if v:
                remaining[w] = v
            else:
                remaining.pop(w, None)
    else:
        raise NotAModuleCharacterError("peeling did not terminate within the support bound")
    if remaining:
        raise NotAModuleCharacterError("non-dominant residue left after peeling")
    return IrrDecomposition(parts)
