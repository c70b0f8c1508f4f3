"""Graded limits of minimal affinizations of type G2.

For ``lam = k*omega1 + l*omega2`` the graded limit decomposes over ``g`` as a
sum of ``V(lam - wt(a))`` over the lattice points ``a`` of a five-dimensional
polytope ``S(k, l)``.  This module enumerates that polytope and exposes the
surrounding bookkeeping: the two l-highest weight monomials, the defining
relations of the cyclic module as plain data, the weight and t-degree of the
PBW monomial labelled by ``a``, and the factorial matrix whose invertibility
yields the relation ``(f_{a1+2a2} t)^{3r+1} v = 0``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import NamedTuple

from .characters import FormalCharacter, IrrDecomposition, irreducible_character
from .core import ALPHA1, ALPHA2, Root, Weight, to_fundamental_coords


class NotInPolytopeError(ValueError):
    pass


@dataclass(frozen=True)
class HighestWeightInput:
    """``lam = k*omega1 + l*omega2`` with ``l = 3r + s``, ``s`` in {0, 1, 2}."""

    k: int
    l: int  # noqa: E741

    def __post_init__(self):
        if self.k < 0 or self.l < 0:
            raise ValueError(f"k and l must be nonnegative, got ({self.k}, {self.l})")

    @property
    def r(self) -> int:
        return self.l // 3

    @property
    def s(self) -> int:
        return self.l % 3

    @property
    def weight(self) -> Weight:
        return Weight(self.k, self.l)


def _as_input(x) -> HighestWeightInput:
    if isinstance(x, HighestWeightInput):
        return x
    return HighestWeightInput(*x)


class PolyhedralPoint(NamedTuple):
    a1: int
    a2: int
    a3: int
    a4: int
    a5: int


def in_polytope(a, inp) -> bool:
    inp = _as_input(inp)
    a1, a2, a3, a4, a5 = a
    k, l = inp.k, inp.l  # noqa: E741
    return (
        min(a) >= 0
        and a1 <= k
        and a1 - a3 + a5 <= k
        and 2 * a2 + 3 * a3 + 3 * a4 <= l
        and 2 * a2 + 3 * a4 + 3 * a5 <= l
    )


def polytope_points(inp) -> frozenset[PolyhedralPoint]:
    """Lattice points of ``S(k, l)``.

    Nested loops over the box ``a1 <= k``, ``a2 <= l/2``, ``a3, a4 <= l/3``,
    with ``a5`` bounded by the second and fourth inequalities.
    """
    inp = _as_input(inp)
    k, l = inp.k, inp.l  # noqa: E741
    points = set()
    for a1 in range(k + 1):
        for a2 in range(l // 2 + 1):
            rest = l - 2 * a2
            for a3 in range(rest // 3 + 1):
                for a4 in range((rest - 3 * a3) // 3 + 1):
                    a5_max = min(k - a1 + a3, (rest - 3 * a4) // 3)
                    for a5 in range(a5_max + 1):
                        points.add(PolyhedralPoint(a1, a2, a3, a4, a5))
    return frozenset(points)


def target_weight(a, inp) -> Weight:
    """Highest weight ``(k - a1 + a3 + a4 - a5) omega1 + (l - a2 - 3a3 - 3a4) omega2``."""
    inp = _as_input(inp)
    if not in_polytope(a, inp):
        raise NotInPolytopeError(f"{tuple(a)} is not in S({inp.k}, {inp.l})")
    a1, a2, a3, a4, a5 = a
    return Weight(inp.k - a1 + a3 + a4 - a5, inp.l - a2 - 3 * a3 - 3 * a4)


def decompose_graded_limit(inp) -> IrrDecomposition:
    inp = _as_input(inp)
    counts: dict[Weight, int] = {}
    for a in polytope_points(inp):
        mu = target_weight(a, inp)
        counts[mu] = counts.get(mu, 0) + 1
    return IrrDecomposition(counts)


def graded_limit_character(inp) -> FormalCharacter:
    return decompose_graded_limit(inp).character()


def graded_limit_dimension(inp) -> int:
    return decompose_graded_limit(inp).dimension


def kr_decomposition(node: int, n: int) -> IrrDecomposition:
    """Kirillov-Reshetikhin module ``KR(n * omega_node)``: the case with one of k, l zero."""
    if node == 1:
        return decompose_graded_limit(HighestWeightInput(n, 0))
    if node == 2:
        return decompose_graded_limit(HighestWeightInput(0, n))
    raise ValueError(f"node must be 1 or 2, got {node}")


@dataclass(frozen=True)
class DominantMonomial:
    """Product of ``Y_{node, a q^qexp}`` over a single fixed spectral parameter ``a``."""

    factors: tuple[tuple[int, int], ...]

    def count(self, node: int) -> int:
        return sum(1 for i, _ in self.factors if i == node)

    def to_json(self) -> list[dict]:
        return [{"node": i, "qexp": e} for i, e in self.factors]

    def __str__(self):
        if not self.factors:
            return "1"
        return "·".join(f"Y[{i},q^{e}]" for i, e in self.factors)


def highest_l_weight_monomials(inp, variant: str = "first") -> DominantMonomial:
    """The two monomials whose simple modules are the minimal affinizations of ``V(lam)``.

    ``first``:  prod_{i<k} Y_{1,aq^{6i}} * prod_{i<l} Y_{2,aq^{6k+2i+1}}
    ``second``: prod_{i<l} Y_{2,aq^{2i}} * prod_{i<k} Y_{1,aq^{2l+6i+5}}
    """
    inp = _as_input(inp)
    k, l = inp.k, inp.l  # noqa: E741
    if variant == "first":
        factors = [(1, 6 * i) for i in range(k)] + [(2, 6 * k + 2 * i + 1) for i in range(l)]
    elif variant == "second":
        factors = [(2, 2 * i) for i in range(l)] + [(1, 2 * l + 6 * i + 5) for i in range(k)]
    else:
        raise ValueError(f"variant must be 'first' or 'second', got {variant!r}")
    return DominantMonomial(tuple(factors))


N_PLUS_ANNIHILATION = "n+[t]-annihilation"
CARTAN_EIGENVALUE = "h⊗t^k eigenvalue"
F_POWER = "f_i power"
CURRENT_ANNIHILATION = "f_α⊗t annihilation"


@dataclass(frozen=True)
class RelationDescriptor:
    kind: str
    exponent: int = 1
    index: int | None = None
    root: Root | None = None
    weight: Weight | None = None

    def to_json(self) -> dict:
        out = {"kind": self.kind, "exponent": self.exponent}
        if self.index is not None:
            out["index"] = self.index
        if self.root is not None:
            out["root"] = [self.root.m, self.root.n]
        if self.weight is not None:
            out["weight"] = self.weight.to_json()
        return out

    def __str__(self):
        if self.kind == N_PLUS_ANNIHILATION:
            return "n+[t] v = 0"
        if self.kind == CARTAN_EIGENVALUE:
            return f"(h⊗t^k) v = δ_k0 <h, {self.weight}> v"
        if self.kind == F_POWER:
            return f"f_{self.index}^{self.exponent} v = 0"
        return f"(f_{self.root}⊗t) v = 0"


def defining_relations(inp) -> list[RelationDescriptor]:
    """Relations of the cyclic g[t]-module generated by a highest weight vector."""
    inp = _as_input(inp)
    lam = inp.weight
    return [
        RelationDescriptor(N_PLUS_ANNIHILATION),
        RelationDescriptor(CARTAN_EIGENVALUE, weight=lam),
        RelationDescriptor(F_POWER, exponent=inp.k + 1, index=1),
        RelationDescriptor(F_POWER, exponent=inp.l + 1, index=2),
        RelationDescriptor(CURRENT_ANNIHILATION, root=ALPHA1),
        RelationDescriptor(CURRENT_ANNIHILATION, root=ALPHA2),
        RelationDescriptor(CURRENT_ANNIHILATION, root=Root(1, 1)),
    ]


def point_weight(a) -> Weight:
    """Weight ``wt(a)`` of the PBW monomial ``f_a``, an element of Q+.

    Computed in root and fundamental coordinates independently; the two
    must agree.
    """
    a1, a2, a3, a4, a5 = a
    m = 2 * a1 + a2 + a3 + a4 + 2 * a5
    n = 3 * a1 + 2 * a2 + 3 * a3 + 3 * a4 + 3 * a5
    fundamental = Weight(a1 - a3 - a4 + a5, a2 + 3 * a3 + 3 * a4)
    if to_fundamental_coords(m, n) != (fundamental.c1, fundamental.c2):
        raise AssertionError(f"wt{tuple(a)}: root and fundamental formulas disagree")
    return fundamental


def point_t_degree(a) -> int:
    """Total t-degree of ``f_a``; bookkeeping only."""
    a1, a2, a3, a4, a5 = a
    return a1 + a2 + a3 + 2 * a4 + 2 * a5


def factorial_matrix(r: int) -> list[list[Fraction]]:
    """``A[i][j] = 1/(3r+1-3i-j)!`` (zero for negative argument), ``0 <= i, j <= r``."""
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    n = 3 * r + 1
    return [
        [Fraction(1, factorial(n - 3 * i - j)) if n - 3 * i - j >= 0 else Fraction(0) for j in range(r + 1)]
        for i in range(r + 1)
    ]


def bareiss_det(mat: list[list[int]]) -> int:
    """Determinant of an integer matrix by fraction-free (Bareiss) elimination."""
    a = [row[:] for row in mat]
    size = len(a)
    sign = 1
    prev = 1
    for p in range(size - 1):
        if a[p][p] == 0:
            swap = next((i for i in range(p + 1, size) if a[i][p] != 0), None)
            if swap is None:
                return 0
            a[p], a[swap] = a[swap], a[p]
            sign = -sign
        for i in range(p + 1, size):
            for j in range(p + 1, size):
                a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) // prev
        prev = a[p][p]
    return sign * a[-1][-1]


def factorial_matrix_det(r: int) -> Fraction:
    """Exact determinant of :func:`factorial_matrix`.

    Rows are cleared of denominators by ``(3r+1)!`` before Bareiss
    elimination, and the scale is divided back out at the end.
    """
    scale = factorial(3 * r + 1)
    mat = factorial_matrix(r)
    ints = [[int(x * scale) for x in row] for row in mat]
    return Fraction(bareiss_det(ints), scale ** (r + 1))
