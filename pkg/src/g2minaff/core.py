"""Root datum of G2: weights, roots, the bilinear form and the Weyl group.

Simple roots are ``alpha1`` (long, squared length 6) and ``alpha2`` (short,
squared length 2).  Weights are stored in fundamental-weight coordinates
``(c1, c2)``; root coordinates ``(m, n)`` mean ``m*alpha1 + n*alpha2``.
Since ``omega1 = 2*alpha1 + 3*alpha2`` and ``omega2 = alpha1 + 2*alpha2``
the weight lattice equals the root lattice and both coordinate changes are
integral.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

INT64_MAX = 2**63 - 1

# Gram matrix of (., .) in the (alpha1, alpha2) basis.
GRAM = ((6, -3), (-3, 2))

# Root coordinates of the six positive roots.
_POSITIVE_ROOT_COORDS = ((1, 0), (0, 1), (1, 1), (1, 2), (1, 3), (2, 3))


class InvalidRootError(ValueError):
    pass


def check_int64(*values: int) -> None:
    for v in values:
        if not -INT64_MAX - 1 <= v <= INT64_MAX:
            raise OverflowError(f"value {v} does not fit in a signed 64-bit integer")


def to_root_coords(c1: int, c2: int) -> tuple[int, int]:
    return 2 * c1 + c2, 3 * c1 + 2 * c2


def to_fundamental_coords(m: int, n: int) -> tuple[int, int]:
    return 2 * m - n, -3 * m + 2 * n


@dataclass(frozen=True, order=True)
class Weight:
    """Integral weight ``c1*omega1 + c2*omega2``."""

    c1: int
    c2: int

    def __post_init__(self):
        check_int64(self.c1, self.c2)

    @classmethod
    def from_root_coords(cls, m: int, n: int) -> Weight:
        return cls(*to_fundamental_coords(m, n))

    @property
    def root_coords(self) -> tuple[int, int]:
        return to_root_coords(self.c1, self.c2)

    @property
    def height(self) -> int:
        m, n = self.root_coords
        return m + n

    def is_dominant(self) -> bool:
        return self.c1 >= 0 and self.c2 >= 0

    def __add__(self, other: Weight) -> Weight:
        return Weight(self.c1 + other.c1, self.c2 + other.c2)

    def __sub__(self, other: Weight) -> Weight:
        return Weight(self.c1 - other.c1, self.c2 - other.c2)

    def __neg__(self) -> Weight:
        return Weight(-self.c1, -self.c2)

    def __mul__(self, n: int) -> Weight:
        return Weight(n * self.c1, n * self.c2)

    __rmul__ = __mul__

    def to_json(self) -> list[int]:
        return [self.c1, self.c2]

    @classmethod
    def from_json(cls, pair) -> Weight:
        c1, c2 = pair
        return cls(int(c1), int(c2))

    def __str__(self) -> str:
        return format_weight(self)


def format_weight(w: Weight) -> str:
    """Render as ``0``, ``w1``, ``2w1-w2`` and so on."""
    terms = []
    for coeff, name in ((w.c1, "w1"), (w.c2, "w2")):
        if coeff == 0:
            continue
        sign = "-" if coeff < 0 else "+"
        mag = "" if abs(coeff) == 1 else str(abs(coeff))
        terms.append((sign, mag + name))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += sign + body
    return out


@dataclass(frozen=True, order=True)
class Root:
    """A root ``m*alpha1 + n*alpha2``; construction fails off the root system."""

    m: int
    n: int

    def __post_init__(self):
        if (abs(self.m), abs(self.n)) not in _POSITIVE_ROOT_COORDS or self.m * self.n < 0:
            raise InvalidRootError(f"({self.m}, {self.n}) is not a root of G2")

    @property
    def root_coords(self) -> tuple[int, int]:
        return self.m, self.n

    @property
    def norm(self) -> int:
        return pairing(self, self)

    def is_long(self) -> bool:
        return self.norm == 6

    def is_short(self) -> bool:
        return self.norm == 2

    def is_positive(self) -> bool:
        return self.m >= 0 and self.n >= 0

    def as_weight(self) -> Weight:
        return Weight.from_root_coords(self.m, self.n)

    def __neg__(self) -> Root:
        return Root(-self.m, -self.n)

    def __str__(self) -> str:
        return _format_root(self.m, self.n)


def _format_root(m: int, n: int) -> str:
    terms = []
    for coeff, name in ((m, "a1"), (n, "a2")):
        if coeff:
            mag = "" if abs(coeff) == 1 else str(abs(coeff))
            terms.append(("-" if coeff < 0 else "+") + mag + name)
    s = "".join(terms) or "0"
    return s[1:] if s.startswith("+") else s


ALPHA1 = Root(1, 0)
ALPHA2 = Root(0, 1)
SIMPLE_ROOTS = (ALPHA1, ALPHA2)
POSITIVE_ROOTS = tuple(Root(m, n) for m, n in _POSITIVE_ROOT_COORDS)
ROOTS = POSITIVE_ROOTS + tuple(-a for a in POSITIVE_ROOTS)
OMEGA1 = Weight(1, 0)
OMEGA2 = Weight(0, 1)
RHO = Weight(1, 1)


def _coords(x) -> tuple[int, int]:
    if isinstance(x, (Weight, Root)):
        return x.root_coords
    m, n = x
    return m, n


def pairing(x, y) -> int:
    """Symmetric form ``(x, y)``.

    Accepts :class:`Weight`, :class:`Root` or a raw ``(m, n)`` pair in root
    coordinates.
    """
    xm, xn = _coords(x)
    ym, yn = _coords(y)
    return GRAM[0][0] * xm * ym + GRAM[0][1] * (xm * yn + xn * ym) + GRAM[1][1] * xn * yn


def coroot_pairing(alpha, lam) -> int:
    """``<alpha^vee, lam> = 2 (alpha, lam) / (alpha, alpha)`` for a root ``alpha``."""
    if not isinstance(alpha, Root):
        alpha = Root(*alpha)
    num = 2 * pairing(alpha, lam)
    q, rem = divmod(num, alpha.norm)
    assert rem == 0, "weight lattice pairs integrally with coroots"
    return q


def simple_reflection(i: int, lam: Weight) -> Weight:
    if i not in (1, 2):
        raise ValueError(f"simple reflection index must be 1 or 2, got {i}")
    alpha = SIMPLE_ROOTS[i - 1]
    return lam - alpha.as_weight() * coroot_pairing(alpha, lam)


def _mat_mul(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)) for i in range(2)
    )


# s_i on root coordinates (column vectors): x -> x - <alpha_i^vee, x> alpha_i.
# <alpha1^vee, (m, n)> = 2m - n,  <alpha2^vee, (m, n)> = -3m + 2n.
_S_MATRICES = {
    1: ((-1, 1), (0, 1)),
    2: ((1, 0), (3, -1)),
}
_IDENTITY = ((1, 0), (0, 1))


@dataclass(frozen=True, eq=False)
class WeylElement:
    """Element of W(G2).

    ``word`` is one (not necessarily reduced) expression ``s_{w[0]} s_{w[1]} ...``;
    equality and hashing go through ``matrix``, the action on root
    coordinates.
    """

    word: tuple[int, ...] = ()
    matrix: tuple[tuple[int, int], tuple[int, int]] = field(default=_IDENTITY, repr=False)

    @classmethod
    def from_word(cls, word) -> WeylElement:
        word = tuple(word)
        mat = _IDENTITY
        for i in word:
            mat = _mat_mul(mat, _S_MATRICES[i])
        return cls(word, mat)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __mul__(self, other: WeylElement) -> WeylElement:
        return WeylElement(self.word + other.word, _mat_mul(self.matrix, other.matrix))

    @property
    def det(self) -> int:
        (a, b), (c, d) = self.matrix
        return a * d - b * c

    @property
    def length_parity(self) -> int:
        return len(self.word) % 2

    def apply_coords(self, m: int, n: int) -> tuple[int, int]:
        (a, b), (c, d) = self.matrix
        return a * m + b * n, c * m + d * n

    def __call__(self, x):
        if isinstance(x, Root):
            return Root(*self.apply_coords(x.m, x.n))
        if isinstance(x, Weight):
            return Weight.from_root_coords(*self.apply_coords(*x.root_coords))
        return self.apply_coords(*x)


IDENTITY = WeylElement()


@lru_cache(maxsize=None)
def weyl_group() -> frozenset[WeylElement]:
    """All 12 elements, generated by closure from the simple reflections.

    The word stored on each element is a shortest one (breadth-first search).
    """
    gens = [WeylElement.from_word((i,)) for i in (1, 2)]
    seen = {IDENTITY: IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for w in frontier:
            for s in gens:
                ws = w * s
                if ws not in seen:
                    seen[ws] = ws
                    nxt.append(ws)
        frontier = nxt
    return frozenset(seen)


@lru_cache(maxsize=None)
def longest_element() -> WeylElement:
    return max(weyl_group(), key=lambda w: len(w.word))


def dominant_representative(lam: Weight) -> tuple[Weight, WeylElement]:
    """Return ``(mu, w)`` with ``mu`` dominant and ``w(lam) == mu``."""
    w = IDENTITY
    mu = lam
    while not mu.is_dominant():
        i = 1 if mu.c1 < 0 else 2
        mu = simple_reflection(i, mu)
        w = WeylElement.from_word((i,)) * w
    return mu, w


def dominant_conjugate(lam: Weight) -> Weight:
    c1, c2 = lam.c1, lam.c2
    # Same reflection loop as dominant_representative, on bare ints for speed.
    while c1 < 0 or c2 < 0:
        if c1 < 0:
            c1, c2 = -c1, c2 + 3 * c1
        else:
            c1, c2 = c1 + c2, -c2
    return Weight(c1, c2)


def weyl_orbit(lam: Weight) -> frozenset[Weight]:
    return frozenset(w(lam) for w in weyl_group())
