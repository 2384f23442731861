"""Variable layout and helpers for multivariate polynomials over Q.

Polynomials are sympy sparse ``PolyElement`` objects over ``QQ`` in the ring
Q[t1..tm, k1..kn] with graded-lex order.  Generator order is t1 > ... > tm >
k1 > ... > kn, so the leading term of ``k1 - k2`` is ``k1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from sympy import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, ring

from ..errors import BadIndex, InputError

MultiPoly = PolyElement


@lru_cache(maxsize=None)
def _make_ring(m: int, n: int):
    names = [f"t{i}" for i in range(1, m + 1)] + [f"k{j}" for j in range(1, n + 1)]
    if not names:
        names = ["_"]
    return ring(",".join(names), QQ, grlex)[0]


@dataclass(frozen=True)
class VarSpec:
    """``m`` continuous variables t and ``n`` discrete variables k."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0 or self.m + self.n < 1:
            raise InputError(f"invalid variable counts m={self.m}, n={self.n}")

    @property
    def ring(self):
        return _make_ring(self.m, self.n)

    @property
    def nvars(self) -> int:
        return self.m + self.n

    @property
    def names(self) -> list[str]:
        return [str(g) for g in self.ring.gens]

    def t(self, i: int) -> MultiPoly:
        return self.ring.gens[self.t_pos(i)]

    def k(self, j: int) -> MultiPoly:
        return self.ring.gens[self.k_pos(j)]

    def t_pos(self, i: int) -> int:
        if not 1 <= i <= self.m:
            raise BadIndex(f"t-index {i} outside 1..{self.m}")
        return i - 1

    def k_pos(self, j: int) -> int:
        if not 1 <= j <= self.n:
            raise BadIndex(f"k-index {j} outside 1..{self.n}")
        return self.m + j - 1

    def const(self, c) -> MultiPoly:
        return self.ring(qq(c))

    def poly(self, terms: dict) -> MultiPoly:
        """Build a polynomial from ``{exponent tuple: rational}``."""
        R = self.ring
        return R.from_dict({tuple(e): qq(c) for e, c in terms.items() if c != 0})


def qq(c):
    """Coerce an int, Fraction or ground element to the QQ domain type."""
    if isinstance(c, Fraction):
        return QQ(c.numerator, c.denominator)
    if isinstance(c, str):
        f = Fraction(c)
        return QQ(f.numerator, f.denominator)
    return QQ.convert(c)


def to_fraction(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


def t_support(p: MultiPoly, vs: VarSpec) -> bool:
    """True if p involves some t variable."""
    m = vs.m
    return any(any(e[:m]) for e in p.keys())


def k_support(p: MultiPoly, vs: VarSpec) -> bool:
    m = vs.m
    return any(any(e[m:]) for e in p.keys())


def variables_of(p: MultiPoly) -> set[int]:
    out = set()
    for e in p.keys():
        out.update(i for i, x in enumerate(e) if x)
    return out


def tdeg(p: MultiPoly) -> int:
    """Total degree; -1 for the zero polynomial."""
    return max((sum(e) for e in p.keys()), default=-1)


def int_primitive(p: MultiPoly):
    """Split p = c * P with P in Z[x] primitive and positive leading coefficient."""
    if not p:
        return QQ(0), p
    nums = 0
    dens = 1
    for c in p.values():
        nums = gcd(nums, int(c.numerator))
        d = int(c.denominator)
        dens = dens * d // gcd(dens, d)
    c = QQ(nums, dens)
    if p.LC < 0:
        c = -c
    return c, p.quo_ground(c)


def shift_poly(p: MultiPoly, pos: int, s: int) -> MultiPoly:
    """Substitute x_pos -> x_pos + s."""
    if s == 0 or not p:
        return p
    R = p.ring
    x = R.gens[pos]
    return p.compose(x, x + s)


def evaluate(p: MultiPoly, point) -> object:
    """Evaluate at a full point (sequence of QQ values, t first then k)."""
    total = QQ(0)
    for e, c in p.items():
        v = c
        for x, k in zip(point, e):
            if k:
                v *= x**k
        total += v
    return total


def partial_eval(p: MultiPoly, values: dict[int, object]) -> MultiPoly:
    """Substitute ground values for the generator positions in ``values``."""
    R = p.ring
    out = {}
    for e, c in p.items():
        v = c
        e2 = list(e)
        for pos, x in values.items():
            if e[pos]:
                v *= x ** e[pos]
                e2[pos] = 0
        if v:
            key = tuple(e2)
            out[key] = out.get(key, QQ(0)) + v
    return R.from_dict({e: c for e, c in out.items() if c})


def _fmt_coeff(c) -> str:
    f = to_fraction(c)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def poly_str(p: MultiPoly, names=None) -> str:
    """Render with the parser's syntax, e.g. ``t1*k1^2-2/3*k2+1``."""
    if not p:
        return "0"
    if names is None:
        names = [str(g) for g in p.ring.gens]
    parts = []
    for e, c in p.terms():
        mono = "*".join(
            names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(e) if k
        )
        neg = c < 0
        a = -c if neg else c
        if mono:
            body = mono if a == 1 else f"{_fmt_coeff(a)}*{mono}"
        else:
            body = _fmt_coeff(a)
        if parts:
            parts.append(("-" if neg else "+") + body)
        else:
            parts.append(("-" if neg else "") + body)
    return "".join(parts)
