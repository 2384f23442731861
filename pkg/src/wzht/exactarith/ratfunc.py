"""Reduced rational functions over Q in the variables of a VarSpec."""

from __future__ import annotations

from fractions import Fraction

from sympy import QQ

from ..errors import ZeroDenominator, BadIndex
from .ring import (
    MultiPoly,
    VarSpec,
    int_primitive,
    k_support,
    poly_str,
    qq,
    shift_poly,
    t_support,
    to_fraction,
    evaluate,
)


def _normalize(num: MultiPoly, den: MultiPoly):
    if not den:
        raise ZeroDenominator("denominator is zero")
    R = num.ring
    if not num:
        return R.zero, R.one
    if den.is_ground:
        return num.quo_ground(den.LC), R.one
    if not num.is_ground:
        g = num.gcd(den)
        if not g.is_ground:
            num = num.exquo(g)
            den = den.exquo(g)
    c, den = int_primitive(den)
    if c != 1:
        num = num.quo_ground(c)
    return num, den


class RatFunc:
    """num/den with gcd(num, den) = 1 and den integer-primitive with LC > 0.

    Equality is structural equality of this normal form.
    """

    __slots__ = ("vs", "num", "den", "_hash")

    def __init__(self, vs: VarSpec, num, den=None):
        R = vs.ring
        num = _coerce(R, num)
        den = R.one if den is None else _coerce(R, den)
        self.vs = vs
        self.num, self.den = _normalize(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, vs, num, den):
        obj = cls.__new__(cls)
        obj.vs = vs
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def const(cls, vs: VarSpec, c) -> "RatFunc":
        return cls._raw(vs, vs.ring(qq(c)), vs.ring.one)

    @classmethod
    def poly(cls, vs: VarSpec, p: MultiPoly) -> "RatFunc":
        return cls._raw(vs, p, vs.ring.one)

    # -- predicates ---------------------------------------------------------
    def __bool__(self):
        return bool(self.num)

    @property
    def is_zero(self) -> bool:
        return not self.num

    @property
    def is_const(self) -> bool:
        return self.num.is_ground and self.den.is_ground

    @property
    def is_poly(self) -> bool:
        return self.den.is_ground

    def const_value(self) -> Fraction:
        if not self.is_const:
            raise ValueError(f"{self} is not constant")
        return to_fraction(self.num.LC if self.num else QQ(0))

    def depends_on_t(self) -> bool:
        return t_support(self.num, self.vs) or t_support(self.den, self.vs)

    def depends_on_k(self) -> bool:
        return k_support(self.num, self.vs) or k_support(self.den, self.vs)

    def free_of(self, pos: int) -> bool:
        return self.num.degree(pos) <= 0 and self.den.degree(pos) <= 0

    # -- arithmetic ---------------------------------------------------------
    def _wrap(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(self.vs, other)
        return RatFunc(self.vs, other)

    def __add__(self, other):
        other = self._wrap(other)
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            if self.den.is_ground:
                return RatFunc._raw(self.vs, self.num + other.num, self.den)
            return RatFunc(self.vs, self.num + other.num, self.den)
        return RatFunc(
            self.vs, self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(self.vs, -self.num, self.den)

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) + (-self)

    def __mul__(self, other):
        other = self._wrap(other)
        if not self.num or not other.num:
            return RatFunc._raw(self.vs, self.vs.ring.zero, self.vs.ring.one)
        if self.den.is_ground and other.den.is_ground:
            return RatFunc._raw(self.vs, self.num * other.num, self.den)
        if other.is_const:
            return RatFunc._raw(self.vs, self.num * other.num, self.den)
        if self.is_const:
            return RatFunc._raw(self.vs, self.num * other.num, other.den)
        return RatFunc(self.vs, self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.vs, self.den, self.num)

    def __truediv__(self, other):
        return self * self._wrap(other).inverse()

    def __rtruediv__(self, other):
        return self._wrap(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        if e == 0:
            return RatFunc.const(self.vs, 1)
        return RatFunc._raw(self.vs, self.num**e, self.den**e)

    # -- equality -----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc.const(self.vs, other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.vs == other.vs and self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vs, frozenset(self.num.items()), frozenset(self.den.items())))
        return self._hash

    # -- calculus -----------------------------------------------------------
    def derive(self, i: int) -> "RatFunc":
        """Partial derivative with respect to t_i (1-based)."""
        return derive(self, i)

    def shift(self, j: int, s: int = 1) -> "RatFunc":
        return shift(self, j, s)

    def diff_pos(self, pos: int) -> "RatFunc":
        num, den = self.num, self.den
        if den.is_ground:
            return RatFunc._raw(self.vs, num.diff(num.ring.gens[pos]), den)
        x = num.ring.gens[pos]
        return RatFunc(self.vs, num.diff(x) * den - num * den.diff(x), den * den)

    def shift_pos(self, pos: int, s: int) -> "RatFunc":
        # a shift keeps coprimality, content and the leading term of den
        return RatFunc._raw(self.vs, shift_poly(self.num, pos, s), shift_poly(self.den, pos, s))

    def evaluate(self, point):
        """Value at a full point of QQ values; None if the denominator vanishes."""
        d = evaluate(self.den, point)
        if d == 0:
            return None
        return evaluate(self.num, point) / d

    # -- display ------------------------------------------------------------
    def __str__(self):
        n = poly_str(self.num)
        if self.den == 1:
            return n
        d = poly_str(self.den)
        if len(self.num) > 1 or "/" in n:
            n = f"({n})"
        simple = len(self.den) == 1 and (
            self.den.is_ground or (self.den.LC == 1 and sum(self.den.LM) == 1)
        )
        if not simple:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"RatFunc({self})"


def _coerce(R, x):
    if isinstance(x, Fraction):
        return R(qq(x))
    if isinstance(x, int):
        return R(x)
    if x.ring is not R:
        return R(x)
    return x


def reduce(num: MultiPoly, den: MultiPoly, vs: VarSpec | None = None) -> RatFunc:
    """Normal form of num/den."""
    if vs is None:
        vs = _varspec_of(num)
    return RatFunc(vs, num, den)


def _varspec_of(p: MultiPoly) -> VarSpec:
    names = [str(g) for g in p.ring.gens]
    m = sum(1 for s in names if s.startswith("t"))
    n = sum(1 for s in names if s.startswith("k"))
    return VarSpec(m, n)


def derive(f: RatFunc, i: int) -> RatFunc:
    if not 1 <= i <= f.vs.m:
        raise BadIndex(f"t-index {i} outside 1..{f.vs.m}")
    return f.diff_pos(i - 1)


def shift(f: RatFunc, j: int, s: int = 1) -> RatFunc:
    if not 1 <= j <= f.vs.n:
        raise BadIndex(f"k-index {j} outside 1..{f.vs.n}")
    return f.shift_pos(f.vs.m + j - 1, s)


def log_derivative(f: RatFunc, i: int) -> RatFunc:
    """D_i(f)/f."""
    return derive(f, i) / f


def shift_quotient(f: RatFunc, j: int) -> RatFunc:
    """S_j(f)/f."""
    return shift(f, j, 1) / f
