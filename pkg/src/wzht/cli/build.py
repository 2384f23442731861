"""Turn parsed expressions into rational functions, polynomials and terms."""

from __future__ import annotations

from fractions import Fraction

from ..errors import InputError, ZeroRationalPart
from ..exactarith.ratfunc import RatFunc
from ..exactarith.refine import ZRING
from ..exactarith.ring import VarSpec, to_fraction
from ..terms import FactorialTerm, StandardFormTerm
from .parser import ArityError, BinOp, Call, Neg, Num, PowNode, Var, max_indices, parse


def infer_varspec(*sources, m=None, n=None) -> VarSpec:
    mm = nn = 0
    for s in sources:
        a, b = max_indices(parse(s) if isinstance(s, str) else s)
        mm, nn = max(mm, a), max(nn, b)
    m = mm if m is None else m
    n = nn if n is None else n
    if m < mm or n < nn:
        raise InputError(f"expression uses variables beyond m={m}, n={n}")
    if m + n == 0:
        n = 1
    return VarSpec(m, n)


def _ratfunc(node, vs: VarSpec) -> RatFunc:
    if isinstance(node, Num):
        return RatFunc.const(vs, node.value)
    if isinstance(node, Var):
        if node.kind == "t":
            return RatFunc.poly(vs, vs.t(node.index))
        if node.kind == "k":
            return RatFunc.poly(vs, vs.k(node.index))
        raise InputError("z is only allowed in univariate polynomials")
    if isinstance(node, Neg):
        return -_ratfunc(node.arg, vs)
    if isinstance(node, PowNode):
        base = _ratfunc(node.base, vs)
        if node.exp < 0 and base.is_zero:
            raise InputError("negative power of zero")
        return base**node.exp
    if isinstance(node, BinOp):
        a, b = _ratfunc(node.left, vs), _ratfunc(node.right, vs)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        if b.is_zero:
            raise InputError("division by zero")
        return a / b
    if isinstance(node, Call):
        raise InputError(f"{node.name}(...) is not a rational function")
    raise TypeError(node)


def to_ratfunc(src, vs: VarSpec) -> RatFunc:
    return _ratfunc(parse(src) if isinstance(src, str) else src, vs)


def to_rational(src) -> Fraction:
    vs = VarSpec(0, 1)
    r = to_ratfunc(src, vs)
    if not r.is_const:
        raise InputError(f"{src} is not a rational constant")
    return r.const_value()


def to_zpoly(src):
    """Polynomial in Q[z]."""
    node = parse(src) if isinstance(src, str) else src
    vs = VarSpec(0, 1)
    r = _ratfunc(_rename_z(node), vs)
    if not r.is_poly:
        raise InputError(f"{src} is not a polynomial")
    p = r.num.quo_ground(r.den.LC)
    return ZRING.from_dict({(e[0],): c for e, c in p.items()})


def _rename_z(node):
    if isinstance(node, Var):
        if node.kind == "z":
            return Var("k", 1)
        raise InputError("only z may appear in a univariate polynomial")
    if isinstance(node, Neg):
        return Neg(_rename_z(node.arg))
    if isinstance(node, BinOp):
        return BinOp(node.op, _rename_z(node.left), _rename_z(node.right))
    if isinstance(node, PowNode):
        return PowNode(_rename_z(node.base), node.exp)
    if isinstance(node, Call):
        raise InputError("constructors are not allowed here")
    return node


def _linear_form(node, vs: VarSpec) -> tuple[int, ...]:
    L = _ratfunc(node, vs)
    if not L.is_poly or L.depends_on_t():
        raise InputError("factorial argument must be a linear form in k")
    p = L.num.quo_ground(L.den.LC)
    v = [0] * vs.n
    for e, c in p.items():
        if sum(e) != 1:
            raise InputError("factorial argument must be homogeneous linear in k")
        c = to_fraction(c)
        if c.denominator != 1:
            raise InputError("factorial argument needs integer coefficients")
        v[e.index(1) - vs.m] = int(c)
    return tuple(v)


class _TermValue:
    """Multiplicative pieces collected while evaluating a term expression."""

    def __init__(self, vs, f=None):
        self.vs = vs
        self.f = f if f is not None else RatFunc.const(vs, 1)
        self.g0 = RatFunc.const(vs, 0)
        self.powers = []
        self.h = [RatFunc.const(vs, 1)] * vs.n
        self.mu = [Fraction(1)] * vs.n
        self.num = []
        self.den = []

    def mul(self, other):
        out = _TermValue(self.vs, self.f * other.f)
        out.g0 = self.g0 + other.g0
        out.powers = self.powers + other.powers
        out.h = [a * b for a, b in zip(self.h, other.h)]
        out.mu = [a * b for a, b in zip(self.mu, other.mu)]
        out.num = self.num + other.num
        out.den = self.den + other.den
        return out

    def inverse(self):
        out = _TermValue(self.vs, self.f.inverse())
        out.g0 = -self.g0
        out.powers = [(-g, p) for g, p in self.powers]
        out.h = [x.inverse() for x in self.h]
        out.mu = [1 / x for x in self.mu]
        out.num, out.den = list(self.den), list(self.num)
        return out

    def to_term(self) -> StandardFormTerm:
        T = FactorialTerm(tuple(self.mu), tuple(self.num), tuple(self.den))
        return StandardFormTerm.make(self.vs, self.f, self.g0, self.powers, self.h, T)


def _term(node, vs) -> _TermValue:
    if isinstance(node, Call):
        tv = _TermValue(vs)
        if node.name == "Exp":
            g0 = _ratfunc(node.args[0], vs)
            if g0.depends_on_k():
                raise InputError("Exp argument must be free of k")
            tv.g0 = g0
        elif node.name == "Pow":
            g = _ratfunc(node.args[0], vs)
            if not g.is_poly or g.depends_on_k() or g.is_const:
                raise InputError("Pow base must be a non-constant polynomial in t")
            gamma = to_rational(node.args[1])
            tv.powers = [(gamma, g.num.quo_ground(g.den.LC))]
        elif node.name == "Geo":
            if len(node.args) != vs.n:
                raise ArityError(f"Geo takes n={vs.n} arguments, got {len(node.args)}")
            for j, arg in enumerate(node.args):
                h = _ratfunc(arg, vs)
                if h.depends_on_k() or h.is_zero:
                    raise InputError("Geo arguments must be nonzero and free of k")
                if h.is_const:
                    tv.mu[j] = h.const_value()
                else:
                    tv.h[j] = h
        else:
            alpha = to_rational(node.args[0])
            v = _linear_form(node.args[1], vs)
            if node.name == "RisingStar":
                tv.num = [(alpha, v)]
            else:
                tv.den = [(alpha, v)]
        return tv
    if isinstance(node, BinOp) and node.op in "*/":
        a, b = _term(node.left, vs), _term(node.right, vs)
        return a.mul(b if node.op == "*" else b.inverse())
    if isinstance(node, PowNode):
        base = _term(node.base, vs)
        out = _TermValue(vs)
        step = base if node.exp >= 0 else base.inverse()
        for _ in range(abs(node.exp)):
            out = out.mul(step)
        return out
    if isinstance(node, Neg):
        tv = _term(node.arg, vs)
        tv.f = -tv.f
        return tv
    return _TermValue(vs, _ratfunc(node, vs))


def to_term(src, vs: VarSpec) -> StandardFormTerm:
    node = parse(src) if isinstance(src, str) else src
    tv = _term(node, vs)
    if tv.f.is_zero:
        raise ZeroRationalPart("rational part is zero")
    return tv.to_term()
