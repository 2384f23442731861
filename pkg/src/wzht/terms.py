"""Rising factorials, factorial terms and terms in standard form.

A term is stored multiplicatively as

    f(t, k) * exp(g0(t)) * prod g_l(t)^gamma_l * prod h_j(t)^k_j * T(k)

where exp and the powers are formal symbols: only their certificates are
used, and numeric evaluation replaces their product by one opaque scalar.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from sympy import QQ

from .errors import InputError, UnrefinedFactor, ZeroRationalPart
from .exactarith.ratfunc import RatFunc
from .exactarith.refine import Z, factor_refine
from .exactarith.ring import MultiPoly, VarSpec, qq, to_fraction


def rising(alpha, k: int) -> Fraction:
    alpha = Fraction(alpha)
    out = Fraction(1)
    if k >= 0:
        for i in range(k):
            out *= alpha + i
        return out
    if alpha.denominator == 1 and 1 <= alpha <= -k:
        return Fraction(0)
    for i in range(1, -k + 1):
        out /= alpha - i
    return out


def rising_star(alpha, k: int) -> Fraction:
    alpha = Fraction(alpha)
    r = rising(alpha, k)
    if r != 0:
        return r
    a = int(alpha)
    if a > 0 and a + k <= 0:
        return rising(a, 1 - a) * rising(0, a + k)
    # remaining zero case: alpha a non-positive integer with alpha + k > 0
    return rising(a, -a) * rising(1, a + k - 1)


def rising_star_poly(rho: MultiPoly, s: int) -> Fraction:
    """prod_0^s rho(l) for rho in Q[z] without rational roots."""
    out = Fraction(1)
    if s >= 0:
        for l in range(s):
            out *= to_fraction(rho(l))
        return out
    for l in range(s, 0):
        out /= to_fraction(rho(l))
    return out


def _dot(v, k) -> int:
    return sum(a * b for a, b in zip(v, k))


@dataclass(frozen=True)
class FactorialTerm:
    """mu^k * prod (alpha)*_{v.k} / prod (beta)*_{w.k}.

    ``num_poly_parts``/``den_poly_parts`` hold pairs (rho, v) with rho a
    monic irreducible polynomial in Q[z] of degree >= 2, standing for
    prod_0^{v.k} rho(l), the analogue of (alpha)* for a factor rho(v.k)
    whose roots are not rational.
    """

    mu: tuple[Fraction, ...]
    num_parts: tuple[tuple[Fraction, tuple[int, ...]], ...] = ()
    den_parts: tuple[tuple[Fraction, tuple[int, ...]], ...] = ()
    num_poly_parts: tuple[tuple[MultiPoly, tuple[int, ...]], ...] = ()
    den_poly_parts: tuple[tuple[MultiPoly, tuple[int, ...]], ...] = ()

    def __post_init__(self):
        n = len(self.mu)
        if any(m == 0 for m in self.mu):
            raise InputError("geometric factors must be nonzero")
        for _, v in self.num_parts + self.den_parts + self.num_poly_parts + self.den_poly_parts:
            if len(v) != n:
                raise InputError("factorial part vector has wrong length")

    @classmethod
    def trivial(cls, n: int) -> "FactorialTerm":
        return cls(tuple(Fraction(1) for _ in range(n)))

    @property
    def n(self) -> int:
        return len(self.mu)

    def blocks(self):
        """All parts as (rho, v, sign) with rho a polynomial in Q[z]."""
        for a, v in self.num_parts:
            yield Z + qq(a), v, 1
        for b, w in self.den_parts:
            yield Z + qq(b), w, -1
        for rho, v in self.num_poly_parts:
            yield rho, v, 1
        for rho, w in self.den_poly_parts:
            yield rho, w, -1


def eval_factorial_term(T: FactorialTerm, k) -> Fraction:
    out = Fraction(1)
    for m, kj in zip(T.mu, k):
        out *= Fraction(m) ** kj
    for a, v in T.num_parts:
        out *= rising_star(a, _dot(v, k))
    for b, w in T.den_parts:
        out /= rising_star(b, _dot(w, k))
    for rho, v in T.num_poly_parts:
        out *= rising_star_poly(rho, _dot(v, k))
    for rho, w in T.den_poly_parts:
        out /= rising_star_poly(rho, _dot(w, k))
    return out


@dataclass(frozen=True)
class StandardFormTerm:
    vs: VarSpec
    f: RatFunc
    g0: RatFunc
    powers: tuple[tuple[Fraction, MultiPoly], ...]
    h: tuple[RatFunc, ...]
    T: FactorialTerm

    def __post_init__(self):
        if len(self.h) != self.vs.n or self.T.n != self.vs.n:
            raise InputError("geometric part and factorial term need n entries")
        if self.f.is_zero:
            raise ZeroRationalPart("rational part is zero")
        if self.g0.depends_on_k() or any(x.depends_on_k() for x in self.h):
            raise InputError("exponential and geometric parts must be free of k")
        if any(x.is_zero for x in self.h):
            raise InputError("geometric part must be nonzero")

    @classmethod
    def make(cls, vs, f=None, g0=None, powers=(), h=None, T=None) -> "StandardFormTerm":
        one = RatFunc.const(vs, 1)
        if f is None:
            f = one
        elif not isinstance(f, RatFunc):
            f = RatFunc(vs, f)
        g0 = RatFunc.const(vs, 0) if g0 is None else g0
        h = tuple(one for _ in range(vs.n)) if h is None else tuple(h)
        T = FactorialTerm.trivial(vs.n) if T is None else T
        powers = tuple((Fraction(g), p) for g, p in powers)
        return cls(vs, f, g0, powers, h, T)

    def replace(self, **kw) -> "StandardFormTerm":
        d = dict(vs=self.vs, f=self.f, g0=self.g0, powers=self.powers, h=self.h, T=self.T)
        d.update(kw)
        return StandardFormTerm(**d)


@dataclass(frozen=True)
class EvalContext:
    t_values: tuple[Fraction, ...] = ()
    formal_scale: Fraction = Fraction(1)


@dataclass(frozen=True)
class PoleAt:
    """Marker for a grid point where some denominator vanishes."""

    point: tuple[int, ...] = field(default=())


def eval_term(term: StandardFormTerm, ctx: EvalContext, k) -> Fraction | PoleAt:
    """Exact value at the integer point k, or a PoleAt marker."""
    k = tuple(int(x) for x in k)
    if len(ctx.t_values) != term.vs.m:
        raise InputError(f"need {term.vs.m} t-values, got {len(ctx.t_values)}")
    tq = [qq(Fraction(x)) for x in ctx.t_values]
    fv = term.f.evaluate(tq + [QQ(x) for x in k])
    if fv is None:
        return PoleAt(k)
    out = to_fraction(fv) * Fraction(ctx.formal_scale)
    for hj, kj in zip(term.h, k):
        hv = hj.evaluate(tq + [QQ(0)] * term.vs.n)
        if hv is None:
            return PoleAt(k)
        if hv == 0 and kj < 0:
            return PoleAt(k)
        out *= to_fraction(hv) ** kj
    return out * eval_factorial_term(term.T, k)


def normalize_standard(term: StandardFormTerm) -> StandardFormTerm:
    """Move pure-t and integer-linear denominator factors out of f.

    Pure-t factors p^e become powers (-e, p).  A composed factor rho(v.k)^e
    becomes the factorial quotient (rho)*_{v.k} / (rho(z+1))*_{v.k}, whose
    shift quotients equal those of 1/rho(v.k).  Raises UnrefinedFactor for
    any other denominator factor.
    """
    f = term.f
    if f.is_poly:
        return term
    vs = term.vs
    fl = factor_refine(f.den, vs)
    powers = list(term.powers)
    nump = list(term.T.num_parts)
    denp = list(term.T.den_parts)
    nump_poly = list(term.T.num_poly_parts)
    denp_poly = list(term.T.den_poly_parts)
    for fac in fl.factors:
        if fac.flag is not None:
            raise UnrefinedFactor(f"denominator factor {fac.poly} is {fac.flag}", fac.poly)
        if fac.kind == "t":
            powers.append((Fraction(-fac.exp), fac.poly))
            continue
        rho, v = fac.rho, fac.v
        for _ in range(fac.exp):
            if rho.degree() == 1:
                alpha = to_fraction(rho.get((0,), QQ(0)))
                nump.append((alpha, v))
                denp.append((alpha + 1, v))
            else:
                nump_poly.append((rho, v))
                denp_poly.append((rho.compose(Z, Z + 1), v))
    T = FactorialTerm(term.T.mu, tuple(nump), tuple(denp), tuple(nump_poly), tuple(denp_poly))
    newf = RatFunc(vs, f.num)
    return term.replace(f=newf, powers=tuple(powers), T=T)


def is_standard(term: StandardFormTerm) -> bool:
    """Denominator of f free of pure-t and integer-linear composed factors."""
    if term.f.is_poly:
        return True
    fl = factor_refine(term.f.den, term.vs)
    return all(x.kind in ("mixed", "k") for x in fl.factors)


__all__ = [
    "EvalContext",
    "FactorialTerm",
    "PoleAt",
    "StandardFormTerm",
    "eval_factorial_term",
    "eval_term",
    "is_standard",
    "normalize_standard",
    "rising",
    "rising_star",
]
