"""Univariate compositions and the two-sided product used by shift blocks."""

from __future__ import annotations

from .ratfunc import RatFunc
from .refine import ZRING, compose_univariate
from .ring import MultiPoly


def as_zfrac(r):
    """Coerce r to a (num, den) pair of ZRING polynomials."""
    if isinstance(r, tuple):
        return r
    return ZRING(r), ZRING.one


def compose_ratfunc(r: MultiPoly, arg: RatFunc) -> RatFunc:
    """r(arg) for r in Q[z] and a rational function argument."""
    if arg.is_poly:
        return RatFunc(arg.vs, compose_univariate(r, arg.num.quo_ground(arg.den.LC)))
    out = RatFunc.const(arg.vs, 0)
    for e in range(r.degree(), -1, -1):
        out = out * arg + RatFunc.const(arg.vs, r.get((e,), 0))
    return out


def product_range(r, base: RatFunc, s: int, t: int) -> RatFunc:
    """prod_{l=s}^{t-1} r(base + l) when t >= s, else prod_{l=t}^{s-1} 1/r(base + l).

    ``r`` is a ZRING polynomial or a (num, den) pair of them.
    """
    rn, rd = as_zfrac(r)
    vs = base.vs
    num = RatFunc.const(vs, 1)
    den = RatFunc.const(vs, 1)
    lo, hi = (s, t) if t >= s else (t, s)
    for l in range(lo, hi):
        arg = base + l
        num = num * compose_ratfunc(rn, arg)
        den = den * compose_ratfunc(rd, arg)
    out = num / den
    return out if t >= s else out.inverse()


def linear_block(rho: MultiPoly, v, j: int, vs) -> RatFunc:
    """prod_0^{v_j} rho(v.k + l) for a polynomial rho in Q[z]."""
    from .refine import linear_form

    vj = v[j - 1]
    if vj == 0:
        return RatFunc.const(vs, 1)
    L = linear_form(v, vs)
    R = vs.ring
    out = R.one
    lo, hi = (0, vj) if vj > 0 else (vj, 0)
    for l in range(lo, hi):
        out *= compose_univariate(rho, L + l)
    return RatFunc(vs, out) if vj > 0 else RatFunc(vs, R.one, out)
