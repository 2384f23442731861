"""Decomposition of derivation-compatible rational functions in t.

For a_1..a_m in Q(t) with D_i a_j = D_j a_i, find g0 in Q(t), rationals
gamma_l and polynomials g_l with

    a_i = D_i(g0) + sum_l gamma_l D_i(g_l)/g_l.

Variables are eliminated one at a time.  For t_i the coefficient field is
Q(t_{i+1}, ..., t_m): Hermite reduction splits off the derivative part and
the Rothstein-Trager resultant gives the residues of the logarithmic part.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from sympy import QQ
from sympy.polys.rings import ring

from .certsys import CertificateSystem, check_compatibility
from .errors import InputError, NotCompatible, UnsupportedResidue
from .exactarith.ratfunc import RatFunc
from .exactarith.refine import ZRING
from .exactarith.ring import MultiPoly, VarSpec, evaluate, int_primitive, to_fraction
from .exactarith.upoly import UPoly

_XZ, _X, _ZZ = ring("x,z", QQ)


@dataclass(frozen=True)
class ContinuousDecomp:
    vs: VarSpec
    g0: RatFunc
    parts: tuple[tuple[Fraction, MultiPoly], ...]


def reconstruct_continuous(d: ContinuousDecomp) -> list[RatFunc]:
    vs = d.vs
    out = []
    for i in range(1, vs.m + 1):
        ai = d.g0.derive(i)
        for gamma, g in d.parts:
            gg = RatFunc.poly(vs, g)
            ai = ai + gg.derive(i) / gg * gamma
        out.append(ai)
    return out


def verify_continuous(a, d: ContinuousDecomp) -> bool:
    a = list(a)
    if len(a) != d.vs.m:
        return False
    return all(x == y for x, y in zip(reconstruct_continuous(d), a))


# -- conversions between RatFunc and UPoly over Q(other variables) ----------------


def _to_upoly(p: MultiPoly, pos: int, vs: VarSpec) -> UPoly:
    R = p.ring
    buckets: dict[int, dict] = {}
    for e, c in p.items():
        d = e[pos]
        e2 = e[:pos] + (0,) + e[pos + 1 :]
        buckets.setdefault(d, {})[e2] = c
    deg = max(buckets) if buckets else -1
    zero, one = RatFunc.const(vs, 0), RatFunc.const(vs, 1)
    coeffs = [
        RatFunc.poly(vs, R.from_dict(buckets[i])) if i in buckets else zero
        for i in range(deg + 1)
    ]
    return UPoly(coeffs, zero, one)


def _from_upoly(u: UPoly, pos: int, vs: VarSpec) -> RatFunc:
    x = RatFunc.poly(vs, vs.ring.gens[pos])
    out = RatFunc.const(vs, 0)
    for c in reversed(u.c):
        out = out * x + c
    return out


def _upoly_to_poly(u: UPoly, pos: int, vs: VarSpec) -> MultiPoly:
    """Clear denominators of u and return it as a polynomial primitive in x."""
    R = vs.ring
    den = R.one
    for c in u.c:
        if c:
            den = den * c.den.exquo(den.gcd(c.den))
    x = R.gens[pos]
    out = R.zero
    for i, c in enumerate(u.c):
        if c:
            out += (c.num * den.exquo(c.den)) * x**i
    # remove the content free of x
    cont = None
    for i, c in enumerate(u.c):
        if c:
            q = c.num * den.exquo(c.den)
            cont = q if cont is None else cont.gcd(q)
    if cont is not None and not cont.is_ground:
        out = out.exquo(cont)
    _, out = int_primitive(out)
    return out


def _specialize_upoly(u: UPoly, values) -> list:
    out = []
    for c in u.c:
        d = evaluate(c.den, values)
        if d == 0:
            return None
        out.append(evaluate(c.num, values) / d)
    return out


def _dense_to_xz(coeffs, zcoeffs=None):
    """sum c_i x^i (+ z * sum zc_i x^i) in Q[x, z]."""
    terms = {}
    for i, c in enumerate(coeffs):
        if c:
            terms[(i, 0)] = c
    if zcoeffs:
        for i, c in enumerate(zcoeffs):
            if c:
                terms[(i, 1)] = terms.get((i, 1), QQ(0)) + c
    return _XZ.from_dict(terms)


def _rational_residues(A: UPoly, D: UPoly, pos: int, vs: VarSpec, rng) -> list[Fraction]:
    """Roots of Res_x(D, A - z D'), computed on a random specialization of the
    remaining variables (the roots are constants, so any good point works)."""
    dD = D.deriv()
    for _ in range(30):
        vals = [QQ(rng.randint(-50, 50), rng.randint(1, 7)) for _ in range(vs.nvars)]
        d = _specialize_upoly(D, vals)
        a = _specialize_upoly(A, vals)
        dd = _specialize_upoly(dD, vals)
        if d is None or a is None or dd is None or not d[-1]:
            continue
        dx = _dense_to_xz(d)
        if not dx.gcd(dx.diff(_X)).is_ground:
            continue
        # A - z D'
        neg = [-c for c in dd]
        res = dx.resultant(_dense_to_xz(a, neg))
        if not res:
            raise ArithmeticError("resultant vanished identically")
        rz = ZRING.from_dict({(e[-1],): c for e, c in res.items()})
        out = []
        for fac, _ in rz.factor_list()[1]:
            if fac.degree() == 1:
                out.append(-to_fraction(fac.get((0,), QQ(0))) / to_fraction(fac.LC))
            elif fac.degree() > 1:
                raise UnsupportedResidue(f"residues are roots of {fac.as_expr()}, not rational")
        return sorted(set(out))
    raise ArithmeticError("no good specialization for residue computation")


def _hermite(A: UPoly, D: UPoly):
    """A/D with D monic and deg A < deg D: return (g_num, g_den, A2, Ds) with
    A/D = (g_num/g_den)' + A2/Ds and Ds squarefree."""
    zero = D.zero
    Dm = D.gcd(D.deriv())
    Ds = D.exquo(Dm)
    gsum = []  # list of (B, Dm)
    while Dm.deg > 0:
        Dm2 = Dm.gcd(Dm.deriv())
        Dms = Dm.exquo(Dm2)
        lhs = -(Ds * Dm.deriv()).exquo(Dm)
        B, C = lhs.solve_bezout(Dms, A)
        A = C - (B.deriv() * Ds).exquo(Dms)
        gsum.append((B, Dm))
        Dm = Dm2
    return gsum, A, Ds


def _integrate_poly(Q: UPoly) -> UPoly:
    return UPoly([Q.zero] + [c / (i + 1) for i, c in enumerate(Q.c)], Q.zero, Q.one)


def decompose_continuous(a, vs: VarSpec | None = None, check: bool = True, seed: int = 0) -> ContinuousDecomp:
    a = list(a)
    if vs is None:
        if not a:
            raise InputError("empty system needs an explicit VarSpec")
        vs = a[0].vs
    m = vs.m
    if len(a) != m:
        raise InputError(f"expected {m} t-certificates")
    if any(x.depends_on_k() for x in a):
        raise InputError("t-certificates must be free of k")
    if check:
        rep = check_compatibility(CertificateSystem(vs, a, [RatFunc.const(vs, 1)] * vs.n))
        if not rep.ok:
            raise NotCompatible("t-certificates are not compatible", rep)
    rng = random.Random(seed)
    g0 = RatFunc.const(vs, 0)
    logs: dict[MultiPoly, Fraction] = {}
    cur = list(a)
    for i in range(1, m + 1):
        pos = vs.t_pos(i)
        ai = cur[i - 1]
        if not ai:
            continue
        N = _to_upoly(ai.num, pos, vs)
        D = _to_upoly(ai.den, pos, vs)
        inv = D.one / D.lc
        N, D = N.scale(inv), D.scale(inv)
        Q, Rm = N.divmod(D)
        G = _from_upoly(_integrate_poly(Q), pos, vs)
        stage_logs = []
        if Rm:
            gsum, A2, Ds = _hermite(Rm, D)
            for B, Dm in gsum:
                G = G + _from_upoly(B, pos, vs) / _from_upoly(Dm, pos, vs)
            if A2:
                for gamma in _rational_residues(A2, Ds, pos, vs, rng):
                    if gamma == 0:
                        continue
                    Gg = Ds.gcd(A2 - Ds.deriv().scale(RatFunc.const(vs, gamma)))
                    if Gg.deg <= 0:
                        continue
                    stage_logs.append((gamma, _upoly_to_poly(Gg, pos, vs)))
        g0 = g0 + G
        for gamma, g in stage_logs:
            logs[g] = logs.get(g, Fraction(0)) + gamma
        # subtract this stage from the remaining certificates
        for l in range(i, m + 1):
            r = cur[l - 1] - G.derive(l)
            for gamma, g in stage_logs:
                gg = RatFunc.poly(vs, g)
                r = r - gg.derive(l) / gg * gamma
            cur[l - 1] = r
        if cur[i - 1]:
            raise UnsupportedResidue(
                "logarithmic part not fully captured by rational residues"
            )
    parts = tuple(sorted(((gm, g) for g, gm in logs.items() if gm != 0), key=lambda p: str(p[1])))
    if g0.is_poly and g0.num:
        c = g0.num.get((0,) * vs.nvars, QQ(0))
        if c:
            g0 = g0 - RatFunc.const(vs, to_fraction(c))
    d = ContinuousDecomp(vs, g0, parts)
    if not verify_continuous(a, d):
        raise AssertionError("internal error: continuous decomposition failed verification")
    return d


__all__ = [
    "ContinuousDecomp",
    "decompose_continuous",
    "reconstruct_continuous",
    "verify_continuous",
]
