"""Ore-Sato decomposition of shift-compatible rational functions in k.

Every compatible b_1..b_n in Q(k) can be written as

    b_j = S_j(f)/f * mu_j * prod_{v in V} prod_0^{v_j} r_v(v.k + l)

with mu_j constants and r_v monic univariate rational functions.  The
factors of each b_j are grouped into classes rho(v.k + s) (rho monic
irreducible, s an integer offset).  Within a class the total exponent fixes
the r_v block; what is left over is an exact telescoping pattern that is
integrated offset by offset.  Factors that are not of the form r(v.k) are
removed by a shift-telescoping split.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from sympy import QQ

from .certsys import CertificateSystem, check_compatibility
from .errors import InputError, NotCompatible, UnrefinedFactor
from .exactarith.blocks import compose_ratfunc, product_range
from .exactarith.ratfunc import RatFunc
from .exactarith.refine import Z, ZRING, compose_univariate, factor_refine, linear_form
from .exactarith.ring import VarSpec, int_primitive, to_fraction
from .exactarith.telescope import telescope


@dataclass(frozen=True)
class ShiftDecomp:
    vs: VarSpec
    f: RatFunc
    mu: tuple[Fraction, ...]
    parts: tuple  # (v, r_num, r_den) with r_num, r_den monic in Q[z]


@dataclass(frozen=True)
class ProductRange:
    s: int
    t: int

    def __call__(self, r, base: RatFunc) -> RatFunc:
        return product_range(r, base, self.s, self.t)


def block(r_num, r_den, v, j: int, vs: VarSpec) -> RatFunc:
    """prod_0^{v_j} r(v.k + l) for r = r_num/r_den."""
    base = RatFunc.poly(vs, linear_form(v, vs))
    return product_range((r_num, r_den), base, 0, v[j - 1])


def reconstruct_shift(d: ShiftDecomp) -> list[RatFunc]:
    vs = d.vs
    out = []
    for j in range(1, vs.n + 1):
        bj = d.f.shift(j) / d.f * d.mu[j - 1]
        for v, rn, rd in d.parts:
            bj = bj * block(rn, rd, v, j, vs)
        out.append(bj)
    return out


def verify_shift(b, d: ShiftDecomp) -> bool:
    b = list(b)
    if len(b) != d.vs.n:
        return False
    return all(x == y for x, y in zip(reconstruct_shift(d), b))


# -- class bookkeeping ------------------------------------------------------------


def _offset(rho, base) -> int | None:
    """s with rho(z) = base(z + s), or None."""
    if rho.degree() != base.degree():
        return None
    d = rho.degree()
    s = to_fraction(rho.get((d - 1,), QQ(0)) - base.get((d - 1,), QQ(0))) / d
    if s.denominator != 1:
        return None
    s = int(s)
    return s if base.compose(Z, Z + s) == rho else None


class _Classes:
    """Exponents e[class][j][offset] of composed factors rho(v.k + offset)."""

    def __init__(self):
        self.keys = []  # (v, base rho)
        self.exps = []  # list of dict j -> dict offset -> exponent

    def add(self, v, rho, j, e):
        for idx, (v2, base) in enumerate(self.keys):
            if v2 != v:
                continue
            s = _offset(rho, base)
            if s is not None:
                d = self.exps[idx][j]
                d[s] = d.get(s, 0) + e
                return
        self.keys.append((v, rho))
        self.exps.append(defaultdict(dict))
        self.exps[-1][j][0] = e


def _solve_class(v, exps, n):
    """Return (R, s0, F) with F: offset -> exponent of rho(v.k + offset) in f,
    or None if the exponent pattern is not of the required shape."""
    js = [j for j in range(1, n + 1) if v[j - 1] != 0]
    R = None
    for j in js:
        tot = sum(exps[j].values())
        if tot % v[j - 1]:
            return None
        r = tot // v[j - 1]
        if R is None:
            R = r
        elif R != r:
            return None
    for j in range(1, n + 1):
        if v[j - 1] == 0 and any(exps[j].values()):
            return None
    offsets = [s for j in exps for s, e in exps[j].items() if e]
    s0 = min(offsets) if offsets else 0
    F = {}
    # integrate along the j with the smallest |v_j|
    jr = min(js, key=lambda j: (abs(v[j - 1]), j))
    vj = v[jr - 1]
    c = dict(exps[jr])
    lo, hi = (s0, s0 + vj) if vj > 0 else (s0 + vj, s0)
    for s in range(lo, hi):
        c[s] = c.get(s, 0) - (R if vj > 0 else -R)
    # F_{s - vj} - F_s = c_s
    keys = [s for s, e in c.items() if e]
    if keys:
        if vj > 0:
            for s in range(min(keys), max(keys) + 1):
                val = F.get(s - vj, 0) - c.get(s, 0)
                if val:
                    F[s] = val
        else:
            for s in range(max(keys), min(keys) - 1, -1):
                val = F.get(s - vj, 0) - c.get(s, 0)
                if val:
                    F[s] = val
    return R, s0, F


def decompose_shift(b, vs: VarSpec | None = None, check: bool = True) -> ShiftDecomp:
    b = [x if isinstance(x, RatFunc) else RatFunc(vs, x) for x in b]
    if vs is None:
        if not b:
            raise InputError("empty system needs an explicit VarSpec")
        vs = b[0].vs
    n = vs.n
    if len(b) != n:
        raise InputError(f"expected {n} certificates")
    if any(x.depends_on_t() for x in b):
        raise InputError("shift certificates must be free of t")
    if any(x.is_zero for x in b):
        raise InputError("shift certificates must be nonzero")
    if check:
        rep = check_compatibility(CertificateSystem(vs, [RatFunc.const(vs, 0)] * vs.m, b))
        if not rep.ok:
            raise NotCompatible("shift certificates are not compatible", rep)
    R = vs.ring
    one = RatFunc.const(vs, 1)
    if n == 0:
        return ShiftDecomp(vs, one, (), ())

    # residual (non-composed) parts first: telescope them away
    resid_num = [R.one] * n
    resid_den = [R.one] * n
    classes = _Classes()
    refined = []
    for j, bj in enumerate(b, start=1):
        fn, fd = factor_refine(bj.num, vs), factor_refine(bj.den, vs)
        refined.append((fn, fd))
        for sign, fl in ((1, fn), (-1, fd)):
            for fac in fl.factors:
                if fac.kind == "composed" and fac.conclusive:
                    continue
                if fac.kind in ("k", "composed"):
                    if sign > 0:
                        resid_num[j - 1] *= fac.poly**fac.exp
                    else:
                        resid_den[j - 1] *= fac.poly**fac.exp
                else:
                    raise InputError("unexpected t-dependent factor")
    f_res = one
    for j in range(1, n + 1):
        A, B = resid_num[j - 1], resid_den[j - 1]
        if A.is_ground and B.is_ground:
            continue
        pos = vs.k_pos(j)
        gn, gd, A2, B2 = telescope(A, B, pos)
        if not (A2.is_ground and B2.is_ground):
            bad = A2 if not A2.is_ground else B2
            raise UnrefinedFactor(f"factor {bad} is neither composed nor telescoping", bad)
        G = RatFunc(vs, gn, gd)
        f_res = f_res * G
        for i in range(j + 1, n + 1):
            q = G / G.shift(i)
            resid_num[i - 1] *= q.num
            resid_den[i - 1] *= q.den
            g = resid_num[i - 1].gcd(resid_den[i - 1])
            resid_num[i - 1] = resid_num[i - 1].exquo(g)
            resid_den[i - 1] = resid_den[i - 1].exquo(g)

    for j, (fn, fd) in enumerate(refined, start=1):
        for sign, fl in ((1, fn), (-1, fd)):
            for fac in fl.factors:
                if fac.kind == "composed" and fac.conclusive:
                    classes.add(fac.v, fac.rho, j, sign * fac.exp)

    f = f_res
    parts = {}
    for (v, base), exps in zip(classes.keys, classes.exps):
        sol = _solve_class(v, exps, n)
        if sol is None:
            raise NotCompatible(f"exponent pattern of class {v} is not of Ore-Sato shape")
        Rexp, s0, F = sol
        L = linear_form(v, vs)
        for s, e in F.items():
            p = compose_univariate(base, L + s)
            f = f * (RatFunc(vs, p) if e > 0 else RatFunc(vs, R.one, p)) ** abs(e)
        if Rexp:
            rho0 = base.compose(Z, Z + s0)
            rn, rd = parts.get(v, (ZRING.one, ZRING.one))
            if Rexp > 0:
                rn = rn * rho0**Rexp
            else:
                rd = rd * rho0 ** (-Rexp)
            parts[v] = (rn, rd)

    part_list = []
    for v in sorted(parts):
        rn, rd = parts[v]
        g = rn.gcd(rd)
        rn, rd = rn.exquo(g).monic(), rd.exquo(g).monic()
        if rn == ZRING.one and rd == ZRING.one:
            continue
        part_list.append((v, rn, rd))

    f = _strip_constant(f)
    d0 = ShiftDecomp(vs, f, tuple(Fraction(1) for _ in range(n)), tuple(part_list))
    mu = []
    for bj, cj in zip(b, reconstruct_shift(d0)):
        q = bj / cj
        if not q.is_const:
            raise NotCompatible(f"non-constant remainder {q}")
        mu.append(q.const_value())
    d = ShiftDecomp(vs, f, tuple(mu), tuple(part_list))
    if not verify_shift(b, d):
        raise AssertionError("internal error: shift decomposition failed verification")
    return d


def _strip_constant(f: RatFunc) -> RatFunc:
    if f.num.is_ground:
        return RatFunc(f.vs, f.vs.ring.one, f.den)
    _, num = int_primitive(f.num)
    return RatFunc(f.vs, num, f.den)


def shift_decomp_from_parts(vs, f, mu, parts) -> ShiftDecomp:
    """Normalize user-built data (monic r, sorted parts)."""
    out = []
    for v, rn, rd in parts:
        g = rn.gcd(rd)
        out.append((tuple(v), rn.exquo(g).monic(), rd.exquo(g).monic()))
    return ShiftDecomp(vs, f, tuple(Fraction(x) for x in mu), tuple(sorted(out, key=lambda p: p[0])))


__all__ = [
    "ProductRange",
    "ShiftDecomp",
    "block",
    "compose_ratfunc",
    "decompose_shift",
    "product_range",
    "reconstruct_shift",
    "verify_shift",
]
