"""Structure of mixed compatible systems.

A compatible system (a, b) in Q(t, k) splits as

    a_i = D_i(f)/f + sum_j k_j D_i(h_j)/h_j + abar_i
    b_j = S_j(f)/f * h_j * bbar_j

with h_j, abar_i in Q(t) and bbar_j in Q(k).  The factors of b_j that
involve both t and k are removed by shift-telescoping; what remains splits
into a t-part (h_j) and a k-part (bbar_j) by content.
"""

from __future__ import annotations

from dataclasses import dataclass

from sympy import QQ

from .certsys import CertificateSystem, certificates_of, check_compatibility
from .christopher import ContinuousDecomp, decompose_continuous
from .errors import NotCompatible, StructureGap
from .exactarith.ratfunc import RatFunc
from .exactarith.refine import factor_univariate, split_t_k_mixed
from .exactarith.ring import VarSpec, int_primitive, to_fraction
from .exactarith.telescope import telescope
from .oresato import ShiftDecomp, decompose_shift
from .terms import FactorialTerm, StandardFormTerm


@dataclass(frozen=True)
class StructureData:
    vs: VarSpec
    f: RatFunc
    cont: ContinuousDecomp
    h: tuple[RatFunc, ...]
    shift: ShiftDecomp


def _mixed_parts(x: RatFunc, vs: VarSpec):
    cn, tn, kn, mn = split_t_k_mixed(x.num, vs)
    cd, td, kd, md = split_t_k_mixed(x.den, vs)
    return (to_fraction(cn) / to_fraction(cd), (tn, td), (kn, kd), (mn, md))


def split_mixed(c: CertificateSystem, check: bool = True):
    """Return (f, h, abar, bbar)."""
    vs = c.vs
    if check:
        rep = check_compatibility(c)
        if not rep.ok:
            raise NotCompatible("certificate system is not compatible", rep)
    n = vs.n
    one = RatFunc.const(vs, 1)
    mixed = []
    for bj in c.b:
        _, _, _, (mn, md) = _mixed_parts(bj, vs)
        mixed.append([mn, md])
    f = one
    for j in range(1, n + 1):
        A, B = mixed[j - 1]
        if A.is_ground and B.is_ground:
            continue
        gn, gd, A2, B2 = telescope(A, B, vs.k_pos(j))
        if not (A2.is_ground and B2.is_ground):
            bad = A2 if not A2.is_ground else B2
            raise StructureGap(f"mixed factor {bad} does not telescope", bad)
        G = RatFunc(vs, gn, gd)
        f = f * G
        for i in range(j + 1, n + 1):
            q = G / G.shift(i)
            A_i = mixed[i - 1][0] * q.num
            B_i = mixed[i - 1][1] * q.den
            g = A_i.gcd(B_i)
            mixed[i - 1] = [A_i.exquo(g), B_i.exquo(g)]
    if not f.num.is_ground:
        _, fn = int_primitive(f.num)
        f = RatFunc(vs, fn, f.den)
    else:
        f = RatFunc(vs, vs.ring.one, f.den)
    h, bbar = [], []
    for j, bj in enumerate(c.b, start=1):
        rest = bj / (f.shift(j) / f)
        const, (tn, td), (kn, kd), (mn, md) = _mixed_parts(rest, vs)
        if not (mn.is_ground and md.is_ground):
            bad = mn if not mn.is_ground else md
            raise StructureGap(f"mixed factor {bad} left after telescoping", bad)
        h.append(RatFunc(vs, tn, td))
        bbar.append(RatFunc(vs, kn, kd) * const)
    abar = []
    for i in range(1, vs.m + 1):
        r = c.a[i - 1] - f.derive(i) / f
        for j, hj in enumerate(h, start=1):
            r = r - hj.derive(i) / hj * RatFunc.poly(vs, vs.k(j))
        if r.depends_on_k():
            raise NotCompatible(f"t-residual {r} still depends on k")
        abar.append(r)
    return f, h, abar, bbar


def full_structure(c: CertificateSystem, check: bool = True) -> StructureData:
    vs = c.vs
    f, h, abar, bbar = split_mixed(c, check)
    cont = decompose_continuous(abar, vs, check=False)
    sh = decompose_shift(bbar, vs, check=False)
    sd = StructureData(vs, f * sh.f, cont, tuple(h), ShiftDecomp(vs, RatFunc.const(vs, 1), sh.mu, sh.parts))
    if certificates_of(structure_to_term(sd)) != c:
        raise AssertionError("internal error: structure data failed verification")
    return sd


def structure_to_term(sd: StructureData) -> StandardFormTerm:
    """The term whose certificates are described by ``sd``."""
    vs = sd.vs
    num_parts, den_parts, num_poly, den_poly = [], [], [], []
    for v, rn, rd in sd.shift.parts:
        for r, lin, poly in ((rn, num_parts, num_poly), (rd, den_parts, den_poly)):
            for rho, e in factor_univariate(r)[1]:
                for _ in range(e):
                    if rho.degree() == 1:
                        lin.append((to_fraction(rho.get((0,), QQ(0))), tuple(v)))
                    else:
                        poly.append((rho, tuple(v)))
    T = FactorialTerm(
        tuple(sd.shift.mu), tuple(num_parts), tuple(den_parts), tuple(num_poly), tuple(den_poly)
    )
    f = sd.f * sd.shift.f
    return StandardFormTerm(vs, f, sd.cont.g0, sd.cont.parts, sd.h, T)


def reconstruct_structure(sd: StructureData) -> CertificateSystem:
    return certificates_of(structure_to_term(sd))


def verify_structure(c: CertificateSystem, sd: StructureData) -> bool:
    return reconstruct_structure(sd) == c


__all__ = [
    "StructureData",
    "full_structure",
    "reconstruct_structure",
    "split_mixed",
    "structure_to_term",
    "verify_structure",
]
