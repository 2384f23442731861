"""Certificate systems, the integrability conditions and the term dictionary."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .exactarith.blocks import linear_block
from .exactarith.ratfunc import RatFunc
from .exactarith.ring import VarSpec
from .terms import StandardFormTerm


@dataclass(frozen=True)
class CertificateSystem:
    """a_i = D_i(H)/H for i = 1..m and b_j = S_j(H)/H for j = 1..n."""

    vs: VarSpec
    a: tuple[RatFunc, ...]
    b: tuple[RatFunc, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        if len(self.a) != self.vs.m or len(self.b) != self.vs.n:
            raise InputError(
                f"expected {self.vs.m} t-certificates and {self.vs.n} k-certificates"
            )
        if any(x.is_zero for x in self.b):
            raise InputError("k-certificates must be nonzero")

    @classmethod
    def trivial(cls, vs: VarSpec) -> "CertificateSystem":
        return cls(vs, [RatFunc.const(vs, 0)] * vs.m, [RatFunc.const(vs, 1)] * vs.n)


@dataclass(frozen=True)
class CompatReport:
    ok: bool
    violations: tuple[tuple[str, tuple[int, int], RatFunc], ...] = ()


def check_compatibility(c: CertificateSystem) -> CompatReport:
    """Check DD: D_i a_j = D_j a_i, SS: S_i(b_j)/b_j = S_j(b_i)/b_i and
    DS: D_i(b_j)/b_j = S_j(a_i) - a_i.  Indices in the report are 1-based."""
    m, n = c.vs.m, c.vs.n
    out = []
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            r = c.a[j - 1].derive(i) - c.a[i - 1].derive(j)
            if r:
                out.append(("DD", (i, j), r))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            bi, bj = c.b[i - 1], c.b[j - 1]
            r = bj.shift(i) / bj - bi.shift(j) / bi
            if r:
                out.append(("SS", (i, j), r))
    for i in range(1, m + 1):
        ai = c.a[i - 1]
        for j in range(1, n + 1):
            bj = c.b[j - 1]
            r = bj.derive(i) / bj - (ai.shift(j) - ai)
            if r:
                out.append(("DS", (i, j), r))
    return CompatReport(not out, tuple(out))


def certificates_of(term: StandardFormTerm) -> CertificateSystem:
    """Certificates of a term, one dictionary row per multiplicative factor."""
    vs = term.vs
    f = term.f
    a = []
    for i in range(1, vs.m + 1):
        ai = f.derive(i) / f + term.g0.derive(i)
        for gamma, g in term.powers:
            gg = RatFunc.poly(vs, g)
            ai = ai + gg.derive(i) / gg * gamma
        for j, hj in enumerate(term.h, start=1):
            ai = ai + hj.derive(i) / hj * RatFunc.poly(vs, vs.k(j))
        a.append(ai)
    b = []
    for j in range(1, vs.n + 1):
        bj = f.shift(j) / f * term.h[j - 1] * term.T.mu[j - 1]
        for rho, v, sign in term.T.blocks():
            blk = linear_block(rho, v, j, vs)
            bj = bj * blk if sign > 0 else bj / blk
        b.append(bj)
    return CertificateSystem(vs, a, b)


def shift_guards(term: StandardFormTerm) -> tuple[tuple, ...]:
    """Per j, the numerators and denominators of the factors of H(k+e_j)/H(k)
    before they are multiplied together and reduced.

    The recurrence v_j H(k+e_j) = u_j H(k) can fail where one of these
    vanishes even if the reduced b_j = u_j/v_j does not: cancellation hides
    the zeros of f and of the nonvanishing rising factorials.
    """
    vs = term.vs
    out = []
    for j in range(1, vs.n + 1):
        fs = term.f.shift(j)
        polys = [term.f.num, term.f.den, fs.num, fs.den, term.h[j - 1].num, term.h[j - 1].den]
        for rho, v, _ in term.T.blocks():
            blk = linear_block(rho, v, j, vs)
            polys += [blk.num, blk.den]
        out.append(tuple(p for p in polys if not p.is_ground))
    return tuple(out)


def are_conjugate(c1: CertificateSystem, c2: CertificateSystem) -> bool:
    if c1.vs != c2.vs:
        raise InputError("certificate systems over different variables")
    return c1.a == c2.a and c1.b == c2.b
