"""Factor refinement of multivariate polynomials.

The pipeline does not attempt full multivariate factorization.  A polynomial
is split into rational content, squarefree parts, pure-t content, pure-k
content and a mixed remainder; pure-k content is further split into factors
of the form r(v.k) (``v`` a primitive integer vector), which are factored as
univariate polynomials over Q.  Whatever is left is returned whole.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce as _fold
from math import gcd, lcm

from sympy import QQ
from sympy.polys.rings import ring

from ..errors import Unsupported
from .ring import MultiPoly, VarSpec, int_primitive, t_support, tdeg, to_fraction

ZRING, Z = ring("z", QQ)

MAX_UNIVARIATE_DEGREE = 64


@dataclass(frozen=True)
class Factor:
    """One refined factor.

    ``kind`` is ``"t"`` (free of k), ``"composed"`` (``rho(v.k)`` with ``rho``
    monic irreducible over Q), ``"k"`` (free of t, no factor of the form
    r(v.k)) or ``"mixed"`` (every irreducible factor involves both t and k).
    """

    poly: MultiPoly
    exp: int
    kind: str
    v: tuple[int, ...] | None = None
    rho: MultiPoly | None = None
    conclusive: bool = True

    @property
    def flag(self) -> str | None:
        if not self.conclusive:
            return "unrefined-guard"
        if self.kind == "mixed":
            return "unrefined-mixed"
        if self.kind == "k":
            return "unrefined-k"
        return None


@dataclass(frozen=True)
class FactorList:
    vs: VarSpec
    unit: Fraction
    factors: tuple[Factor, ...] = field(default_factory=tuple)

    def expand(self) -> MultiPoly:
        R = self.vs.ring
        num = R(QQ(self.unit.numerator, self.unit.denominator))
        den = R.one
        for f in self.factors:
            if f.exp >= 0:
                num *= f.poly**f.exp
            else:
                den *= f.poly ** (-f.exp)
        return num.exquo(den)

    def pairs(self):
        return [(f.poly, f.exp) for f in self.factors]


# -- content splits -------------------------------------------------------------


def _content_split(p: MultiPoly, keep: slice):
    """gcd of the coefficients of p viewed as a polynomial in the variables
    outside ``keep``; returns (content, p / content)."""
    R = p.ring
    lo, hi = keep.start, keep.stop
    groups: dict[tuple, dict] = {}
    for e, c in p.items():
        outer = e[:lo] + (0,) * (hi - lo) + e[hi:]
        inner = (0,) * lo + e[lo:hi] + (0,) * (len(e) - hi)
        groups.setdefault(outer, {})[inner] = c
    g = None
    for terms in groups.values():
        q = R.from_dict(terms)
        g = q if g is None else g.gcd(q)
        if g.is_ground:
            return R.one, p
    _, g = int_primitive(g)
    return g, p.exquo(g)


def separate_t(p: MultiPoly, vs: VarSpec):
    """(g, rest) with g in Q[t] the t-content of p and rest = p/g.

    The split g(t)*h(k) succeeded iff ``rest`` is free of t.
    """
    if not p:
        raise ValueError("separate_t of zero")
    if vs.m == 0:
        return vs.ring.one, p
    return _content_split(p, slice(0, vs.m))


def separate_k(p: MultiPoly, vs: VarSpec):
    """(g, rest) with g in Q[k] the k-content of p."""
    if not p:
        raise ValueError("separate_k of zero")
    if vs.n == 0:
        return vs.ring.one, p
    return _content_split(p, slice(vs.m, vs.m + vs.n))


def split_t_k_mixed(p: MultiPoly, vs: VarSpec):
    """p = c * pt * pk * pmix with pt in Q[t], pk in Q[k] (both integer
    primitive with positive LC) and pmix free of pure-t and pure-k factors."""
    c, p = int_primitive(p)
    pt, rest = separate_t(p, vs)
    pk, mix = separate_k(rest, vs)
    c2, mix = int_primitive(mix)
    return c * c2, pt, pk, mix


# -- integer-linear directions ----------------------------------------------------


def _primitive_int_vector(vals) -> tuple[int, ...] | None:
    fr = [Fraction(x) for x in vals]
    if not any(fr):
        return None
    den = _fold(lcm, (f.denominator for f in fr), 1)
    ints = [int(f * den) for f in fr]
    g = _fold(gcd, (abs(x) for x in ints), 0)
    ints = [x // g for x in ints]
    first = next(x for x in ints if x)
    if first < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def linear_form(v, vs: VarSpec) -> MultiPoly:
    R = vs.ring
    out = R.zero
    for j, c in enumerate(v, start=1):
        if c:
            out += c * vs.k(j)
    return out


def compose_univariate(r: MultiPoly, arg: MultiPoly) -> MultiPoly:
    """r(arg) for r in Q[z] and arg in the multivariate ring."""
    R = arg.ring
    out = R.zero
    for e in range(r.degree(), -1, -1):
        out = out * arg + R(r.coeff(Z**e) if e else r.coeff(1))
    return out


def top_form(p: MultiPoly) -> MultiPoly:
    d = tdeg(p)
    return p.ring.from_dict({e: c for e, c in p.items() if sum(e) == d})


def direction_composed(p: MultiPoly, vs: VarSpec):
    """Return (v, r) with p = r(v.k), v primitive with positive first nonzero
    entry and r in Q[z]; None when no such representation exists."""
    if p.is_ground or t_support(p, vs):
        return None
    m, n = vs.m, vs.n
    H = top_form(p)
    d = sum(next(iter(H.keys())))
    i0 = None
    for j in range(n):
        e = [0] * (m + n)
        e[m + j] = d
        c = H.get(tuple(e))
        if c:
            i0, c0 = j, c
            break
    if i0 is None:
        return None
    ratios = []
    for j in range(n):
        if j == i0:
            ratios.append(Fraction(1))
            continue
        e = [0] * (m + n)
        e[m + i0] = d - 1
        e[m + j] += 1
        c = H.get(tuple(e), QQ(0))
        ratios.append(to_fraction(c) / (d * to_fraction(c0)))
    v = _primitive_int_vector(ratios)
    # r(z) = p evaluated at k_{i0} = z / v_{i0}, other k = 0
    i1 = next(j for j, x in enumerate(v) if x)
    scale = QQ(1, v[i1])
    rterms: dict[tuple, object] = {}
    for e, c in p.items():
        if any(e[m + j] for j in range(n) if j != i1):
            continue
        k = e[m + i1]
        rterms[(k,)] = rterms.get((k,), QQ(0)) + c * scale**k
    r = ZRING.from_dict({e: c for e, c in rterms.items() if c})
    if compose_univariate(r, linear_form(v, vs)) != p:
        return None
    return v, r


def _orth_basis(v):
    i0 = next(j for j, x in enumerate(v) if x)
    out = []
    for i in range(len(v)):
        if i == i0:
            continue
        w = [0] * len(v)
        w[i] = v[i0]
        w[i0] -= v[i]
        out.append(w)
    return out


def shift_vector(p: MultiPoly, vs: VarSpec, w) -> MultiPoly:
    subs = [(vs.k(j + 1), vs.k(j + 1) + s) for j, s in enumerate(w) if s]
    if not subs:
        return p
    return p.compose(subs)


def extract_direction(p: MultiPoly, v, vs: VarSpec) -> MultiPoly:
    """Largest factor of p (k-only) invariant under all shifts orthogonal to v,
    i.e. of the form r(v.k)."""
    G = p
    basis = _orth_basis(v)
    changed = True
    while changed and not G.is_ground:
        changed = False
        for w in basis:
            G2 = G.gcd(shift_vector(G, vs, w))
            if tdeg(G2) < tdeg(G):
                G = G2
                changed = True
                if G.is_ground:
                    break
    _, G = int_primitive(G)
    return G


def candidate_directions(p: MultiPoly, vs: VarSpec) -> list[tuple[int, ...]]:
    """Directions v for which v.k divides the top-degree form of p."""
    H = top_form(p)
    if vs.n == 1:
        return [(1,)]
    if tdeg(H) > MAX_UNIVARIATE_DEGREE:
        raise Unsupported(f"top form of degree {tdeg(H)} exceeds guard")
    out = []
    for f, _ in H.factor_list()[1]:
        if tdeg(f) != 1:
            continue
        vals = []
        for j in range(vs.n):
            e = [0] * vs.nvars
            e[vs.m + j] = 1
            vals.append(to_fraction(f.get(tuple(e), QQ(0))))
        v = _primitive_int_vector(vals)
        if v is not None and v not in out:
            out.append(v)
    return out


def factor_univariate(r: MultiPoly):
    """Monic irreducible factors of r in Q[z] with multiplicities, plus the
    leading coefficient."""
    if r.degree() > MAX_UNIVARIATE_DEGREE:
        raise Unsupported(f"univariate degree {r.degree()} exceeds {MAX_UNIVARIATE_DEGREE}")
    lc = r.LC
    out = []
    for f, e in r.factor_list()[1]:
        out.append((f.monic(), e))
    return lc, out


def split_composed(p: MultiPoly, vs: VarSpec):
    """Split a squarefree k-only polynomial into irreducible composed factors
    [(v, rho, poly)] and a residual with no factor of the form r(v.k)."""
    composed = []
    try:
        dirs = candidate_directions(p, vs)
    except Unsupported:
        return composed, p, False
    rest = p
    for v in dirs:
        if rest.is_ground:
            break
        G = extract_direction(rest, v, vs)
        if G.is_ground:
            continue
        dc = direction_composed(G, vs)
        if dc is None or dc[0] != tuple(v):
            continue
        _, r = dc
        try:
            _, rhos = factor_univariate(r)
        except Unsupported:
            composed.append((tuple(v), None, G))
            rest = rest.exquo(G)
            continue
        L = linear_form(v, vs)
        for rho, _ in rhos:
            _, q = int_primitive(compose_univariate(rho, L))
            composed.append((tuple(v), rho, q))
        rest = rest.exquo(G)
    _, rest = int_primitive(rest)
    return composed, rest, True


def factor_refine(p: MultiPoly, vs: VarSpec) -> FactorList:
    """Refine p into a FactorList whose product reconstructs p exactly."""
    if not p:
        raise ValueError("factor_refine of zero")
    _, prim = int_primitive(p)
    if prim.is_ground:
        return FactorList(vs, to_fraction(p.LC), ())
    factors: list[Factor] = []
    for q, e in prim.sqf_list()[1]:
        _, pt, pk, mix = split_t_k_mixed(q, vs)
        if not pt.is_ground:
            factors.append(Factor(pt, e, "t"))
        if not pk.is_ground:
            comp, rest, ok = split_composed(pk, vs)
            for v, rho, poly in comp:
                factors.append(Factor(poly, e, "composed", v, rho, rho is not None))
            if not rest.is_ground:
                factors.append(Factor(rest, e, "k", conclusive=ok))
        if not mix.is_ground:
            factors.append(Factor(mix, e, "mixed"))
    prod = FactorList(vs, Fraction(1), tuple(factors)).expand()
    unit = to_fraction(p.LC) / to_fraction(prod.LC)
    return FactorList(vs, unit, tuple(factors))


def factor_rational(f, vs: VarSpec):
    """Combined refinement of num/den of a RatFunc: (unit, [Factor]) with
    negative exponents for denominator factors."""
    fn = factor_refine(f.num, vs)
    fd = factor_refine(f.den, vs)
    facs = list(fn.factors) + [
        Factor(x.poly, -x.exp, x.kind, x.v, x.rho, x.conclusive) for x in fd.factors
    ]
    return fn.unit / fd.unit, facs
