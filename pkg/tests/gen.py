"""Seeded random generators for round-trip tests."""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

from wzht.exactarith.ratfunc import RatFunc
from wzht.exactarith.refine import Z, ZRING
from wzht.exactarith.ring import VarSpec
from wzht.oresato import ShiftDecomp
from wzht.terms import FactorialTerm, StandardFormTerm

ALPHAS = [Fraction(a) for a in range(-3, 4)] + [Fraction(1, 2), Fraction(-1, 2), Fraction(1, 3)]


def small_q(rng, nonzero=False):
    while True:
        x = Fraction(rng.randint(-4, 4), rng.choice([1, 1, 1, 2, 3]))
        if x or not nonzero:
            return x


def rand_vector(rng, n, lo=-2, hi=2):
    while True:
        v = tuple(rng.randint(lo, hi) for _ in range(n))
        if any(v):
            return v


def poly_in(rng, vs, positions, deg=2, terms=3):
    """Random polynomial in the generators at ``positions``."""
    R = vs.ring
    p = R.zero
    gens = [R.gens[i] for i in positions]
    for _ in range(terms):
        mono = R.one
        for _ in range(rng.randint(0, deg)):
            mono *= rng.choice(gens)
        p += mono * rng.randint(-3, 3)
    return p


def t_poly(rng, vs, deg=2, nonconst=True):
    pos = list(range(vs.m))
    while True:
        p = poly_in(rng, vs, pos, deg)
        if p and (not nonconst or not p.is_ground):
            return p


def linear_k(rng, vs):
    v = rand_vector(rng, vs.n)
    R = vs.ring
    return sum((c * vs.k(j + 1) for j, c in enumerate(v) if c), R.zero) + rng.randint(-3, 3)


def mixed_factor(rng, vs):
    R = vs.ring
    while True:
        p = poly_in(rng, vs, range(vs.m), 1, 2) + linear_k(rng, vs) + rng.choice([R.zero, vs.t(1) * vs.k(1)])
        if not p.is_ground:
            return p


def random_term(rng, m, n, max_parts=3) -> StandardFormTerm:
    vs = VarSpec(m, n)
    R = vs.ring
    one = RatFunc.const(vs, 1)
    # rational part
    num = R.one
    if rng.random() < 0.5:
        num = linear_k(rng, vs) if n else t_poly(rng, vs, 1)
    den = R.one
    for _ in range(rng.randint(0, 2)):
        kind = rng.random()
        if m and n and kind < 0.4:
            den *= mixed_factor(rng, vs)
        elif n and kind < 0.7:
            den *= linear_k(rng, vs)
        elif m and kind < 0.85:
            den *= t_poly(rng, vs, 2)
        elif n >= 2:
            den *= vs.k(1) ** 2 + vs.k(2) ** 2 + rng.randint(1, 3)
    if den.is_ground and den != 1:
        den = R.one
    f = RatFunc(vs, num, den)
    if f.is_zero:
        f = one
    g0 = RatFunc.const(vs, 0)
    powers = []
    h = [one] * n
    if m:
        if rng.random() < 0.5:
            g0 = RatFunc(vs, t_poly(rng, vs, 2))
            if rng.random() < 0.4:
                g0 = g0 / RatFunc(vs, vs.t(1) + rng.randint(1, 3))
        for _ in range(rng.randint(0, 2)):
            powers.append((small_q(rng, True), t_poly(rng, vs, 2)))
        h = []
        for _ in range(n):
            r = rng.random()
            if r < 0.4:
                h.append(one)
            elif r < 0.8:
                h.append(RatFunc(vs, vs.t(rng.randint(1, m)) + rng.randint(-2, 2)))
            else:
                h.append(RatFunc(vs, t_poly(rng, vs, 1), vs.t(1) + rng.randint(1, 3)))
    mu = tuple(small_q(rng, True) for _ in range(n))
    nump, denp = [], []
    if n:
        for _ in range(rng.randint(0, max_parts)):
            part = (rng.choice(ALPHAS), rand_vector(rng, n))
            (nump if rng.random() < 0.5 else denp).append(part)
    T = FactorialTerm(mu, tuple(nump), tuple(denp))
    return StandardFormTerm.make(vs, f, g0, powers, h, T)


def random_continuous(rng, m):
    """(g0, [(gamma, g)]) with squarefree denominator of g0."""
    vs = VarSpec(m, 0)
    g0 = RatFunc(vs, t_poly(rng, vs, 2, nonconst=False))
    if rng.random() < 0.6:
        d = t_poly(rng, vs, 1)
        g0 = g0 / RatFunc(vs, d)
    parts = []
    for _ in range(rng.randint(0, 3)):
        parts.append((small_q(rng, True), t_poly(rng, vs, 2)))
    return vs, g0, parts


def random_shift(rng, n, max_v=3, max_deg=3) -> ShiftDecomp:
    vs = VarSpec(0, n)
    R = vs.ring
    f = RatFunc.const(vs, 1)
    for _ in range(rng.randint(0, 2)):
        p = linear_k(rng, vs)
        if rng.random() < 0.3 and n >= 2:
            p = vs.k(1) ** 2 + vs.k(2) ** 2 + rng.randint(1, 2)
        if not p.is_ground:
            f = f * (RatFunc(vs, p) if rng.random() < 0.5 else RatFunc(vs, R.one, p))
    mu = tuple(small_q(rng, True) for _ in range(n))
    parts = {}
    for _ in range(rng.randint(0, max_v)):
        v = rand_vector(rng, n)
        g = next(x for x in v if x)
        if g < 0:
            v = tuple(-x for x in v)
        d = 0
        for x in v:
            d = gcd(d, abs(x))
        v = tuple(x // d for x in v)
        rn, rd = ZRING.one, ZRING.one
        for _ in range(rng.randint(1, max_deg)):
            if rng.random() < 0.8:
                fac = Z + int(rng.choice(range(-3, 4)))
            else:
                fac = Z**2 + rng.randint(1, 3)
            if rng.random() < 0.5:
                rn *= fac
            else:
                rd *= fac
        parts[v] = (rn, rd)
    out = []
    for v, (rn, rd) in sorted(parts.items()):
        g = rn.gcd(rd)
        rn, rd = rn.exquo(g).monic(), rd.exquo(g).monic()
        if rn != ZRING.one or rd != ZRING.one:
            out.append((v, rn, rd))
    return ShiftDecomp(vs, f, mu, tuple(out))
