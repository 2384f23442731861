"""Shift-telescoping split of a rational function along one k-direction.

Given A/B and a generator position x, find G with

    A/B = (G(x+1) / G(x)) * A'/B'

where no factor of A' is an integer shift (in x) of a factor of B'.  When
A/B is a shift quotient times a constant, A'/B' is that constant.
"""

from __future__ import annotations

import random

from sympy import QQ

from .ring import MultiPoly, partial_eval, shift_poly, to_fraction
from .refine import ZRING


def _univariate_image(p: MultiPoly, pos: int, point: dict):
    q = partial_eval(p, point)
    terms = {}
    for e, c in q.items():
        terms[(e[pos],)] = terms.get((e[pos],), QQ(0)) + c
    return ZRING.from_dict({e: c for e, c in terms.items() if c})


def _specialize(A: MultiPoly, B: MultiPoly, pos: int, rng: random.Random):
    others = [i for i in range(A.ring.ngens) if i != pos]
    da, db = A.degree(pos), B.degree(pos)
    for _ in range(20):
        point = {i: QQ(rng.randint(-97, 97)) for i in others}
        a = _univariate_image(A, pos, point)
        b = _univariate_image(B, pos, point)
        if a.degree() == da and b.degree() == db:
            return a, b
    raise ArithmeticError("no degree-preserving specialization found")


def dispersions(A: MultiPoly, B: MultiPoly, pos: int, seed: int = 0) -> list[int]:
    """Nonzero integers h for which gcd(A, B(x+h)) may be nontrivial.

    Computed on a random univariate image, so the list is a superset of the
    true set; callers verify with exact gcds.
    """
    if A.degree(pos) <= 0 or B.degree(pos) <= 0:
        return []
    a, b = _specialize(A, B, pos, random.Random(seed))
    fa = [p.monic() for p, _ in a.factor_list()[1]]
    fb = [q.monic() for q, _ in b.factor_list()[1]]
    z = ZRING.gens[0]
    out = set()
    for p in fa:
        d = p.degree()
        for q in fb:
            if q.degree() != d:
                continue
            h = to_fraction(p.get((d - 1,), QQ(0)) - q.get((d - 1,), QQ(0))) / d
            if h.denominator != 1 or h == 0:
                continue
            h = int(h)
            if p == q.compose(z, z + h):
                out.add(h)
    return sorted(out, key=lambda h: (abs(h), h < 0))


def telescope(A: MultiPoly, B: MultiPoly, pos: int, seed: int = 0):
    """Return (Gnum, Gden, A', B') with A/B = S(G)/G * A'/B' and G = Gnum/Gden."""
    R = A.ring
    gn, gd = R.one, R.one
    for h in dispersions(A, B, pos, seed):
        while True:
            if h > 0:
                s = A.gcd(shift_poly(B, pos, h))
                if s.is_ground:
                    break
                A = A.exquo(s)
                B = B.exquo(shift_poly(s, pos, -h))
                for i in range(1, h + 1):
                    gn *= shift_poly(s, pos, -i)
            else:
                u = -h
                s = A.gcd(shift_poly(B, pos, -u))
                if s.is_ground:
                    break
                A = A.exquo(s)
                B = B.exquo(shift_poly(s, pos, u))
                for i in range(u):
                    gd *= shift_poly(s, pos, i)
    g = gn.gcd(gd)
    if not g.is_ground:
        gn, gd = gn.exquo(g), gd.exquo(g)
    return gn, gd, A, B
