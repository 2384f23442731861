from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from oracle import expr, same
from wzht.errors import ZeroDenominator
from wzht.exactarith import (
    RatFunc,
    VarSpec,
    derive,
    direction_composed,
    factor_refine,
    log_derivative,
    reduce,
    separate_k,
    separate_t,
    shift,
    shift_quotient,
)
from wzht.exactarith.blocks import product_range
from wzht.exactarith.refine import ZRING, Z, factor_univariate
from wzht.exactarith.ring import evaluate, int_primitive, tdeg
from wzht.exactarith.telescope import dispersions, telescope

V11 = VarSpec(1, 1)
V02 = VarSpec(0, 2)
V12 = VarSpec(1, 2)
t, k = V11.t(1), V11.k(1)
k1, k2 = V02.k(1), V02.k(2)


# -- reduce / derive / shift ------------------------------------------------------


def test_reduce_cancels_common_factor():
    r = reduce(k**2 - 1, k - 1, V11)
    assert r == RatFunc(V11, k + 1)
    assert r.den == V11.ring.one


def test_reduce_coprime_unchanged():
    r = reduce(k1 - k2 + 1, k1 - k2, V02)
    assert r.num == k1 - k2 + 1 and r.den == k1 - k2
    assert (k1 - k2 + 1).gcd(k1 - k2) == 1


def test_reduce_zero_numerator():
    assert reduce(V11.ring.zero, t, V11).is_zero


def test_reduce_zero_denominator():
    with pytest.raises(ZeroDenominator):
        reduce(t, V11.ring.zero, V11)


def test_derive_examples():
    assert derive(RatFunc(V11, k, t), 1) == RatFunc(V11, -k, t**2)
    v2 = VarSpec(2, 0)
    assert derive(RatFunc(v2, v2.t(1) * v2.t(2)), 2) == RatFunc(v2, v2.t(1))
    r = derive(RatFunc(V11, V11.ring.one, t + 1), 1)
    assert same(r, sp.diff(1 / (sp.Symbol("t1") + 1)))


def test_shift_examples():
    d = RatFunc(V02, k1 - k2)
    assert shift(d, 1, 1) == RatFunc(V02, k1 - k2 + 1)
    assert shift(d, 2, 1) == RatFunc(V02, k1 - k2 - 1)
    assert shift(RatFunc(V11, V11.ring.one, k + 1), 1, -1) == RatFunc(V11, V11.ring.one, k)


def test_log_derivative_and_shift_quotient():
    f = RatFunc(V11, t**2 * k + 1, t - k)
    assert log_derivative(f, 1) == derive(f, 1) / f
    assert shift_quotient(f, 1) == shift(f, 1) / f


# -- separations and refinement ----------------------------------------------------


def test_separate_t_product():
    g, rest = separate_t(t * k + t + k + 1, V11)
    assert (g, rest) == (t + 1, k + 1)
    assert sp.expand(expr(g) * expr(rest) - expr(t * k + t + k + 1)) == 0


def test_separate_t_without_t_content():
    g, rest = separate_t(k1 + k2, V02)
    assert g == 1 and rest == k1 + k2


def test_separate_t_mixed_fails():
    g, rest = separate_t(V12.t(1) + V12.k(1), V12)
    assert g == 1
    assert any(e[0] for e in rest.monoms())  # still depends on t1


def test_separate_k_product():
    g, rest = separate_k(t * k + t + k + 1, V11)
    assert (g, rest) == (k + 1, t + 1)


def test_direction_composed_examples():
    v, r = direction_composed(k1**2 + 2 * k1 * k2 + k2**2 + 1, V02)
    assert v == (1, 1) and r == Z**2 + 1
    assert sp.expand(expr(r).subs(sp.Symbol("z"), expr(k1 + k2)) - expr(k1**2 + 2 * k1 * k2 + k2**2 + 1)) == 0
    assert direction_composed(k1**2 + k2**2, V02) is None
    assert direction_composed(k1 - k2, V02) == ((1, -1), Z)


def test_factor_refine_examples():
    fl = factor_refine((V12.k(1) - V12.k(2)) ** 2 * (V12.t(1) + 1), V12)
    got = {(f.poly, f.exp, f.kind) for f in fl.factors}
    assert got == {(V12.k(1) - V12.k(2), 2, "composed"), (V12.t(1) + 1, 1, "t")}
    assert fl.expand() == (V12.k(1) - V12.k(2)) ** 2 * (V12.t(1) + 1)

    fl = factor_refine(k**2 + 3 * k + 2, V11)
    assert sorted((f.poly, f.exp) for f in fl.factors) == sorted([(k + 1, 1), (k + 2, 1)])

    fl = factor_refine(V12.t(1) + V12.k(1), V12)
    assert [(f.poly, f.flag) for f in fl.factors] == [(V12.t(1) + V12.k(1), "unrefined-mixed")]


def test_factor_refine_sum_of_squares_unrefined():
    fl = factor_refine(k1**2 + k2**2, V02)
    assert [f.flag for f in fl.factors] == ["unrefined-k"]


def test_factor_univariate():
    lc, facs = factor_univariate(2 * Z**2 + 6 * Z + 4)
    assert lc == 2 and sorted(facs) == sorted([(Z + 1, 1), (Z + 2, 1)])


# -- telescoping and products --------------------------------------------------------


def test_dispersions_and_telescope():
    pos = V11.k_pos(1)
    A, B = k + 3, k
    assert dispersions(A, B, pos) == [3]
    gn, gd, A2, B2 = telescope(A, B, pos)
    G = RatFunc(V11, gn, gd)
    assert G.shift(1) / G * RatFunc(V11, A2, B2) == RatFunc(V11, A, B)
    assert A2.is_ground and B2.is_ground


def test_product_range_examples():
    base = RatFunc.poly(V11, k)
    assert product_range(Z, base, 0, 2) == RatFunc(V11, k**2 + k)
    assert product_range(Z, base, 0, -1) == RatFunc(V11, V11.ring.one, k - 1)
    assert product_range(Z**2 + 1, base, 3, 3) == RatFunc.const(V11, 1)


def test_tdeg_and_int_primitive():
    assert tdeg(t**2 * k + k) == 3
    assert tdeg(V11.ring.zero) == -1
    c, p = int_primitive(V11.ring(Fraction(2, 3)) * t + 4)
    assert c * p == V11.ring(Fraction(2, 3)) * t + 4
    assert all(x.denominator == 1 for x in p.coeffs())


# -- properties ---------------------------------------------------------------------

small = st.integers(-3, 3)


@st.composite
def polys(draw, vs=V11, nonzero=False):
    R = vs.ring
    p = R.zero
    for _ in range(draw(st.integers(1, 4))):
        e = tuple(draw(st.integers(0, 2)) for _ in range(vs.nvars))
        p += R.from_dict({e: draw(small)})
    if nonzero and not p:
        p = R.one
    return p


@st.composite
def ratfuncs(draw, vs=V11):
    return RatFunc(vs, draw(polys(vs)), draw(polys(vs, nonzero=True)))


@settings(max_examples=60, deadline=None)
@given(ratfuncs(), ratfuncs())
def test_derive_is_a_derivation(f, g):
    assert derive(f * g, 1) == derive(f, 1) * g + f * derive(g, 1)


@settings(max_examples=60, deadline=None)
@given(ratfuncs(), st.integers(-3, 3))
def test_shift_inverse_and_multiplicative(f, s):
    assert shift(shift(f, 1, s), 1, -s) == f
    assert shift(f * f, 1, s) == shift(f, 1, s) ** 2


@settings(max_examples=60, deadline=None)
@given(ratfuncs())
def test_derive_commutes_with_shift(f):
    assert derive(shift(f, 1), 1) == shift(derive(f, 1), 1)


@settings(max_examples=60, deadline=None)
@given(ratfuncs())
def test_derive_matches_sympy(f):
    tt = sp.Symbol("t1")
    assert sp.simplify(expr(derive(f, 1)) - sp.diff(expr(f), tt)) == 0


@settings(max_examples=40, deadline=None)
@given(polys(V12, nonzero=True))
def test_factor_refine_expands_back(p):
    fl = factor_refine(p, V12)
    assert fl.expand() == p


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.sampled_from([(1, 0), (0, 1), (1, -1), (2, 1), (1, 2)]), small), min_size=1, max_size=3))
def test_products_of_linear_forms_are_composed(forms):
    p = V02.ring.one
    for (a, b), c in forms:
        p *= a * k1 + b * k2 + c
    fl = factor_refine(p, V02)
    assert all(f.kind == "composed" for f in fl.factors)
    assert fl.expand() == p


@settings(max_examples=40, deadline=None)
@given(polys(V11, nonzero=True), st.integers(-2, 2), st.integers(-2, 2))
def test_evaluate_agrees_with_sympy(p, a, b):
    from sympy import QQ

    val = evaluate(p, [QQ(a), QQ(b)])
    assert expr(p).subs({sp.Symbol("t1"): a, sp.Symbol("k1"): b}) == sp.Rational(str(val))
