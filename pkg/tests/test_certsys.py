import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from gen import random_term
from oracle import expr
from wzht.certsys import (
    CertificateSystem,
    are_conjugate,
    certificates_of,
    check_compatibility,
    shift_guards,
)
from wzht.errors import InputError
from wzht.exactarith import RatFunc, VarSpec
from wzht.terms import EvalContext, FactorialTerm, StandardFormTerm, eval_term, rising, rising_star

V11 = VarSpec(1, 1)
V02 = VarSpec(0, 2)
t, k = V11.t(1), V11.k(1)
k1, k2 = V02.k(1), V02.k(2)


def abs_diff_system():
    d = k1 - k2
    return CertificateSystem(V02, (), (RatFunc(V02, d + 1, d), RatFunc(V02, d - 1, d)))


def test_mixed_example_is_compatible():
    c = CertificateSystem(V11, (RatFunc(V11, k, t),), (RatFunc(V11, t, k + 1),))
    rep = check_compatibility(c)
    assert rep.ok and rep.violations == ()
    # DS by hand: D_t(b)/b = 1/t = S_k(a) - a
    b, a = c.b[0], c.a[0]
    assert b.derive(1) / b == RatFunc(V11, V11.ring.one, t) == a.shift(1) - a


def test_abs_diff_system_is_compatible():
    assert check_compatibility(abs_diff_system()).ok


def test_trivial_system_is_compatible():
    for vs in (V11, V02, VarSpec(2, 3)):
        assert check_compatibility(CertificateSystem.trivial(vs)).ok


def test_ss_violation_reported():
    c = CertificateSystem(V02, (), (RatFunc(V02, k1), RatFunc(V02, k1)))
    rep = check_compatibility(c)
    assert not rep.ok
    (tag, ij, r), = rep.violations
    assert (tag, ij) == ("SS", (1, 2))
    assert r == RatFunc(V02, V02.ring.one, k1)


def test_dd_violation_reported():
    v2 = VarSpec(2, 0)
    c = CertificateSystem(v2, (RatFunc(v2, v2.t(2)), RatFunc.const(v2, 0)), ())
    assert [x[0] for x in check_compatibility(c).violations] == ["DD"]


def test_system_shape_checked():
    with pytest.raises(InputError):
        CertificateSystem(V11, (), (RatFunc(V11, k),))
    with pytest.raises(InputError):
        CertificateSystem(V11, (RatFunc(V11, k),), (RatFunc.const(V11, 0),))


def test_certificates_of_geometric():
    term = StandardFormTerm.make(V11, h=[RatFunc(V11, t)])
    c = certificates_of(term)
    assert c.a == (RatFunc(V11, k, t),)
    assert c.b == (RatFunc(V11, t),)


def test_certificates_of_rising_star():
    v = VarSpec(0, 1)
    T = FactorialTerm((Fraction(1),), ((Fraction(2), (1,)),))
    c = certificates_of(StandardFormTerm.make(v, T=T))
    assert c.a == () and c.b == (RatFunc(v, v.k(1) + 2),)


def test_certificates_of_constant():
    vs = VarSpec(2, 2)
    assert certificates_of(StandardFormTerm.make(vs)) == CertificateSystem.trivial(vs)


def test_conjugacy_examples():
    d = RatFunc(V02, k1 - k2)
    assert are_conjugate(certificates_of(StandardFormTerm.make(V02, f=d)), abs_diff_system())
    v = VarSpec(0, 1)
    alpha = Fraction(-2)
    # (alpha)_k and (alpha)*_k share b = k + alpha; the dictionary yields it once
    c = certificates_of(StandardFormTerm.make(v, T=FactorialTerm((Fraction(1),), ((alpha, (1,)),))))
    assert c.b == (RatFunc(v, v.k(1) + alpha),)
    kk = range(0, 6)
    for x in kk:
        assert (x + alpha) * rising(alpha, x) == rising(alpha, x + 1)
        if x + alpha != 0:
            assert (x + alpha) * rising_star(alpha, x) == rising_star(alpha, x + 1)
    c1 = CertificateSystem(v, (), (RatFunc(v, v.k(1) + 1),))
    c2 = CertificateSystem(v, (), (RatFunc(v, v.k(1) + 2),))
    assert not are_conjugate(c1, c2)


def test_certificates_match_sympy_oracle():
    # H = (t + k) * t^k * exp(t^2) * (t+1)^(1/2); a and b from sympy
    vs = V11
    term = StandardFormTerm.make(
        vs,
        f=RatFunc(vs, t + k),
        g0=RatFunc(vs, t**2),
        powers=[(Fraction(1, 2), t + 1)],
        h=[RatFunc(vs, t)],
    )
    c = certificates_of(term)
    T, K = sp.symbols("t1 k1")
    H = (T + K) * T**K * sp.exp(T**2) * sp.sqrt(T + 1)
    assert sp.simplify(expr(c.a[0]) - sp.diff(H, T) / H) == 0
    assert sp.simplify(expr(c.b[0]) - H.subs(K, K + 1) / H) == 0


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 2), st.integers(1, 3))
def test_certificates_of_terms_are_compatible(seed, m, n):
    term = random_term(random.Random(seed), m, n)
    assert check_compatibility(certificates_of(term)).ok


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 2), st.integers(1, 2))
def test_shift_certificates_match_values(seed, m, n):
    rng = random.Random(seed)
    term = random_term(rng, m, n)
    c = certificates_of(term)
    guards = shift_guards(term)
    ctx = EvalContext(tuple(Fraction(rng.randint(2, 9), rng.randint(1, 5)) for _ in range(m)))
    for _ in range(10):
        kk = tuple(rng.randint(-4, 4) for _ in range(n))
        for j in range(n):
            k2_ = kk[:j] + (kk[j] + 1,) + kk[j + 1 :]
            pt = list(ctx.t_values) + list(kk)
            if any(RatFunc.poly(term.vs, g).evaluate(pt) in (None, 0) for g in guards[j]):
                continue
            h0, h1 = eval_term(term, ctx, kk), eval_term(term, ctx, k2_)
            bv = c.b[j].evaluate(pt)
            assert h1 == h0 * Fraction(str(bv))
