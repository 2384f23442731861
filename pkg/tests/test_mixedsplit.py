import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gen import random_term
from wzht.certsys import CertificateSystem, certificates_of
from wzht.errors import NotCompatible
from wzht.exactarith import RatFunc, VarSpec
from wzht.exactarith.refine import Z, ZRING
from wzht.mixedsplit import full_structure, reconstruct_structure, split_mixed, structure_to_term, verify_structure

V11 = VarSpec(1, 1)
t, k = V11.t(1), V11.k(1)
ONE = RatFunc.const(V11, 1)
ZERO = RatFunc.const(V11, 0)


def exp_over_factorial():
    # t^k / k!
    return CertificateSystem(V11, (RatFunc(V11, k, t),), (RatFunc(V11, t, k + 1),))


def test_split_exp_over_factorial():
    f, h, abar, bbar = split_mixed(exp_over_factorial())
    assert f == ONE and h == [RatFunc(V11, t)]
    assert abar == [ZERO] and bbar == [RatFunc(V11, V11.ring.one, k + 1)]


def test_split_mixed_rational():
    c = CertificateSystem(V11, (RatFunc(V11, V11.ring.one, t + k),), (RatFunc(V11, t + k + 1, t + k),))
    f, h, abar, bbar = split_mixed(c)
    assert f == RatFunc(V11, t + k) and h == [ONE]
    assert abar == [ZERO] and bbar == [ONE]


def test_split_trivial():
    f, h, abar, bbar = split_mixed(CertificateSystem.trivial(V11))
    assert (f, h, abar, bbar) == (ONE, [ONE], [ZERO], [ONE])


def test_full_structure_exp_over_factorial():
    c = exp_over_factorial()
    sd = full_structure(c)
    assert sd.f == ONE and sd.h == (RatFunc(V11, t),)
    assert sd.cont.g0.is_zero and sd.cont.parts == ()
    assert sd.shift.mu == (1,)
    assert sd.shift.parts == (((1,), ZRING.one, Z + 1),)
    assert verify_structure(c, sd)


def test_full_structure_abs_diff():
    vs = VarSpec(0, 2)
    d = vs.k(1) - vs.k(2)
    c = CertificateSystem(vs, (), (RatFunc(vs, d + 1, d), RatFunc(vs, d - 1, d)))
    sd = full_structure(c)
    assert sd.f == RatFunc(vs, d) and sd.shift.parts == () and sd.shift.mu == (1, 1)
    assert sd.h == (RatFunc.const(vs, 1),) * 2


def test_full_structure_constant():
    vs = VarSpec(2, 2)
    sd = full_structure(CertificateSystem.trivial(vs))
    assert sd.f == RatFunc.const(vs, 1) and sd.shift.parts == () and sd.cont.parts == ()


def test_incompatible_rejected():
    c = CertificateSystem(V11, (RatFunc(V11, k),), (RatFunc(V11, t),))
    with pytest.raises(NotCompatible):
        full_structure(c)


def test_structure_term_has_same_certificates():
    c = exp_over_factorial()
    term = structure_to_term(full_structure(c))
    assert certificates_of(term) == c
    assert term.T.den_parts == ((Fraction(1), (1,)),)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 2), st.integers(1, 3))
def test_round_trip(seed, m, n):
    term = random_term(random.Random(seed), m, n)
    c = certificates_of(term)
    sd = full_structure(c)
    assert reconstruct_structure(sd) == c
    # h and bbar are separated: h free of k, the shift part free of t
    assert all(not x.depends_on_k() for x in sd.h)
    assert not sd.cont.g0.depends_on_k()
