import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gen import random_term
from wzht.certsys import CertificateSystem, are_conjugate, certificates_of
from wzht.errors import ZeroInput
from wzht.exactarith import RatFunc, VarSpec
from wzht.holonomy import (
    HOLONOMIC,
    INCONCLUSIVE,
    NOT_HOLONOMIC,
    decide_conjugate_proper,
    decide_from_certificates,
    holonomic_rational,
    is_proper,
)
from wzht.terms import FactorialTerm, StandardFormTerm, normalize_standard

V12 = VarSpec(1, 2)
V02 = VarSpec(0, 2)
t, k1, k2 = V12.t(1), V12.k(1), V12.k(2)
ONE = Fraction(1)


def inv(vs, p):
    return RatFunc(vs, vs.ring.one, p)


def test_is_proper_examples():
    vs = VarSpec(1, 1)
    term = StandardFormTerm.make(vs, h=[RatFunc(vs, vs.t(1))], T=FactorialTerm((ONE,), (), ((ONE, (1,)),)))
    assert is_proper(term)
    bad = StandardFormTerm.make(V02, f=inv(V02, V02.k(1) - V02.k(2)))
    assert not is_proper(bad)
    assert is_proper(normalize_standard(bad))
    assert not is_proper(StandardFormTerm.make(V12, f=inv(V12, t + k1)))


def test_rational_positive():
    v = holonomic_rational(inv(V12, (k1 - k2) * (t + 1)))
    assert v.status == HOLONOMIC and v.holonomic
    assert is_proper(v.witness)
    assert are_conjugate(certificates_of(v.witness), certificates_of(StandardFormTerm.make(V12, f=inv(V12, (k1 - k2) * (t + 1)))))


@pytest.mark.parametrize(
    "vs, p",
    [
        (V12, t + k1),
        (V02, V02.k(1) ** 2 + V02.k(2) ** 2),
        (V12, t * k1 + 1),
    ],
    ids=["mixed-linear", "sum-of-squares", "mixed-product"],
)
def test_rational_negatives(vs, p):
    v = holonomic_rational(inv(vs, p))
    assert v.status == NOT_HOLONOMIC and v.witness is None
    assert v.offender == p


def test_polynomial_is_holonomic_with_trivial_witness():
    f = RatFunc(V12, t * k1**2 + k2)
    v = holonomic_rational(f)
    assert v.status == HOLONOMIC and v.witness.f == f and v.witness.T == FactorialTerm.trivial(2)


def test_zero_rejected():
    with pytest.raises(ZeroInput):
        holonomic_rational(RatFunc.const(V12, 0))


def test_offender_found_among_good_factors():
    p = (t + 1) * (k1 + 2 * k2) * (t + k2)
    v = holonomic_rational(inv(V12, p))
    assert v.status == NOT_HOLONOMIC and v.offender == t + k2


def test_abs_diff_from_certificates():
    d = V02.k(1) - V02.k(2)
    c = CertificateSystem(V02, (), (RatFunc(V02, d + 1, d), RatFunc(V02, d - 1, d)))
    v = decide_from_certificates(c)
    assert v.status == HOLONOMIC and is_proper(v.witness)
    assert certificates_of(v.witness) == c


def test_reciprocal_linear_witness_has_parts():
    d = V02.k(1) - V02.k(2)
    term = StandardFormTerm.make(V02, f=inv(V02, d))
    v = decide_conjugate_proper(term)
    assert v.status == HOLONOMIC
    assert v.witness.T.num_parts == ((Fraction(0), (1, -1)),)
    assert v.witness.T.den_parts == ((Fraction(1), (1, -1)),)


def test_mixed_term_not_holonomic():
    v = decide_conjugate_proper(StandardFormTerm.make(V12, f=inv(V12, t + k1)))
    assert v.status == NOT_HOLONOMIC


def test_constant_term():
    assert decide_conjugate_proper(StandardFormTerm.make(V12)).status == HOLONOMIC


def test_statuses_distinct():
    assert len({HOLONOMIC, NOT_HOLONOMIC, INCONCLUSIVE}) == 3


@st.composite
def admissible(draw):
    den = V12.ring.one
    if draw(st.booleans()):
        den *= t ** draw(st.integers(1, 2)) + draw(st.integers(1, 3))
    for _ in range(draw(st.integers(1, 3))):
        a, b = draw(st.integers(-2, 2)), draw(st.integers(-2, 2))
        if a == b == 0:
            a = 1
        den *= (a * k1 + b * k2 + draw(st.integers(-3, 3))) ** draw(st.integers(1, 2))
    if draw(st.booleans()):
        den *= (k1 + k2) ** 2 + 1
    return RatFunc(V12, t + k1 + 1, den)


@settings(max_examples=40, deadline=None)
@given(admissible())
def test_admissible_denominators_are_holonomic(f):
    v = holonomic_rational(f)
    assert v.status == HOLONOMIC
    assert is_proper(v.witness)
    assert are_conjugate(certificates_of(v.witness), certificates_of(StandardFormTerm.make(V12, f=f)))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_verdicts_agree(seed):
    # deciding from a term and from its certificates gives the same status
    term = random_term(random.Random(seed), 1, 2)
    a = decide_conjugate_proper(term).status
    b = decide_from_certificates(certificates_of(term)).status
    assert a == b
