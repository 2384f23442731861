"""Deciding conjugate-properness of terms.

All factors of a standard-form term other than the rational part f are
holonomic, so the verdict depends on f alone: f is admissible iff its
denominator is a product of a polynomial in t and factors r(v.k) with v an
integer vector (over the algebraic closure these split into integer-linear
forms alpha + v.k).
"""

from __future__ import annotations

from dataclasses import dataclass

from .certsys import CertificateSystem
from .errors import UnrefinedFactor, ZeroInput
from .exactarith.ratfunc import RatFunc
from .exactarith.refine import factor_refine
from .exactarith.ring import MultiPoly
from .mixedsplit import full_structure, structure_to_term
from .terms import StandardFormTerm, normalize_standard

HOLONOMIC = "Holonomic"
NOT_HOLONOMIC = "NotHolonomic"
INCONCLUSIVE = "InconclusiveUnrefined"


@dataclass(frozen=True)
class HolonomyVerdict:
    status: str
    witness: StandardFormTerm | None = None
    offender: MultiPoly | None = None

    @property
    def holonomic(self) -> bool:
        return self.status == HOLONOMIC


def is_proper(term: StandardFormTerm) -> bool:
    # factorial parts are built from nonvanishing rising factorials and
    # nonzero mu, so T is never the zero sequence; only f matters
    return term.f.is_poly and all(m != 0 for m in term.T.mu)


def _classify(den: MultiPoly, vs):
    """(status, offender) from the refined denominator factors."""
    fl = factor_refine(den, vs)
    inconclusive = None
    for fac in fl.factors:
        if not fac.conclusive:
            inconclusive = inconclusive or fac.poly
            continue
        if fac.kind in ("mixed", "k"):
            return NOT_HOLONOMIC, fac.poly
    if inconclusive is not None:
        return INCONCLUSIVE, inconclusive
    return HOLONOMIC, None


def _decide_term(term: StandardFormTerm) -> HolonomyVerdict:
    status, offender = _classify(term.f.den, term.vs)
    if status != HOLONOMIC:
        return HolonomyVerdict(status, None, offender)
    try:
        witness = normalize_standard(term)
    except UnrefinedFactor as e:  # pragma: no cover - classification already passed
        return HolonomyVerdict(INCONCLUSIVE, None, e.factor)
    return HolonomyVerdict(HOLONOMIC, witness, None)


def holonomic_rational(f: RatFunc) -> HolonomyVerdict:
    if f.is_zero:
        raise ZeroInput("the zero function has no certificates")
    return _decide_term(StandardFormTerm.make(f.vs, f=f))


def decide_conjugate_proper(term: StandardFormTerm) -> HolonomyVerdict:
    return _decide_term(term)


def decide_from_certificates(c: CertificateSystem) -> HolonomyVerdict:
    """Verdict for any term with certificates ``c``."""
    return decide_conjugate_proper(structure_to_term(full_structure(c)))


__all__ = [
    "HOLONOMIC",
    "INCONCLUSIVE",
    "NOT_HOLONOMIC",
    "HolonomyVerdict",
    "decide_conjugate_proper",
    "decide_from_certificates",
    "holonomic_rational",
    "is_proper",
]
