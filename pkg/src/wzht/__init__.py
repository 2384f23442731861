"""Certificate systems of mixed continuous/discrete hypergeometric terms,
their structure decompositions and the conjugate-properness decision."""

from .certsys import (
    CertificateSystem,
    CompatReport,
    are_conjugate,
    certificates_of,
    check_compatibility,
)
from .christopher import ContinuousDecomp, decompose_continuous, verify_continuous
from .exactarith import RatFunc, VarSpec, derive, factor_refine, reduce, shift
from .holonomy import (
    HolonomyVerdict,
    decide_conjugate_proper,
    decide_from_certificates,
    holonomic_rational,
    is_proper,
)
from .mixedsplit import StructureData, full_structure, split_mixed, structure_to_term
from .oresato import ShiftDecomp, decompose_shift, product_range, verify_shift
from .terms import (
    EvalContext,
    FactorialTerm,
    PoleAt,
    StandardFormTerm,
    eval_factorial_term,
    eval_term,
    normalize_standard,
    rising,
    rising_star,
)

__version__ = "0.1.0"
