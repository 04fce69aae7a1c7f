"""GF(2) Groebner-basis toolkit for the mod-2 cohomology of G~(2^t, 4)."""

from .poly import (
    Monomial,
    MonomialOrder,
    Ordering,
    PolyF2,
    VariableSpec,
    binom_mod2,
    bracket_coeff,
    compare_lex,
    divides,
    grade,
    lcm,
    leading_monomial,
    power,
)
from .groebner import (
    BettiProfile,
    GrobnerCertificate,
    OrderedGeneratorSet,
    ReductionTrace,
    buchberger_complete,
    is_groebner,
    normal_form,
    s_polynomial,
    standard_monomials,
    top_reduce,
)
from .oracle import quotient_dims_bruteforce
from .dualsw import DualSWTable, g_poly, wbar
from .kernel import BACKEND

__all__ = [
    "BACKEND",
    "BettiProfile",
    "DualSWTable",
    "GrobnerCertificate",
    "Monomial",
    "MonomialOrder",
    "Ordering",
    "OrderedGeneratorSet",
    "PolyF2",
    "ReductionTrace",
    "VariableSpec",
    "binom_mod2",
    "bracket_coeff",
    "buchberger_complete",
    "compare_lex",
    "divides",
    "g_poly",
    "grade",
    "is_groebner",
    "lcm",
    "leading_monomial",
    "normal_form",
    "power",
    "quotient_dims_bruteforce",
    "s_polynomial",
    "standard_monomials",
    "top_reduce",
    "wbar",
]
