"""Exact subpacketization levels for the Banawan-Ulukus multi-message PIR scheme.

Two independent routes to the normalized level L: the backward linear
recursion solved over the rationals, and the polynomial closed form
(1/D) * sum_k a_{kD} N^(T-k).  The integer subpacketization level is the
smallest positive integer multiple of L.
"""

from subpacket.closed_form import (
    ClosedFormResult,
    leading_term,
    normalized_L_closed_form,
    subpacketization_level,
)
from subpacket.genfunc import (
    CoefficientVector,
    coefficient_count_oracle,
    expand_coefficients,
    filtered_coefficients,
)
from subpacket.kernels import BACKEND
from subpacket.params import (
    DerivedShape,
    ParameterError,
    Parameters,
    RationalValue,
    derive_shape,
    make_parameters,
)
from subpacket.recursion_oracle import (
    ReversedView,
    SequenceTable,
    normalized_L_via_recursion,
    reversed_view,
    solve_recursion,
)

__all__ = [
    "BACKEND",
    "ClosedFormResult",
    "CoefficientVector",
    "DerivedShape",
    "ParameterError",
    "Parameters",
    "RationalValue",
    "ReversedView",
    "SequenceTable",
    "coefficient_count_oracle",
    "derive_shape",
    "expand_coefficients",
    "filtered_coefficients",
    "leading_term",
    "make_parameters",
    "normalized_L_closed_form",
    "normalized_L_via_recursion",
    "reversed_view",
    "solve_recursion",
    "subpacketization_level",
]
