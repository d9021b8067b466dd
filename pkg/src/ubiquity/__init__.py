"""Finite algebraic and pseudo-topological semantics for the ubiquity quantifier."""

from .boolalg import Element, FiniteBooleanAlgebra, check_boolean_axioms, powerset_algebra, standard_algebra
from .errors import (
    ArityError,
    DomainMismatchError,
    ParseError,
    PreconditionError,
    SizeGuardError,
    UbiquityError,
    ValidationError,
)
from .funcalg import PropFunction, all_functions, check_q_properties, functional_quantifier, q_operator
from .monadic import (
    Ideal,
    MonadicAlgebra,
    Quantifier,
    enumerate_quantifiers,
    enumerate_subalgebras,
    is_quantifier,
    is_semisimple,
    quantifier_from_subalgebra,
    quantifier_law_suite,
    quotient,
    verify_semisimplicity_certificate,
)
from .pseudotop import PseudoTopology, enumerate_spaces, interior, openness, validate_space
from .report import LawReport, LawResult
from .ubiq import (
    UbiquityAlgebra,
    enumerate_upsilons,
    quotient_audit,
    quotient_descent_check,
    ubiq_law_suite,
    upsilon_from_space,
    validate_upsilon,
)

__version__ = "0.1.0"
