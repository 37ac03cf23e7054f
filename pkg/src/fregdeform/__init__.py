"""Exact verification workbench for a determinantal family where F-regularity fails to deform."""

from .algebra import (
    CoefficientField,
    MonomialOrder,
    Polynomial,
    RingSignature,
    parse_polynomial,
    poly_power,
    weighted_degree,
)
from .groebner import GroebnerBasis, Ideal, buchberger, ideal_member, normal_form
from .report import VerificationReport

__version__ = "0.1.0"

__all__ = [
    "CoefficientField", "MonomialOrder", "Polynomial", "RingSignature", "parse_polynomial",
    "poly_power", "weighted_degree", "GroebnerBasis", "Ideal", "buchberger", "ideal_member",
    "normal_form", "VerificationReport",
]
