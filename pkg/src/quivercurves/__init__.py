"""Plane projective curves realized as quiver Grassmannians, with exact
verification over small prime fields."""

from .elliptic import (
    ECPoint,
    WeierstrassCurve,
    discriminant_ok,
    ec_add,
    ec_neg,
    gr_add,
    gr_identity,
    gr_neg,
    group_order,
)
from .field import FieldScalar, FieldSpec, parse_field
from .poly import HomogeneousPoly, parse_poly
from .projective import ProjPoint, enumerate_projective, normalize
from .quiver import (
    GrassPoint,
    QuiverRep,
    build_representation,
    deserialize_rep,
    enumerate_grassmannian,
    membership,
    serialize_rep,
    transport_morphism,
    validate_subrep,
)
from .veronese import inverse_veronese, linearize, monomial_basis, veronese_map

__version__ = "0.1.0"

__all__ = [
    "ECPoint",
    "FieldScalar",
    "FieldSpec",
    "GrassPoint",
    "HomogeneousPoly",
    "ProjPoint",
    "QuiverRep",
    "WeierstrassCurve",
    "build_representation",
    "deserialize_rep",
    "discriminant_ok",
    "ec_add",
    "ec_neg",
    "enumerate_grassmannian",
    "enumerate_projective",
    "gr_add",
    "gr_identity",
    "gr_neg",
    "group_order",
    "inverse_veronese",
    "linearize",
    "membership",
    "monomial_basis",
    "normalize",
    "parse_field",
    "parse_poly",
    "serialize_rep",
    "transport_morphism",
    "validate_subrep",
    "veronese_map",
]
