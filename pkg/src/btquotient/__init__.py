"""Quotients of the Bruhat-Tits tree by PGL_2 over F_q[t, 1/f].

Closed-form quotient graphs for a place of any degree d, together with a
brute-force double coset oracle over F_q[t] that checks them.
"""

from .algebra import FieldCtx, Place, PolyRing, extension_field, nu_infty, nu_p
from .projective import (
    ProjMat,
    bt_distance,
    canonicalize,
    h_group,
    mat_inv,
    mat_mul,
    moebius_orbit_census,
    upsilon_member,
)
from .quotient import QuotientGraph, build_quotient, closed_form_multiplicity, double_cover
from .upsilon import (
    double_coset_count,
    enumerate_upsilon,
    left_coset_count,
    upsilon_size_formula,
)
from .verify import verify_f_independence, verify_instance

__version__ = "0.1.0"

__all__ = [
    "FieldCtx",
    "Place",
    "PolyRing",
    "ProjMat",
    "QuotientGraph",
    "bt_distance",
    "build_quotient",
    "canonicalize",
    "closed_form_multiplicity",
    "double_coset_count",
    "double_cover",
    "enumerate_upsilon",
    "extension_field",
    "h_group",
    "left_coset_count",
    "mat_inv",
    "mat_mul",
    "moebius_orbit_census",
    "nu_infty",
    "nu_p",
    "upsilon_member",
    "upsilon_size_formula",
    "verify_f_independence",
    "verify_instance",
]
