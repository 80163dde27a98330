"""Exact sextet, Clar covering and proper-sextet polynomials of hexagonal systems."""

from .families import delannoy, line_m, pyrene, u_poly, v_poly, verify_pyrene_identities
from .hexsys import HexSystem, build_from_cells, canonical_code, enumerate_polyhexes, families_builder
from .polyx import Polynomial
from .resonance import (
    clar_covering_polynomial,
    clar_number,
    is_thin,
    kekule_count,
    phi_polynomial,
    sextet_polynomial,
)

__version__ = "0.1.0"

__all__ = [
    "HexSystem",
    "Polynomial",
    "build_from_cells",
    "canonical_code",
    "clar_covering_polynomial",
    "clar_number",
    "delannoy",
    "enumerate_polyhexes",
    "families_builder",
    "is_thin",
    "kekule_count",
    "line_m",
    "phi_polynomial",
    "pyrene",
    "sextet_polynomial",
    "u_poly",
    "v_poly",
    "verify_pyrene_identities",
]
