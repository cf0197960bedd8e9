"""Fusion elements of finite Hecke algebras of type A, computed exactly."""

from .coxeter import length, reduced_word, word_to_perm
from .diagram import Diagram, DiagramError, parse_diagram, parse_multisegment, special_order, w_lambda
from .field import QQ, PoleError, frac_field
from .fusion import (
    compute_E_limiting, compute_E_oracle, compute_E_shortening, limiting_plan, shortening_plan,
)
from .hecke import HeckeAlgebra, HeckeElt, e_sum, generic_algebra, leading_terms, omega
from .induced import character_of, check_intertwiner, cyclic_dim, eigencheck

__all__ = [
    "length", "reduced_word", "word_to_perm",
    "Diagram", "DiagramError", "parse_diagram", "parse_multisegment", "special_order", "w_lambda",
    "QQ", "PoleError", "frac_field",
    "compute_E_limiting", "compute_E_oracle", "compute_E_shortening", "limiting_plan",
    "shortening_plan",
    "HeckeAlgebra", "HeckeElt", "e_sum", "generic_algebra", "leading_terms", "omega",
    "character_of", "check_intertwiner", "cyclic_dim", "eigencheck",
]

__version__ = "0.1.0"
