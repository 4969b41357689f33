"""Finite-model workbench for pseudo-BCK algebras.

Validates operation tables against the pseudo-BCK axioms, classifies the
result up the residuated-structure tower, and exhaustively enumerates the
operators, deductive systems, quotients, homomorphisms and valuations
living on it.
"""

from .algebra import FiniteAlgebra, validate, diagnose, derived_law_suite

__all__ = ["FiniteAlgebra", "validate", "diagnose", "derived_law_suite"]
__version__ = "0.1.0"
