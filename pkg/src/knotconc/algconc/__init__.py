from .structure import (IsometricStructure, isometric_structure,
                         symmetric_factors, nonsingular_representative)
from .witt import (hilbert_symbol, hasse_invariant, WittClassFp,
                   witt_class_fp_of_diagonal, wq2_image, squarefree_diagonal)
from .order import (primary_component, epsilon_invariant, sigma_invariant,
                    mu_invariant, witt_class_fp, relevant_primes,
                    algebraic_order, AlgebraicOrderVerdict)

__all__ = [
    "IsometricStructure", "isometric_structure", "symmetric_factors",
    "nonsingular_representative", "hilbert_symbol", "hasse_invariant",
    "WittClassFp", "witt_class_fp_of_diagonal", "wq2_image",
    "squarefree_diagonal", "primary_component", "epsilon_invariant",
    "sigma_invariant", "mu_invariant", "witt_class_fp", "relevant_primes",
    "algebraic_order", "AlgebraicOrderVerdict",
]
