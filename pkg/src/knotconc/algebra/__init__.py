from .cyclotomic import CyclotomicElem
from .laurent import LaurentPoly, discriminant, resultant
from .intmatrix import (
    smith_normal_form,
    det_bareiss,
    det_rational,
    mat_from_rows,
    mat_mul,
    mat_transpose,
    mat_inverse_rational,
    diagonalize_symmetric,
)
from .factorcyc import factor_over_cyclotomic, is_norm, to_cyclotomic_poly

__all__ = [
    "CyclotomicElem",
    "LaurentPoly",
    "discriminant",
    "resultant",
    "smith_normal_form",
    "det_bareiss",
    "det_rational",
    "mat_from_rows",
    "mat_mul",
    "mat_transpose",
    "mat_inverse_rational",
    "diagonalize_symmetric",
    "factor_over_cyclotomic",
    "is_norm",
    "to_cyclotomic_poly",
]
