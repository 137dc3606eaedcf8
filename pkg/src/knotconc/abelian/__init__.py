from .core import (alexander, knot_determinant, signed_determinant,
                   omega_signature, signature)
from .profile import SignatureProfile, JumpPoint, jump_function, l2_signature
from .torus import (TorusKnot, torus_seifert_matrix, torus_jump, torus_l2,
                    twisted_double_obstruction, twist_knot_matrix)

__all__ = [
    "alexander", "knot_determinant", "signed_determinant", "omega_signature",
    "signature", "SignatureProfile", "JumpPoint", "jump_function",
    "l2_signature", "TorusKnot", "torus_seifert_matrix", "torus_jump",
    "torus_l2", "twisted_double_obstruction", "twist_knot_matrix",
]
