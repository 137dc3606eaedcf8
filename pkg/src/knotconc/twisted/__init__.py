"""Twisted Alexander polynomials over cyclotomic fields and the
concordance-order certificates built from them."""

from .certify import (Certificate, VERDICT_INFINITE, VERDICT_NOT_SLICE,
                      VERDICT_SLICE, VERDICT_UNKNOWN, certify_infinite_order)
from .compare import (coprime_up_to_norms, doteq, factor_escapes, is_norm,
                      nonnorm_core, orbit_canonical, orbit_representatives)
from .polynomial import (TwistedPoly, cocycle_space, connected_sum_twisted,
                         twisted_alexander)
from .presentation import WirtingerPresentation
from .trivial import trivial_twisted

__all__ = [
    "Certificate", "VERDICT_INFINITE", "VERDICT_NOT_SLICE", "VERDICT_SLICE",
    "VERDICT_UNKNOWN", "certify_infinite_order", "coprime_up_to_norms",
    "doteq", "factor_escapes", "is_norm", "nonnorm_core", "orbit_canonical",
    "orbit_representatives", "TwistedPoly", "cocycle_space",
    "connected_sum_twisted", "twisted_alexander", "WirtingerPresentation",
    "trivial_twisted",
]
