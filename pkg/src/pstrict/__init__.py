"""P-strict labelings of convex subposets of P x [ell], their Bender-Knuth
promotion, and the piecewise-linear toggle dynamics they correspond to.
"""

from .bijections import phi, phi_inverse, psi, psi_inverse, to_gt_pattern
from .gamma import build_gamma, build_hat_B, extend_restriction, hat_gamma_space
from .labelings import (
    LabelingSpace,
    PStrictLabeling,
    RestrictionFunction,
    bender_knuth,
    evacuation,
    global_space,
    promotion,
    restriction_from_bounds,
)
from .poset import ConvexShape, Poset, build_poset, skew_shape, standard_poset
from .qpartitions import QSpace, rowmotion, toggle, toggle_promotion

__all__ = [
    "ConvexShape",
    "LabelingSpace",
    "PStrictLabeling",
    "Poset",
    "QSpace",
    "RestrictionFunction",
    "bender_knuth",
    "build_gamma",
    "build_hat_B",
    "build_poset",
    "evacuation",
    "extend_restriction",
    "global_space",
    "hat_gamma_space",
    "phi",
    "phi_inverse",
    "promotion",
    "psi",
    "psi_inverse",
    "restriction_from_bounds",
    "rowmotion",
    "skew_shape",
    "standard_poset",
    "to_gt_pattern",
    "toggle",
    "toggle_promotion",
]
