"""Exact homology invariants of periodic Takahashi 3-manifolds.

A periodic Takahashi manifold M_n(p/q, r/s) is the result of rational
Dehn surgery on the 2n-component chain link, with coefficients
alternating p/q and r/s.  This package computes fundamental-group
presentations, first homology via Smith normal form, the genus-one
two-bridge branching knots of the p = r = 1 family, Alexander
polynomials (Fox calculus and reduced Burau), and homology of cyclic
branched coverings, all in exact integer arithmetic.
"""

from .exactalg import (
    AbelianGroup,
    BigIntMatrix,
    IntPoly,
    Rational,
    SnfResult,
    circulant_of_poly,
    cokernel,
    cyclotomic_quotient,
    determinant,
    normalize_up_to_units,
    resultant,
    smith_normal_form,
)
from .grouppres import (
    Presentation,
    RepresenterPoly,
    Word,
    abelianize,
    cyclic_presentation,
    cyclic_presentation_rewritten,
    free_reduce,
    h1_from_presentation,
    relator_identity_check,
    representer_polynomial,
    takahashi_presentation,
)
from .knotkit import (
    AlexanderPoly,
    BraidWord3,
    ConwayForm,
    TwoBridge,
    alexander_from_braid3,
    alexander_two_bridge,
    branched_cover_homology,
    branched_cover_order,
    conway_to_fraction,
    normalize_two_bridge,
    reduced_burau3,
    two_bridge_equivalent,
    two_bridge_presentation,
)
from .manifolds import (
    BranchData,
    TakahashiSpec,
    base_space_h1,
    branch_data,
    branch_knot,
    cross_check_prop4,
    h1_cyclic_route,
    h1_takahashi,
    normalize_spec,
    symmetry_check,
)

__version__ = "0.1.0"
