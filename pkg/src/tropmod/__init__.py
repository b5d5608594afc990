"""Exact-arithmetic moduli spaces of rational tropical curves.

Combinatorial types of leaf-labeled trees as split systems, the double-ratio
embedding and its inverse, weighted fans with balancing and local smoothness
certificates, psi-divisors, forgetful maps and boundary decomposition.  All
arithmetic is exact (rationals plus tagged infinities); nothing here touches
floating point.
"""

from .errors import (
    DimensionMismatch,
    IncompatibleSplit,
    NotCodimensionOne,
    NotInImage,
    NotPure,
    RankDeficient,
    SplitAbsent,
    TooFewLeaves,
    TropmodError,
    ZeroVector,
)
from .rationals import (
    NEG_INF,
    POS_INF,
    ExtendedRational,
    Infinity,
    format_extended,
    is_finite,
    parse_extended,
)
from .semiring import (
    TROPICAL_ONE,
    TROPICAL_ZERO,
    AffineFunction,
    TropicalNumber,
    TropicalPolynomial,
    eval_polynomial,
    is_zero_point,
    trop_add,
    trop_mul,
)
from .trees import (
    CombinatorialType,
    Split,
    TreeRealization,
    TreeVertex,
    contract,
    count_rays,
    enumerate_types,
    resolutions,
    to_tree,
    valence_profile,
)
from .lattice import (
    hermite_normal_form,
    in_integer_span,
    in_rational_span,
    is_saturated,
    primitive,
    smith_normal_form,
)
from .moduli import (
    EmbeddingVector,
    LinkGraph,
    ModuliPoint,
    RatioIndex,
    canonical_coordinates,
    direction_vector,
    double_ratio,
    embed,
    link_graph,
    reconstruct,
)
from .divisors import (
    AdjacentFacet,
    BalancingReport,
    WeightedFan,
    canonical_divisor,
    check_balanced,
    check_psi_balanced,
    check_smooth_local,
    moduli_fan,
    psi_divisor,
)
from .maps import (
    BoundaryDecomposition,
    decompose_boundary,
    forget,
    forget_cone,
    relabel,
    section,
)

__version__ = "0.1.0"
