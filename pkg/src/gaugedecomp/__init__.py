"""Exact-arithmetic classification of principal bundles over connected
sums of sphere bundles over spheres, with symbolic homotopy
decompositions of their gauge groups."""

from .abelian import (
    AbelianGroup,
    GroupElement,
    TRIVIAL_GROUP,
    Z,
    cardinality,
    cyclic,
    direct_sum,
    element_order,
)
from .classify import (
    BundleClassification,
    BundleFormula,
    ClassificationCase,
    DIM7_PI6_COPRIME,
    SP_STABLE,
    STABLE_WEDGE,
    SU_STABLE,
    UNSUPPORTED,
    classify_conditions,
    pi6_coprime,
    principal_bundles,
    stable_wedge_formula,
)
from .decompose import (
    EquivalenceVerdict,
    GaugeLevel,
    LoopSpace,
    MapStar,
    PowerFibre,
    ProductExpr,
    SphereGauge,
    SymbolicSum,
    UnknownFactor,
    gauge_decomposition,
    gauge_equivalent,
    level,
    pointed_gauge_decomposition,
    pointed_gauge_pi,
    power_fibre_decomposition,
    sphere_gauge_pi2_order,
    wedge_gauge_decomposition,
)
from .manifolds import (
    AttachingMap,
    AttachingTerm,
    CofibreDescriptor,
    ConnectedSumSpec,
    WedgeSplitting,
    attaching_map,
    cofibre_space,
    suspension_rank,
    suspension_splitting,
    twisting_matrix,
)
from .matrices import (
    IntMatrix,
    MixedMatrix,
    OrbitCertificate,
    block_diag,
    echelon_rank,
    is_echelon,
    matrix_action,
    orbit_reduce,
    row_echelon_int,
    row_echelon_mixed,
    same_orbit,
    smith_invariants,
    unimodular_generators,
    unimodular_inverse,
)
from .residues import INTEGERS, Modulus, Residue, bezout, gcd_mod
from .tables import (
    E6,
    E7,
    E8,
    F4,
    G2,
    HomotopyTable,
    LieGroup,
    MissingTableError,
    Sp,
    SpaceId,
    Sphere,
    Spin,
    SU,
    TableEntry,
    UNKNOWN,
    UnknownValue,
    canonical_space,
    connecting_order,
    default_table,
    is_simply_connected_simple_compact,
    load_table_file,
    load_tables,
    lookup_pi,
    pi6_order,
    stable_condition,
    stable_pi_rule,
)

__version__ = "0.1.0"
