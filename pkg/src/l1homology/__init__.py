"""Exact ℓ¹-seminorms of homology classes, dual cocycle certificates,
finitely supported measure chains and sections of simplicial coverings."""

from .complex import (
    Chain,
    HomologyClass,
    SimplicialComplex,
    SimplicialMap,
    boundary,
    build_complex,
    fundamental_cycle,
    homology_basis,
    is_homologous,
    l1_norm,
    subdivide,
)
from .covering import CoveringMap, Section, build_section, lift_simplex, validate_cover, verify_section
from .lp import LinearProgram, LPSolution, Status, solve
from .measure import (
    BoundedFunction,
    MeasureChain,
    boundary_measure,
    include_chain,
    kronecker,
    measure_seminorm,
    pushforward,
    total_variation,
    v2_extend,
)
from .seminorm import (
    Cochain,
    DualCertificate,
    dual_certificate,
    l1_seminorm,
    simplicial_volume_upper,
    verify_certificate,
)

__version__ = "0.1.0"
