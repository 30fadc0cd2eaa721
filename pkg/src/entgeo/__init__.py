"""Bayesian order on finite probability simplices and state spaces built from finite logics."""

from .construction import (
    ConstructedPoset,
    GammaChain,
    build,
    check_classical_iso,
    check_monotone_states,
    classical_grid,
    cl_top_tuples,
    induced_leq,
    xi,
)
from .coordinates import (
    Coordinate,
    CoordSet,
    Irreducible,
    build_automorphism,
    coordinate_on_axis,
    coordinates_of,
    downset_is_chain,
    entropy_rigidity_check,
    irreducibles,
    is_valid_coord_set,
    sup_coordinates,
)
from .dist import (
    Dist,
    Perm,
    SpectralRep,
    bayesian_projection,
    from_spectral_rep,
    monotonize,
    parse_dist,
    simplex_grid,
    spectral_rep,
)
from .entropy import mixing_law_check, shannon, strictly_increasing_on_axis
from .errors import (
    CycleError,
    DimensionError,
    DuplicateCoverError,
    EmptyCoreWarning,
    EntGeoError,
    GaugeDomainError,
    InvalidCoordSet,
    IsoFailure,
    NormalizationError,
    NotAChainError,
    NotALatticeError,
    NotBoundedError,
    NotGradedError,
    NotOrthocomplementationError,
    ParseError,
    PartitionError,
    PreconditionError,
    ProjectionUndefined,
    SizeLimitError,
    SpectrumError,
    UnknownElementError,
)
from .order import bottom, compare, degeneration_necessary, is_maximal, joint_monotonization, leq, leq_inductive
from .poset import (
    FinitePoset,
    automorphisms,
    chain_poset,
    load_poset,
    maximal_chains,
    powerset_lattice,
    strip_and_reverse,
    to_dot,
)

__version__ = "0.1.0"

__all__ = [
    "ConstructedPoset",
    "CoordSet",
    "Coordinate",
    "CycleError",
    "DimensionError",
    "Dist",
    "DuplicateCoverError",
    "EmptyCoreWarning",
    "EntGeoError",
    "FinitePoset",
    "GammaChain",
    "GaugeDomainError",
    "InvalidCoordSet",
    "Irreducible",
    "IsoFailure",
    "NormalizationError",
    "NotAChainError",
    "NotALatticeError",
    "NotBoundedError",
    "NotGradedError",
    "NotOrthocomplementationError",
    "ParseError",
    "PartitionError",
    "Perm",
    "PreconditionError",
    "ProjectionUndefined",
    "SizeLimitError",
    "SpectralRep",
    "SpectrumError",
    "UnknownElementError",
    "automorphisms",
    "bayesian_projection",
    "bottom",
    "build",
    "build_automorphism",
    "chain_poset",
    "check_classical_iso",
    "check_monotone_states",
    "cl_top_tuples",
    "classical_grid",
    "compare",
    "coordinate_on_axis",
    "coordinates_of",
    "degeneration_necessary",
    "downset_is_chain",
    "entropy_rigidity_check",
    "from_spectral_rep",
    "induced_leq",
    "irreducibles",
    "is_maximal",
    "is_valid_coord_set",
    "joint_monotonization",
    "leq",
    "leq_inductive",
    "load_poset",
    "maximal_chains",
    "mixing_law_check",
    "monotonize",
    "parse_dist",
    "powerset_lattice",
    "shannon",
    "simplex_grid",
    "spectral_rep",
    "strictly_increasing_on_axis",
    "strip_and_reverse",
    "sup_coordinates",
    "to_dot",
    "xi",
]
