"""Exact classification of Calabi-Yau threefolds fibred by mirror-quartic K3 surfaces.

Everything is computed from the combinatorial branching data of the cover of
the K3 moduli line that defines the fibration: validity, the Calabi-Yau
criterion, smoothness, Hodge numbers (two independent ways), permutation
witnesses for existence, explicit one-parameter families, and degeneration
bookkeeping.  All arithmetic is exact.
"""

from .profile import (
    ProfileError,
    RamificationProfile,
    SmoothnessReport,
    canonical_degree,
    fibre_components,
    ij_family_profile,
    is_calabi_yau_profile,
    make_profile,
    profile_from_dict,
    profile_to_dict,
    quintic_mirror_profile,
    smoothness,
)
from .lattice import (
    IntegerLattice,
    admissible_automorphism_orders,
    build_standard,
    direct_sum,
    discriminant_group,
    invariant_factors,
    smith_normal_form,
)
from .monodromy import (
    ExactMatrix,
    TranscendentalSystem,
    fixed_subspace_dim,
    h1_pullback,
    levelt_companion,
    r_value,
    standard_system,
)
from .hodge import HodgeData, Unavailable, h11, h21_closed_form, hodge_summary
from .hurwitz import (
    CoverWitness,
    Permutation,
    SearchResult,
    deformation_dimension,
    find_cover,
    min_transposition_factorization,
    simplify_to_simple,
)
from .family import (
    RationalMap,
    build_ij_family,
    build_normal_form,
    critical_values,
    detect_quarter_collision,
)
from .transitions import TransitionReport, absorb_simple_point, degenerate, witness_transform
from .enumeration import EnumerationQuery, enumerate_profiles, partitions

__version__ = "0.1.0"

__all__ = [
    "CoverWitness",
    "EnumerationQuery",
    "ExactMatrix",
    "HodgeData",
    "IntegerLattice",
    "Permutation",
    "ProfileError",
    "RamificationProfile",
    "RationalMap",
    "SearchResult",
    "SmoothnessReport",
    "TranscendentalSystem",
    "TransitionReport",
    "Unavailable",
    "absorb_simple_point",
    "admissible_automorphism_orders",
    "build_ij_family",
    "build_normal_form",
    "build_standard",
    "canonical_degree",
    "critical_values",
    "deformation_dimension",
    "degenerate",
    "detect_quarter_collision",
    "direct_sum",
    "discriminant_group",
    "enumerate_profiles",
    "fibre_components",
    "find_cover",
    "fixed_subspace_dim",
    "h11",
    "h1_pullback",
    "h21_closed_form",
    "hodge_summary",
    "ij_family_profile",
    "invariant_factors",
    "is_calabi_yau_profile",
    "levelt_companion",
    "make_profile",
    "min_transposition_factorization",
    "partitions",
    "profile_from_dict",
    "profile_to_dict",
    "quintic_mirror_profile",
    "r_value",
    "simplify_to_simple",
    "smith_normal_form",
    "smoothness",
    "standard_system",
    "witness_transform",
    "__version__",
]
