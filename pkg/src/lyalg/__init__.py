"""Exact computations with Lie-Yamaguti algebras, matched pairs and deformation maps."""
from .fields import GF, QQ, CharacteristicError, FieldError, field_from_spec
from .report import Report, StructureError
from .algebra import (
    LieYamagutiAlgebra,
    change_basis,
    check_homomorphism,
    check_ly_axioms,
    direct_sum,
    from_leibniz,
    from_lie,
    from_lts,
    is_subalgebra,
    zero_algebra,
)
from .representations import Representation, adjoint, check_representation, derived_D, semidirect
from .matched_pairs import (
    Inclusion,
    MatchedPair,
    bicrossed,
    canonical_matched_pair,
    check_consequences,
    check_factorization,
    check_matched_pair,
    check_mp_equivalence,
    make_action_pair,
)

from .deformation import (
    DeformationMap,
    check_deformation_map,
    check_dm_equivalence,
    classify_complements,
    enumerate_deformation_maps,
    graph_span,
    induced_algebra,
    induced_representation,
)
from .cohomology import Cochain, coboundary, cohomology_dims, defmap_cohomology_dims
from .linfty import VData, derived_brackets, mc_check_pi, mc_equation, twist, twisted_complex_dims
from .lts import LieTripleSystem, LtsMatchedPair, check_lts, check_lts_deformation_map, check_lts_matched_pair
from .io import parse_algebra, parse_bundle, serialize_algebra, serialize_bundle

__version__ = "0.1.0"
