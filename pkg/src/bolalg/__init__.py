"""Exact rational computations with Bol algebras.

Structure-constant models of Bol and Maltsev algebras over Q, with axiom
verification, representations, (2,3)-cohomology with companion-carrying
coboundaries, infinitesimal and first-order deformations, and abelian
split extensions.  Everything is exact; nothing uses floating point.
"""

from .linalg import Mat, Scalar, Vec, image_rank, kernel_basis, rref, solve
from .algebra import (
    AxiomReport,
    BolAlgebra,
    CheckReport,
    ConditionCheck,
    MaltsevAlgebra,
    VerificationError,
    bilinear_eval,
    maltsev_to_bol,
    trilinear_eval,
    verify_bol,
    verify_maltsev,
)
from .representation import (
    PseudoderivationData,
    Representation,
    adjoint_representation,
    check_delta_identity,
    induce_from_maltsev,
    is_pseudoderivation,
    pseudoderivation_space,
    verify_representation,
)
from .cohomology import (
    CochainPair,
    CohomologyReport,
    coboundary_of,
    cohomology,
    is_coboundary,
    is_cocycle,
)
from .deformation import (
    DeformationDatum,
    DeformationTypeCandidate,
    check_first_order_formal,
    first_order_equivalent,
    generates_infinitesimal_deformation,
    is_deformation_type,
)
from .extension import (
    AbelianExtension,
    InvalidExtensionError,
    extensions_equivalent,
    induced_cocycle,
    induced_representation,
    semidirect_product,
    twisted_product,
    validate_extension,
)

__all__ = [
    "Mat",
    "Scalar",
    "Vec",
    "image_rank",
    "kernel_basis",
    "rref",
    "solve",
    "AxiomReport",
    "BolAlgebra",
    "CheckReport",
    "ConditionCheck",
    "MaltsevAlgebra",
    "VerificationError",
    "bilinear_eval",
    "maltsev_to_bol",
    "trilinear_eval",
    "verify_bol",
    "verify_maltsev",
    "PseudoderivationData",
    "Representation",
    "adjoint_representation",
    "check_delta_identity",
    "induce_from_maltsev",
    "is_pseudoderivation",
    "pseudoderivation_space",
    "verify_representation",
    "CochainPair",
    "CohomologyReport",
    "coboundary_of",
    "cohomology",
    "is_coboundary",
    "is_cocycle",
    "DeformationDatum",
    "DeformationTypeCandidate",
    "check_first_order_formal",
    "first_order_equivalent",
    "generates_infinitesimal_deformation",
    "is_deformation_type",
    "AbelianExtension",
    "InvalidExtensionError",
    "extensions_equivalent",
    "induced_cocycle",
    "induced_representation",
    "semidirect_product",
    "twisted_product",
    "validate_extension",
]

__version__ = "0.1.0"
