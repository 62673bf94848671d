"""Exact finite k-linear categories and the constructions relating smash
products, Galois coverings, contractions and Morita contexts."""

from .category import (
    AssocAlgebra,
    KCategory,
    assemble_algebra,
    category_of_algebra,
    endomorphism_algebra,
    full_subcategory,
    isomorphism_obstruction,
    validate_algebra,
    validate_category,
)
from .constructions import (
    Partition,
    additivise,
    complement_partition,
    contract,
    enumerate_idempotents,
    expand,
    inflate,
    karoubi_restricted,
    matrix_category,
    trivial_system,
)
from .errors import (
    ActionAxiomViolation,
    AxiomViolation,
    DimTooLarge,
    EmptyIndexSet,
    FieldNotFinite,
    InvalidContext,
    InvalidPartition,
    KCatError,
    MalformedInput,
    NontrivialObjectAction,
    NotComplete,
    NotFreeAction,
    NotIdempotent,
    NotOrthogonal,
    ParseError,
)
from .field import QQ, Field, Residue
from .functor import (
    FunctorProperties,
    LinearFunctor,
    compose,
    functor_equal,
    functor_properties,
    identity_functor,
    validate_functor,
)
from .galois import inflated_action, quotient, skew
from .hopf import (
    FiniteGroup,
    HopfAlgebra,
    function_algebra,
    group_algebra,
    validate_group,
    validate_hopf,
)
from .isos import (
    contraction_iso_L,
    duality_pair,
    karoubi_comparison,
    rebase_to_matrix,
    skew_to_quotient,
    smash_inclusion,
    smash_quotient_iso,
)
from .modules import CatModule, module_contract, module_expand, validate_module
from .morita import (
    Bimodule,
    ObjectContext,
    identity_context,
    matrix_context,
    morita_rebase,
    tensor_over_algebra,
    validate_context,
)
from .report import Report
from .smash import smash_algebra, smash_cover, smash_hopf
from .structures import (
    Grading,
    GroupAction,
    HModuleStructure,
    action_to_kG_module,
    grading_to_dual_module,
    induced_kG_structure_on_smash_dual,
    validate_action,
    validate_grading,
    validate_hmodule,
)

__version__ = "0.1.0"
