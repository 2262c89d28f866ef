"""Exact computation with finite-dimensional comonoids.

Coalgebras over Q and F_p by structure constants, corings over small base
algebras, module/comodule coalgebras over bialgebras and Hopf algebras,
and bounded limit/colimit constructions with exhaustive finality
certificates.
"""

from .exact import Field, GF, QQ, Mat, Subspace, RowSpace, rref, rank, kernel, solve, kron_vec
from .errors import (
    ComonoidsError,
    DimensionMismatch,
    FieldMismatch,
    InconsistentSystem,
    BudgetExceeded,
    InvalidStructure,
    IllFormedDiagram,
    BaseMismatch,
    NotASubmodule,
    NotHopf,
    ConventionFailure,
    NameCollision,
    ParseError,
)
from .coalgebras import (
    Algebra,
    Coalgebra,
    CoalgebraMorphism,
    check_algebra,
    check_coalgebra,
    coalgebra_morphisms,
    comatrix_coalgebra,
    comatrix_presentation,
    dual_algebra,
    dual_coalgebra,
    enumerate_coalgebras,
    grouplikes_coalgebra,
    ground_coalgebra,
    is_coalgebra_morphism,
    largest_subcoalgebra_in,
    matrix_algebra,
    subcoalgebra_generated,
    tensor_algebra_truncated,
)
from .limits import (
    BoundedClass,
    ConstraintProblem,
    Diagram,
    EngineBudget,
    bounded_final_object,
    bounded_limit,
    coequalizer,
    cofree_approx,
    coproduct,
    equalizer,
    finite_colimit,
)
from .corings import (
    Bimodule,
    Coring,
    check_bimodule,
    check_coring,
    cohn_saturate,
    invariant_closure,
    is_pure_submodule,
    subcoring_closure,
    sweedler_coring,
    tensor_over_A,
    trivial_coring,
)
from .hopf import (
    Bialgebra,
    ComoduleCoalgebra,
    ComoduleStructure,
    HopfAlgebra,
    ModuleCoalgebra,
    antipode_solve,
    check_bialgebra,
    check_comodule_coalgebra,
    check_module_coalgebra,
    coefficient_coalgebra,
    comodule_subcoalgebra_closure,
    dual_comodule,
    endomorphism_algebra,
    ev_co_maps,
    local_representativity,
    module_subcoalgebra_closure,
    regular_embedding,
    smash_coproduct,
)

__version__ = "0.1.0"
