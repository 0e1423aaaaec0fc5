"""Singularity-subtraction finite differences for singularly perturbed
reaction-diffusion problems with discontinuous boundary/initial data.

The solution is written as a closed-form singular part carrying the jump
plus a smooth remainder; the remainder is marched with backward Euler and
central differences on a piecewise-uniform layer-adapted mesh, and
convergence is estimated with two-mesh differences, uniformly over the
diffusion parameter.
"""

from .errors import CapabilityError, ConfigurationError, DomainError, NumericalError
from .harness import (
    EQUAL_LADDER,
    M16_LADDER,
    ConvergenceTable,
    SweepConfig,
    dyadic_eps_set,
    ladder_from,
    order_of,
    reconstruct_solution,
    two_mesh_difference,
    uniform_sweep,
)
from .interp import UnionMesh, bilinear_eval, eval_on_grid, max_diff, union_mesh
from .mesh import (
    MeshKind,
    SpaceMesh,
    TimeGrid,
    Transition,
    boundary_layer_mesh,
    interior_layer_mesh,
    uniform_time_grid,
)
from .problem import (
    CompatibilityReport,
    ConditionCheck,
    DerivativeBundle,
    DiscontinuitySpec,
    Family,
    JumpInitial,
    ProblemSpec,
    ScalarField2D,
    StepBoundary,
    TransformedProblem,
    builtin_example,
    builtin_examples,
    check_compatibility,
    raw_problem,
    singular_part_eval,
    transform,
)
from .solver import (
    GridFunction,
    TridiagonalSystem,
    assemble_step,
    central_second_difference,
    solve_parabolic,
    thomas_solve,
)
from .specialfn import (
    KernelParams,
    complement_kernel_tn,
    erf,
    heaviside,
    singular_kernel,
    singular_kernel_derivatives,
    singular_kernel_t2_dtt,
    singular_kernel_tn,
)

__version__ = "0.1.0"

__all__ = [
    "CapabilityError",
    "CompatibilityReport",
    "ConditionCheck",
    "ConfigurationError",
    "ConvergenceTable",
    "DerivativeBundle",
    "DiscontinuitySpec",
    "DomainError",
    "EQUAL_LADDER",
    "Family",
    "GridFunction",
    "JumpInitial",
    "KernelParams",
    "M16_LADDER",
    "MeshKind",
    "NumericalError",
    "ProblemSpec",
    "ScalarField2D",
    "SpaceMesh",
    "StepBoundary",
    "SweepConfig",
    "TimeGrid",
    "TransformedProblem",
    "Transition",
    "TridiagonalSystem",
    "UnionMesh",
    "assemble_step",
    "bilinear_eval",
    "boundary_layer_mesh",
    "builtin_example",
    "builtin_examples",
    "central_second_difference",
    "check_compatibility",
    "complement_kernel_tn",
    "dyadic_eps_set",
    "erf",
    "eval_on_grid",
    "heaviside",
    "interior_layer_mesh",
    "ladder_from",
    "max_diff",
    "order_of",
    "raw_problem",
    "reconstruct_solution",
    "singular_kernel",
    "singular_kernel_derivatives",
    "singular_kernel_t2_dtt",
    "singular_kernel_tn",
    "singular_part_eval",
    "solve_parabolic",
    "thomas_solve",
    "transform",
    "two_mesh_difference",
    "uniform_sweep",
    "uniform_time_grid",
    "union_mesh",
]
