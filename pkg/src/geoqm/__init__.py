"""
geoqm
=====

Geometric formulation of finite-dimensional quantum mechanics in numpy.

Modules
-------
realified
    C^n as R^2n with the Hermitian triple (g, omega, J).
observables
    Operators as tensors and quadratic functions; Poisson and Jordan brackets.
projective
    Momentum map, connection form, Fubini-Study tensor, Bloch map.
density
    Density states, extended brackets, Bloch-ball tensors, orbit form, flows.
composite
    Two-qubit states, Pauli and Cartan decompositions, product Poisson rule.
gates
    Gates as generating functions and circuit application.
verify, cli
    Randomized identity suites and the ``geoqm`` command.
"""

from . import composite, density, gates, observables, projective, realified
from .composite import (
    cartan_canonical_form,
    pauli_decompose,
    product_poisson,
    separable_pure,
    tensor_state,
)
from .density import (
    MixtureDecomposition,
    casimir,
    expectation_density,
    extended_brackets,
    lie_poisson_bloch,
    make_density,
    mix,
    orbit_symplectic_form,
    partial_complex_structure,
    ball_two_form,
    von_neumann_flow,
)
from .exceptions import (
    DensityError,
    DimensionError,
    GeometryError,
    NotHermitianError,
    SingularPointError,
    TangencyError,
)
from .gates import GeneratingFunction, apply_circuit, builtin_generating, canonical_residual
from .observables import (
    bracket_general,
    expectation,
    jordan_bracket,
    operator_fields,
    poisson_bracket,
    quadratic_form,
    tensorize,
)
from .projective import (
    bloch_map,
    connection_form,
    fubini_study,
    horizontal_projection,
    momentum_map,
    pure_projector,
)
from .realified import (
    apply_complex_structure,
    canonical_fields,
    hermitian_parts,
    homogeneity_degree,
    to_complex,
    to_real,
)

__version__ = "0.1.0"

__all__ = [
    "apply_circuit",
    "apply_complex_structure",
    "ball_two_form",
    "bloch_map",
    "bracket_general",
    "builtin_generating",
    "canonical_fields",
    "canonical_residual",
    "cartan_canonical_form",
    "casimir",
    "composite",
    "connection_form",
    "density",
    "DensityError",
    "DimensionError",
    "expectation",
    "expectation_density",
    "extended_brackets",
    "fubini_study",
    "gates",
    "GeneratingFunction",
    "GeometryError",
    "hermitian_parts",
    "homogeneity_degree",
    "horizontal_projection",
    "jordan_bracket",
    "lie_poisson_bloch",
    "make_density",
    "mix",
    "MixtureDecomposition",
    "momentum_map",
    "NotHermitianError",
    "observables",
    "operator_fields",
    "orbit_symplectic_form",
    "partial_complex_structure",
    "pauli_decompose",
    "poisson_bracket",
    "product_poisson",
    "projective",
    "pure_projector",
    "quadratic_form",
    "realified",
    "separable_pure",
    "SingularPointError",
    "TangencyError",
    "tensor_state",
    "tensorize",
    "to_complex",
    "to_real",
    "von_neumann_flow",
]
