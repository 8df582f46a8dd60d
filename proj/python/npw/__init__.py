"""U(N)-derived spacetime algebra toolkit.

Builds the orthonormal hermitian basis generalizing the Pauli matrices,
extracts the structure constants of its commutators and anticommutators,
assembles the generator representations they induce on N^2-dimensional
spacetime, applies rotations/boosts/scale transformations, solves for
momentum matrices on direct-sum representations, and machine-verifies the
algebraic identities behind all of it.
"""

from npw._core import (
    __version__,
    algebra_document_json,
    anti_rep_basis,
    basis_labels,
    expand_in_basis,
    generators_2n,
    generators_n2,
    interval_first_order_change,
    rotation_invariance,
    similarity_matrix,
    solve_momentum,
    structure_constants,
    subspace_indices,
    transform_event,
    transform_matrix,
    utility_basis,
    verify,
)

__all__ = [
    "__version__",
    "algebra_document_json",
    "anti_rep_basis",
    "basis_labels",
    "expand_in_basis",
    "generators_2n",
    "generators_n2",
    "interval_first_order_change",
    "rotation_invariance",
    "similarity_matrix",
    "solve_momentum",
    "structure_constants",
    "subspace_indices",
    "transform_event",
    "transform_matrix",
    "utility_basis",
    "verify",
]
