"""Brute-force ground truth: explicit matrix representations, L-operators,
characteristic matrices and projectors over the exact field."""

from .checks import (
    all_projectors,
    char_identity_check,
    coproduct_check,
    coupled_oracle,
    intertwining_check,
    mu_oracle,
    qybe_check,
    subalgebra_block_check,
    supertrace_invariant,
    wigner_oracle,
)
from .loperators import (
    CHAR_KINDS,
    L_KINDS,
    big_entry,
    char_eigenvalue,
    char_eigenvalues,
    char_matrix,
    eij_matrix,
    etilde_matrix,
    l_operator,
    projector,
    vector_slot_parities,
)
from .modules import (
    RepModule,
    highest_weight_vectors,
    module_from_highest_weight,
    subalgebra_components,
    subalgebra_highest_vector,
    submodule,
    tensor_module,
    vector_rep,
)

__all__ = [
    "qybe_check", "intertwining_check", "coproduct_check",
    "subalgebra_block_check", "char_identity_check", "all_projectors",
    "supertrace_invariant", "wigner_oracle", "coupled_oracle", "mu_oracle",
    "L_KINDS", "CHAR_KINDS", "eij_matrix", "etilde_matrix", "l_operator",
    "char_matrix", "char_eigenvalue", "char_eigenvalues", "projector",
    "big_entry", "vector_slot_parities",
    "RepModule", "vector_rep", "tensor_module", "highest_weight_vectors",
    "submodule", "module_from_highest_weight", "subalgebra_highest_vector",
    "subalgebra_components",
]
