from .finite_field import (
    echelon_rows,
    inv_mod_mat,
    is_prime,
    mod_p,
    nullspace_mod,
    rank_mod,
    rref_mod,
    solve_mod,
)
from .oracle import (
    all_vectors,
    as_cayley,
    translate_morphism,
    translate_subgroup,
    vector_index,
)
from .vector_space import (
    Matrix_Morphism,
    Vector_Space,
    block_morphism,
    direct_sum,
    matrix_image,
    matrix_preimage,
    random_automorphism,
    random_morphism,
    random_subspace,
    subspace_sum,
    subspace_intersection,
    vector_space,
)
