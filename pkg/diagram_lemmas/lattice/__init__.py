from .operations import (
    compose,
    direct_image,
    embedding_of,
    factorize,
    identity,
    image,
    inverse_image,
    is_conormal,
    is_embedding,
    is_isomorphism,
    is_normal,
    is_normal_to,
    is_projection,
    join,
    kernel,
    leq,
    meet,
    normal_closure,
    normal_to_failure,
    projection_by,
    zero_morphism,
)
from .structure import Factorization_Triple, Morphism, Structure_Object, Subgroup
