from .catalog import (
    FIXTURE_GROUPS,
    alternating_group,
    catalog_group,
    cyclic_group,
    cyclic_morphism,
    cyclic_sequence,
    dihedral_group,
    direct_product,
    elementary_abelian,
    permutation_group,
    product_morphism,
    quaternion_group,
    sign_sequence,
    small_groups,
    symmetric_group,
)
from .cayley_group import (
    Cayley_Group,
    Element_Map_Morphism,
    all_subgroups,
    from_table,
    generated_subgroup,
    normal_closure,
    quotient_group,
    trivial_group,
)
from .homomorphisms import (
    automorphisms,
    enumerate_homomorphisms,
    from_generator_images,
    generating_set,
    isomorphisms,
)
