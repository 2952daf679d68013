from .double_complex import (
    Double_Complex,
    Local_Star,
    Position,
    direct_sum,
    local_star,
    validate,
)
from .homology import (
    Homology_Object,
    all_homology,
    donor,
    homology,
    horizontal_homology,
    receptor,
    vertical_homology,
)
