from .corollaries import (
    Verified_Isomorphism,
    corner_iso,
    donor_receptor_iso,
    is_exact_on_line,
)
from .sequence import (
    Six_Term_Sequence,
    check_composite_coherence,
    salamander_sequence,
    sequence_hypotheses,
    verify_salamander,
)
from .three_by_three import (
    check_hypotheses,
    cyclic_grid,
    definedness_checks,
    mutated_grid,
    sign_grid,
    three_by_three,
    trivial_grid,
)
