from .sampling import (
    Complex_Sampler,
    Configuration_Sampler,
    Exactness_Configuration,
    Free_Sampler,
    evaluate_configuration,
)
from .subquotient import (
    Induced_Morphism,
    Subquotient,
    chase,
    chase_mismatches,
    criterion_sides,
    compose_induced,
    exactness_criterion,
    form_subquotient,
    identity_induced,
    induced_morphism,
    induced_sequence,
    is_exact_at,
)
