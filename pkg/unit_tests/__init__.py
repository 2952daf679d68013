from . import (
    test_commands,
    test_diagram_file,
    test_double_complex,
    test_framework,
    test_fuzz,
    test_laws,
    test_salamander,
    test_subquotient,
    test_table_group,
    test_utils,
    test_vector_space,
)
