from .diagram_file import (
    Diagram_File,
    Diagram_Parser,
    build,
    parse,
    parse_text,
    serialize,
)
from .fuzz import check_complex, conjugate, fuzz_complex, scan_positions
