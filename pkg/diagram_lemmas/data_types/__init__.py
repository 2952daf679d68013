from .data_types import (
    Backend_Tag,
    Check_Result,
    Check_Status,
    Command_Report,
    Corner_Shape,
    Edge_Direction,
    Engine_Cfg_File,
    Exactness_Entry,
    Execution_Status,
    Fuzz_Parameters,
    Fuzz_Statistics,
    Homology_Kind,
    Law_Report,
    Log_Level,
    Output_Format,
    Salamander_Report,
    Suite_Backend,
    Three_By_Three_Verdict,
)
from .exceptions import (
    Complex_Law_Error,
    Diagram_File_Error,
    Diagram_Syntax_Error,
    Engine_Error,
    Homomorphism_Law_Error,
    Hypothesis_Error,
    Precondition_Error,
    Structural_Error,
    Undeclared_Name_Error,
    Validation_Error,
)
