from collections.abc import Sequence


class Engine_Error(Exception):
    pass


class Structural_Error(Engine_Error):
    pass


class Precondition_Error(Engine_Error):
    pass


class Hypothesis_Error(Engine_Error):
    pass


class Validation_Error(Engine_Error):
    def __init__(self, message: str, witness: Sequence[int] = ()) -> None:
        super().__init__(message)
        self.witness = tuple(witness)


class Diagram_File_Error(Engine_Error):
    def __init__(self, message: str, line: int = 0) -> None:
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


class Diagram_Syntax_Error(Diagram_File_Error):
    pass


class Undeclared_Name_Error(Diagram_File_Error):
    pass


class Homomorphism_Law_Error(Diagram_File_Error):
    pass


class Complex_Law_Error(Diagram_File_Error):
    pass
