from abc import ABC
from typing import TYPE_CHECKING

import diagram_lemmas.data_types as data_types

if TYPE_CHECKING:
    from diagram_lemmas.cli.diagram_file import Diagram_Parser

SECTIONS = ("objects", "horizontal", "vertical")


class Parser_State(ABC):
    @property
    def parser(self) -> "Diagram_Parser":
        return self._parser

    @parser.setter
    def parser(self, parser: "Diagram_Parser") -> None:
        self._parser = parser

    def _unexpected(self, what: str, line: int) -> data_types.Diagram_Syntax_Error:
        return data_types.Diagram_Syntax_Error(
            f"unexpected {what} in {type(self).__name__} state", line
        )

    def read_declaration(self, tokens: list[str], line: int) -> None:
        raise self._unexpected(f"'{tokens[0]}' declaration", line)

    def read_section(self, section: str, line: int) -> None:
        raise self._unexpected(f"'{section}' section", line)

    def read_row(self, tokens: list[str], line: int) -> None:
        raise self._unexpected("row", line)

    def read_end(self, line: int) -> None:
        raise self._unexpected("'end'", line)

    def finish(self, line: int) -> None:
        raise data_types.Diagram_Syntax_Error(
            f"file ends inside a block ({type(self).__name__} state)", line
        )


def _expect(tokens: list[str], index: int, word: str, line: int) -> None:
    if len(tokens) <= index or tokens[index] != word:
        raise data_types.Diagram_Syntax_Error(
            f"expected '{word}' after {' '.join(tokens[:index])!r}", line
        )


class Top_Level(Parser_State):
    def read_declaration(self, tokens: list[str], line: int) -> None:
        keyword = tokens[0]
        if keyword == "grid":
            if len(tokens) != 1:
                raise data_types.Diagram_Syntax_Error("'grid' takes no arguments", line)
            self.parser.open_grid(line)
            self.parser.transition_to(In_Grid())
            return
        if keyword == "structure":
            # structure NAME = KIND ARGS...
            _expect(tokens, 2, "=", line)
            if len(tokens) < 4:
                raise data_types.Diagram_Syntax_Error("structure without a kind", line)
            declaration = self.parser.declare_structure(tokens[1], tokens[3], tokens[4:], line)
        else:
            # morphism NAME : SOURCE -> TARGET = KIND ARGS...
            _expect(tokens, 2, ":", line)
            _expect(tokens, 4, "->", line)
            _expect(tokens, 6, "=", line)
            if len(tokens) < 8:
                raise data_types.Diagram_Syntax_Error("morphism without a kind", line)
            declaration = self.parser.declare_morphism(
                tokens[1], tokens[3], tokens[5], tokens[7], tokens[8:], line
            )
        if declaration.kind in ("table", "matrix"):
            self.parser.transition_to(Reading_Rows(declaration))

    def finish(self, line: int) -> None:
        return


class Reading_Rows(Parser_State):
    """Integer rows of a group table or a matrix, closed by 'end'."""

    def __init__(self, declaration) -> None:
        self.declaration = declaration

    def read_row(self, tokens: list[str], line: int) -> None:
        try:
            self.declaration.rows.append([int(token) for token in tokens])
        except ValueError:
            raise data_types.Diagram_Syntax_Error(
                f"non-integer entry in {self.declaration.name}: {' '.join(tokens)}", line
            ) from None

    def read_end(self, line: int) -> None:
        self.parser.transition_to(Top_Level())


class In_Grid(Parser_State):
    section: str | None = None

    def read_section(self, section: str, line: int) -> None:
        self.section = section

    def read_row(self, tokens: list[str], line: int) -> None:
        if self.section is None:
            raise data_types.Diagram_Syntax_Error(
                f"grid row before any of {', '.join(SECTIONS)}", line
            )
        self.parser.add_grid_row(self.section, tokens, line)

    def read_end(self, line: int) -> None:
        self.parser.transition_to(Top_Level())
