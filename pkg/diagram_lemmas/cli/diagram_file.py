import logging
from pathlib import Path

from pydantic import BaseModel, Field

import diagram_lemmas.data_types as data_types
import diagram_lemmas.double_complex as double_complex
import diagram_lemmas.lattice as lattice
import diagram_lemmas.state as state
import diagram_lemmas.table_group as table_group
import diagram_lemmas.vector_space as vector_space
from diagram_lemmas.double_complex import Double_Complex

STRUCTURE_KINDS = ("table", "cyclic", "vecspace", "catalog")
MORPHISM_KINDS = ("map", "gens", "matrix", "zero", "identity")
KEYWORDS = ("structure", "morphism", "grid")
EMPTY = "."


class Structure_Declaration(BaseModel):
    name: str
    kind: str
    args: list[str] = Field(default_factory=list)
    rows: list[list[int]] = Field(default_factory=list)
    line: int = 0


class Morphism_Declaration(BaseModel):
    name: str
    source: str
    target: str
    kind: str
    args: list[str] = Field(default_factory=list)
    rows: list[list[int]] = Field(default_factory=list)
    line: int = 0


class Grid_Row(BaseModel):
    names: list[str]
    line: int = 0


class Diagram_File(BaseModel):
    name: str = "diagram"
    structures: dict[str, Structure_Declaration] = Field(default_factory=dict)
    morphisms: dict[str, Morphism_Declaration] = Field(default_factory=dict)
    grid_line: int = 0
    objects: list[Grid_Row] = Field(default_factory=list)
    horizontal: list[Grid_Row] = Field(default_factory=list)
    vertical: list[Grid_Row] = Field(default_factory=list)


class Diagram_Parser:
    """Line-oriented reader; what a line may be depends on the current state."""

    def __init__(self, name: str = "diagram") -> None:
        self.file = Diagram_File(name=name)
        self._state: state.Parser_State
        self.transition_to(state.Top_Level())

    @property
    def state(self) -> state.Parser_State:
        return self._state

    def transition_to(self, new_state: state.Parser_State) -> None:
        self._state = new_state
        self._state.parser = self

    def _check_new_name(self, name: str, line: int) -> None:
        if name == EMPTY or name in KEYWORDS or name in state.SECTIONS or name == "end":
            raise data_types.Diagram_Syntax_Error(f"{name!r} cannot be used as a name", line)
        if name in self.file.structures or name in self.file.morphisms:
            raise data_types.Diagram_Syntax_Error(f"{name!r} is declared twice", line)

    def declare_structure(
        self, name: str, kind: str, args: list[str], line: int
    ) -> Structure_Declaration:
        self._check_new_name(name, line)
        if kind not in STRUCTURE_KINDS:
            raise data_types.Diagram_Syntax_Error(
                f"unknown structure kind {kind!r}, expected one of {', '.join(STRUCTURE_KINDS)}",
                line,
            )
        declaration = Structure_Declaration(name=name, kind=kind, args=args, line=line)
        self.file.structures[name] = declaration
        return declaration

    def declare_morphism(
        self, name: str, source: str, target: str, kind: str, args: list[str], line: int
    ) -> Morphism_Declaration:
        self._check_new_name(name, line)
        if kind not in MORPHISM_KINDS:
            raise data_types.Diagram_Syntax_Error(
                f"unknown morphism kind {kind!r}, expected one of {', '.join(MORPHISM_KINDS)}",
                line,
            )
        declaration = Morphism_Declaration(
            name=name, source=source, target=target, kind=kind, args=args, line=line
        )
        self.file.morphisms[name] = declaration
        return declaration

    def open_grid(self, line: int) -> None:
        if self.file.grid_line:
            raise data_types.Diagram_Syntax_Error(
                f"second grid (the first starts on line {self.file.grid_line})", line
            )
        self.file.grid_line = line

    def add_grid_row(self, section: str, names: list[str], line: int) -> None:
        getattr(self.file, section).append(Grid_Row(names=names, line=line))

    def feed(self, text: str, line: int) -> None:
        tokens = text.split("#", 1)[0].split()
        if not tokens:
            return
        if tokens[0] in KEYWORDS:
            self.state.read_declaration(tokens, line)
        elif tokens == ["end"]:
            self.state.read_end(line)
        elif len(tokens) == 1 and tokens[0] in state.SECTIONS:
            self.state.read_section(tokens[0], line)
        else:
            self.state.read_row(tokens, line)

    def parse(self, text: str) -> Diagram_File:
        lines = text.splitlines()
        for number, content in enumerate(lines, start=1):
            self.feed(content, number)
        self.state.finish(len(lines))
        return self.file


def parse_text(text: str, name: str = "diagram") -> Diagram_File:
    return Diagram_Parser(name).parse(text)


def _int_args(declaration: Structure_Declaration | Morphism_Declaration) -> list[int]:
    try:
        return [int(arg) for arg in declaration.args]
    except ValueError:
        raise data_types.Diagram_Syntax_Error(
            f"{declaration.name}: integer arguments expected, got {' '.join(declaration.args)}",
            declaration.line,
        ) from None


def _build_structure(declaration: Structure_Declaration) -> lattice.Structure_Object:
    kind, name, line = declaration.kind, declaration.name, declaration.line
    try:
        if kind == "table":
            group = table_group.from_table(declaration.rows)
        elif kind == "cyclic":
            group = table_group.trivial_group()
            for n in _int_args(declaration):
                group = table_group.direct_product(group, table_group.cyclic_group(n))
        elif kind == "catalog":
            if len(declaration.args) != 1:
                raise data_types.Diagram_Syntax_Error("catalog takes one group name", line)
            group = table_group.catalog_group(declaration.args[0])
        else:
            args = _int_args(declaration)
            if len(args) != 2:
                raise data_types.Diagram_Syntax_Error("vecspace takes a prime and a dimension", line)
            return vector_space.vector_space(*args)
    except data_types.Validation_Error as error:
        raise data_types.Diagram_File_Error(f"structure {name}: {error}", line) from error
    except data_types.Structural_Error as error:
        raise data_types.Diagram_File_Error(f"structure {name}: {error}", line) from error
    if group.order == 1:
        return table_group.trivial_group()
    return table_group.Cayley_Group(group.table, name=name, labels=group.labels)


def _generator_images(declaration: Morphism_Declaration) -> dict[int, int]:
    images = {}
    for arg in declaration.args:
        source, _, target = arg.partition(":")
        try:
            images[int(source)] = int(target)
        except ValueError:
            raise data_types.Diagram_Syntax_Error(
                f"{declaration.name}: generator images are written g:image, got {arg!r}",
                declaration.line,
            ) from None
    return images


def _build_morphism(
    declaration: Morphism_Declaration, structures: dict[str, lattice.Structure_Object]
) -> lattice.Morphism:
    name, line = declaration.name, declaration.line
    for end in (declaration.source, declaration.target):
        if end not in structures:
            raise data_types.Undeclared_Name_Error(
                f"morphism {name} uses undeclared structure {end!r}", line
            )
    source, target = structures[declaration.source], structures[declaration.target]
    if source.backend_tag != target.backend_tag:
        raise data_types.Diagram_File_Error(
            f"morphism {name} joins a {source.backend_tag} to a {target.backend_tag}", line
        )
    kind = declaration.kind
    tables = source.backend_tag == data_types.Backend_Tag.TABLE_GROUP
    try:
        if kind == "zero":
            return source.zero_morphism(target)
        if kind == "identity":
            if source != target:
                raise data_types.Diagram_File_Error(
                    f"identity {name} between different structures", line
                )
            return source.identity()
        if kind == "matrix":
            if tables:
                raise data_types.Diagram_File_Error(f"matrix {name} on a table group", line)
            rows = declaration.rows if declaration.rows else [[] for _ in range(target.dim)]
            return vector_space.Matrix_Morphism(source, target, rows)
        if not tables:
            raise data_types.Diagram_File_Error(f"{kind} {name} on a vector space", line)
        if kind == "map":
            return table_group.Element_Map_Morphism(source, target, _int_args(declaration))
        return table_group.from_generator_images(source, target, _generator_images(declaration))
    except data_types.Validation_Error as error:
        raise data_types.Homomorphism_Law_Error(f"morphism {name}: {error}", line) from error
    except data_types.Structural_Error as error:
        raise data_types.Diagram_File_Error(f"morphism {name}: {error}", line) from error


def _lookup(names: dict, name: str, what: str, line: int):
    if name not in names:
        raise data_types.Undeclared_Name_Error(f"undeclared {what} {name!r}", line)
    return names[name]


def build(diagram: Diagram_File, check_laws: bool = True) -> Double_Complex:
    """Type-check a parsed file against its grid and, with ``check_laws``, validate the complex laws."""
    structures = {
        name: _build_structure(declaration) for name, declaration in diagram.structures.items()
    }
    morphisms = {
        name: _build_morphism(declaration, structures)
        for name, declaration in diagram.morphisms.items()
    }
    objects, row_lines = {}, {}
    for n, row in enumerate(diagram.objects):
        row_lines[n] = row.line
        for m, name in enumerate(row.names):
            if name != EMPTY:
                objects[(n, m)] = _lookup(structures, name, "structure", row.line)
    tags = {obj.backend_tag for obj in objects.values()}
    if len(tags) > 1:
        raise data_types.Diagram_File_Error(
            f"grid mixes backends {sorted(tags)}", diagram.grid_line
        )
    trivial = next(iter(objects.values())).trivial() if objects else None
    maps = {}
    for section, step in (("horizontal", (0, 1)), ("vertical", (1, 0))):
        placed = {}
        for n, row in enumerate(getattr(diagram, section)):
            for m, name in enumerate(row.names):
                if name == EMPTY:
                    continue
                f = _lookup(morphisms, name, "morphism", row.line)
                source = objects.get((n, m), trivial)
                target = objects.get((n + step[0], m + step[1]), trivial)
                if f.source != source or f.target != target:
                    raise data_types.Diagram_File_Error(
                        f"{section} morphism {name} at ({n},{m}) runs "
                        f"{f.source.name} -> {f.target.name}, the grid has "
                        f"{getattr(source, 'name', '1')} -> {getattr(target, 'name', '1')}",
                        row.line,
                    )
                placed[(n, m)] = f
        maps[section] = placed
    dc = Double_Complex(
        objects, maps["horizontal"], maps["vertical"], trivial=trivial, name=diagram.name
    )
    if check_laws:
        failures = double_complex.validate(dc).failures()
        if failures:
            first = failures[0]
            n = int(first.instance.strip("()").split(",")[0])
            laws = {"D2H": "horizontal d∘d = 0", "D2V": "vertical d∘d = 0", "SQ": "square commutes"}
            raise data_types.Complex_Law_Error(
                f"{laws[first.code]} fails at {first.instance}",
                row_lines.get(n, diagram.grid_line),
            )
    logging.debug(f"{diagram.name}: parsed {len(objects)} objects")
    return dc


def parse(path: Path | str, check_laws: bool = True) -> Double_Complex:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as error:
        raise data_types.Diagram_File_Error(f"cannot read {path}: {error}") from error
    return build(parse_text(text, name=path.stem), check_laws)


def _rows(matrix) -> list[str]:
    return ["  " + " ".join(str(int(x)) for x in row) for row in matrix]


def serialize(dc: Double_Complex) -> str:
    """Diagram-file text that parses back to a complex equal to ``dc``."""
    if any(n < 0 or m < 0 for n, m in dc.support()):
        raise data_types.Structural_Error("only complexes on nonnegative positions serialize")
    rows, cols = dc.extent()
    lines = [f"# {dc.name}"]
    object_names = {}
    for n, m in dc.support():
        obj = dc.object_at((n, m))
        if obj.is_trivial():
            continue
        name = f"X{n}_{m}"
        object_names[(n, m)] = name
        if obj.backend_tag == data_types.Backend_Tag.TABLE_GROUP:
            lines += [f"structure {name} = table", *_rows(obj.table), "end"]
        else:
            lines.append(f"structure {name} = vecspace {obj.p} {obj.dim}")
    map_names = {"horizontal": {}, "vertical": {}}
    for section, prefix, getter, step in (
        ("horizontal", "h", dc.h, (0, 1)),
        ("vertical", "v", dc.v, (1, 0)),
    ):
        for n, m in dc.support():
            f = getter((n, m))
            if f.is_zero():
                continue
            name = f"{prefix}{n}_{m}"
            map_names[section][(n, m)] = name
            target = object_names[(n + step[0], m + step[1])]
            header = f"morphism {name} : {object_names[(n, m)]} -> {target} ="
            if f.source.backend_tag == data_types.Backend_Tag.TABLE_GROUP:
                lines.append(f"{header} map {f.describe()}")
            else:
                lines += [f"{header} matrix", *_rows(f.matrix), "end"]
    lines.append("grid")
    for section, names in (("objects", object_names), *map_names.items()):
        lines.append(section)
        for n in range(rows):
            lines.append("  " + " ".join(names.get((n, m), EMPTY) for m in range(cols)))
    lines.append("end")
    return "\n".join(lines) + "\n"
