import logging
from collections import Counter
from enum import Enum, IntEnum, StrEnum, auto
from pathlib import Path
from typing import Any

from pydantic import BaseModel, Field, model_validator


class Backend_Tag(StrEnum):
    TABLE_GROUP = "table-group"
    VECTOR_SPACE = "vector-space"


class Homology_Kind(StrEnum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"
    DONOR = "donor"
    RECEPTOR = "receptor"

    @property
    def symbol(self) -> str:
        return {
            Homology_Kind.HORIZONTAL: "{}_h",
            Homology_Kind.VERTICAL: "{}_v",
            Homology_Kind.DONOR: "{}_□",
            Homology_Kind.RECEPTOR: "□{}",
        }[self]


class Edge_Direction(StrEnum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"


class Corner_Shape(StrEnum):
    A = "a"
    B = "b"
    C = "c"
    D = "d"


class Check_Status(StrEnum):
    PASS = "pass"
    FAIL = "fail"
    SKIP = "skip"


class Output_Format(StrEnum):
    TEXT = "text"
    MACHINE = "machine"


class Suite_Backend(StrEnum):
    TABLE = "table"
    VEC = "vec"
    MIXED = "mixed"
    ORACLE = "oracle"


class Execution_Status(Enum):
    NONE = auto()
    RUNNING = auto()
    COMPLETED = auto()
    ERROR = auto()


class Log_Level(IntEnum):
    DEBUG = logging.DEBUG
    INFO = logging.INFO
    WARNING = logging.WARNING
    ERROR = logging.ERROR
    CRITICAL = logging.CRITICAL


class Check_Result(BaseModel):
    status: Check_Status
    code: str
    instance: str = ""
    message: str = ""
    dual: bool = False
    witness: list[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status != Check_Status.FAIL

    def to_line(self) -> str:
        code = self.code + ("*" if self.dual else "")
        line = f"{self.status.upper():<4} {code:<6} {self.instance}"
        if self.message:
            line += f" :: {self.message}"
        if self.witness:
            line += f" [witness: {'; '.join(self.witness)}]"
        return line


class Law_Report(BaseModel):
    entries: list[Check_Result] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(entry.passed for entry in self.entries)

    def add(self, entry: Check_Result) -> None:
        self.entries.append(entry)

    def extend(self, other: "Law_Report") -> None:
        self.entries.extend(other.entries)

    def failures(self) -> list[Check_Result]:
        return [entry for entry in self.entries if not entry.passed]

    def counts(self) -> dict[str, int]:
        counter = Counter(
            entry.code + ("*" if entry.dual else "") for entry in self.entries
        )
        return dict(sorted(counter.items()))


class Exactness_Entry(BaseModel):
    position: str
    direct: bool
    criterion: bool
    closed_form: bool = True

    @property
    def agree(self) -> bool:
        return self.direct == self.criterion

    @property
    def passed(self) -> bool:
        return self.direct and self.criterion and self.closed_form


class Salamander_Report(BaseModel):
    anchor: str
    entries: list[Exactness_Entry] = Field(default_factory=list)

    @property
    def exact_count(self) -> int:
        return sum(1 for entry in self.entries if entry.direct)

    @property
    def passed(self) -> bool:
        return all(entry.passed for entry in self.entries)

    def summary_line(self) -> str:
        return f"exact at {self.exact_count}/{len(self.entries)} interior positions"


class Three_By_Three_Verdict(BaseModel):
    chain_exact: bool
    direct_exact: bool
    trace: list[str] = Field(default_factory=list)
    definedness: list[Check_Result] = Field(default_factory=list)

    @property
    def exact(self) -> bool:
        return self.chain_exact and self.direct_exact

    @property
    def agree(self) -> bool:
        return self.chain_exact == self.direct_exact


class Fuzz_Parameters(BaseModel):
    rows: int = Field(default=4, ge=0, le=8)
    cols: int = Field(default=4, ge=0, le=8)
    pieces: int = Field(default=4, ge=0)
    backend: Backend_Tag = Backend_Tag.TABLE_GROUP
    max_order: int = Field(default=8, ge=1)
    max_dim: int = Field(default=3, ge=0)
    primes: list[int] = Field(default_factory=lambda: [2, 3])
    allow_nonabelian: bool = False


class Fuzz_Statistics(BaseModel):
    complexes: int = 0
    valid: int = 0
    exact: int = 0
    positions_verified: int = 0
    positions_skipped: int = 0
    qualifying_edges: int = 0
    isomorphisms_verified: int = 0
    failures: list[str] = Field(default_factory=list)

    def merge(self, other: "Fuzz_Statistics") -> None:
        self.complexes += other.complexes
        self.valid += other.valid
        self.exact += other.exact
        self.positions_verified += other.positions_verified
        self.positions_skipped += other.positions_skipped
        self.qualifying_edges += other.qualifying_edges
        self.isomorphisms_verified += other.isomorphisms_verified
        self.failures.extend(other.failures)


class Engine_Cfg_File(BaseModel):
    log_level: Log_Level = Log_Level.INFO
    log_file_path: Path = Path("diagram_lemmas/_logs")
    seed: int = 42
    fuzz_count: int = Field(default=200, ge=0)
    workers: int = Field(default=4, ge=1)
    instances_per_law: int = Field(default=500, ge=1)
    max_instances: int = Field(default=20000, ge=1)
    configurations_per_backend: int = Field(default=1000, ge=1)
    max_table_order: int = Field(default=8, ge=1, le=64)
    max_vector_dim: int = Field(default=4, ge=0, le=10)
    min_outcomes_per_value: int = Field(default=100, ge=0)

    @model_validator(mode="after")
    def _instances_fit_the_cap(self) -> "Engine_Cfg_File":
        if self.max_instances < self.instances_per_law:
            raise ValueError(
                f"max instances ({self.max_instances}) is below instances per law "
                f"({self.instances_per_law})"
            )
        return self

    def to_cfg_format(self) -> dict[str, Any]:
        new_dict = {
            key.replace("_", " "): str(val) for key, val in self.model_dump().items()
        }
        new_dict["log level"] = str(self.log_level // 10)
        return new_dict


class Command_Report(BaseModel):
    command: str
    lines: list[str] = Field(default_factory=list)
    summary: dict[str, str | int] = Field(default_factory=dict)

    @property
    def failed(self) -> bool:
        return any(line.startswith("FAIL") for line in self.lines)

    def add_line(self, line: str) -> None:
        self.lines.append(line)

    def add_failure(self, message: str) -> None:
        self.lines.append(f"FAIL {message}")

    def render(self, fmt: Output_Format) -> str:
        summary = {"command": self.command, **self.summary}
        summary["failures"] = sum(1 for line in self.lines if line.startswith("FAIL"))
        if fmt == Output_Format.MACHINE:
            return "\n".join(f"{key}={val}" for key, val in summary.items()) + "\n"
        block = ["== summary =="] + [f"{key}={val}" for key, val in summary.items()]
        return "\n".join(self.lines + block) + "\n"
