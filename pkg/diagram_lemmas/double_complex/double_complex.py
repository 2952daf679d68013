import logging
from collections.abc import Mapping

from pydantic import BaseModel, ConfigDict

import diagram_lemmas.data_types as data_types
import diagram_lemmas.lattice as lattice
import diagram_lemmas.table_group as table_group
import diagram_lemmas.vector_space as vector_space

Position = tuple[int, int]


class Double_Complex:
    """Sparse grid of objects with horizontal and vertical differentials.

    ``horizontal[(n, m)]`` runs (n, m) -> (n, m+1) and ``vertical[(n, m)]``
    runs (n, m) -> (n+1, m); rows grow downward. Positions outside the
    support hold the trivial object, missing differentials are zero.
    """

    def __init__(
        self,
        objects: Mapping[Position, lattice.Structure_Object],
        horizontal: Mapping[Position, lattice.Morphism] | None = None,
        vertical: Mapping[Position, lattice.Morphism] | None = None,
        trivial: lattice.Structure_Object | None = None,
        name: str = "complex",
    ) -> None:
        self.name = name
        self._objects = dict(objects)
        self._horizontal = dict(horizontal or {})
        self._vertical = dict(vertical or {})
        if trivial is None:
            first = next(iter(self._objects.values()), None)
            trivial = first.trivial() if first is not None else table_group.trivial_group()
        self._trivial = trivial
        tags = {obj.backend_tag for obj in self._objects.values()}
        if len(tags) > 1:
            raise data_types.Structural_Error(f"complex mixes backends {sorted(tags)}")
        self._check_endpoints(self._horizontal, (0, 1), "horizontal")
        self._check_endpoints(self._vertical, (1, 0), "vertical")

    def _check_endpoints(
        self, maps: dict[Position, lattice.Morphism], step: Position, label: str
    ) -> None:
        for (n, m), f in maps.items():
            target = (n + step[0], m + step[1])
            if f.source != self.object_at((n, m)) or f.target != self.object_at(target):
                raise data_types.Structural_Error(
                    f"{label} map at ({n},{m}) runs {f.source.name} -> {f.target.name}, "
                    f"expected {self.object_at((n, m)).name} -> {self.object_at(target).name}"
                )

    @property
    def backend_tag(self) -> data_types.Backend_Tag:
        return self._trivial.backend_tag

    @property
    def trivial(self) -> lattice.Structure_Object:
        return self._trivial

    @property
    def objects(self) -> dict[Position, lattice.Structure_Object]:
        return dict(self._objects)

    @property
    def horizontal(self) -> dict[Position, lattice.Morphism]:
        return dict(self._horizontal)

    @property
    def vertical(self) -> dict[Position, lattice.Morphism]:
        return dict(self._vertical)

    def support(self) -> list[Position]:
        return sorted(self._objects)

    def is_empty(self) -> bool:
        return not self._objects

    def extent(self) -> tuple[int, int]:
        """Number of rows and columns of the bounding box, counted from (0, 0)."""
        if not self._objects:
            return 0, 0
        return (
            max(n for n, _ in self._objects) + 1,
            max(m for _, m in self._objects) + 1,
        )

    def object_at(self, pos: Position) -> lattice.Structure_Object:
        return self._objects.get(tuple(pos), self._trivial)

    def h(self, pos: Position) -> lattice.Morphism:
        n, m = pos
        if (n, m) in self._horizontal:
            return self._horizontal[(n, m)]
        return self.object_at((n, m)).zero_morphism(self.object_at((n, m + 1)))

    def v(self, pos: Position) -> lattice.Morphism:
        n, m = pos
        if (n, m) in self._vertical:
            return self._vertical[(n, m)]
        return self.object_at((n, m)).zero_morphism(self.object_at((n + 1, m)))

    def transpose(self) -> "Double_Complex":
        """Swap rows and columns, and with them the horizontal and vertical maps."""
        return Double_Complex(
            {(m, n): obj for (n, m), obj in self._objects.items()},
            {(m, n): f for (n, m), f in self._vertical.items()},
            {(m, n): f for (n, m), f in self._horizontal.items()},
            trivial=self._trivial,
            name=f"{self.name}^T",
        )

    def with_map(
        self, direction: data_types.Edge_Direction, pos: Position, f: lattice.Morphism
    ) -> "Double_Complex":
        horizontal, vertical = dict(self._horizontal), dict(self._vertical)
        if direction == data_types.Edge_Direction.HORIZONTAL:
            horizontal[tuple(pos)] = f
        else:
            vertical[tuple(pos)] = f
        return Double_Complex(
            self._objects, horizontal, vertical, trivial=self._trivial, name=self.name
        )

    def with_object(
        self, pos: Position, obj: lattice.Structure_Object
    ) -> "Double_Complex":
        """Replace the object at ``pos``; maps touching it become zero."""
        n, m = pos
        objects = {**self._objects, (n, m): obj}
        touching = {(n, m), (n, m - 1), (n - 1, m)}
        return Double_Complex(
            objects,
            {k: f for k, f in self._horizontal.items() if k not in touching},
            {k: f for k, f in self._vertical.items() if k not in touching},
            trivial=self._trivial,
            name=self.name,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Double_Complex):
            return NotImplemented
        positions = set(self._objects) | set(other._objects)
        for pos in positions:
            if self.object_at(pos) != other.object_at(pos):
                return False
            if self.h(pos) != other.h(pos) or self.v(pos) != other.v(pos):
                return False
        return True

    def __repr__(self) -> str:
        return f"Double_Complex({self.name}, {len(self._objects)} objects)"


class Local_Star(BaseModel):
    """The maps around A = (n, m):

        a: (n-1,m-1) -> C   m: (n-2,m) -> C   d: (n,m-1) -> A   c: C -> A
        e: A -> B           f: A -> (n+1,m)   g: B -> D         s: B -> (n,m+2)

    with C = (n-1,m), B = (n,m+1), D = (n+1,m+1), and p = ca, r = ec, q = ge.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    position: Position
    a: lattice.Morphism
    m: lattice.Morphism
    d: lattice.Morphism
    c: lattice.Morphism
    e: lattice.Morphism
    f: lattice.Morphism
    g: lattice.Morphism
    s: lattice.Morphism
    p: lattice.Morphism
    r: lattice.Morphism
    q: lattice.Morphism


def local_star(dc: Double_Complex, pos: Position) -> Local_Star:
    n, m = pos
    a, c = dc.h((n - 1, m - 1)), dc.v((n - 1, m))
    e, g = dc.h((n, m)), dc.v((n, m + 1))
    return Local_Star(
        position=(n, m),
        a=a,
        m=dc.v((n - 2, m)),
        d=dc.h((n, m - 1)),
        c=c,
        e=e,
        f=dc.v((n, m)),
        g=g,
        s=dc.h((n, m + 1)),
        p=lattice.compose(c, a),
        r=lattice.compose(e, c),
        q=lattice.compose(g, e),
    )


def _entry(
    code: str, pos: Position, holds: bool, *witness: lattice.Morphism
) -> data_types.Check_Result:
    return data_types.Check_Result(
        status=data_types.Check_Status.PASS if holds else data_types.Check_Status.FAIL,
        code=code,
        instance=f"({pos[0]},{pos[1]})",
        witness=[] if holds else [f"{w.source.name}->{w.target.name}" for w in witness],
    )


def validate(dc: Double_Complex) -> data_types.Law_Report:
    """Check d_h d_h = 0, d_v d_v = 0 and commuting squares at every support position."""
    report = data_types.Law_Report()
    for n, m in dc.support():
        h, v = dc.h((n, m)), dc.v((n, m))
        h_next, v_next = dc.h((n, m + 1)), dc.v((n + 1, m))
        report.add(_entry("D2H", (n, m), lattice.compose(h_next, h).is_zero(), h, h_next))
        report.add(_entry("D2V", (n, m), lattice.compose(v_next, v).is_zero(), v, v_next))
        right_then_down = lattice.compose(dc.v((n, m + 1)), h)
        down_then_right = lattice.compose(dc.h((n + 1, m)), v)
        report.add(_entry("SQ", (n, m), right_then_down == down_then_right, h, v))
    if report.failures():
        logging.warning(
            f"{dc.name}: {len(report.failures())} complex law violations"
        )
    return report


def _sum_objects(
    X: lattice.Structure_Object, Y: lattice.Structure_Object
) -> lattice.Structure_Object:
    if X.backend_tag == data_types.Backend_Tag.TABLE_GROUP:
        return table_group.direct_product(X, Y)
    return vector_space.direct_sum(X, Y)


def _sum_maps(f: lattice.Morphism, g: lattice.Morphism) -> lattice.Morphism:
    if f.source.backend_tag == data_types.Backend_Tag.TABLE_GROUP:
        return table_group.product_morphism(f, g)
    return vector_space.block_morphism(f, g)


def direct_sum(
    first: Double_Complex, second: Double_Complex, name: str | None = None
) -> Double_Complex:
    """Position-wise direct sum (direct product for table groups)."""
    if first.is_empty():
        return second
    if second.is_empty():
        return first
    if first.backend_tag != second.backend_tag:
        raise data_types.Structural_Error(
            f"direct sum of a {first.backend_tag} and a {second.backend_tag} complex"
        )
    positions = sorted(set(first.support()) | set(second.support()))
    objects = {
        pos: _sum_objects(first.object_at(pos), second.object_at(pos)) for pos in positions
    }
    horizontal, vertical = {}, {}
    for pos in positions:
        h = _sum_maps(first.h(pos), second.h(pos))
        v = _sum_maps(first.v(pos), second.v(pos))
        if not h.is_zero():
            horizontal[pos] = h
        if not v.is_zero():
            vertical[pos] = v
    return Double_Complex(
        objects,
        horizontal,
        vertical,
        trivial=first.trivial,
        name=name or f"{first.name}+{second.name}",
    )
