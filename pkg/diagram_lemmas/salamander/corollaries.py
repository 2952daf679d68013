import logging

from pydantic import BaseModel, ConfigDict, Field

import diagram_lemmas.data_types as data_types
import diagram_lemmas.double_complex as double_complex
import diagram_lemmas.subquotient as subquotient
from diagram_lemmas.double_complex import Double_Complex, Homology_Object, Position

from .sequence import orient, restore

Shape = data_types.Corner_Shape


class Verified_Isomorphism(BaseModel):
    """An induced map checked to be both an embedding and a projection."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    label: str
    induced: subquotient.Induced_Morphism
    is_embedding: bool
    is_projection: bool
    trace: list[str] = Field(default_factory=list)

    @property
    def verified(self) -> bool:
        return self.is_embedding and self.is_projection

    @property
    def source(self) -> subquotient.Subquotient:
        return self.induced.source_sq

    @property
    def target(self) -> subquotient.Subquotient:
        return self.induced.target_sq

    def describe(self) -> str:
        verdict = "iso" if self.verified else (
            f"NOT iso (embedding={self.is_embedding}, projection={self.is_projection})"
        )
        return f"{self.label} [order {self.source.order} -> {self.target.order}]: {verdict}"


def _verify(label: str, induced: subquotient.Induced_Morphism, trace: list[str]) -> Verified_Isomorphism:
    iso = Verified_Isomorphism(
        label=label,
        induced=induced,
        is_embedding=induced.map.is_embedding(),
        is_projection=induced.map.is_projection(),
        trace=trace,
    )
    if not iso.verified:
        logging.error(f"isomorphism check failed: {iso.describe()}")
    return iso


def _relabel(obj: Homology_Object, direction: data_types.Edge_Direction) -> str:
    """Label in the caller's coordinates; horizontal and vertical swap under transposition."""
    pos = restore(obj.position, direction)
    kind = obj.kind
    if direction == data_types.Edge_Direction.VERTICAL:
        kind = {
            data_types.Homology_Kind.HORIZONTAL: data_types.Homology_Kind.VERTICAL,
            data_types.Homology_Kind.VERTICAL: data_types.Homology_Kind.HORIZONTAL,
        }.get(kind, kind)
    return kind.symbol.format(f"({pos[0]},{pos[1]})")


def _require_defined(objs: list[Homology_Object], direction: data_types.Edge_Direction) -> None:
    for obj in objs:
        if not obj.defined:
            raise data_types.Hypothesis_Error(
                f"{_relabel(obj, direction)} is not defined: {obj.reason}"
            )


def donor_receptor_iso(
    dc: Double_Complex,
    pos: Position,
    direction: data_types.Edge_Direction = data_types.Edge_Direction.HORIZONTAL,
) -> Verified_Isomorphism:
    """A_□ -> □B induced by the edge A -> B when the homology on that line vanishes at A and B."""
    work, (n, m) = orient(dc, pos, direction)
    A, B = (n, m), (n, m + 1)
    at_A = double_complex.horizontal_homology(work, A)
    at_B = double_complex.horizontal_homology(work, B)
    donor_A = double_complex.donor(work, A)
    receptor_B = double_complex.receptor(work, B)
    _require_defined([at_A, at_B, donor_A, receptor_B], direction)
    for obj in (at_A, at_B):
        if not obj.is_trivial():
            raise data_types.Hypothesis_Error(
                f"{_relabel(obj, direction)} is not trivial (order {obj.value.order})"
            )
    star, star_B = double_complex.local_star(work, A), double_complex.local_star(work, B)
    out_of_B = star_B.e
    label = f"{_relabel(donor_A, direction)} -> {_relabel(receptor_B, direction)}"
    trace = [
        f"{_relabel(at_A, direction)} = 1",
        f"{_relabel(at_B, direction)} = 1",
        f"b read at {restore(B, direction)} as the outgoing {direction} map: "
        f"Im e = Ker b is {star.e.image() == out_of_B.kernel()}",
    ]
    induced = subquotient.induced_morphism(star.e, donor_A.value, receptor_B.value)
    return _verify(label, induced, trace)


# shape -> (offsets that must hold trivial objects, offset and line of the exactness
#           condition, (source, target) kinds of the two isomorphisms)
_CORNERS = {
    Shape.A: (
        ((0, -1), (1, -1)),
        ((1, 0), data_types.Edge_Direction.HORIZONTAL),
        (
            (data_types.Homology_Kind.RECEPTOR, data_types.Homology_Kind.HORIZONTAL),
            (data_types.Homology_Kind.VERTICAL, data_types.Homology_Kind.DONOR),
        ),
    ),
    Shape.B: (
        ((-1, 0), (-1, 1)),
        ((0, 1), data_types.Edge_Direction.VERTICAL),
        (
            (data_types.Homology_Kind.RECEPTOR, data_types.Homology_Kind.VERTICAL),
            (data_types.Homology_Kind.HORIZONTAL, data_types.Homology_Kind.DONOR),
        ),
    ),
    Shape.C: (
        ((0, 1), (-1, 1)),
        ((-1, 0), data_types.Edge_Direction.HORIZONTAL),
        (
            (data_types.Homology_Kind.HORIZONTAL, data_types.Homology_Kind.DONOR),
            (data_types.Homology_Kind.RECEPTOR, data_types.Homology_Kind.VERTICAL),
        ),
    ),
    Shape.D: (
        ((1, 0), (1, -1)),
        ((0, -1), data_types.Edge_Direction.VERTICAL),
        (
            (data_types.Homology_Kind.VERTICAL, data_types.Homology_Kind.DONOR),
            (data_types.Homology_Kind.RECEPTOR, data_types.Homology_Kind.HORIZONTAL),
        ),
    ),
}


def is_exact_on_line(
    dc: Double_Complex, pos: Position, direction: data_types.Edge_Direction
) -> bool:
    """Im(incoming) = Ker(outgoing) at ``pos`` along the row or column."""
    n, m = pos
    if direction == data_types.Edge_Direction.HORIZONTAL:
        incoming, outgoing = dc.h((n, m - 1)), dc.h((n, m))
    else:
        incoming, outgoing = dc.v((n - 1, m)), dc.v((n, m))
    return incoming.image() == outgoing.kernel()


def corner_iso(
    dc: Double_Complex, pos: Position, shape: data_types.Corner_Shape
) -> tuple[Verified_Isomorphism, Verified_Isomorphism]:
    """The two identity-induced isomorphisms at a corner whose dotted line is exact at B."""
    n, m = pos
    trivial_offsets, ((dn, dm), line), pairs = _CORNERS[shape]
    for dn_t, dm_t in trivial_offsets:
        corner = (n + dn_t, m + dm_t)
        if not dc.object_at(corner).is_trivial():
            raise data_types.Hypothesis_Error(
                f"corner ({shape}) at ({n},{m}) needs a trivial object at {corner}"
            )
    at_B = (n + dn, m + dm)
    word = "row" if line == data_types.Edge_Direction.HORIZONTAL else "column"
    if not is_exact_on_line(dc, at_B, line):
        raise data_types.Hypothesis_Error(
            f"corner ({shape}) at ({n},{m}) needs the {word} through {at_B} exact there"
        )
    objs = {obj.kind: obj for obj in double_complex.all_homology(dc, pos)}
    _require_defined(list(objs.values()), data_types.Edge_Direction.HORIZONTAL)
    G = dc.object_at(pos)
    trace = [f"corner ({shape}) at ({n},{m}): {word} exact at {at_B}"]
    isos = []
    for source_kind, target_kind in pairs:
        source, target = objs[source_kind], objs[target_kind]
        induced = subquotient.identity_induced(G, source.value, target.value)
        isos.append(_verify(f"{source.label} -> {target.label}", induced, trace))
    return isos[0], isos[1]
