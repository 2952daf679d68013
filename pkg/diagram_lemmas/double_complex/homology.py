from pydantic import BaseModel, ConfigDict

import diagram_lemmas.data_types as data_types
import diagram_lemmas.lattice as lattice
import diagram_lemmas.subquotient as subquotient

from .double_complex import Double_Complex, Position, local_star


class Homology_Object(BaseModel):
    """One of A_h, A_v, A_□, □A; ``value`` is None exactly when it is undefined."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    kind: data_types.Homology_Kind
    position: Position
    value: subquotient.Subquotient | None = None
    defined: bool
    reason: str = ""

    @property
    def label(self) -> str:
        return self.kind.symbol.format(f"({self.position[0]},{self.position[1]})")

    def is_trivial(self) -> bool:
        return self.defined and self.value.is_trivial()

    def require(self) -> subquotient.Subquotient:
        if not self.defined:
            raise data_types.Hypothesis_Error(f"{self.label} is not defined: {self.reason}")
        return self.value

    def describe(self) -> str:
        if not self.defined:
            return f"{self.label} undefined: {self.reason}"
        return f"{self.label} defined, order {self.value.order}"


def _homology(
    dc: Double_Complex,
    pos: Position,
    kind: data_types.Homology_Kind,
    numerator: lattice.Subgroup,
    denominator: lattice.Subgroup,
) -> Homology_Object:
    failure = lattice.normal_to_failure(denominator, numerator)
    if failure is not None:
        return Homology_Object(kind=kind, position=tuple(pos), defined=False, reason=failure)
    value = subquotient.form_subquotient(dc.object_at(pos), numerator, denominator)
    return Homology_Object(kind=kind, position=tuple(pos), value=value, defined=True)


def horizontal_homology(dc: Double_Complex, pos: Position) -> Homology_Object:
    """A_h = Ker e / Im d."""
    star = local_star(dc, pos)
    return _homology(
        dc, pos, data_types.Homology_Kind.HORIZONTAL, star.e.kernel(), star.d.image()
    )


def vertical_homology(dc: Double_Complex, pos: Position) -> Homology_Object:
    """A_v = Ker f / Im c."""
    star = local_star(dc, pos)
    return _homology(
        dc, pos, data_types.Homology_Kind.VERTICAL, star.f.kernel(), star.c.image()
    )


def receptor(dc: Double_Complex, pos: Position) -> Homology_Object:
    """□A = (Ker e ∧ Ker f) / Im p."""
    star = local_star(dc, pos)
    return _homology(
        dc,
        pos,
        data_types.Homology_Kind.RECEPTOR,
        lattice.meet(star.e.kernel(), star.f.kernel()),
        star.p.image(),
    )


def donor(dc: Double_Complex, pos: Position) -> Homology_Object:
    """A_□ = Ker q / (Im c ∨ Im d)."""
    star = local_star(dc, pos)
    return _homology(
        dc,
        pos,
        data_types.Homology_Kind.DONOR,
        star.q.kernel(),
        lattice.join(star.c.image(), star.d.image()),
    )


_BUILDERS = {
    data_types.Homology_Kind.HORIZONTAL: horizontal_homology,
    data_types.Homology_Kind.VERTICAL: vertical_homology,
    data_types.Homology_Kind.DONOR: donor,
    data_types.Homology_Kind.RECEPTOR: receptor,
}


def homology(
    dc: Double_Complex, pos: Position, kind: data_types.Homology_Kind
) -> Homology_Object:
    return _BUILDERS[kind](dc, pos)


def all_homology(dc: Double_Complex, pos: Position) -> list[Homology_Object]:
    return [builder(dc, pos) for builder in _BUILDERS.values()]
