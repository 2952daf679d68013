import logging

from pydantic import BaseModel, ConfigDict

import diagram_lemmas.data_types as data_types
import diagram_lemmas.lattice as lattice


class Subquotient(BaseModel):
    """X/Y inside ``ambient`` with its witness legs.

    ``iota`` is the embedding X/1 -> G and ``pi`` the projection
    X/1 -> X/Y by the pullback of Y along ``iota``.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    ambient: lattice.Structure_Object
    numerator: lattice.Subgroup
    denominator: lattice.Subgroup
    iota: lattice.Morphism
    pi: lattice.Morphism

    @property
    def carrier(self) -> lattice.Structure_Object:
        return self.pi.target

    @property
    def order(self) -> int:
        return self.carrier.order

    def is_trivial(self) -> bool:
        return self.carrier.order == 1

    def same_as(self, other: "Subquotient") -> bool:
        return (
            self.ambient == other.ambient
            and self.numerator == other.numerator
            and self.denominator == other.denominator
        )

    def describe(self) -> str:
        return (
            f"{self.ambient.name}: {self.numerator.order}/{self.denominator.order} "
            f"(order {self.order})"
        )


class Induced_Morphism(BaseModel):
    """f' : X/Y -> U/V induced by ``ambient_map`` together with its lift f'' : X/1 -> U/1."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    map: lattice.Morphism
    lift: lattice.Morphism
    ambient_map: lattice.Morphism
    source_sq: Subquotient
    target_sq: Subquotient


def form_subquotient(
    G: lattice.Structure_Object, X: lattice.Subgroup, Y: lattice.Subgroup
) -> Subquotient:
    G.check_member(X)
    G.check_member(Y)
    failure = lattice.normal_to_failure(Y, X)
    if failure is not None:
        raise data_types.Precondition_Error(f"cannot form X/Y in {G.name}: {failure}")
    iota = lattice.embedding_of(X)
    pi = lattice.projection_by(iota.inverse_image(Y), strict=True)
    return Subquotient(ambient=G, numerator=X, denominator=Y, iota=iota, pi=pi)


def _check_inclusions(f: lattice.Morphism, src: Subquotient, dst: Subquotient) -> None:
    if src.ambient != f.source or dst.ambient != f.target:
        raise data_types.Structural_Error(
            f"{f!r} does not run from {src.ambient.name} to {dst.ambient.name}"
        )
    if not lattice.leq(f.direct_image(src.denominator), dst.denominator):
        raise data_types.Precondition_Error(
            "the image of the source denominator is not contained in the target denominator"
        )
    if not lattice.leq(f.direct_image(src.numerator), dst.numerator):
        raise data_types.Precondition_Error(
            "the image of the source numerator is not contained in the target numerator"
        )


def induced_morphism(
    f: lattice.Morphism, src: Subquotient, dst: Subquotient
) -> Induced_Morphism:
    """The unique f' with f' pi_src = pi_dst f'' and iota_dst f'' = f iota_src."""
    _check_inclusions(f, src, dst)
    lift = lattice.compose(f, src.iota).factor_through_embedding(dst.iota)
    induced = lattice.compose(dst.pi, lift).factor_through_projection(src.pi)
    if lattice.compose(dst.iota, lift) != lattice.compose(f, src.iota):
        raise data_types.Structural_Error("left square of the induced morphism does not commute")
    if lattice.compose(induced, src.pi) != lattice.compose(dst.pi, lift):
        raise data_types.Structural_Error("right square of the induced morphism does not commute")
    return Induced_Morphism(
        map=induced, lift=lift, ambient_map=f, source_sq=src, target_sq=dst
    )


def identity_induced(
    G: lattice.Structure_Object, src: Subquotient, dst: Subquotient
) -> Induced_Morphism:
    """X/Y -> U/V induced by the identity of G (needs Y ⊆ V and X ⊆ U)."""
    return induced_morphism(G.identity(), src, dst)


def compose_induced(g_ind: Induced_Morphism, f_ind: Induced_Morphism) -> Induced_Morphism:
    if not f_ind.target_sq.same_as(g_ind.source_sq):
        raise data_types.Structural_Error("induced morphisms do not share a subquotient")
    return Induced_Morphism(
        map=lattice.compose(g_ind.map, f_ind.map),
        lift=lattice.compose(g_ind.lift, f_ind.lift),
        ambient_map=lattice.compose(g_ind.ambient_map, f_ind.ambient_map),
        source_sq=f_ind.source_sq,
        target_sq=g_ind.target_sq,
    )


def chase(
    src: Subquotient, dst: Subquotient, f: lattice.Morphism, S: lattice.Subgroup
) -> lattice.Subgroup:
    """Pull S back to X, push it into G, along f, pull back to U, push down to U/V."""
    _check_inclusions(f, src, dst)
    src.carrier.check_member(S)
    in_numerator = src.pi.inverse_image(S)
    in_ambient = src.iota.direct_image(in_numerator)
    in_target = f.direct_image(in_ambient)
    in_target_numerator = dst.iota.inverse_image(in_target)
    return dst.pi.direct_image(in_target_numerator)


def chase_mismatches(induced: Induced_Morphism) -> list[lattice.Subgroup]:
    """Subgroups of the source carrier on which the induced map and the chase differ."""
    return [
        S
        for S in induced.source_sq.carrier.all_subgroups()
        if induced.map.direct_image(S)
        != chase(induced.source_sq, induced.target_sq, induced.ambient_map, S)
    ]


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise data_types.Hypothesis_Error(message)


def exactness_criterion(
    f: lattice.Morphism,
    g: lattice.Morphism,
    U: lattice.Subgroup,
    V: lattice.Subgroup,
    W: lattice.Subgroup,
    X: lattice.Subgroup,
    Y: lattice.Subgroup,
    Z: lattice.Subgroup,
) -> bool:
    """Lattice test for exactness of U/V -> W/X -> Y/Z at W/X: fU ∨ X = g⁻¹Z ∧ W."""
    g.check_composable(f)
    for name, (den, num) in {"V in U": (V, U), "X in W": (X, W), "Z in Y": (Z, Y)}.items():
        failure = lattice.normal_to_failure(den, num)
        _require(failure is None, f"normality {name} fails: {failure}")
    _require(lattice.leq(f.direct_image(V), X), "fV ⊆ X fails")
    _require(lattice.leq(f.direct_image(U), W), "fU ⊆ W fails")
    _require(lattice.leq(g.direct_image(X), Z), "gX ⊆ Z fails")
    _require(lattice.leq(g.direct_image(W), Y), "gW ⊆ Y fails")
    left, right = criterion_sides(f, g, U, X, W, Z)
    return left == right


def criterion_sides(
    f: lattice.Morphism,
    g: lattice.Morphism,
    U: lattice.Subgroup,
    X: lattice.Subgroup,
    W: lattice.Subgroup,
    Z: lattice.Subgroup,
) -> tuple[lattice.Subgroup, lattice.Subgroup]:
    """(fU ∨ X, g⁻¹Z ∧ W), both subgroups of the middle object."""
    return (
        lattice.join(f.direct_image(U), X),
        lattice.meet(g.inverse_image(Z), W),
    )


def is_exact_at(f_ind: Induced_Morphism, g_ind: Induced_Morphism) -> bool:
    """Im f' = Ker g' computed in the middle carrier."""
    if not f_ind.target_sq.same_as(g_ind.source_sq):
        raise data_types.Structural_Error(
            "the two induced morphisms do not meet in the same subquotient"
        )
    exact = f_ind.map.image() == g_ind.map.kernel()
    logging.debug(f"exactness at {f_ind.target_sq.describe()}: {exact}")
    return exact


def induced_sequence(
    f: lattice.Morphism,
    g: lattice.Morphism,
    U: lattice.Subgroup,
    V: lattice.Subgroup,
    W: lattice.Subgroup,
    X: lattice.Subgroup,
    Y: lattice.Subgroup,
    Z: lattice.Subgroup,
) -> tuple[Induced_Morphism, Induced_Morphism]:
    """U/V -> W/X -> Y/Z induced by f and g."""
    first = form_subquotient(f.source, U, V)
    middle = form_subquotient(f.target, W, X)
    last = form_subquotient(g.target, Y, Z)
    return induced_morphism(f, first, middle), induced_morphism(g, middle, last)
