import logging

import diagram_lemmas.data_types as data_types

from .structure import Factorization_Triple, Morphism, Structure_Object, Subgroup


def _same_parent(S: Subgroup, T: Subgroup) -> Structure_Object:
    if S.parent != T.parent:
        raise data_types.Structural_Error(
            f"subgroups of different objects: {S.parent.name} and {T.parent.name}"
        )
    return S.parent


def direct_image(f: Morphism, S: Subgroup) -> Subgroup:
    f.source.check_member(S)
    return f.direct_image(S)


def inverse_image(f: Morphism, T: Subgroup) -> Subgroup:
    f.target.check_member(T)
    return f.inverse_image(T)


def join(S: Subgroup, T: Subgroup) -> Subgroup:
    return _same_parent(S, T).join(S, T)


def meet(S: Subgroup, T: Subgroup) -> Subgroup:
    return _same_parent(S, T).meet(S, T)


def leq(S: Subgroup, T: Subgroup) -> bool:
    return _same_parent(S, T).contains(S, T)


def image(f: Morphism) -> Subgroup:
    return f.image()


def kernel(f: Morphism) -> Subgroup:
    return f.kernel()


def is_normal(S: Subgroup) -> bool:
    return S.parent.is_normal(S)


def is_conormal(S: Subgroup) -> bool:
    return S.parent.is_conormal(S)


def normal_closure(S: Subgroup) -> Subgroup:
    return S.parent.normal_closure(S)


def embedding_of(S: Subgroup) -> Morphism:
    return S.parent.embedding_of(S)


def projection_by(S: Subgroup, strict: bool = False) -> Morphism:
    """Projection of ``S.parent`` onto its quotient by ``S``.

    Non-normal input is replaced by its normal closure unless ``strict``
    is set, in which case it is rejected.
    """
    G = S.parent
    if not G.is_normal(S):
        if strict:
            raise data_types.Precondition_Error(
                f"{S} is not normal in {G.name}: strict projection refused"
            )
        closure = G.normal_closure(S)
        logging.debug(f"projection by {S} in {G.name} uses normal closure {closure}")
        S = closure
    return G.projection_by(S)


def compose(g: Morphism, f: Morphism) -> Morphism:
    g.check_composable(f)
    return g.compose(f)


def identity(G: Structure_Object) -> Morphism:
    return G.identity()


def zero_morphism(G: Structure_Object, H: Structure_Object) -> Morphism:
    return G.zero_morphism(H)


def is_embedding(f: Morphism) -> bool:
    return f.is_embedding()


def is_projection(f: Morphism) -> bool:
    return f.is_projection()


def is_isomorphism(f: Morphism) -> bool:
    return f.is_isomorphism()


def factorize(f: Morphism) -> Factorization_Triple:
    """Split ``f`` as embedding of its image, an isomorphism, projection by its kernel."""
    pi = f.source.projection_by(f.kernel())
    iota = f.target.embedding_of(f.image())
    middle = f.factor_through_embedding(iota).factor_through_projection(pi)
    triple = Factorization_Triple(projection=pi, middle=middle, embedding=iota)
    if triple.composite() != f or not middle.is_isomorphism():
        raise data_types.Structural_Error(
            f"factorization of {f!r} does not reproduce the morphism"
        )
    return triple


def normal_to_failure(B: Subgroup, A: Subgroup) -> str | None:
    """Return the first failing clause of "B is normal to A", or None."""
    G = _same_parent(B, A)
    if not G.contains(B, A):
        return f"(i) {B} is not contained in {A}"
    if not G.is_conormal(A):
        return f"(ii) {A} is not conormal in {G.name}"
    iota = G.embedding_of(A)
    pulled = iota.inverse_image(B)
    if not iota.source.is_normal(pulled):
        return f"(iii) the pullback of {B} along the embedding of {A} is not normal"
    return None


def is_normal_to(B: Subgroup, A: Subgroup) -> bool:
    return normal_to_failure(B, A) is None
