import functools
import logging

import numpy as np

import diagram_lemmas.data_types as data_types

from .cayley_group import Cayley_Group, Element_Map_Morphism, _close


def generating_set(G: Cayley_Group) -> list[int]:
    """Greedy generating set: each generator lies outside the span of the previous ones."""
    generators: list[int] = []
    span: set[int] = {0}
    for x in range(1, G.order):
        if x not in span:
            generators.append(x)
            span = set(_close(G.table, [*span, x]))
        if len(span) == G.order:
            break
    return generators


def _extend(
    G: Cayley_Group, H: Cayley_Group, generators: list[int], images: list[int]
) -> np.ndarray | None:
    """Breadth-first extension of generator images; None on an inconsistent edge."""
    mapping = np.full(G.order, -1, dtype=np.int64)
    mapping[0] = 0
    queue = [0]
    while queue:
        g = queue.pop()
        for s, t in zip(generators, images):
            gs = int(G.table[g, s])
            value = int(H.table[mapping[g], t])
            if mapping[gs] < 0:
                mapping[gs] = value
                queue.append(gs)
            elif mapping[gs] != value:
                return None
    return mapping


def enumerate_homomorphisms(G: Cayley_Group, H: Cayley_Group) -> list[Element_Map_Morphism]:
    """All homomorphisms G -> H by backtracking on generator images."""
    generators = generating_set(G)
    orders = [G.element_order(s) for s in generators]
    target_orders = [H.element_order(t) for t in range(H.order)]
    found: list[Element_Map_Morphism] = []

    def backtrack(images: list[int]) -> None:
        k = len(images)
        if k and _extend(G, H, generators[:k], images) is None:
            return
        if k == len(generators):
            mapping = _extend(G, H, generators, images)
            found.append(Element_Map_Morphism(G, H, mapping))
            return
        for t in range(H.order):
            if orders[k] % target_orders[t] == 0:
                backtrack(images + [t])

    backtrack([])
    logging.debug(f"{len(found)} homomorphisms {G.name} -> {H.name}")
    return found


@functools.cache
def automorphisms(G: Cayley_Group) -> tuple[Element_Map_Morphism, ...]:
    return tuple(f for f in enumerate_homomorphisms(G, G) if f.is_isomorphism())


def isomorphisms(G: Cayley_Group, H: Cayley_Group) -> list[Element_Map_Morphism]:
    if G.order != H.order:
        return []
    return [f for f in enumerate_homomorphisms(G, H) if f.is_isomorphism()]


def from_generator_images(
    G: Cayley_Group, H: Cayley_Group, images: dict[int, int]
) -> Element_Map_Morphism:
    """The homomorphism G -> H fixed by the images of a generating set of G."""
    generators = sorted(images)
    if any(not 0 <= x < G.order for x in generators) or any(
        not 0 <= y < H.order for y in images.values()
    ):
        raise data_types.Validation_Error(f"generator images {images} out of range")
    if len(_close(G.table, [0, *generators])) != G.order:
        raise data_types.Validation_Error(f"elements {generators} do not generate {G.name}")
    mapping = _extend(G, H, generators, [images[s] for s in generators])
    if mapping is None:
        raise data_types.Validation_Error(
            f"generator images {images} do not extend to a homomorphism {G.name} -> {H.name}"
        )
    return Element_Map_Morphism(G, H, mapping)
