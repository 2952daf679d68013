import functools
import re
from collections.abc import Callable, Hashable, Sequence

import numpy as np
from sympy.algebras.quaternion import Quaternion
from sympy.combinatorics import Permutation, PermutationGroup
from sympy.combinatorics.named_groups import (
    AlternatingGroup,
    DihedralGroup,
    SymmetricGroup,
)

import diagram_lemmas.data_types as data_types

from .cayley_group import Cayley_Group, Element_Map_Morphism, trivial_group

_CYCLIC_RE = re.compile(r"[CZ](\d+)$", re.IGNORECASE)


def _from_elements(
    elements: Sequence, multiply: Callable, key: Callable[..., Hashable], name: str,
    labels: Sequence[str],
) -> Cayley_Group:
    index = {key(x): i for i, x in enumerate(elements)}
    n = len(elements)
    table = np.zeros((n, n), dtype=np.int64)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            table[i, j] = index[key(multiply(a, b))]
    return Cayley_Group(table, name=name, labels=labels)


def _perm_label(p: Permutation) -> str:
    if p.is_Identity:
        return "e"
    return "".join("(" + " ".join(str(x) for x in cycle) + ")" for cycle in p.cyclic_form)


def _sorted_permutations(group: PermutationGroup) -> list[Permutation]:
    return sorted(group.elements, key=lambda p: (not p.is_Identity, p.array_form))


def permutation_group(group: PermutationGroup, name: str) -> Cayley_Group:
    elements = _sorted_permutations(group)
    return _from_elements(
        elements,
        lambda a, b: a * b,
        lambda p: tuple(p.array_form),
        name,
        [_perm_label(p) for p in elements],
    )


@functools.cache
def cyclic_group(n: int) -> Cayley_Group:
    if n < 1:
        raise data_types.Structural_Error(f"cyclic group order must be positive, got {n}")
    if n == 1:
        return trivial_group()
    table = np.add.outer(np.arange(n), np.arange(n)) % n
    return Cayley_Group(table, name=f"C{n}")


@functools.cache
def symmetric_group(n: int) -> Cayley_Group:
    return permutation_group(SymmetricGroup(n), f"S{n}")


@functools.cache
def dihedral_group(n: int) -> Cayley_Group:
    """Dihedral group of order 2n."""
    return permutation_group(DihedralGroup(n), f"D{n}")


@functools.cache
def alternating_group(n: int) -> Cayley_Group:
    return permutation_group(AlternatingGroup(n), f"A{n}")


@functools.cache
def quaternion_group() -> Cayley_Group:
    units = [
        (Quaternion(1, 0, 0, 0), "1"),
        (Quaternion(-1, 0, 0, 0), "-1"),
        (Quaternion(0, 1, 0, 0), "i"),
        (Quaternion(0, -1, 0, 0), "-i"),
        (Quaternion(0, 0, 1, 0), "j"),
        (Quaternion(0, 0, -1, 0), "-j"),
        (Quaternion(0, 0, 0, 1), "k"),
        (Quaternion(0, 0, 0, -1), "-k"),
    ]
    return _from_elements(
        [q for q, _ in units],
        lambda a, b: a * b,
        lambda q: (int(q.a), int(q.b), int(q.c), int(q.d)),
        "Q8",
        [label for _, label in units],
    )


def direct_product(G: Cayley_Group, H: Cayley_Group) -> Cayley_Group:
    """G x H with the pair (a, b) stored at index a*|H| + b."""
    if G.order == 1:
        return H
    if H.order == 1:
        return G
    h = H.order
    table = G.table[:, None, :, None] * h + H.table[None, :, None, :]
    table = table.reshape(G.order * h, G.order * h)
    labels = [f"({la},{lb})" for la in G.labels for lb in H.labels]
    return Cayley_Group(table, name=f"{G.name}x{H.name}", labels=labels)


def product_morphism(f: Element_Map_Morphism, g: Element_Map_Morphism) -> Element_Map_Morphism:
    """f x g between the direct products of the sources and of the targets."""
    source = direct_product(f.source, g.source)
    target = direct_product(f.target, g.target)
    images = (f.images[:, None] * g.target.order + g.images[None, :]).reshape(-1)
    return Element_Map_Morphism(source, target, images, check=False)


def elementary_abelian(p: int, k: int) -> Cayley_Group:
    """(C_p)^k; the vector (v_1..v_k) sits at index sum v_i p^(k-i)."""
    group = trivial_group()
    for _ in range(k):
        group = direct_product(group, cyclic_group(p))
    return group


def cyclic_morphism(n: int, m: int, image_of_one: int) -> Element_Map_Morphism:
    """C_n -> C_m sending 1 to ``image_of_one``."""
    images = (np.arange(n) * image_of_one) % m
    return Element_Map_Morphism(cyclic_group(n), cyclic_group(m), images)


def catalog_group(spec: str) -> Cayley_Group:
    """Look up a group by name: 1, C<n>, S3, S4, D4, Q8, A4 or x-separated products."""
    spec = re.sub(r"\s+", "", spec)
    if not spec:
        raise data_types.Structural_Error("empty group name")
    if "x" in spec:
        group = trivial_group()
        for part in spec.split("x"):
            group = direct_product(group, catalog_group(part))
        return group
    if spec in ("1", "e"):
        return trivial_group()
    named = {
        "S3": lambda: symmetric_group(3),
        "S4": lambda: symmetric_group(4),
        "D4": lambda: dihedral_group(4),
        "Q8": quaternion_group,
        "A4": lambda: alternating_group(4),
    }
    if spec.upper() in named:
        return named[spec.upper()]()
    match = _CYCLIC_RE.fullmatch(spec)
    if match:
        return cyclic_group(int(match.group(1)))
    raise data_types.Structural_Error(f"unknown catalogue group {spec!r}")


FIXTURE_GROUPS = ("C2", "C3", "C4", "C2xC2", "C6", "S3", "C8", "D4", "Q8", "A4", "C2xC4")


def small_groups(max_order: int = 8) -> list[Cayley_Group]:
    return [
        group
        for group in (catalog_group(spec) for spec in FIXTURE_GROUPS)
        if group.order <= max_order
    ]


def sign_sequence() -> tuple[Element_Map_Morphism, Element_Map_Morphism]:
    """C3 -> S3 -> C2: inclusion onto the rotations, then the sign."""
    elements = _sorted_permutations(SymmetricGroup(3))
    S3 = symmetric_group(3)
    rotation = next(i for i, p in enumerate(elements) if p.order() == 3)
    powers = [0]
    for _ in range(2):
        powers.append(S3.multiply(powers[-1], rotation))
    inclusion = Element_Map_Morphism(cyclic_group(3), S3, powers)
    sign = Element_Map_Morphism(
        S3, cyclic_group(2), [0 if p.is_even else 1 for p in elements]
    )
    return inclusion, sign


def cyclic_sequence() -> tuple[Element_Map_Morphism, Element_Map_Morphism]:
    """C2 -> C4 -> C2: 1 maps to 2, then reduction mod 2."""
    return cyclic_morphism(2, 4, 2), cyclic_morphism(4, 2, 1)
