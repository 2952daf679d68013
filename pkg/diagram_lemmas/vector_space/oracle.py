"""Realisation of F_p^n as an explicit elementary abelian Cayley group.

The vector (v_1, ..., v_n) is the element with index sum v_i p^(n-i), which
is the element order used by ``table_group.elementary_abelian``.
"""

import itertools

import numpy as np

import diagram_lemmas.lattice as lattice
import diagram_lemmas.table_group as table_group

from .vector_space import Matrix_Morphism, Vector_Space


def all_vectors(space: Vector_Space) -> np.ndarray:
    vectors = list(itertools.product(range(space.p), repeat=space.dim))
    return np.array(vectors, dtype=np.int64).reshape(len(vectors), space.dim)


def vector_index(space: Vector_Space, vectors: np.ndarray) -> np.ndarray:
    vectors = np.asarray(vectors, dtype=np.int64)
    if space.dim == 0:
        return np.zeros(len(vectors), dtype=np.int64)
    weights = space.p ** np.arange(space.dim - 1, -1, -1, dtype=np.int64)
    return vectors.reshape(-1, space.dim) @ weights


def as_cayley(space: Vector_Space) -> table_group.Cayley_Group:
    return table_group.elementary_abelian(space.p, space.dim)


def translate_subgroup(S: lattice.Subgroup) -> lattice.Subgroup:
    space = S.parent
    basis = space.basis(S)
    coefficients = np.array(
        list(itertools.product(range(space.p), repeat=len(basis))), dtype=np.int64
    ).reshape(space.p ** len(basis), len(basis))
    members = (coefficients @ basis) % space.p
    return as_cayley(space).subgroup(vector_index(space, members))


def translate_morphism(f: Matrix_Morphism) -> table_group.Element_Map_Morphism:
    images = (all_vectors(f.source) @ f.matrix.T) % f.p
    return table_group.Element_Map_Morphism(
        as_cayley(f.source), as_cayley(f.target), vector_index(f.target, images)
    )
