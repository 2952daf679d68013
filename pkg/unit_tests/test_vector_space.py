# -*- coding: utf-8 -*-

"""Test the vector-space backend and its translation to Cayley tables


Created on sunday, October 18 2026.
"""

import unittest

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

import diagram_lemmas.data_types as data_types
import diagram_lemmas.lattice as lattice
import diagram_lemmas.vector_space as vector_space

PRIMES = st.sampled_from([2, 3, 5])


@st.composite
def spaces(draw, max_dim: int = 3, p: int | None = None):
    p = draw(PRIMES) if p is None else p
    return vector_space.vector_space(p, draw(st.integers(0, max_dim)))


@st.composite
def subspaces(draw, space: vector_space.Vector_Space):
    rows = draw(st.integers(0, space.dim))
    entries = draw(
        st.lists(
            st.lists(st.integers(0, space.p - 1), min_size=space.dim, max_size=space.dim),
            min_size=rows,
            max_size=rows,
        )
    )
    return space.span(np.array(entries, dtype=np.int64).reshape(rows, space.dim))


@st.composite
def linear_maps(draw, max_dim: int = 3):
    source = draw(spaces(max_dim))
    target = draw(spaces(max_dim, p=source.p))
    entries = draw(
        st.lists(
            st.integers(0, source.p - 1),
            min_size=source.dim * target.dim,
            max_size=source.dim * target.dim,
        )
    )
    matrix = np.array(entries, dtype=np.int64).reshape(target.dim, source.dim)
    return vector_space.Matrix_Morphism(source, target, matrix)


def dim(S: lattice.Subgroup) -> int:
    return len(S.rep)


class Test_Vector_Space(unittest.TestCase):
    def test_construction_errors(self):
        with self.assertRaises(data_types.Validation_Error):
            vector_space.Vector_Space(4, 2)
        with self.assertRaises(data_types.Validation_Error):
            vector_space.Vector_Space(3, -1)
        with self.assertRaises(data_types.Structural_Error):
            vector_space.Matrix_Morphism(
                vector_space.vector_space(2, 2), vector_space.vector_space(2, 1), [[1], [0]]
            )
        with self.assertRaises(data_types.Structural_Error):
            vector_space.Matrix_Morphism(
                vector_space.vector_space(2, 1), vector_space.vector_space(3, 1), [[1]]
            )

    def test_subspace_counts(self):
        self.assertEqual(len(vector_space.vector_space(2, 2).all_subgroups()), 5)
        self.assertEqual(len(vector_space.vector_space(3, 2).all_subgroups()), 6)
        self.assertEqual(len(vector_space.vector_space(2, 3).all_subgroups()), 16)
        self.assertEqual(len(vector_space.vector_space(5, 0).all_subgroups()), 1)

    def test_spaces_are_cached(self):
        self.assertIs(vector_space.vector_space(3, 2), vector_space.vector_space(3, 2))
        self.assertEqual(vector_space.vector_space(3, 2).trivial(), vector_space.vector_space(3, 0))

    def test_subgroup_rejects_bad_rows(self):
        space = vector_space.vector_space(3, 2)
        with self.assertRaises(data_types.Validation_Error):
            space.subgroup([[1, 0, 0]])
        with self.assertRaises(data_types.Validation_Error):
            space.subgroup([[3, 0]])

    @settings(max_examples=60, deadline=None)
    @given(data=st.data())
    def test_dimension_formula(self, data):
        space = data.draw(spaces())
        S, T = data.draw(subspaces(space)), data.draw(subspaces(space))
        self.assertEqual(
            dim(vector_space.subspace_sum(S, T)) + dim(vector_space.subspace_intersection(S, T)),
            dim(S) + dim(T),
        )
        self.assertTrue(lattice.leq(vector_space.subspace_intersection(S, T), S))
        self.assertTrue(lattice.leq(S, vector_space.subspace_sum(S, T)))

    @settings(max_examples=60, deadline=None)
    @given(f=linear_maps())
    def test_rank_nullity(self, f):
        self.assertEqual(dim(f.kernel()) + dim(vector_space.matrix_image(f)), f.source.dim)

    @settings(max_examples=60, deadline=None)
    @given(data=st.data())
    def test_galois_connection_and_image_laws(self, data):
        f = data.draw(linear_maps())
        S = data.draw(subspaces(f.source))
        T = data.draw(subspaces(f.target))
        self.assertEqual(
            lattice.leq(f.direct_image(S), T),
            lattice.leq(S, vector_space.matrix_preimage(f, T)),
        )
        self.assertEqual(
            f.direct_image(f.inverse_image(T)), lattice.meet(T, f.image())
        )
        self.assertEqual(
            f.inverse_image(f.direct_image(S)), lattice.join(S, f.kernel())
        )

    @settings(max_examples=40, deadline=None)
    @given(f=linear_maps())
    def test_factorization(self, f):
        triple = lattice.factorize(f)
        self.assertEqual(triple.composite(), f)
        self.assertTrue(triple.middle.is_isomorphism())

    @settings(max_examples=30, deadline=None)
    @given(space=spaces(), seed=st.integers(0, 2**32 - 1))
    def test_random_automorphism_is_invertible(self, space, seed):
        phi = vector_space.random_automorphism(space, np.random.default_rng(seed))
        self.assertTrue(phi.is_isomorphism())
        self.assertEqual(lattice.compose(phi.inverse(), phi), space.identity())

    def test_block_morphism(self):
        rng = np.random.default_rng(7)
        V, W = vector_space.vector_space(3, 2), vector_space.vector_space(3, 1)
        f, g = vector_space.random_morphism(V, W, rng), W.zero_morphism(V)
        block = vector_space.block_morphism(f, g)
        self.assertEqual(block.source, vector_space.vector_space(3, 3))
        self.assertEqual(dim(block.kernel()), dim(f.kernel()) + 1)
        with self.assertRaises(data_types.Structural_Error):
            vector_space.direct_sum(V, vector_space.vector_space(2, 1))


class Test_Cayley_Translation(unittest.TestCase):
    @settings(max_examples=40, deadline=None)
    @given(data=st.data())
    def test_operations_agree_with_the_table_realisation(self, data):
        f = data.draw(linear_maps())
        S, S2 = data.draw(subspaces(f.source)), data.draw(subspaces(f.source))
        T = data.draw(subspaces(f.target))
        tr = vector_space.translate_subgroup
        g = vector_space.translate_morphism(f)
        self.assertEqual(tr(lattice.join(S, S2)), lattice.join(tr(S), tr(S2)))
        self.assertEqual(tr(lattice.meet(S, S2)), lattice.meet(tr(S), tr(S2)))
        self.assertEqual(S.order, tr(S).order)
        self.assertEqual(tr(f.direct_image(S)), g.direct_image(tr(S)))
        self.assertEqual(tr(f.inverse_image(T)), g.inverse_image(tr(T)))
        self.assertEqual(tr(f.kernel()), g.kernel())

    def test_vector_index_order(self):
        space = vector_space.vector_space(3, 2)
        np.testing.assert_array_equal(
            vector_space.vector_index(space, vector_space.all_vectors(space)), np.arange(9)
        )
