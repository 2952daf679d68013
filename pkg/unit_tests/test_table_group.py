# -*- coding: utf-8 -*-

"""Test the table-group backend and the free lattice operations on it


Created on sunday, October 18 2026.
"""

import unittest

import numpy as np

import diagram_lemmas.data_types as data_types
import diagram_lemmas.lattice as lattice
import diagram_lemmas.table_group as table_group


class Test_Cayley_Group(unittest.TestCase):
    def test_from_table_moves_identity_to_index_zero(self):
        group = table_group.from_table([[1, 0], [0, 1]])
        self.assertEqual(group, table_group.cyclic_group(2))
        np.testing.assert_array_equal(group.table, [[0, 1], [1, 0]])

    def test_missing_inverse_is_reported_with_witness(self):
        with self.assertRaises(data_types.Validation_Error) as ctx:
            table_group.from_table([[0, 1], [1, 1]])
        self.assertEqual(ctx.exception.witness, (1,))

    def test_table_without_identity_is_rejected(self):
        with self.assertRaises(data_types.Validation_Error):
            table_group.from_table([[1, 1], [1, 1]])

    def test_non_square_table_is_rejected(self):
        with self.assertRaises(data_types.Validation_Error):
            table_group.from_table([[0, 1, 2], [1, 2, 0]])

    def test_catalogue(self):
        orders = {spec: table_group.catalog_group(spec).order for spec in table_group.FIXTURE_GROUPS}
        self.assertEqual(
            orders,
            {
                "C2": 2, "C3": 3, "C4": 4, "C2xC2": 4, "C6": 6, "S3": 6,
                "C8": 8, "D4": 8, "Q8": 8, "A4": 12, "C2xC4": 8,
            },
        )
        self.assertFalse(table_group.catalog_group("S3").is_abelian())
        self.assertTrue(table_group.catalog_group("C2xC4").is_abelian())

    def test_unknown_catalogue_name(self):
        with self.assertRaises(data_types.Structural_Error):
            table_group.catalog_group("M11")

    def test_small_groups_respects_order_bound(self):
        self.assertTrue(all(G.order <= 4 for G in table_group.small_groups(4)))
        self.assertEqual(len(table_group.small_groups(4)), 4)

    def test_subgroup_lattices(self):
        self.assertEqual(len(table_group.cyclic_group(4).all_subgroups()), 3)
        self.assertEqual(len(table_group.catalog_group("S3").all_subgroups()), 6)
        self.assertEqual(len(table_group.catalog_group("C2xC2").all_subgroups()), 5)
        self.assertEqual(len(table_group.catalog_group("Q8").all_subgroups()), 6)

    def test_subgroup_must_be_closed(self):
        C4 = table_group.cyclic_group(4)
        with self.assertRaises(data_types.Validation_Error) as ctx:
            C4.subgroup([0, 1])
        self.assertEqual(len(ctx.exception.witness), 2)

    def test_quotient_by_non_normal_subgroup_is_refused(self):
        S3 = table_group.catalog_group("S3")
        order_two = next(S for S in S3.all_subgroups() if S.order == 2)
        with self.assertRaises(data_types.Precondition_Error):
            S3.quotient_group(order_two)

    def test_quotient_order(self):
        S3 = table_group.catalog_group("S3")
        A3 = next(S for S in S3.all_subgroups() if S.order == 3)
        quotient, projection = S3.quotient_group(A3)
        self.assertEqual(quotient.order, 2)
        self.assertEqual(projection.kernel(), A3)
        self.assertTrue(projection.is_projection())

    def test_equality_goes_by_table_not_name(self):
        A = table_group.from_table(table_group.cyclic_group(3).table, name="A")
        C = table_group.from_table(table_group.cyclic_group(3).table, name="C")
        self.assertEqual(A, C)
        self.assertEqual(hash(A), hash(C))
        self.assertEqual(len({A, C}), 1)
        self.assertNotEqual(A, table_group.cyclic_group(4))
        self.assertNotEqual(table_group.cyclic_group(4), table_group.catalog_group("C2xC2"))
        self.assertEqual(A.all_subgroups(), C.all_subgroups())


class Test_Lattice_Operations(unittest.TestCase):
    @classmethod
    def setUpClass(cls) -> None:
        cls.S3 = table_group.catalog_group("S3")
        cls.order_two = [S for S in cls.S3.all_subgroups() if S.order == 2]
        cls.A3 = next(S for S in cls.S3.all_subgroups() if S.order == 3)
        cls.inclusion, cls.sign = table_group.sign_sequence()

    def test_join_and_meet(self):
        first, second = self.order_two[:2]
        self.assertEqual(lattice.join(first, second), self.S3.top())
        self.assertEqual(lattice.meet(first, second), self.S3.bottom())
        self.assertTrue(lattice.leq(self.S3.bottom(), first))
        self.assertTrue(first <= self.S3.top())

    def test_subgroups_of_different_objects_do_not_mix(self):
        C2 = table_group.cyclic_group(2)
        with self.assertRaises(data_types.Structural_Error):
            lattice.join(self.A3, C2.top())

    def test_normality(self):
        self.assertTrue(lattice.is_normal(self.A3))
        self.assertFalse(lattice.is_normal(self.order_two[0]))
        self.assertTrue(lattice.is_conormal(self.order_two[0]))
        self.assertEqual(lattice.normal_closure(self.order_two[0]), self.S3.top())

    def test_projection_by_non_normal_subgroup(self):
        with self.assertRaises(data_types.Precondition_Error):
            lattice.projection_by(self.order_two[0], strict=True)
        projection = lattice.projection_by(self.order_two[0])
        self.assertEqual(projection.target.order, 1)

    def test_embedding_has_the_subgroup_as_image(self):
        for S in self.S3.all_subgroups():
            iota = lattice.embedding_of(S)
            self.assertTrue(lattice.is_embedding(iota))
            self.assertEqual(lattice.image(iota), S)

    def test_kernel_and_image_of_the_sign_sequence(self):
        self.assertEqual(lattice.image(self.inclusion), self.A3)
        self.assertEqual(lattice.kernel(self.sign), self.A3)
        self.assertTrue(lattice.compose(self.sign, self.inclusion).is_zero())

    def test_galois_connection(self):
        for S in self.S3.all_subgroups():
            for T in self.sign.target.all_subgroups():
                self.assertEqual(
                    lattice.leq(lattice.direct_image(self.sign, S), T),
                    lattice.leq(S, lattice.inverse_image(self.sign, T)),
                )

    def test_factorization(self):
        triple = lattice.factorize(self.sign)
        self.assertEqual(triple.composite(), self.sign)
        self.assertTrue(lattice.is_isomorphism(triple.middle))
        self.assertTrue(lattice.is_projection(triple.projection))
        self.assertTrue(lattice.is_embedding(triple.embedding))

    def test_normal_to_failure_names_the_clause(self):
        self.assertTrue(lattice.normal_to_failure(self.order_two[0], self.S3.top()).startswith("(iii)"))
        self.assertTrue(lattice.normal_to_failure(self.S3.top(), self.A3).startswith("(i)"))
        self.assertIsNone(lattice.normal_to_failure(self.A3, self.S3.top()))
        self.assertTrue(lattice.is_normal_to(self.S3.bottom(), self.order_two[0]))

    def test_inverse_exists_only_for_isomorphisms(self):
        self.assertIsNone(self.sign.inverse())
        f = table_group.automorphisms(self.S3)[-1]
        self.assertEqual(lattice.compose(f.inverse(), f), self.S3.identity())


class Test_Homomorphisms(unittest.TestCase):
    def test_counts(self):
        C4, C2 = table_group.cyclic_group(4), table_group.cyclic_group(2)
        self.assertEqual(len(table_group.enumerate_homomorphisms(C4, C2)), 2)
        self.assertEqual(len(table_group.enumerate_homomorphisms(C2, C4)), 2)
        S3 = table_group.catalog_group("S3")
        self.assertEqual(len(table_group.enumerate_homomorphisms(S3, C2)), 2)
        self.assertEqual(len(table_group.automorphisms(S3)), 6)
        self.assertEqual(len(table_group.automorphisms(table_group.cyclic_group(8))), 4)

    def test_every_enumerated_map_is_a_homomorphism(self):
        C2xC2 = table_group.catalog_group("C2xC2")
        for f in table_group.enumerate_homomorphisms(C2xC2, table_group.cyclic_group(4)):
            table_group.Element_Map_Morphism(f.source, f.target, f.images)

    def test_not_a_homomorphism(self):
        C4, C2 = table_group.cyclic_group(4), table_group.cyclic_group(2)
        with self.assertRaises(data_types.Validation_Error) as ctx:
            table_group.Element_Map_Morphism(C4, C2, [0, 1, 1, 0])
        self.assertEqual(len(ctx.exception.witness), 2)

    def test_from_generator_images(self):
        C4, C2 = table_group.cyclic_group(4), table_group.cyclic_group(2)
        f = table_group.from_generator_images(C4, C2, {1: 1})
        self.assertEqual(f, table_group.cyclic_morphism(4, 2, 1))
        with self.assertRaises(data_types.Validation_Error):
            table_group.from_generator_images(C4, C2, {2: 1})
        with self.assertRaises(data_types.Validation_Error):
            table_group.from_generator_images(C2, C4, {1: 1})

    def test_direct_product(self):
        C2, C3 = table_group.cyclic_group(2), table_group.cyclic_group(3)
        product = table_group.direct_product(C2, C3)
        self.assertEqual(product.order, 6)
        self.assertTrue(product.is_abelian())
        self.assertIs(table_group.direct_product(table_group.trivial_group(), C3), C3)
        f = table_group.product_morphism(C2.identity(), table_group.cyclic_morphism(3, 3, 0))
        self.assertEqual(f.kernel().order, 3)
