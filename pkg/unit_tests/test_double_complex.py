# -*- coding: utf-8 -*-

"""Test double complexes, their laws and their homology objects


Created on sunday, October 18 2026.
"""

import unittest

import diagram_lemmas.data_types as data_types
import diagram_lemmas.double_complex as double_complex
import diagram_lemmas.lattice as lattice
import diagram_lemmas.salamander as salamander
import diagram_lemmas.table_group as table_group
import diagram_lemmas.vector_space as vector_space

Kind = data_types.Homology_Kind


def exact_row() -> double_complex.Double_Complex:
    f, g = table_group.cyclic_sequence()
    return double_complex.Double_Complex(
        {(0, 0): f.source, (0, 1): f.target, (0, 2): g.target},
        {(0, 0): f, (0, 1): g},
        name="row",
    )


def zero_grid() -> double_complex.Double_Complex:
    C2 = table_group.cyclic_group(2)
    return double_complex.Double_Complex(
        {(n, m): C2 for n in range(2) for m in range(2)}, name="zero"
    )


class Test_Double_Complex(unittest.TestCase):
    def test_map_endpoints_are_checked(self):
        C2 = table_group.cyclic_group(2)
        with self.assertRaises(data_types.Structural_Error):
            double_complex.Double_Complex(
                {(0, 0): C2, (0, 1): C2}, {(0, 0): table_group.cyclic_morphism(2, 4, 2)}
            )

    def test_backends_do_not_mix(self):
        with self.assertRaises(data_types.Structural_Error):
            double_complex.Double_Complex(
                {(0, 0): table_group.cyclic_group(2), (0, 1): vector_space.vector_space(2, 1)}
            )

    def test_outside_the_support(self):
        dc = exact_row()
        self.assertEqual(dc.extent(), (1, 3))
        self.assertTrue(dc.object_at((5, 5)).is_trivial())
        self.assertTrue(dc.h((0, 2)).is_zero())
        self.assertTrue(dc.v((0, 1)).is_zero())
        self.assertEqual(double_complex.Double_Complex({}).extent(), (0, 0))

    def test_validate(self):
        self.assertTrue(double_complex.validate(exact_row()).passed)
        self.assertTrue(double_complex.validate(salamander.cyclic_grid()).passed)
        counts = double_complex.validate(exact_row()).counts()
        self.assertEqual(counts, {"D2H": 3, "D2V": 3, "SQ": 3})

    def test_validate_reports_broken_laws(self):
        C2 = table_group.cyclic_group(2)
        one = C2.identity()
        line = double_complex.Double_Complex(
            {(0, m): C2 for m in range(3)}, {(0, 0): one, (0, 1): one}
        )
        failures = double_complex.validate(line).failures()
        self.assertEqual([(entry.code, entry.instance) for entry in failures], [("D2H", "(0,0)")])
        square = double_complex.Double_Complex(
            {(n, m): C2 for n in range(2) for m in range(2)},
            {(0, 0): one},
            {(0, 0): one, (0, 1): one},
        )
        failures = double_complex.validate(square).failures()
        self.assertEqual([entry.code for entry in failures], ["SQ"])
        self.assertTrue(failures[0].witness)

    def test_transpose(self):
        dc = salamander.cyclic_grid()
        self.assertEqual(dc.transpose().transpose(), dc)
        row = exact_row()
        self.assertEqual(row.transpose().v((0, 0)), row.h((0, 0)))
        self.assertEqual(row.transpose().extent(), (3, 1))

    def test_with_object_drops_touching_maps(self):
        dc = exact_row().with_object((0, 1), table_group.cyclic_group(4))
        self.assertTrue(dc.h((0, 0)).is_zero())
        self.assertTrue(dc.h((0, 1)).is_zero())
        restored = dc.with_map(data_types.Edge_Direction.HORIZONTAL, (0, 0), exact_row().h((0, 0)))
        self.assertFalse(restored.h((0, 0)).is_zero())

    def test_local_star_composites(self):
        dc = salamander.cyclic_grid()
        star = double_complex.local_star(dc, (1, 1))
        self.assertEqual(star.p, lattice.compose(star.c, star.a))
        self.assertEqual(star.r, lattice.compose(star.e, star.c))
        self.assertEqual(star.q, lattice.compose(star.g, star.e))
        self.assertEqual(star.e, dc.h((1, 1)))
        self.assertEqual(star.f, dc.v((1, 1)))

    def test_direct_sum(self):
        row = exact_row()
        total = double_complex.direct_sum(row, row)
        self.assertEqual([total.object_at(pos).order for pos in total.support()], [4, 16, 4])
        self.assertTrue(double_complex.validate(total).passed)
        self.assertIs(double_complex.direct_sum(double_complex.Double_Complex({}), row), row)
        space = vector_space.vector_space(2, 1)
        with self.assertRaises(data_types.Structural_Error):
            double_complex.direct_sum(row, double_complex.Double_Complex({(0, 0): space}))


class Test_Homology(unittest.TestCase):
    def test_zero_maps_keep_every_object(self):
        dc = zero_grid()
        for pos in dc.support():
            for obj in double_complex.all_homology(dc, pos):
                self.assertTrue(obj.defined)
                self.assertEqual(obj.value.order, 2)
                self.assertEqual(obj.describe(), f"{obj.label} defined, order 2")

    def test_exact_row(self):
        dc = exact_row()
        for pos in dc.support():
            self.assertTrue(double_complex.horizontal_homology(dc, pos).is_trivial())
        self.assertEqual(double_complex.vertical_homology(dc, (0, 1)).value.order, 4)
        self.assertEqual(double_complex.donor(dc, (0, 2)).value.order, 1)
        self.assertEqual(double_complex.receptor(dc, (0, 0)).value.order, 1)
        self.assertEqual(double_complex.receptor(dc, (0, 1)).value.order, 2)

    def test_labels(self):
        dc = exact_row()
        labels = [obj.label for obj in double_complex.all_homology(dc, (0, 1))]
        self.assertEqual(labels, ["(0,1)_h", "(0,1)_v", "(0,1)_□", "□(0,1)"])
        self.assertEqual(
            double_complex.homology(dc, (0, 1), Kind.DONOR),
            double_complex.donor(dc, (0, 1)),
        )

    def test_transpose_swaps_horizontal_and_vertical(self):
        dc = salamander.cyclic_grid()
        flipped = dc.transpose()
        for n, m in dc.support():
            self.assertEqual(
                double_complex.horizontal_homology(dc, (n, m)).value.order,
                double_complex.vertical_homology(flipped, (m, n)).value.order,
            )

    def test_non_normal_image_is_undefined(self):
        S3 = table_group.catalog_group("S3")
        order_two = next(S for S in S3.all_subgroups() if S.order == 2)
        iota = S3.embedding_of(order_two)
        dc = double_complex.Double_Complex({(0, 0): iota.source, (0, 1): S3}, {(0, 0): iota})
        at_S3 = double_complex.horizontal_homology(dc, (0, 1))
        self.assertFalse(at_S3.defined)
        self.assertIn("undefined", at_S3.describe())
        with self.assertRaises(data_types.Hypothesis_Error):
            at_S3.require()
        self.assertTrue(double_complex.vertical_homology(dc, (0, 1)).defined)
