# -*- coding: utf-8 -*-

"""Test the axiom and lemma suites


Created on sunday, October 18 2026.
"""

import unittest

import numpy as np

import diagram_lemmas.data_types as data_types
import diagram_lemmas.laws as laws
import diagram_lemmas.lattice as lattice
import diagram_lemmas.table_group as table_group
import diagram_lemmas.vector_space as vector_space


class Broken_Image(lattice.Morphism):
    """Zero map that claims the whole target as its image."""

    def __init__(self, inner: lattice.Morphism) -> None:
        super().__init__(inner.source, inner.target)
        self.inner = inner

    def direct_image(self, S):
        return self.target.top()

    def inverse_image(self, T):
        return self.inner.inverse_image(T)

    def compose(self, other):
        return self.inner.compose(other)

    def factor_through_embedding(self, embedding):
        return self.inner.factor_through_embedding(embedding)

    def factor_through_projection(self, projection):
        return self.inner.factor_through_projection(projection)

    def inverse(self):
        return None

    def _same_rule(self, other):
        return False

    def describe(self) -> str:
        return "broken"


class Test_Table_Suite(unittest.TestCase):
    @classmethod
    def setUpClass(cls) -> None:
        cls.fixture = laws.table_fixture(max_order=6)

    def test_fixture_content(self):
        self.assertEqual([G.name for G in self.fixture.objects], ["C2", "C3", "C4", "C2xC2", "C6", "S3"])
        self.assertTrue(all(f.source in self.fixture.objects for f in self.fixture.morphisms))

    def test_all_laws_pass(self):
        report = laws.check_axioms(self.fixture, max_instances=400, seed=1, workers=4)
        self.assertTrue(report.passed, [entry.to_line() for entry in report.failures()])
        self.assertEqual(set(report.counts()), set(laws.LAWS) | {code + "*" for code in laws.LAWS})

    def test_entries_keep_law_order(self):
        report = laws.check_axioms(self.fixture, max_instances=20, seed=3, workers=4)
        codes = [entry.code for entry in report.entries]
        order = [code for i, code in enumerate(codes) if i == 0 or codes[i - 1] != code]
        self.assertEqual(order, list(laws.LAWS))

    def test_same_seed_same_report(self):
        first = laws.check_axioms(self.fixture, max_instances=30, seed=5, workers=2)
        second = laws.check_axioms(self.fixture, max_instances=30, seed=5, workers=4)
        self.assertEqual(first, second)

    def test_unknown_code(self):
        with self.assertRaises(data_types.Structural_Error):
            laws.check_axioms(self.fixture, codes=["AX9"])


class Test_Vector_Suite(unittest.TestCase):
    def test_all_laws_pass(self):
        fixture = laws.vector_fixture(chains=6, primes=[2, 3, 5], max_dim=3, seed=11)
        report = laws.check_axioms(fixture, max_instances=200, seed=11, workers=4)
        self.assertTrue(report.passed, [entry.to_line() for entry in report.failures()])

    def test_every_space_is_an_object(self):
        fixture = laws.vector_fixture(chains=1, primes=[2, 3], max_dim=3, seed=4)
        dims = {(space.p, space.dim) for space in fixture.objects}
        self.assertEqual(dims, {(p, d) for p in (2, 3) for d in range(4)})

    def test_pools_extend_the_lattice_samples(self):
        fixture = laws.vector_fixture(chains=2, primes=[2, 3], max_dim=3, seed=4, pool_size=12)
        self.assertEqual(set(fixture.pools), set(fixture.lattices))
        for space, pool in fixture.pools.items():
            self.assertEqual(len(set(pool)), len(pool))
            self.assertTrue(set(fixture.lattices[space]) <= set(pool))
            self.assertTrue(all(S.parent == space for S in pool))
        F3 = vector_space.vector_space(3, 3)
        self.assertEqual(len(fixture.pool_of(F3)), 12)
        F2 = vector_space.vector_space(2, 2)
        self.assertEqual(fixture.pool_of(F2), F2.all_subgroups())

    def test_short_laws(self):
        fixture = laws.vector_fixture(chains=2, primes=[2], max_dim=2, seed=1)
        short = laws.short_laws(fixture, 10_000)
        self.assertEqual(short, list(laws.LAWS))
        self.assertEqual(laws.short_laws(fixture, 1), [])
        self.assertEqual(laws.GAL(fixture).available(3), 3)

    def test_oracle_agrees(self):
        fixture = laws.oracle_fixture(maps=20, seed=2)
        report = laws.ORC(fixture, max_instances=500, seed=2).run_check()
        self.assertTrue(report.passed)
        self.assertGreater(len(report.entries), 0)
        self.assertTrue(all(not entry.dual for entry in report.entries))


class Test_Failure_Reporting(unittest.TestCase):
    def test_broken_morphism_is_reported_with_witness(self):
        f = table_group.cyclic_morphism(4, 2, 0)
        fixture = laws.Law_Fixture.from_items([Broken_Image(f)], name="broken")
        report = laws.check_axioms(fixture, codes=["GAL"])
        failures = report.failures()
        self.assertTrue(failures)
        self.assertTrue(failures[0].witness)
        self.assertTrue(failures[0].to_line().startswith("FAIL GAL"))

    def test_fixture_items_must_be_objects_or_morphisms(self):
        with self.assertRaises(data_types.Structural_Error):
            laws.Law_Fixture.from_items(["C2"])

    def test_items_are_accepted_without_a_fixture(self):
        space = vector_space.vector_space(2, 2)
        f = vector_space.random_morphism(space, space, np.random.default_rng(0))
        report = laws.check_axioms([f], codes=["AX2", "LB1"])
        self.assertTrue(report.passed)
        self.assertEqual(set(report.counts()), {"AX2", "AX2*", "LB1", "LB1*"})
