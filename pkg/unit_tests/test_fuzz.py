# -*- coding: utf-8 -*-

"""Test the random double complex generator and the per-complex checks


Created on sunday, October 18 2026.
"""

import unittest

import numpy as np
import pydantic
import pytest

import diagram_lemmas.cli as cli
import diagram_lemmas.data_types as data_types
import diagram_lemmas.double_complex as double_complex
import diagram_lemmas.lattice as lattice
import diagram_lemmas.table_group as table_group
import diagram_lemmas.vector_space as vector_space

SMALL_TABLES = data_types.Fuzz_Parameters(rows=3, cols=3, pieces=3, max_order=4)
SMALL_SPACES = data_types.Fuzz_Parameters(
    rows=3, cols=3, pieces=3, backend=data_types.Backend_Tag.VECTOR_SPACE, max_dim=2, primes=[2, 3]
)


class Test_Fuzz_Complex(unittest.TestCase):
    def test_no_rows_no_objects(self):
        dc = cli.fuzz_complex(0, data_types.Fuzz_Parameters(rows=0))
        self.assertTrue(dc.is_empty())
        dc = cli.fuzz_complex(0, data_types.Fuzz_Parameters(cols=0, backend=data_types.Backend_Tag.VECTOR_SPACE))
        self.assertEqual(dc.backend_tag, data_types.Backend_Tag.VECTOR_SPACE)

    def test_generated_complexes_are_valid(self):
        for seed in range(10):
            for params in (data_types.Fuzz_Parameters(), SMALL_SPACES):
                dc = cli.fuzz_complex(seed, params)
                self.assertTrue(double_complex.validate(dc).passed, seed)
                self.assertEqual(dc.backend_tag, params.backend)

    def test_sizes_stay_within_the_limits(self):
        for seed in range(10):
            for obj in cli.fuzz_complex(seed).objects.values():
                self.assertLessEqual(obj.order, 8)
                self.assertTrue(obj.is_abelian())
            for obj in cli.fuzz_complex(seed, SMALL_SPACES).objects.values():
                self.assertLessEqual(obj.dim, 2)

    def test_same_seed_same_complex(self):
        self.assertEqual(cli.fuzz_complex(17), cli.fuzz_complex(17))
        self.assertEqual(cli.fuzz_complex(3, SMALL_SPACES), cli.fuzz_complex(3, SMALL_SPACES))

    def test_bad_parameters(self):
        with self.assertRaises(pydantic.ValidationError):
            data_types.Fuzz_Parameters(rows=9)

    def test_conjugation_keeps_the_homology(self):
        dc = cli.fuzz_complex(4, SMALL_TABLES)
        twisted = cli.conjugate(dc, np.random.default_rng(4))
        self.assertTrue(double_complex.validate(twisted).passed)
        for pos in dc.support():
            self.assertEqual(
                [obj.value.order for obj in double_complex.all_homology(dc, pos)],
                [obj.value.order for obj in double_complex.all_homology(twisted, pos)],
            )


class Test_Check_Complex(unittest.TestCase):
    def test_scan_positions(self):
        C2 = table_group.cyclic_group(2)
        dc = double_complex.Double_Complex({(1, 2): C2})
        self.assertEqual(len(cli.scan_positions(dc)), 3 * 4)
        self.assertIn((-1, -1), cli.scan_positions(dc))

    def test_salamander_holds_on_fuzzed_complexes(self):
        for seed in range(4):
            for params in (SMALL_TABLES, SMALL_SPACES):
                stats = cli.check_complex(cli.fuzz_complex(seed, params))
                self.assertEqual(stats.failures, [])
                self.assertEqual((stats.complexes, stats.valid, stats.exact), (1, 1, 1))
                self.assertGreater(stats.positions_verified, 0)
                self.assertEqual(stats.isomorphisms_verified, stats.qualifying_edges)

    def test_invalid_complex_is_reported(self):
        C2 = table_group.cyclic_group(2)
        one = C2.identity()
        dc = double_complex.Double_Complex({(0, m): C2 for m in range(3)}, {(0, 0): one, (0, 1): one})
        stats = cli.check_complex(dc)
        self.assertEqual(stats.valid, 0)
        self.assertEqual(len(stats.failures), 1)

    def test_statistics_merge(self):
        total = data_types.Fuzz_Statistics()
        for seed in range(2):
            total.merge(cli.check_complex(cli.fuzz_complex(seed, SMALL_TABLES)))
        self.assertEqual(total.complexes, 2)
        self.assertEqual(total.exact, 2)


def mutate(f: lattice.Morphism, rng: np.random.Generator) -> lattice.Morphism | None:
    """Change one matrix entry, or swap a group map for another homomorphism with the same ends."""
    if f.source.backend_tag == data_types.Backend_Tag.VECTOR_SPACE:
        matrix = np.array(f.matrix)
        i, j = int(rng.integers(matrix.shape[0])), int(rng.integers(matrix.shape[1]))
        matrix[i, j] = (matrix[i, j] + int(rng.integers(1, f.p))) % f.p
        return vector_space.Matrix_Morphism(f.source, f.target, matrix)
    others = [g for g in table_group.enumerate_homomorphisms(f.source, f.target) if g != f]
    return others[int(rng.integers(len(others)))] if others else None


def laws_around(dc: double_complex.Double_Complex, pos: tuple[int, int]) -> bool:
    """Every identity in which the horizontal map at ``pos`` takes part."""
    n, m = pos
    h, v = dc.h, dc.v
    return (
        lattice.compose(h((n, m)), h((n, m - 1))).is_zero()
        and lattice.compose(h((n, m + 1)), h((n, m))).is_zero()
        and lattice.compose(v((n, m + 1)), h((n, m))) == lattice.compose(h((n + 1, m)), v((n, m)))
        and lattice.compose(v((n - 1, m + 1)), h((n - 1, m)))
        == lattice.compose(h((n, m)), v((n - 1, m)))
    )


@pytest.mark.slow
class Test_Acceptance(unittest.TestCase):
    def test_single_entry_mutations(self):
        rng = np.random.default_rng(17)
        spaces = data_types.Fuzz_Parameters(backend=data_types.Backend_Tag.VECTOR_SPACE, max_dim=3)
        for params in (spaces, data_types.Fuzz_Parameters()):
            trials = broken = 0
            seed = 0
            while trials < 200:
                dc = cli.fuzz_complex(seed, params)
                seed += 1
                # the transpose turns vertical maps into horizontal ones
                for grid in (dc, dc.transpose()):
                    positions = [
                        pos
                        for pos in grid.support()
                        if not grid.object_at((pos[0], pos[1] + 1)).is_trivial()
                    ]
                    if not positions:
                        continue
                    pos = positions[int(rng.integers(len(positions)))]
                    changed = mutate(grid.h(pos), rng)
                    if changed is None:
                        continue
                    mutated = grid.with_map(data_types.Edge_Direction.HORIZONTAL, pos, changed)
                    holds = laws_around(mutated, pos)
                    self.assertEqual(double_complex.validate(mutated).passed, holds, (seed, pos))
                    trials += 1
                    broken += not holds
            self.assertGreaterEqual(broken, 20, params.backend)

    def test_two_hundred_complexes(self):
        spaces = data_types.Fuzz_Parameters(backend=data_types.Backend_Tag.VECTOR_SPACE, max_dim=3)
        tables = data_types.Fuzz_Parameters(max_order=8)
        total = data_types.Fuzz_Statistics()
        for i, seed in enumerate(np.random.SeedSequence(11).spawn(200)):
            total.merge(cli.check_complex(cli.fuzz_complex(seed, (tables, spaces)[i % 2])))
        self.assertEqual(total.failures, [])
        self.assertEqual((total.complexes, total.valid, total.exact), (200, 200, 200))
        self.assertGreaterEqual(total.qualifying_edges, 50)
        self.assertEqual(total.isomorphisms_verified, total.qualifying_edges)
