# -*- coding: utf-8 -*-

"""Test the verification framework and its setup factory


Created on sunday, October 18 2026.
"""

import logging
import tempfile
import unittest
from pathlib import Path
from unittest import mock

import pytest

import diagram_lemmas.data_types as data_types
import diagram_lemmas.framework as framework
import diagram_lemmas.laws as laws


def small_cfg(log_dir: Path) -> data_types.Engine_Cfg_File:
    return data_types.Engine_Cfg_File(
        log_level=data_types.Log_Level.DEBUG,
        log_file_path=log_dir,
        seed=5,
        fuzz_count=3,
        workers=2,
        instances_per_law=40,
        max_instances=200,
        configurations_per_backend=30,
        max_table_order=4,
        max_vector_dim=2,
        min_outcomes_per_value=0,
    )


def release_log_handlers() -> None:
    root = logging.getLogger()
    for handler in root.handlers[:]:
        handler.close()
        root.removeHandler(handler)


class Test_Verification_Framework(unittest.TestCase):
    def setUp(self) -> None:
        self._tmp = tempfile.TemporaryDirectory()
        self.log_dir = Path(self._tmp.name) / "logs"
        self.fw = framework.Verification_Framework(small_cfg(self.log_dir))
        self.fw.initialize()

    def tearDown(self) -> None:
        self.fw.end()
        release_log_handlers()
        self._tmp.cleanup()

    def test_log_file_header(self):
        log_files = list(self.log_dir.glob("*.log"))
        self.assertEqual(len(log_files), 1)
        text = log_files[0].read_text(encoding="utf-8")
        self.assertIn("Diagram Lemmas Verification Engine - Event Log", text)
        self.assertIn(f"Version         : {framework.VERSION}", text)
        self.assertIn("Log level       : DEBUG", text)
        self.assertIn("Framework was started", text)

    def test_log_level_override(self):
        fw = framework.Verification_Framework(small_cfg(self.log_dir), data_types.Log_Level.ERROR)
        self.assertEqual(fw.log_level, data_types.Log_Level.ERROR)
        self.assertEqual(self.fw.log_level, data_types.Log_Level.DEBUG)

    def test_table_axioms(self):
        report = self.fw.run_axioms(data_types.Suite_Backend.TABLE)
        self.assertTrue(report.passed)
        self.assertIn("GAL", report.counts())
        self.assertEqual(self.fw.exe_status, data_types.Execution_Status.COMPLETED)

    def test_oracle_axioms(self):
        report = self.fw.run_axioms(data_types.Suite_Backend.ORACLE, seed=3)
        self.assertTrue(report.passed)
        self.assertEqual(set(report.counts()), {"ORC"})

    def test_criterion_suite(self):
        for backend in data_types.Backend_Tag:
            report = self.fw.run_criterion_suite(backend, count=20)
            self.assertTrue(report.passed, [entry.to_line() for entry in report.failures()])
            self.assertEqual(report.counts(), {"EXC": 41})
            self.assertEqual(report.entries[-1].instance, "balance")

    def test_criterion_suite_needs_both_truth_values(self):
        cfg = small_cfg(self.log_dir).model_copy(update={"min_outcomes_per_value": 1})
        fw = framework.Verification_Framework(cfg)
        with mock.patch("diagram_lemmas.subquotient.evaluate_configuration", return_value=(True, True)):
            report = fw.run_criterion_suite(data_types.Backend_Tag.VECTOR_SPACE, count=10)
        failures = report.failures()
        self.assertEqual(len(failures), 1)
        self.assertEqual(failures[0].instance, "balance")
        self.assertEqual(failures[0].message, "exact=20 inexact=0 minimum=1")

    def test_fuzz_campaign(self):
        stats = self.fw.run_fuzz(backend=data_types.Suite_Backend.TABLE)
        self.assertEqual(stats.complexes, 3)
        self.assertEqual(stats.exact, 3)
        self.assertEqual(stats.failures, [])

    def test_errors_mark_the_run(self):
        def broken():
            raise data_types.Structural_Error("no such object")

        with self.assertRaises(data_types.Structural_Error):
            self.fw._run("broken run", broken)
        self.assertEqual(self.fw.exe_status, data_types.Execution_Status.ERROR)


class Test_Engine_Setup(unittest.TestCase):
    def setUp(self) -> None:
        self.setup = framework.Engine_Setup(small_cfg(Path("unused")))

    def test_fixtures_per_backend(self):
        self.assertEqual(len(self.setup.create_fixtures(data_types.Suite_Backend.TABLE, 1)), 1)
        self.assertEqual(len(self.setup.create_fixtures(data_types.Suite_Backend.MIXED, 1)), 2)
        with self.assertRaises(ValueError):
            self.setup.create_fixtures("quantum", 1)

    def test_fixture_respects_the_order_bound(self):
        fixture = self.setup.create_fixtures(data_types.Suite_Backend.TABLE, 1)[0]
        self.assertTrue(all(G.order <= 4 for G in fixture.objects))

    def test_fuzz_parameters(self):
        params = self.setup.create_fuzz_parameters(data_types.Backend_Tag.VECTOR_SPACE)
        self.assertEqual((params.max_order, params.max_dim), (4, 2))
        self.assertEqual(params.backend, data_types.Backend_Tag.VECTOR_SPACE)


@pytest.mark.slow
class Test_Acceptance_Sizes(unittest.TestCase):
    def setUp(self) -> None:
        self._tmp = tempfile.TemporaryDirectory()
        self.log_dir = Path(self._tmp.name) / "logs"

    def tearDown(self) -> None:
        release_log_handlers()
        self._tmp.cleanup()

    def test_criterion_suite_sees_both_truth_values(self):
        cfg = data_types.Engine_Cfg_File(log_file_path=self.log_dir, seed=7, configurations_per_backend=1000)
        fw = framework.Verification_Framework(cfg)
        for backend in data_types.Backend_Tag:
            report = fw.run_criterion_suite(backend)
            self.assertTrue(report.passed, [entry.to_line() for entry in report.failures()][:5])
            self.assertEqual(report.counts(), {"EXC": 2001})
            balance = report.entries[-1]
            self.assertEqual(balance.instance, "balance")
            exact, inexact = (int(part.split("=")[1]) for part in balance.message.split()[:2])
            self.assertEqual(exact + inexact, 2000)
            self.assertGreaterEqual(min(exact, inexact), 100)

    def test_vector_fixture_reaches_the_instance_target(self):
        cfg = data_types.Engine_Cfg_File(
            log_file_path=self.log_dir, instances_per_law=500, max_instances=500, max_vector_dim=4
        )
        setup = framework.Engine_Setup(cfg)
        (fixture,) = setup.create_fixtures(data_types.Suite_Backend.VEC, seed=3)
        self.assertEqual(laws.short_laws(fixture, cfg.instances_per_law), [])
        counts = laws.check_axioms(fixture, max_instances=cfg.max_instances, seed=3, workers=4).counts()
        for code, law in laws.LAWS.items():
            self.assertGreaterEqual(counts[code], cfg.instances_per_law, code)
            if law._has_dual:
                self.assertGreaterEqual(counts[code + "*"], cfg.instances_per_law, code)
