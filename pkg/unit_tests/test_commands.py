# -*- coding: utf-8 -*-

"""Test the command line entry point and its exit codes


Created on sunday, October 18 2026.
"""

import contextlib
import io
import tempfile
import unittest
from pathlib import Path
from unittest import mock

import diagram_lemmas.cli.commands as commands
import diagram_lemmas.data_types as data_types
import diagram_lemmas.utils as utils

from .test_framework import release_log_handlers, small_cfg

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


class Test_Commands(unittest.TestCase):
    def setUp(self) -> None:
        self._tmp = tempfile.TemporaryDirectory()
        tmp = Path(self._tmp.name)
        self.cfg_file = tmp / "engine.cfg"
        utils.write_cfg_file(small_cfg(tmp / "logs"), self.cfg_file)

    def tearDown(self) -> None:
        release_log_handlers()
        self._tmp.cleanup()

    def run_main(self, *argv: str) -> tuple[int, str, str]:
        out, err = io.StringIO(), io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = commands._main([*argv, "--config", str(self.cfg_file)])
        return code, out.getvalue(), err.getvalue()

    def test_validate(self):
        code, out, _ = self.run_main("validate", str(FIXTURES / "cyclic_3x3.dgm"))
        self.assertEqual(code, 0)
        self.assertIn("PASS SQ     (0,0)", out)
        self.assertIn("positions=9", out)
        self.assertIn("failures=0", out)

    def test_salamander(self):
        code, out, _ = self.run_main("salamander", str(FIXTURES / "cyclic_3x3.dgm"), "--at", "1,1")
        self.assertEqual(code, 0)
        self.assertIn("exact at 4/4 interior positions", out)
        self.assertIn("exact=4/4", out)

    def test_vertical_salamander(self):
        code, out, _ = self.run_main(
            "salamander", str(FIXTURES / "cyclic_3x3.dgm"), "--at", "0,1", "--direction", "vertical"
        )
        self.assertEqual(code, 0)
        self.assertIn("exact at 4/4 interior positions", out)

    def test_three_by_three(self):
        code, out, _ = self.run_main("3x3", str(FIXTURES / "cyclic_3x3.dgm"))
        self.assertEqual(code, 0)
        self.assertIn("first row exact", out)

    def test_three_by_three_without_exact_columns(self):
        code, _, err = self.run_main("3x3", str(FIXTURES / "zero_grid.dgm"))
        self.assertEqual(code, 2)
        self.assertIn("column 0 is not exact", err)

    def test_homology_machine_format(self):
        code, out, _ = self.run_main("homology", str(FIXTURES / "zero_grid.dgm"), "--format", "machine")
        self.assertEqual(code, 0)
        self.assertEqual(out, "command=homology\npositions=4\nundefined=0\nfailures=0\n")

    def test_homology_of_a_vector_row(self):
        code, out, _ = self.run_main("homology", str(FIXTURES / "vector_row.dgm"))
        self.assertEqual(code, 0)
        self.assertIn("(0,1)_h defined, order 1 [in F2^2 of order 4]", out)

    def test_validate_lists_law_violations(self):
        code, out, err = self.run_main("validate", str(FIXTURES / "broken_square.dgm"))
        self.assertEqual(code, 1)
        self.assertEqual(err, "")
        fails = [line for line in out.splitlines() if line.startswith("FAIL")]
        self.assertEqual(len(fails), 1)
        self.assertTrue(fails[0].startswith("FAIL SQ     (0,0)"), fails[0])
        self.assertIn("PASS D2H    (0,0)", out)
        self.assertIn("failures=1", out)

    def test_broken_files_exit_with_two(self):
        for command, fixture, line in (
            ("homology", "broken_square.dgm", 9),
            ("validate", "corrupted_homomorphism.dgm", 5),
        ):
            code, out, err = self.run_main(command, str(FIXTURES / fixture))
            self.assertEqual(code, 2)
            self.assertEqual(out, "")
            self.assertTrue(err.startswith(f"error: line {line}:"), err)

    def test_missing_config(self):
        out, err = io.StringIO(), io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = commands._main(["validate", str(FIXTURES / "empty.dgm"), "--config", "absent.cfg"])
        self.assertEqual(code, 2)
        self.assertIn("not found", err.getvalue())

    def test_failure_lines_exit_with_one(self):
        def failing(args, fw):
            report = data_types.Command_Report(command="validate")
            report.add_failure("forced")
            return report

        with mock.patch.dict(commands.COMMANDS, {"validate": failing}):
            code, out, _ = self.run_main("validate", str(FIXTURES / "empty.dgm"))
        self.assertEqual(code, 1)
        self.assertIn("failures=1", out)

    def test_axioms(self):
        code, out, _ = self.run_main("axioms", "--backend", "table", "--seed", "2")
        self.assertEqual(code, 0)
        self.assertIn("GAL: ", out)
        self.assertIn("backend=table", out)

    def test_fuzz(self):
        code, out, _ = self.run_main("fuzz", "--count", "2", "--backend", "table", "--seed", "1")
        self.assertEqual(code, 0)
        self.assertIn("2/2 complexes: salamander exact", out)

    def test_same_seed_same_report(self):
        for argv in (
            ("fuzz", "--count", "3", "--seed", "9"),
            ("axioms", "--backend", "table", "--seed", "4"),
        ):
            first = self.run_main(*argv)
            second = self.run_main(*argv)
            self.assertEqual(first[0], 0)
            self.assertEqual(first, second)

    def test_bad_position(self):
        with contextlib.redirect_stderr(io.StringIO()), self.assertRaises(SystemExit):
            commands._main(["salamander", str(FIXTURES / "cyclic_3x3.dgm"), "--at", "one"])

    def test_log_level_option(self):
        code, _, _ = self.run_main("validate", str(FIXTURES / "empty.dgm"), "--log-level", "warning")
        self.assertEqual(code, 0)
