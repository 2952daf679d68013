import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

import diagram_lemmas.cli.fuzz as fuzz
import diagram_lemmas.data_types as data_types
import diagram_lemmas.laws as laws
import diagram_lemmas.subquotient as subquotient

from .setup import Engine_Setup

VERSION = "v0.1.0"


class Verification_Framework:
    """Runs the law suites and the fuzz campaign with the configured limits."""

    def __init__(
        self,
        cfg: data_types.Engine_Cfg_File,
        log_level: data_types.Log_Level | None = None,
    ) -> None:
        self.cfg = cfg
        self.setup = Engine_Setup(cfg)
        self.log_dir = Path(cfg.log_file_path)
        self.log_level = log_level if log_level is not None else cfg.log_level
        self.exe_status = data_types.Execution_Status.NONE

    def initialize(self) -> None:
        self.log_dir.mkdir(parents=True, exist_ok=True)
        self.create_log_file()
        logging.info("Framework was started")

    def create_log_file(self) -> None:
        now = datetime.now(timezone.utc)
        log_file = self.log_dir / f"{now.strftime('%Y%m%d')}.log"
        datetime_str = now.strftime("%Y-%m-%d %H:%M:%S")
        if not log_file.exists():
            self._create_log_file_header(log_file, datetime_str)
        logging.basicConfig(
            filename=log_file,
            level=self.log_level,
            format="%(asctime)s [%(levelname)-8s] --> %(message)s",
            datefmt="%Y-%m-%dT%H:%M:%S",
            filemode="a",
            force=True,
        )

    def _create_log_file_header(self, log_file: Path, datetime_str: str) -> None:
        with open(log_file, "w") as file:
            file.write(
                "\n========================================================================================\n"
                "Diagram Lemmas Verification Engine - Event Log\n"
                "========================================================================================\n\n"
                "Description     : this file logs the checks run by the verification engine\n"
                f"Version         : {VERSION}\n"
                "Log Type        : Verification Events\n"
                f"Log level       : {data_types.Log_Level(self.log_level).name}\n"
                f"Created at (UTC): {datetime_str}\n"
                "----------------------------------------------------------------------------------------\n"
                "Timestamp           Level          Message\n"
                "----------------------------------------------------------------------------------------\n\n"
            )

    def _run(self, label: str, work):
        logging.info(f"Starting {label}...")
        self.exe_status = data_types.Execution_Status.RUNNING
        try:
            result = work()
        except data_types.Engine_Error:
            self.exe_status = data_types.Execution_Status.ERROR
            logging.exception(f"{label} stopped with an error")
            raise
        self.exe_status = data_types.Execution_Status.COMPLETED
        logging.info(f"{label} finished")
        return result

    def run_axioms(
        self, backend: data_types.Suite_Backend, seed: int | None = None
    ) -> data_types.Law_Report:
        seed = self.cfg.seed if seed is None else seed

        def work() -> data_types.Law_Report:
            report = data_types.Law_Report()
            for fixture in self.setup.create_fixtures(backend, seed):
                if backend == data_types.Suite_Backend.ORACLE:
                    law = laws.ORC(fixture, self.cfg.max_instances, seed)
                    report.extend(law.run_check())
                    continue
                report.extend(
                    laws.check_axioms(
                        fixture,
                        max_instances=self.cfg.max_instances,
                        seed=seed,
                        workers=self.cfg.workers,
                    )
                )
            return report

        return self._run(f"{backend} axiom suite", work)

    def run_criterion_suite(
        self, backend: data_types.Backend_Tag, count: int | None = None, seed: int | None = None
    ) -> data_types.Law_Report:
        """Induced-sequence exactness against the lattice criterion on sampled configurations."""
        count = self.cfg.configurations_per_backend if count is None else count
        seed = self.cfg.seed if seed is None else seed

        def work() -> data_types.Law_Report:
            report = data_types.Law_Report()
            tally: Counter[bool] = Counter()
            for sampler in self.setup.create_samplers(backend, seed):
                configurations = sampler.sample(count)
                with ThreadPoolExecutor(max_workers=self.cfg.workers) as executor:
                    outcomes = list(executor.map(subquotient.evaluate_configuration, configurations))
                tally.update(direct for direct, _ in outcomes)
                for i, (direct, criterion) in enumerate(outcomes):
                    report.add(
                        data_types.Check_Result(
                            status=data_types.Check_Status.PASS
                            if direct == criterion
                            else data_types.Check_Status.FAIL,
                            code="EXC",
                            instance=f"{type(sampler).__name__} #{i}",
                            message=f"exact={direct}",
                        )
                    )
            report.add(self._outcome_balance(tally[True], tally[False]))
            return report

        return self._run(f"{backend} criterion suite", work)

    def _outcome_balance(self, exact: int, inexact: int) -> data_types.Check_Result:
        """Both truth values of the direct check occur at least ``min_outcomes_per_value`` times."""
        minimum = self.cfg.min_outcomes_per_value
        balanced = exact >= minimum and inexact >= minimum
        if not balanced:
            logging.error(f"Criterion suite: {exact} exact and {inexact} inexact, {minimum} needed of each")
        return data_types.Check_Result(
            status=data_types.Check_Status.PASS if balanced else data_types.Check_Status.FAIL,
            code="EXC",
            instance="balance",
            message=f"exact={exact} inexact={inexact} minimum={minimum}",
        )

    def run_fuzz(
        self, count: int | None = None, seed: int | None = None, backend: data_types.Suite_Backend = data_types.Suite_Backend.MIXED
    ) -> data_types.Fuzz_Statistics:
        """Generate ``count`` complexes and verify each; the mixed backend alternates."""
        count = self.cfg.fuzz_count if count is None else count
        seed = self.cfg.seed if seed is None else seed
        backends = {
            data_types.Suite_Backend.TABLE: [data_types.Backend_Tag.TABLE_GROUP],
            data_types.Suite_Backend.VEC: [data_types.Backend_Tag.VECTOR_SPACE],
        }.get(backend, [data_types.Backend_Tag.TABLE_GROUP, data_types.Backend_Tag.VECTOR_SPACE])
        seeds = np.random.SeedSequence(seed).spawn(count)

        def one(index: int) -> data_types.Fuzz_Statistics:
            params = self.setup.create_fuzz_parameters(backends[index % len(backends)])
            dc = fuzz.fuzz_complex(seeds[index], params)
            dc.name = f"{dc.name}#{index}"
            return fuzz.check_complex(dc)

        def work() -> data_types.Fuzz_Statistics:
            stats = data_types.Fuzz_Statistics()
            with ThreadPoolExecutor(max_workers=self.cfg.workers) as executor:
                for partial in executor.map(one, range(count)):
                    stats.merge(partial)
            return stats

        return self._run(f"fuzz campaign of {count} complexes", work)

    def end(self) -> None:
        logging.info("Framework was stopped")
