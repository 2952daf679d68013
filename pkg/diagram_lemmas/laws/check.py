import logging
from collections.abc import Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import Any

import numpy as np

import diagram_lemmas.data_types as data_types

from .axioms import AX1, AX2, AX3, AX4, AX5, GAL
from .law_strategy import Law_Fixture, Law_Strategy
from .lemmas import LA, LA1, LB, LB1, LB2, LC, RML

LAWS: dict[str, type[Law_Strategy]] = {
    law._law_code: law
    for law in (GAL, AX1, AX2, AX3, AX4, AX5, LA, LA1, LB, LB1, LC, LB2, RML)
}


def check_axioms(
    fixture: Law_Fixture | Iterable[Any],
    max_instances: int = 20000,
    seed: int = 0,
    workers: int = 1,
    codes: Sequence[str] | None = None,
) -> data_types.Law_Report:
    """Run every axiom and lemma with its dual over ``fixture``.

    Laws run in parallel when ``workers`` > 1; entries keep the law order.
    """
    if not isinstance(fixture, Law_Fixture):
        fixture = Law_Fixture.from_items(fixture)
    codes = list(codes) if codes is not None else list(LAWS)
    unknown = [code for code in codes if code not in LAWS]
    if unknown:
        raise data_types.Structural_Error(f"unknown law codes: {unknown}")
    seeds = np.random.SeedSequence(seed).spawn(len(codes))

    def run(code_and_seed: tuple[str, np.random.SeedSequence]) -> data_types.Law_Report:
        code, seed_seq = code_and_seed
        law = LAWS[code](fixture, max_instances, int(seed_seq.generate_state(1)[0]))
        return law.run_check()

    report = data_types.Law_Report()
    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        for partial in executor.map(run, zip(codes, seeds)):
            report.extend(partial)
    logging.info(
        f"Axiom suite on {fixture.name}: {len(report.entries)} entries, "
        f"{len(report.failures())} failures"
    )
    return report


def short_laws(fixture: Law_Fixture, target: int) -> list[str]:
    """Codes of the laws for which ``fixture`` offers fewer than ``target`` instances."""
    return [code for code, law in LAWS.items() if law(fixture).available(target) < target]
