import logging
from abc import ABC, abstractmethod
from collections import defaultdict
from collections.abc import Iterable, Iterator
from itertools import combinations, islice
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

import diagram_lemmas.data_types as data_types
import diagram_lemmas.lattice as lattice
import diagram_lemmas.utils as utils

Outcome = tuple | data_types.Check_Status | None


class Law_Fixture(BaseModel):
    """Objects and morphisms a law suite quantifies over.

    ``lattices`` optionally replaces the full subgroup lattice of an object by
    a sample of it; objects without an entry use the full lattice. ``pools``
    holds larger subgroup samples for the laws quantifying over single
    subgroups; objects without a pool fall back to their lattice.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    name: str = "fixture"
    objects: list[lattice.Structure_Object] = Field(default_factory=list)
    morphisms: list[lattice.Morphism] = Field(default_factory=list)
    lattices: dict[lattice.Structure_Object, tuple[lattice.Subgroup, ...]] = Field(
        default_factory=dict
    )
    pools: dict[lattice.Structure_Object, tuple[lattice.Subgroup, ...]] = Field(
        default_factory=dict
    )

    @classmethod
    def from_items(cls, items: Iterable[Any], name: str = "fixture") -> "Law_Fixture":
        objects: list[lattice.Structure_Object] = []
        morphisms: list[lattice.Morphism] = []
        for item in items:
            if isinstance(item, lattice.Morphism):
                morphisms.append(item)
                candidates = [item.source, item.target]
            elif isinstance(item, lattice.Structure_Object):
                candidates = [item]
            else:
                raise data_types.Structural_Error(
                    f"fixture items must be objects or morphisms, got {type(item).__name__}"
                )
            for obj in candidates:
                if obj not in objects:
                    objects.append(obj)
        return cls(name=name, objects=objects, morphisms=morphisms)

    def lattice_of(self, G: lattice.Structure_Object) -> tuple[lattice.Subgroup, ...]:
        if G in self.lattices:
            return self.lattices[G]
        return G.all_subgroups()

    def pool_of(self, G: lattice.Structure_Object) -> tuple[lattice.Subgroup, ...]:
        if G in self.pools:
            return self.pools[G]
        return self.lattice_of(G)

    def morphisms_into(self, G: lattice.Structure_Object) -> list[lattice.Morphism]:
        return [f for f in self.morphisms if f.target == G]

    def morphisms_out_of(self, G: lattice.Structure_Object) -> list[lattice.Morphism]:
        return [f for f in self.morphisms if f.source == G]

    def composable_pairs(self) -> Iterator[tuple[lattice.Morphism, lattice.Morphism]]:
        by_source = defaultdict(list)
        for g in self.morphisms:
            by_source[g.source].append(g)
        for f in self.morphisms:
            for g in by_source[f.target]:
                yield f, g

    def parallel_pairs(self) -> Iterator[tuple[lattice.Morphism, lattice.Morphism]]:
        by_ends = defaultdict(list)
        for f in self.morphisms:
            by_ends[(f.source, f.target)].append(f)
        for group in by_ends.values():
            yield from combinations(group, 2)


def show(item: Any) -> str:
    if isinstance(item, lattice.Subgroup):
        return f"{item.parent.name}{list(item.rep)}"
    if isinstance(item, lattice.Morphism):
        return f"{item.source.name}->{item.target.name}[{item.describe()}]"
    if isinstance(item, lattice.Structure_Object):
        return item.name
    return str(item)


class Law_Strategy(ABC):
    """One axiom or lemma, checked together with its dual over a fixture.

    ``_primary`` and ``_dual`` return None when the statement holds for the
    instance, ``Check_Status.SKIP`` when its hypotheses do not apply, and a
    tuple of witnesses when it fails.
    """

    _law_code = "L000"
    _has_dual = True

    def __init__(self, fixture: Law_Fixture, max_instances: int = 20000, seed: int = 0) -> None:
        self.fixture = fixture
        self.max_instances = max_instances
        self._rng = np.random.default_rng(seed)
        self.report = data_types.Law_Report()

    def set_result(self, outcome: Outcome, instance: tuple, dual: bool, message: str = "") -> None:
        witness: list[str] = []
        if outcome is None:
            status = data_types.Check_Status.PASS
        elif outcome == data_types.Check_Status.SKIP:
            status = data_types.Check_Status.SKIP
        else:
            status = data_types.Check_Status.FAIL
            witness = [show(item) for item in outcome]
        result = data_types.Check_Result(
            status=status,
            code=self._law_code,
            instance=self._describe(instance),
            message=message,
            dual=dual,
            witness=witness,
        )
        if not result.passed:
            logging.error(f"Law failure: {result.to_line()}")
        self.report.add(result)

    def _describe(self, instance: tuple) -> str:
        head = instance[0]
        if isinstance(head, lattice.Morphism):
            return f"{head.source.name}->{head.target.name}"
        return show(head)

    @abstractmethod
    def _instances(self) -> Iterable[tuple]: ...

    @abstractmethod
    def _primary(self, instance: tuple) -> Outcome: ...

    def _dual(self, instance: tuple) -> Outcome:
        return data_types.Check_Status.SKIP

    def _evaluate(self, instance: tuple, dual: bool) -> None:
        try:
            outcome = self._dual(instance) if dual else self._primary(instance)
        except data_types.Engine_Error as exc:
            self.set_result(tuple(item for item in instance), instance, dual, str(exc))
            return
        self.set_result(outcome, instance, dual)

    def available(self, limit: int) -> int:
        """Number of instances the fixture offers, counted up to ``limit``."""
        return sum(1 for _ in islice(self._instances(), limit))

    def run_check(self) -> data_types.Law_Report:
        logging.info(f"Running law {self._law_code} on {self.fixture.name}...")
        instances = utils.reservoir_sample(self._instances(), self.max_instances, self._rng)
        for instance in instances:
            self._evaluate(instance, False)
            if self._has_dual:
                self._evaluate(instance, True)
        logging.debug(f"{self._law_code}: {len(instances)} instances checked")
        return self.report


def failing(condition: bool, *witness: Any) -> Outcome:
    return None if condition else witness
