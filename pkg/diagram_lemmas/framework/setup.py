import logging

import diagram_lemmas.data_types as data_types
import diagram_lemmas.laws as laws
import diagram_lemmas.subquotient as subquotient

GROWTH_STEPS = 4


class Engine_Setup:
    def __init__(self, cfg: data_types.Engine_Cfg_File) -> None:
        self.cfg = cfg

    def create_fixtures(self, backend: data_types.Suite_Backend, seed: int) -> list[laws.Law_Fixture]:
        """Fixtures for an axiom suite

        Args:
            backend (data_types.Suite_Backend): which backend(s) to exercise
            seed (int): seed of the random vector-space instances

        Returns:
            list[laws.Law_Fixture]: the fixtures, in the order they are checked
        """
        if backend == data_types.Suite_Backend.TABLE:
            return [laws.table_fixture(self.cfg.max_table_order)]
        if backend == data_types.Suite_Backend.VEC:
            return [self._vector_fixture(seed)]
        if backend == data_types.Suite_Backend.MIXED:
            return [laws.table_fixture(self.cfg.max_table_order), self._vector_fixture(seed)]
        if backend == data_types.Suite_Backend.ORACLE:
            return [laws.oracle_fixture(max(1, self.cfg.instances_per_law // 5), seed)]
        raise ValueError(f"Unknown backend: {backend}")

    def _vector_fixture(self, seed: int) -> laws.Law_Fixture:
        """Random vector fixture offering every law ``instances_per_law`` instances.

        Each chain adds four maps; the number of chains doubles until every law
        reaches the target or the growth limit is hit.
        """
        target = self.cfg.instances_per_law
        chains = max(1, -(-target // 4))
        for _ in range(GROWTH_STEPS):
            fixture = laws.vector_fixture(
                chains=chains,
                primes=[2, 3, 5],
                max_dim=self.cfg.max_vector_dim,
                seed=seed,
                pool_size=target,
            )
            short = laws.short_laws(fixture, target)
            if not short:
                return fixture
            chains *= 2
        logging.warning(
            f"Vector fixture offers fewer than {target} instances for {', '.join(short)}"
        )
        return fixture

    def create_samplers(
        self, backend: data_types.Backend_Tag, seed: int
    ) -> list[subquotient.Configuration_Sampler]:
        """One sampler with g∘f = 0 and one without."""
        return [
            sampler(backend, seed + i, max_order=self.cfg.max_table_order)
            for i, sampler in enumerate((subquotient.Complex_Sampler, subquotient.Free_Sampler))
        ]

    def create_fuzz_parameters(self, backend: data_types.Backend_Tag) -> data_types.Fuzz_Parameters:
        return data_types.Fuzz_Parameters(
            backend=backend,
            max_order=self.cfg.max_table_order,
            max_dim=min(self.cfg.max_vector_dim, 3),
        )
