import functools
import logging
from abc import ABC, abstractmethod
from collections.abc import Iterator

import numpy as np
from pydantic import BaseModel, ConfigDict

import diagram_lemmas.data_types as data_types
import diagram_lemmas.lattice as lattice
import diagram_lemmas.table_group as table_group
import diagram_lemmas.utils as utils
import diagram_lemmas.vector_space as vector_space

from .subquotient import exactness_criterion, induced_sequence, is_exact_at


class Exactness_Configuration(BaseModel):
    """f: G0 -> G1, g: G1 -> G2 with U,V in G0, W,X in G1 and Y,Z in G2."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    f: lattice.Morphism
    g: lattice.Morphism
    U: lattice.Subgroup
    V: lattice.Subgroup
    W: lattice.Subgroup
    X: lattice.Subgroup
    Y: lattice.Subgroup
    Z: lattice.Subgroup

    def subgroups(self) -> tuple[lattice.Subgroup, ...]:
        return self.U, self.V, self.W, self.X, self.Y, self.Z


def evaluate_configuration(config: Exactness_Configuration) -> tuple[bool, bool]:
    """(direct exactness of the induced sequence, lattice criterion)."""
    f_ind, g_ind = induced_sequence(config.f, config.g, *config.subgroups())
    direct = is_exact_at(f_ind, g_ind)
    criterion = exactness_criterion(config.f, config.g, *config.subgroups())
    return direct, criterion


@functools.cache
def _homomorphisms(
    G: table_group.Cayley_Group, H: table_group.Cayley_Group
) -> tuple[table_group.Element_Map_Morphism, ...]:
    return tuple(table_group.enumerate_homomorphisms(G, H))


def _normal_pairs(
    L: tuple[lattice.Subgroup, ...],
) -> list[tuple[lattice.Subgroup, lattice.Subgroup]]:
    return [(A, B) for A in L for B in L if lattice.is_normal_to(B, A)]


class Configuration_Sampler(ABC):
    """Draws admissible (f, g, U..Z) configurations with an explicit seed.

    Subclasses choose the pair of maps; subgroup sextuples satisfying the
    four inclusion hypotheses are then drawn by reservoir, at most
    ``per_pair`` for each pair of maps.
    """

    def __init__(
        self,
        backend: data_types.Backend_Tag,
        seed: int,
        max_order: int = 8,
        max_dim: int = 2,
        primes: tuple[int, ...] = (2, 3),
        per_pair: int = 200,
    ) -> None:
        self.backend = backend
        self._rng = np.random.default_rng(seed)
        self.max_dim = max_dim
        self.primes = primes
        self.per_pair = per_pair
        self._groups = [table_group.trivial_group(), *table_group.small_groups(max_order)]

    def _random_group(self) -> table_group.Cayley_Group:
        return self._groups[int(self._rng.integers(len(self._groups)))]

    def _random_hom(
        self, G: table_group.Cayley_Group, H: table_group.Cayley_Group
    ) -> table_group.Element_Map_Morphism:
        homs = _homomorphisms(G, H)
        return homs[int(self._rng.integers(len(homs)))]

    def _random_space(self, p: int) -> vector_space.Vector_Space:
        return vector_space.vector_space(p, int(self._rng.integers(0, self.max_dim + 1)))

    @abstractmethod
    def _sample_maps(self) -> tuple[lattice.Morphism, lattice.Morphism]: ...

    def _sextuples(
        self, f: lattice.Morphism, g: lattice.Morphism
    ) -> Iterator[tuple[lattice.Subgroup, ...]]:
        first = _normal_pairs(f.source.all_subgroups())
        middle = _normal_pairs(f.target.all_subgroups())
        last = _normal_pairs(g.target.all_subgroups())
        for W, X in middle:
            gW, gX = g.direct_image(W), g.direct_image(X)
            tails = [(Y, Z) for Y, Z in last if lattice.leq(gW, Y) and lattice.leq(gX, Z)]
            if not tails:
                continue
            for U, V in first:
                if lattice.leq(f.direct_image(U), W) and lattice.leq(f.direct_image(V), X):
                    for Y, Z in tails:
                        yield U, V, W, X, Y, Z

    def sample(self, count: int) -> list[Exactness_Configuration]:
        configurations: list[Exactness_Configuration] = []
        while len(configurations) < count:
            f, g = self._sample_maps()
            take = min(self.per_pair, count - len(configurations))
            for U, V, W, X, Y, Z in utils.reservoir_sample(
                self._sextuples(f, g), take, self._rng
            ):
                configurations.append(
                    Exactness_Configuration(f=f, g=g, U=U, V=V, W=W, X=X, Y=Y, Z=Z)
                )
        logging.debug(f"{type(self).__name__}: {len(configurations)} configurations")
        return configurations


class Complex_Sampler(Configuration_Sampler):
    """Pairs with g ∘ f = 0: f is drawn among the maps into Ker g."""

    def _sample_maps(self) -> tuple[lattice.Morphism, lattice.Morphism]:
        if self.backend == data_types.Backend_Tag.TABLE_GROUP:
            G0, G1, G2 = (self._random_group() for _ in range(3))
            g = self._random_hom(G1, G2)
            iota = G1.embedding_of(g.kernel())
            f = lattice.compose(iota, self._random_hom(G0, iota.source))
            return f, g
        p = int(self._rng.choice(self.primes))
        V0, V1, V2 = (self._random_space(p) for _ in range(3))
        g = vector_space.random_morphism(V1, V2, self._rng)
        iota = V1.embedding_of(g.kernel())
        f = lattice.compose(iota, vector_space.random_morphism(V0, iota.source, self._rng))
        return f, g


class Free_Sampler(Configuration_Sampler):
    """Independent f and g; only the inclusion hypotheses are enforced."""

    def _sample_maps(self) -> tuple[lattice.Morphism, lattice.Morphism]:
        if self.backend == data_types.Backend_Tag.TABLE_GROUP:
            G0, G1, G2 = (self._random_group() for _ in range(3))
            return self._random_hom(G0, G1), self._random_hom(G1, G2)
        p = int(self._rng.choice(self.primes))
        V0, V1, V2 = (self._random_space(p) for _ in range(3))
        return (
            vector_space.random_morphism(V0, V1, self._rng),
            vector_space.random_morphism(V1, V2, self._rng),
        )
