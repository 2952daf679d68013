import logging

import numpy as np

import diagram_lemmas.lattice as lattice
import diagram_lemmas.table_group as table_group
import diagram_lemmas.vector_space as vector_space

from .law_strategy import Law_Fixture


def table_fixture(max_order: int = 8) -> Law_Fixture:
    """Catalogue groups up to ``max_order`` with every homomorphism between them."""
    groups = table_group.small_groups(max_order)
    morphisms = [
        f
        for G in groups
        for H in groups
        for f in table_group.enumerate_homomorphisms(G, H)
    ]
    logging.info(
        f"Table fixture: {len(groups)} groups, {len(morphisms)} homomorphisms"
    )
    return Law_Fixture(name=f"table<={max_order}", objects=groups, morphisms=morphisms)


def _sampled_lattice(
    space: vector_space.Vector_Space, size: int, rng: np.random.Generator
) -> tuple[lattice.Subgroup, ...]:
    sample = [space.bottom(), space.top()]
    for _ in range(size):
        S = vector_space.random_subspace(space, rng)
        if S not in sample:
            sample.append(S)
    return tuple(sample)


def _subspace_pool(
    space: vector_space.Vector_Space,
    size: int,
    start: tuple[lattice.Subgroup, ...],
    rng: np.random.Generator,
) -> tuple[lattice.Subgroup, ...]:
    """At least ``start``, grown by random subspaces up to ``size`` distinct ones or the draw limit."""
    pool = dict.fromkeys(start)
    for _ in range(6 * size):
        if len(pool) >= size:
            break
        pool.setdefault(vector_space.random_subspace(space, rng))
    return tuple(pool)


def vector_fixture(
    chains: int,
    primes: list[int],
    max_dim: int,
    seed: int,
    lattice_size: int = 8,
    pool_size: int = 0,
    name: str = "vector",
) -> Law_Fixture:
    """Random chains U -> V -> W of linear maps plus a second map parallel to the first.

    Every space F_p^d with p in ``primes`` and d <= ``max_dim`` is an object.
    Spaces of dimension at most 2 keep their full lattice, larger ones get a
    random sample of ``lattice_size`` subspaces besides top and bottom and,
    when ``pool_size`` is set, a pool of up to that many distinct subspaces.
    """
    rng = np.random.default_rng(seed)
    objects: list[vector_space.Vector_Space] = []
    morphisms: list[lattice.Morphism] = []
    for _ in range(chains):
        p = int(rng.choice(primes))
        U, V, W = (
            vector_space.vector_space(p, int(d)) for d in rng.integers(0, max_dim + 1, size=3)
        )
        f = vector_space.random_morphism(U, V, rng)
        g = vector_space.random_morphism(V, W, rng)
        morphisms.extend([f, g, vector_space.random_morphism(U, V, rng), g.compose(f)])
        for space in (U, V, W):
            if space not in objects:
                objects.append(space)
    for p in primes:
        for d in range(max_dim + 1):
            space = vector_space.vector_space(p, d)
            if space not in objects:
                objects.append(space)
    lattices = {
        space: _sampled_lattice(space, lattice_size, rng)
        for space in objects
        if space.dim > 2
    }
    pools = (
        {space: _subspace_pool(space, pool_size, L, rng) for space, L in lattices.items()}
        if pool_size > 0
        else {}
    )
    logging.info(
        f"Vector fixture: {len(objects)} spaces, {len(morphisms)} linear maps, "
        f"{sum(len(pool) for pool in pools.values())} pooled subspaces"
    )
    return Law_Fixture(
        name=name, objects=objects, morphisms=morphisms, lattices=lattices, pools=pools
    )


def oracle_fixture(maps: int, seed: int, lattice_size: int = 4) -> Law_Fixture:
    """Random maps between F_2 and F_3 spaces of dimension at most 3, small lattice samples."""
    rng = np.random.default_rng(seed)
    objects: list[vector_space.Vector_Space] = []
    morphisms: list[lattice.Morphism] = []
    for _ in range(maps):
        p = int(rng.choice([2, 3]))
        U, V = (vector_space.vector_space(p, int(d)) for d in rng.integers(0, 4, size=2))
        morphisms.append(vector_space.random_morphism(U, V, rng))
        for space in (U, V):
            if space not in objects:
                objects.append(space)
    lattices = {space: _sampled_lattice(space, lattice_size, rng) for space in objects}
    return Law_Fixture(name="oracle", objects=objects, morphisms=morphisms, lattices=lattices)
