import hashlib
import logging
from collections.abc import Iterable, Sequence

import numpy as np

import diagram_lemmas.data_types as data_types
import diagram_lemmas.lattice as lattice


def _close(table: np.ndarray, elements: Iterable[int]) -> tuple[int, ...]:
    """Smallest subset containing ``elements`` and the identity that is closed under products."""
    current = np.unique(np.fromiter(elements, dtype=np.int64, count=-1))
    current = np.union1d(current, [0])
    while True:
        products = np.unique(table[np.ix_(current, current)])
        if len(products) == len(current):
            return tuple(int(x) for x in current)
        current = products


def _first_associativity_witness(table: np.ndarray) -> tuple[int, int, int] | None:
    n = table.shape[0]
    left = table[table, :]
    right = table[np.arange(n)[:, None, None], table[None, :, :]]
    bad = np.argwhere(left != right)
    if len(bad) == 0:
        return None
    a, b, c = (int(x) for x in bad[0])
    return a, b, c


class Cayley_Group(lattice.Structure_Object):
    """Finite group given by its multiplication table, identity at index 0.

    Subgroups are represented by sorted tuples of element indices. Equality
    and hashing go by the table alone: ``name`` and ``labels`` are display
    data, so two groups read under different names from the same table are
    the same object.
    """

    backend_tag = data_types.Backend_Tag.TABLE_GROUP

    def __init__(
        self,
        table: np.ndarray | Sequence[Sequence[int]],
        name: str = "",
        labels: Sequence[str] | None = None,
    ) -> None:
        table = np.array(table, dtype=np.int64)
        _validate_table(table)
        table.setflags(write=False)
        n = table.shape[0]
        digest = hashlib.sha1(table.tobytes()).hexdigest()[:16]
        super().__init__(f"T{n}:{digest}", name or f"G{n}")
        self._table = table
        inverse = np.argmax(table == 0, axis=1)
        inverse.setflags(write=False)
        self._inverse = inverse
        if labels is not None and len(labels) != n:
            raise data_types.Validation_Error(
                f"{len(labels)} labels given for a group of order {n}"
            )
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))

    @property
    def table(self) -> np.ndarray:
        return self._table

    @property
    def inverse(self) -> np.ndarray:
        return self._inverse

    @property
    def order(self) -> int:
        return self._table.shape[0]

    def multiply(self, a: int, b: int) -> int:
        return int(self._table[a, b])

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = int(self._table[x, a])
            k += 1
        return k

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self._table, self._table.T))

    def _make(self, elements: Iterable[int]) -> lattice.Subgroup:
        return lattice.Subgroup(self, tuple(sorted({int(x) for x in elements})))

    def subgroup(self, rep: Iterable[int]) -> lattice.Subgroup:
        elements = tuple(sorted({int(x) for x in rep}))
        if not elements or elements[0] != 0:
            raise data_types.Validation_Error(f"{elements} does not contain the identity")
        if elements[-1] >= self.order or elements[0] < 0:
            raise data_types.Validation_Error(f"{elements} out of range for {self.name}")
        products = self._table[np.ix_(elements, elements)]
        outside = np.argwhere(~np.isin(products, elements))
        if len(outside):
            i, j = outside[0]
            raise data_types.Validation_Error(
                f"{elements} is not closed in {self.name}",
                witness=(elements[i], elements[j]),
            )
        return lattice.Subgroup(self, elements)

    def generated_subgroup(self, seed: Iterable[int]) -> lattice.Subgroup:
        seed = [int(x) for x in seed]
        if any(x < 0 or x >= self.order for x in seed):
            raise data_types.Structural_Error(f"seed {seed} out of range for {self.name}")
        return lattice.Subgroup(self, _close(self._table, seed))

    def top(self) -> lattice.Subgroup:
        return lattice.Subgroup(self, tuple(range(self.order)))

    def bottom(self) -> lattice.Subgroup:
        return lattice.Subgroup(self, (0,))

    def subgroup_order(self, S: lattice.Subgroup) -> int:
        return len(S.rep)

    def contains(self, S: lattice.Subgroup, T: lattice.Subgroup) -> bool:
        self.check_member(S)
        self.check_member(T)
        return set(S.rep).issubset(T.rep)

    def join(self, S: lattice.Subgroup, T: lattice.Subgroup) -> lattice.Subgroup:
        self.check_member(S)
        self.check_member(T)
        return lattice.Subgroup(self, _close(self._table, S.rep + T.rep))

    def meet(self, S: lattice.Subgroup, T: lattice.Subgroup) -> lattice.Subgroup:
        self.check_member(S)
        self.check_member(T)
        return self._make(set(S.rep).intersection(T.rep))

    def _conjugates(self, S: lattice.Subgroup) -> np.ndarray:
        g = np.arange(self.order)[:, None]
        return self._table[self._table[g, np.array(S.rep)[None, :]], self._inverse[g]]

    def is_normal(self, S: lattice.Subgroup) -> bool:
        self.check_member(S)
        return bool(np.isin(self._conjugates(S), S.rep).all())

    def normal_closure(self, S: lattice.Subgroup) -> lattice.Subgroup:
        self.check_member(S)
        closure = S
        while not self.is_normal(closure):
            closure = lattice.Subgroup(
                self, _close(self._table, self._conjugates(closure).ravel())
            )
        return closure

    def _enumerate_subgroups(self) -> list[lattice.Subgroup]:
        found = {(0,)}
        frontier = [(0,)]
        while frontier:
            next_frontier = []
            for elements in frontier:
                members = set(elements)
                for x in range(self.order):
                    if x in members:
                        continue
                    bigger = _close(self._table, elements + (x,))
                    if bigger not in found:
                        found.add(bigger)
                        next_frontier.append(bigger)
            frontier = next_frontier
        return [
            lattice.Subgroup(self, rep) for rep in sorted(found, key=lambda r: (len(r), r))
        ]

    def restriction(self, S: lattice.Subgroup) -> "Cayley_Group":
        """The subgroup S as a group in its own right, elements in the order of S.rep."""
        self.check_member(S)
        index_of = np.full(self.order, -1, dtype=np.int64)
        index_of[list(S.rep)] = np.arange(len(S.rep))
        sub_table = index_of[self._table[np.ix_(S.rep, S.rep)]]
        return Cayley_Group(
            sub_table,
            name=f"{self.name}|{len(S.rep)}",
            labels=[self.labels[x] for x in S.rep],
        )

    def quotient_group(
        self, N: lattice.Subgroup
    ) -> tuple["Cayley_Group", "Element_Map_Morphism"]:
        """Coset group G/N with coset representatives of minimal element index."""
        self.check_member(N)
        if not self.is_normal(N):
            raise data_types.Precondition_Error(f"{N} is not normal in {self.name}")
        coset_of = np.full(self.order, -1, dtype=np.int64)
        representatives = []
        for g in range(self.order):
            if coset_of[g] < 0:
                coset_of[self._table[g, list(N.rep)]] = len(representatives)
                representatives.append(g)
        reps = np.array(representatives)
        quotient_table = coset_of[self._table[np.ix_(reps, reps)]]
        quotient = Cayley_Group(
            quotient_table,
            name=f"{self.name}/{len(N.rep)}",
            labels=[self.labels[g] for g in representatives],
        )
        logging.debug(f"{self.name} / {N.rep} has order {quotient.order}")
        return quotient, Element_Map_Morphism(self, quotient, coset_of, check=False)

    def _build_embedding(self, S: lattice.Subgroup) -> "Element_Map_Morphism":
        return Element_Map_Morphism(
            self.restriction(S), self, np.array(S.rep, dtype=np.int64), check=False
        )

    def _build_projection(self, S: lattice.Subgroup) -> "Element_Map_Morphism":
        return self.quotient_group(S)[1]

    def identity(self) -> "Element_Map_Morphism":
        return Element_Map_Morphism(self, self, np.arange(self.order), check=False)

    def zero_morphism(self, target: lattice.Structure_Object) -> "Element_Map_Morphism":
        return Element_Map_Morphism(
            self, target, np.zeros(self.order, dtype=np.int64), check=False
        )

    def trivial(self) -> "Cayley_Group":
        return trivial_group()

    def describe(self) -> str:
        return f"{self.name} (order {self.order})"


class Element_Map_Morphism(lattice.Morphism):
    """Homomorphism given by the image index of every source element."""

    def __init__(
        self,
        source: Cayley_Group,
        target: Cayley_Group,
        images: np.ndarray | Sequence[int],
        check: bool = True,
    ) -> None:
        super().__init__(source, target)
        images = np.array(images, dtype=np.int64)
        if check:
            _validate_homomorphism(source, target, images)
        images.setflags(write=False)
        self._images = images

    @property
    def images(self) -> np.ndarray:
        return self._images

    def __call__(self, x: int) -> int:
        return int(self._images[x])

    def direct_image(self, S: lattice.Subgroup) -> lattice.Subgroup:
        self._source.check_member(S)
        return self._target._make(self._images[list(S.rep)])

    def inverse_image(self, T: lattice.Subgroup) -> lattice.Subgroup:
        self._target.check_member(T)
        return self._source._make(np.flatnonzero(np.isin(self._images, T.rep)))

    def compose(self, other: lattice.Morphism) -> "Element_Map_Morphism":
        self.check_composable(other)
        return Element_Map_Morphism(
            other.source, self._target, self._images[other.images], check=False
        )

    def factor_through_embedding(self, embedding: lattice.Morphism) -> "Element_Map_Morphism":
        if embedding.target != self._target or not embedding.is_embedding():
            raise data_types.Structural_Error(
                f"{embedding!r} is not an embedding into {self._target.name}"
            )
        position = np.full(self._target.order, -1, dtype=np.int64)
        position[embedding.images] = np.arange(embedding.source.order)
        lifted = position[self._images]
        if (lifted < 0).any():
            raise data_types.Precondition_Error(
                f"image of {self!r} is not contained in the image of {embedding!r}"
            )
        return Element_Map_Morphism(self._source, embedding.source, lifted, check=False)

    def factor_through_projection(self, projection: lattice.Morphism) -> "Element_Map_Morphism":
        if projection.source != self._source or not projection.is_projection():
            raise data_types.Structural_Error(
                f"{projection!r} is not a projection out of {self._source.name}"
            )
        descended = np.zeros(projection.target.order, dtype=np.int64)
        descended[projection.images] = self._images
        if not np.array_equal(descended[projection.images], self._images):
            raise data_types.Precondition_Error(
                f"kernel of {projection!r} is not contained in the kernel of {self!r}"
            )
        return Element_Map_Morphism(projection.target, self._target, descended, check=False)

    def inverse(self) -> "Element_Map_Morphism | None":
        if self._source.order != self._target.order:
            return None
        if len(np.unique(self._images)) != self._source.order:
            return None
        inverse = np.empty(self._target.order, dtype=np.int64)
        inverse[self._images] = np.arange(self._source.order)
        return Element_Map_Morphism(self._target, self._source, inverse, check=False)

    def _same_rule(self, other: lattice.Morphism) -> bool:
        return isinstance(other, Element_Map_Morphism) and np.array_equal(
            self._images, other._images
        )

    def describe(self) -> str:
        return " ".join(str(int(x)) for x in self._images)


def _validate_table(table: np.ndarray) -> None:
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
        raise data_types.Validation_Error(f"table of shape {table.shape} is not square")
    n = table.shape[0]
    if table.min() < 0 or table.max() >= n:
        raise data_types.Validation_Error(f"table entries must lie in 0..{n - 1}")
    bad = np.flatnonzero(table[0] != np.arange(n))
    if len(bad) or not np.array_equal(table[:, 0], np.arange(n)):
        raise data_types.Validation_Error("index 0 is not a two-sided identity")
    missing = np.flatnonzero(~(table == 0).any(axis=1))
    if len(missing):
        raise data_types.Validation_Error(
            f"element {int(missing[0])} has no inverse", witness=(int(missing[0]),)
        )
    witness = _first_associativity_witness(table)
    if witness is not None:
        a, b, c = witness
        raise data_types.Validation_Error(
            f"table is not associative at ({a}, {b}, {c})", witness=witness
        )


def _validate_homomorphism(
    source: Cayley_Group, target: Cayley_Group, images: np.ndarray
) -> None:
    if images.shape != (source.order,):
        raise data_types.Validation_Error(
            f"{len(images)} images given for a source of order {source.order}"
        )
    if images.min() < 0 or images.max() >= target.order:
        raise data_types.Validation_Error(f"images must lie in 0..{target.order - 1}")
    left = images[source.table]
    right = target.table[images[:, None], images[None, :]]
    bad = np.argwhere(left != right)
    if len(bad):
        x, y = (int(v) for v in bad[0])
        raise data_types.Validation_Error(
            f"map {source.name} -> {target.name} is not a homomorphism at ({x}, {y})",
            witness=(x, y),
        )


def from_table(
    table: np.ndarray | Sequence[Sequence[int]],
    name: str = "",
    labels: Sequence[str] | None = None,
) -> Cayley_Group:
    """Validate a multiplication table, moving the identity to index 0 first."""
    table = np.array(table, dtype=np.int64)
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
        raise data_types.Validation_Error(f"table of shape {table.shape} is not square")
    n = table.shape[0]
    if table.min() < 0 or table.max() >= n:
        raise data_types.Validation_Error(f"table entries must lie in 0..{n - 1}")
    rows = np.flatnonzero((table == np.arange(n)[None, :]).all(axis=1))
    cols = np.flatnonzero((table == np.arange(n)[:, None]).all(axis=0))
    identities = np.intersect1d(rows, cols)
    if len(identities) == 0:
        raise data_types.Validation_Error("table has no two-sided identity")
    e = int(identities[0])
    if e != 0:
        relabel = np.arange(n)
        relabel[[0, e]] = relabel[[e, 0]]
        table = relabel[table[np.ix_(relabel, relabel)]]
        if labels is not None:
            labels = [labels[int(i)] for i in relabel]
    return Cayley_Group(table, name=name, labels=labels)


def generated_subgroup(G: Cayley_Group, seed: Iterable[int]) -> lattice.Subgroup:
    return G.generated_subgroup(seed)


def all_subgroups(G: Cayley_Group) -> tuple[lattice.Subgroup, ...]:
    return G.all_subgroups()


def normal_closure(G: Cayley_Group, S: lattice.Subgroup) -> lattice.Subgroup:
    return G.normal_closure(S)


def quotient_group(
    G: Cayley_Group, N: lattice.Subgroup
) -> tuple[Cayley_Group, Element_Map_Morphism]:
    return G.quotient_group(N)


_TRIVIAL = Cayley_Group([[0]], name="1", labels=["e"])


def trivial_group() -> Cayley_Group:
    return _TRIVIAL
