import logging
import threading
from abc import ABC, abstractmethod
from collections.abc import Hashable

from pydantic import BaseModel, ConfigDict

import diagram_lemmas.data_types as data_types


class Subgroup:
    """A member of the subgroup lattice of ``parent``.

    ``rep`` is the backend's canonical representation, so equality of two
    subgroups of the same parent is equality of their reps.
    """

    __slots__ = ("_parent", "_rep")

    def __init__(self, parent: "Structure_Object", rep: Hashable) -> None:
        self._parent = parent
        self._rep = rep

    @property
    def parent(self) -> "Structure_Object":
        return self._parent

    @property
    def rep(self) -> Hashable:
        return self._rep

    @property
    def order(self) -> int:
        return self._parent.subgroup_order(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self._parent == other._parent and self._rep == other._rep

    def __hash__(self) -> int:
        return hash((self._parent, self._rep))

    def __le__(self, other: "Subgroup") -> bool:
        return self._parent.contains(self, other)

    def __ge__(self, other: "Subgroup") -> bool:
        return other._parent.contains(other, self)

    def __repr__(self) -> str:
        return f"Subgroup({self._parent.name}, {self._rep})"


class Structure_Object(ABC):
    """A "group" of the self-dual context: an object with a bounded subgroup lattice.

    Equality is by backend tag and carrier id. Lattices, embeddings and
    projections are memoised; the memo tables are filled under a lock so the
    objects can be shared between worker threads.
    """

    backend_tag: data_types.Backend_Tag

    def __init__(self, carrier_id: str, name: str = "") -> None:
        self._carrier_id = carrier_id
        self.name = name or carrier_id
        self._lattice: tuple[Subgroup, ...] | None = None
        self._lock = threading.Lock()
        self._embeddings: dict[Hashable, Morphism] = {}
        self._projections: dict[Hashable, Morphism] = {}

    @property
    def carrier_id(self) -> str:
        return self._carrier_id

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Structure_Object):
            return NotImplemented
        return (
            self.backend_tag == other.backend_tag
            and self._carrier_id == other._carrier_id
        )

    def __hash__(self) -> int:
        return hash((self.backend_tag, self._carrier_id))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name})"

    @property
    @abstractmethod
    def order(self) -> int: ...

    @abstractmethod
    def subgroup(self, rep: Hashable) -> Subgroup:
        """Build a subgroup from a raw representation, checking closure."""

    @abstractmethod
    def top(self) -> Subgroup: ...

    @abstractmethod
    def bottom(self) -> Subgroup: ...

    @abstractmethod
    def subgroup_order(self, S: Subgroup) -> int: ...

    @abstractmethod
    def contains(self, S: Subgroup, T: Subgroup) -> bool:
        """Return whether S ⊆ T."""

    @abstractmethod
    def join(self, S: Subgroup, T: Subgroup) -> Subgroup: ...

    @abstractmethod
    def meet(self, S: Subgroup, T: Subgroup) -> Subgroup: ...

    @abstractmethod
    def is_normal(self, S: Subgroup) -> bool: ...

    def is_conormal(self, S: Subgroup) -> bool:
        # every subgroup of a concrete backend is the image of its inclusion
        self.check_member(S)
        return True

    @abstractmethod
    def normal_closure(self, S: Subgroup) -> Subgroup: ...

    @abstractmethod
    def identity(self) -> "Morphism": ...

    @abstractmethod
    def zero_morphism(self, target: "Structure_Object") -> "Morphism": ...

    @abstractmethod
    def trivial(self) -> "Structure_Object": ...

    @abstractmethod
    def _enumerate_subgroups(self) -> list[Subgroup]: ...

    @abstractmethod
    def _build_embedding(self, S: Subgroup) -> "Morphism": ...

    @abstractmethod
    def _build_projection(self, S: Subgroup) -> "Morphism": ...

    def is_trivial(self) -> bool:
        return self.order == 1

    def check_member(self, S: Subgroup) -> None:
        if S.parent != self:
            raise data_types.Structural_Error(
                f"subgroup of {S.parent.name} used as a subgroup of {self.name}"
            )

    def all_subgroups(self) -> tuple[Subgroup, ...]:
        if self._lattice is None:
            with self._lock:
                if self._lattice is None:
                    self._lattice = tuple(self._enumerate_subgroups())
                    logging.debug(
                        f"{self.name}: lattice of {len(self._lattice)} subgroups"
                    )
        return self._lattice

    def embedding_of(self, S: Subgroup) -> "Morphism":
        self.check_member(S)
        if not self.is_conormal(S):
            raise data_types.Precondition_Error(
                f"{S} is not conormal in {self.name}: no embedding"
            )
        if S.rep not in self._embeddings:
            embedding = self._build_embedding(S)
            with self._lock:
                self._embeddings.setdefault(S.rep, embedding)
        return self._embeddings[S.rep]

    def projection_by(self, S: Subgroup) -> "Morphism":
        self.check_member(S)
        if not self.is_normal(S):
            raise data_types.Precondition_Error(
                f"{S} is not normal in {self.name}: no projection"
            )
        if S.rep not in self._projections:
            projection = self._build_projection(S)
            with self._lock:
                self._projections.setdefault(S.rep, projection)
        return self._projections[S.rep]


class Morphism(ABC):
    """A morphism together with its Galois connection (direct ⊣ inverse image)."""

    def __init__(self, source: Structure_Object, target: Structure_Object) -> None:
        if source.backend_tag != target.backend_tag:
            raise data_types.Structural_Error(
                f"morphism between backends {source.backend_tag} and {target.backend_tag}"
            )
        self._source = source
        self._target = target

    @property
    def source(self) -> Structure_Object:
        return self._source

    @property
    def target(self) -> Structure_Object:
        return self._target

    @abstractmethod
    def direct_image(self, S: Subgroup) -> Subgroup: ...

    @abstractmethod
    def inverse_image(self, T: Subgroup) -> Subgroup: ...

    @abstractmethod
    def compose(self, other: "Morphism") -> "Morphism":
        """Return ``self ∘ other``."""

    @abstractmethod
    def factor_through_embedding(self, embedding: "Morphism") -> "Morphism":
        """Return the unique u with ``embedding ∘ u == self``."""

    @abstractmethod
    def factor_through_projection(self, projection: "Morphism") -> "Morphism":
        """Return the unique v with ``v ∘ projection == self``."""

    @abstractmethod
    def inverse(self) -> "Morphism | None": ...

    @abstractmethod
    def _same_rule(self, other: "Morphism") -> bool: ...

    @abstractmethod
    def describe(self) -> str: ...

    def image(self) -> Subgroup:
        return self.direct_image(self._source.top())

    def kernel(self) -> Subgroup:
        return self.inverse_image(self._target.bottom())

    def is_zero(self) -> bool:
        return self.image() == self._target.bottom()

    def is_embedding(self) -> bool:
        return self.kernel() == self._source.bottom()

    def is_projection(self) -> bool:
        return self.image() == self._target.top()

    def is_isomorphism(self) -> bool:
        return self.is_embedding() and self.is_projection()

    def check_composable(self, other: "Morphism") -> None:
        if other.target != self._source:
            raise data_types.Structural_Error(
                f"cannot compose {self._source.name}->{self._target.name} after "
                f"{other.source.name}->{other.target.name}"
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        return (
            self._source == other._source
            and self._target == other._target
            and self._same_rule(other)
        )

    def __hash__(self) -> int:
        return hash((self._source, self._target))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self._source.name} -> {self._target.name})"


class Factorization_Triple(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    projection: Morphism
    middle: Morphism
    embedding: Morphism

    def composite(self) -> Morphism:
        return self.embedding.compose(self.middle.compose(self.projection))
