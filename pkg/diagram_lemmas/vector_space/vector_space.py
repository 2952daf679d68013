import functools
import itertools
from collections.abc import Iterable, Sequence

import numpy as np

import diagram_lemmas.data_types as data_types
import diagram_lemmas.lattice as lattice

from .finite_field import (
    echelon_rows,
    inv_mod_mat,
    is_prime,
    nullspace_mod,
    rank_mod,
    solve_mod,
)


class Vector_Space(lattice.Structure_Object):
    """F_p^dim. Subspaces are represented by the nonzero rows of their RREF basis."""

    backend_tag = data_types.Backend_Tag.VECTOR_SPACE

    def __init__(self, p: int, dim: int) -> None:
        if not is_prime(p):
            raise data_types.Validation_Error(f"{p} is not prime")
        if dim < 0:
            raise data_types.Validation_Error(f"negative dimension {dim}")
        super().__init__(f"F{p}^{dim}")
        self.p = p
        self.dim = dim

    @property
    def order(self) -> int:
        return self.p**self.dim

    def basis(self, S: lattice.Subgroup) -> np.ndarray:
        self.check_member(S)
        return np.array(S.rep, dtype=np.int64).reshape(len(S.rep), self.dim)

    def span(self, rows: np.ndarray | Sequence[Sequence[int]]) -> lattice.Subgroup:
        rows = np.asarray(rows, dtype=np.int64)
        if self.dim == 0 or rows.size == 0:
            return self.bottom()
        return lattice.Subgroup(self, echelon_rows(rows.reshape(-1, self.dim), self.p))

    def subgroup(self, rep: Iterable[Sequence[int]]) -> lattice.Subgroup:
        rows = [tuple(int(x) for x in row) for row in rep]
        if any(len(row) != self.dim for row in rows):
            raise data_types.Validation_Error(f"basis rows must have length {self.dim}")
        if any(x < 0 or x >= self.p for row in rows for x in row):
            raise data_types.Validation_Error(f"basis entries must lie in 0..{self.p - 1}")
        return self.span(rows)

    def top(self) -> lattice.Subgroup:
        return self.span(np.eye(self.dim, dtype=np.int64))

    def bottom(self) -> lattice.Subgroup:
        return lattice.Subgroup(self, ())

    def subgroup_order(self, S: lattice.Subgroup) -> int:
        return self.p ** len(S.rep)

    def contains(self, S: lattice.Subgroup, T: lattice.Subgroup) -> bool:
        stacked = np.concatenate([self.basis(T), self.basis(S)])
        return rank_mod(stacked, self.p) == len(T.rep)

    def join(self, S: lattice.Subgroup, T: lattice.Subgroup) -> lattice.Subgroup:
        return self.span(np.concatenate([self.basis(S), self.basis(T)]))

    def meet(self, S: lattice.Subgroup, T: lattice.Subgroup) -> lattice.Subgroup:
        B_S, B_T = self.basis(S), self.basis(T)
        if len(B_S) == 0 or len(B_T) == 0:
            return self.bottom()
        # a.B_S = b.B_T  <=>  (a, b) in the nullspace of [B_S^T | -B_T^T]
        relations = nullspace_mod(np.concatenate([B_S.T, -B_T.T], axis=1), self.p)
        return self.span((relations[: len(B_S)].T @ B_S) % self.p)

    def is_normal(self, S: lattice.Subgroup) -> bool:
        self.check_member(S)
        return True

    def normal_closure(self, S: lattice.Subgroup) -> lattice.Subgroup:
        self.check_member(S)
        return S

    def _enumerate_subgroups(self) -> list[lattice.Subgroup]:
        found = []
        for k in range(self.dim + 1):
            for pivots in itertools.combinations(range(self.dim), k):
                slots = [
                    (row, col)
                    for row, pc in enumerate(pivots)
                    for col in range(pc + 1, self.dim)
                    if col not in pivots
                ]
                for values in itertools.product(range(self.p), repeat=len(slots)):
                    rows = np.zeros((k, self.dim), dtype=np.int64)
                    rows[list(range(k)), list(pivots)] = 1
                    for (row, col), value in zip(slots, values):
                        rows[row, col] = value
                    found.append(tuple(tuple(int(x) for x in row) for row in rows))
        return [lattice.Subgroup(self, rep) for rep in sorted(found, key=lambda r: (len(r), r))]

    def _build_embedding(self, S: lattice.Subgroup) -> "Matrix_Morphism":
        return Matrix_Morphism(vector_space(self.p, len(S.rep)), self, self.basis(S).T)

    def _build_projection(self, S: lattice.Subgroup) -> "Matrix_Morphism":
        B = self.basis(S)
        pivots = [int(np.flatnonzero(row)[0]) for row in B]
        complement = [c for c in range(self.dim) if c not in pivots]
        selector = np.zeros((len(pivots), self.dim), dtype=np.int64)
        selector[list(range(len(pivots))), pivots] = 1
        reduce = (np.eye(self.dim, dtype=np.int64) - B.T @ selector) % self.p
        return Matrix_Morphism(
            self, vector_space(self.p, len(complement)), reduce[complement]
        )

    def identity(self) -> "Matrix_Morphism":
        return Matrix_Morphism(self, self, np.eye(self.dim, dtype=np.int64))

    def zero_morphism(self, target: lattice.Structure_Object) -> "Matrix_Morphism":
        return Matrix_Morphism(self, target, np.zeros((target.dim, self.dim), dtype=np.int64))

    def trivial(self) -> "Vector_Space":
        return vector_space(self.p, 0)

    def describe(self) -> str:
        return f"F{self.p}^{self.dim}"


class Matrix_Morphism(lattice.Morphism):
    """Linear map given by a (target dim x source dim) matrix over F_p."""

    def __init__(
        self, source: Vector_Space, target: Vector_Space, matrix: np.ndarray | Sequence
    ) -> None:
        super().__init__(source, target)
        if source.p != target.p:
            raise data_types.Structural_Error(
                f"matrix between F{source.p} and F{target.p} spaces"
            )
        matrix = np.array(matrix, dtype=np.int64)
        if matrix.size == 0 and target.dim * source.dim == 0:
            matrix = matrix.reshape(target.dim, source.dim)
        if matrix.shape != (target.dim, source.dim):
            raise data_types.Structural_Error(
                f"matrix of shape {matrix.shape} for a map {source.name} -> {target.name}"
            )
        matrix = matrix % source.p
        matrix.setflags(write=False)
        self._matrix = matrix
        self.p = source.p

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    def direct_image(self, S: lattice.Subgroup) -> lattice.Subgroup:
        B = self._source.basis(S)
        return self._target.span((B @ self._matrix.T) % self.p)

    def inverse_image(self, T: lattice.Subgroup) -> lattice.Subgroup:
        annihilator = nullspace_mod(self._target.basis(T), self.p).T
        solutions = nullspace_mod((annihilator @ self._matrix) % self.p, self.p)
        return self._source.span(solutions.T)

    def compose(self, other: lattice.Morphism) -> "Matrix_Morphism":
        self.check_composable(other)
        return Matrix_Morphism(other.source, self._target, self._matrix @ other.matrix)

    def factor_through_embedding(self, embedding: lattice.Morphism) -> "Matrix_Morphism":
        if embedding.target != self._target or not embedding.is_embedding():
            raise data_types.Structural_Error(
                f"{embedding!r} is not an embedding into {self._target.name}"
            )
        try:
            lifted = solve_mod(embedding.matrix, self._matrix, self.p)
        except data_types.Precondition_Error:
            lifted = None
        if lifted is None or not np.array_equal(
            (embedding.matrix @ lifted) % self.p, self._matrix
        ):
            raise data_types.Precondition_Error(
                f"image of {self!r} is not contained in the image of {embedding!r}"
            )
        return Matrix_Morphism(self._source, embedding.source, lifted)

    def factor_through_projection(self, projection: lattice.Morphism) -> "Matrix_Morphism":
        if projection.source != self._source or not projection.is_projection():
            raise data_types.Structural_Error(
                f"{projection!r} is not a projection out of {self._source.name}"
            )
        try:
            descended = solve_mod(projection.matrix.T, self._matrix.T, self.p).T
        except data_types.Precondition_Error:
            descended = None
        if descended is None or not np.array_equal(
            (descended @ projection.matrix) % self.p, self._matrix
        ):
            raise data_types.Precondition_Error(
                f"kernel of {projection!r} is not contained in the kernel of {self!r}"
            )
        return Matrix_Morphism(projection.target, self._target, descended)

    def inverse(self) -> "Matrix_Morphism | None":
        if self._source.dim != self._target.dim:
            return None
        if rank_mod(self._matrix, self.p) != self._source.dim:
            return None
        return Matrix_Morphism(self._target, self._source, inv_mod_mat(self._matrix, self.p))

    def _same_rule(self, other: lattice.Morphism) -> bool:
        return isinstance(other, Matrix_Morphism) and np.array_equal(
            self._matrix, other._matrix
        )

    def describe(self) -> str:
        return "; ".join(" ".join(str(int(x)) for x in row) for row in self._matrix)


@functools.cache
def vector_space(p: int, dim: int) -> Vector_Space:
    return Vector_Space(p, dim)


def _check_ambient(S: lattice.Subgroup, T: lattice.Subgroup) -> Vector_Space:
    if S.parent != T.parent or not isinstance(S.parent, Vector_Space):
        raise data_types.Structural_Error(
            f"subspaces of different spaces: {S.parent.name} and {T.parent.name}"
        )
    return S.parent


def subspace_sum(S: lattice.Subgroup, T: lattice.Subgroup) -> lattice.Subgroup:
    return _check_ambient(S, T).join(S, T)


def subspace_intersection(S: lattice.Subgroup, T: lattice.Subgroup) -> lattice.Subgroup:
    return _check_ambient(S, T).meet(S, T)


def matrix_image(f: Matrix_Morphism) -> lattice.Subgroup:
    return f.image()


def matrix_preimage(f: Matrix_Morphism, T: lattice.Subgroup) -> lattice.Subgroup:
    if T.parent != f.target:
        raise data_types.Structural_Error(
            f"subspace of {T.parent.name} is not in the target {f.target.name}"
        )
    return f.inverse_image(T)


def random_subspace(space: Vector_Space, rng: np.random.Generator) -> lattice.Subgroup:
    rows = int(rng.integers(0, space.dim + 1))
    return space.span(rng.integers(0, space.p, size=(rows, space.dim)))


def random_morphism(
    source: Vector_Space, target: Vector_Space, rng: np.random.Generator
) -> Matrix_Morphism:
    return Matrix_Morphism(
        source, target, rng.integers(0, source.p, size=(target.dim, source.dim))
    )


def random_automorphism(space: Vector_Space, rng: np.random.Generator) -> Matrix_Morphism:
    while True:
        matrix = rng.integers(0, space.p, size=(space.dim, space.dim))
        if rank_mod(matrix, space.p) == space.dim:
            return Matrix_Morphism(space, space, matrix)


def direct_sum(V: Vector_Space, W: Vector_Space) -> Vector_Space:
    """V ⊕ W with the coordinates of V first."""
    if V.p != W.p:
        raise data_types.Structural_Error(f"direct sum of {V.name} and {W.name}")
    return vector_space(V.p, V.dim + W.dim)


def block_morphism(f: Matrix_Morphism, g: Matrix_Morphism) -> Matrix_Morphism:
    """f ⊕ g as a block diagonal matrix."""
    source = direct_sum(f.source, g.source)
    target = direct_sum(f.target, g.target)
    matrix = np.zeros((target.dim, source.dim), dtype=np.int64)
    matrix[: f.target.dim, : f.source.dim] = f.matrix
    matrix[f.target.dim :, f.source.dim :] = g.matrix
    return Matrix_Morphism(source, target, matrix)
