import numpy as np
from sympy import isprime

import diagram_lemmas.data_types as data_types


def is_prime(p: int) -> bool:
    return bool(isprime(p))


def mod_p(A: np.ndarray, p: int) -> np.ndarray:
    return np.asarray(A, dtype=np.int64) % p


def inv_mod_scalar(a: int | np.integer, p: int) -> int:
    return pow(int(a) % p, p - 2, p)


def rref_mod(A: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(p). Returns (R, pivot_cols)."""
    R = mod_p(np.array(A, dtype=np.int64), p)
    m, n = R.shape
    r = 0
    pivots: list[int] = []
    for c in range(n):
        if r == m:
            break
        nonzero = np.flatnonzero(R[r:, c])
        if len(nonzero) == 0:
            continue
        piv = r + int(nonzero[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        R[r] = (R[r] * inv_mod_scalar(R[r, c], p)) % p
        factors = R[:, c].copy()
        factors[r] = 0
        R = (R - np.outer(factors, R[r])) % p
        pivots.append(c)
        r += 1
    return R, pivots


def echelon_rows(A: np.ndarray, p: int) -> tuple[tuple[int, ...], ...]:
    """Canonical representation of the row space: the nonzero rows of the RREF."""
    A = np.asarray(A, dtype=np.int64)
    if A.size == 0:
        return ()
    R, pivots = rref_mod(A, p)
    return tuple(tuple(int(x) for x in row) for row in R[: len(pivots)])


def rank_mod(A: np.ndarray, p: int) -> int:
    A = np.asarray(A, dtype=np.int64)
    if A.size == 0:
        return 0
    return len(rref_mod(A, p)[1])


def nullspace_mod(A: np.ndarray, p: int) -> np.ndarray:
    """Right nullspace of A over GF(p); the columns of the result form a basis."""
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    R, pivots = rref_mod(A, p)
    free = [j for j in range(n) if j not in pivots]
    basis = np.zeros((n, len(free)), dtype=np.int64)
    for k, f in enumerate(free):
        basis[f, k] = 1
        for row, pc in enumerate(pivots):
            basis[pc, k] = (-R[row, f]) % p
    return basis


def solve_mod(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    """One solution X of A X = B over GF(p), free variables set to zero."""
    A = mod_p(A, p)
    B = mod_p(B, p)
    m, k = A.shape
    if m == 0:
        return np.zeros((k, B.shape[1]), dtype=np.int64)
    R, pivots = rref_mod(np.concatenate([A, B], axis=1), p)
    lhs_pivots = [c for c in pivots if c < k]
    if len(lhs_pivots) != len(pivots):
        raise data_types.Precondition_Error("linear system over GF(p) has no solution")
    X = np.zeros((k, B.shape[1]), dtype=np.int64)
    for row, pc in enumerate(lhs_pivots):
        X[pc] = R[row, k:]
    return X


def inv_mod_mat(A: np.ndarray, p: int) -> np.ndarray:
    """Gauss-Jordan inverse over GF(p). Raises if singular."""
    n = A.shape[0]
    if n == 0:
        return np.zeros((0, 0), dtype=np.int64)
    R, _ = rref_mod(np.concatenate([mod_p(A, p), np.eye(n, dtype=np.int64)], axis=1), p)
    if not np.array_equal(R[:, :n], np.eye(n, dtype=np.int64)):
        raise data_types.Precondition_Error("matrix is not invertible mod p")
    return R[:, n:]
