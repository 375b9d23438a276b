"""Exact linear algebra modulo a prime.

All routines work on numpy int64 arrays with entries reduced into [0, p).
Since p < 2^16, every intermediate product fits a 64-bit integer, so plain
integer matmul followed by a reduction is exact.
"""

from __future__ import annotations

import numpy as np


def asmod(a, p: int) -> np.ndarray:
    """Copy *a* into an int64 array reduced modulo p."""
    return np.asarray(a, dtype=np.int64) % p


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return (a @ b) % p


def matvec_mod(a: np.ndarray, v: np.ndarray, p: int) -> np.ndarray:
    return (a @ v) % p


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matpow_mod(a: np.ndarray, k: int, p: int) -> np.ndarray:
    """a^k mod p by binary exponentiation."""
    result = identity(a.shape[0])
    base = a % p
    while k:
        if k & 1:
            result = matmul_mod(result, base, p)
        base = matmul_mod(base, base, p)
        k >>= 1
    return result


def _eliminate(m: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of *m* modulo p.

    Returns the echelon matrix and the list of pivot column indices.
    """
    r = m.copy() % p
    n_rows, n_cols = r.shape
    pivots: list[int] = []
    row = 0
    for col in range(n_cols):
        if row == n_rows:
            break
        hit = -1
        for i in range(row, n_rows):
            if r[i, col]:
                hit = i
                break
        if hit < 0:
            continue
        if hit != row:
            r[[row, hit]] = r[[hit, row]]
        r[row] = (r[row] * pow(int(r[row, col]), -1, p)) % p
        for i in range(n_rows):
            if i != row and r[i, col]:
                r[i] = (r[i] - r[i, col] * r[row]) % p
        pivots.append(col)
        row += 1
    return r, pivots


def rank_mod(m: np.ndarray, p: int) -> int:
    """Rank of *m* over GF(p)."""
    if m.size == 0:
        return 0
    _, pivots = _eliminate(m, p)
    return len(pivots)


def solve_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray | None:
    """One solution x of a @ x = b mod p, or None if inconsistent.

    Free variables are set to zero.
    """
    n_rows, n_cols = a.shape
    aug = np.concatenate([a % p, (b % p).reshape(n_rows, 1)], axis=1)
    r, pivots = _eliminate(aug, p)
    if n_cols in pivots:
        return None
    x = np.zeros(n_cols, dtype=np.int64)
    for i, col in enumerate(pivots):
        x[col] = r[i, n_cols]
    return x


def inv_mod(a: np.ndarray, p: int) -> np.ndarray:
    """Inverse of a square matrix mod p; raises ValueError if singular."""
    n = a.shape[0]
    aug = np.concatenate([a % p, identity(n)], axis=1)
    r, pivots = _eliminate(aug, p)
    if len(pivots) < n or pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular mod %d" % p)
    return r[:, n:]


def nullspace_mod(m: np.ndarray, p: int) -> np.ndarray:
    """Basis of the right nullspace of *m*, as rows of the returned array."""
    n_rows, n_cols = m.shape
    r, pivots = _eliminate(m, p)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = np.zeros((len(free), n_cols), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = (-r[i, fc]) % p
    return basis


class DependenceTracker:
    """Detects the first linear dependence in a stream of vectors mod p.

    Vectors are fed one at a time; ``add`` returns None while the span keeps
    growing, and the combining coefficients (over all previously added
    vectors) as soon as a dependent vector arrives.
    """

    def __init__(self, p: int, dim: int, max_vectors: int):
        self.p = p
        self.dim = dim
        self.max_vectors = max_vectors
        self._rows: list[tuple[np.ndarray, np.ndarray, int]] = []
        self.count = 0

    def add(self, vec: np.ndarray) -> np.ndarray | None:
        p = self.p
        v = asmod(vec, p)
        expr = np.zeros(self.max_vectors, dtype=np.int64)
        expr[self.count] = 1
        for row, row_expr, lead in self._rows:
            if v[lead]:
                f = (v[lead] * pow(int(row[lead]), -1, p)) % p
                v = (v - f * row) % p
                expr = (expr - f * row_expr) % p
        self.count += 1
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            # v_new = -sum(expr[j] * v_j) for j < count-1, after moving the
            # unit coefficient of v_new to the other side.
            coeffs = (-expr[: self.count - 1]) % p
            return coeffs
        self._rows.append((v, expr, int(nz[0])))
        return None
