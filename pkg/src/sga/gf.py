"""Exact linear algebra over GF(p) for an odd prime p.

Matrices are numpy int64 arrays with entries reduced mod p; elimination is
vectorized row arithmetic, so everything stays exact.
"""

from __future__ import annotations

import numpy as np

from .errors import SgaError


def check_prime(p: int) -> None:
    if p == 2:
        raise SgaError("characteristic 2 is not supported")
    if p < 3 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise SgaError(f"field size must be an odd prime, got {p}")


def mat(rows, p: int) -> np.ndarray:
    return np.array(rows, dtype=np.int64) % p


def eye(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def zeros(r: int, c: int) -> np.ndarray:
    return np.zeros((r, c), dtype=np.int64)


def mul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return (a @ b) % p


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = a.copy() % p
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        pr = nz[0] + r
        if pr != r:
            m[[r, pr]] = m[[pr, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
        other = np.nonzero(m[:, c])[0]
        for rr in other:
            if rr != r:
                m[rr] = (m[rr] - m[rr, c] * m[r]) % p
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a: np.ndarray, p: int) -> int:
    if a.size == 0:
        return 0
    return len(rref(a, p)[1])


def nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Basis of the right nullspace as rows of the returned matrix."""
    rows, cols = a.shape
    if cols == 0:
        return zeros(0, 0)
    if rows == 0:
        return eye(cols)
    r, pivots = rref(a, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = zeros(len(free), cols)
    for k, c in enumerate(free):
        basis[k, c] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = (-r[i, c]) % p
    return basis


def inv(a: np.ndarray, p: int) -> np.ndarray:
    n = a.shape[0]
    aug = np.concatenate([a % p, eye(n)], axis=1)
    r, pivots = rref(aug, p)
    if pivots[:n] != list(range(n)):
        raise SgaError("matrix is singular")
    return r[:, n:]


def kron(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return np.kron(a, b) % p


def jordan_block(m: int, t: int, p: int) -> np.ndarray:
    """Lower-triangular Jordan block (ones below the diagonal), the
    convention under which the binomial involution conjugates J to J^-1."""
    j = (np.eye(m, dtype=np.int64) * (t % p)) % p
    for i in range(m - 1):
        j[i + 1, i] = 1
    return j


def is_invertible(a: np.ndarray, p: int) -> bool:
    return a.shape[0] == a.shape[1] and rank(a, p) == a.shape[0]
