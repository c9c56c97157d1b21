"""The polar transform: bit reversal, butterfly encoding, and the row/monomial map.

The transform matrix is the bit-reversal permutation times the m-th Kronecker
power of [[1,0],[1,1]]; it is an involution over GF(2).  Encoding never
materializes the matrix: it permutes the input and runs in-place butterfly
stages in O(n log n).
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .monomials import Monomial

MATRIX_GUARD_M = 12


def bit_reversal_permutation(m: int) -> list[int]:
    """Permutation sending i to the integer with i's m-bit expansion reversed."""

    if m < 0:
        raise ValueError("m must be non-negative")
    perm = []
    for i in range(1 << m):
        r = 0
        for b in range(m):
            r |= (i >> b & 1) << (m - 1 - b)
        perm.append(r)
    return perm


def encode(u: Sequence[int], m: int) -> list[int]:
    """Multiply u by the polar transform over GF(2) via butterfly stages."""

    n = 1 << m
    if len(u) != n:
        raise ValueError(f"input length {len(u)} does not match block length {n}")
    perm = bit_reversal_permutation(m)
    v = [u[perm[j]] & 1 for j in range(n)]
    d = n >> 1
    while d:
        for start in range(0, n, 2 * d):
            for j in range(start, start + d):
                v[j] ^= v[j + d]
        d >>= 1
    return v


def generator_matrix(m: int) -> np.ndarray:
    """The full 2^m x 2^m transform matrix (test and oracle use only)."""

    if m < 0:
        raise ValueError("m must be non-negative")
    if m > MATRIX_GUARD_M:
        raise ValueError(f"refusing to materialize the matrix for m={m} > {MATRIX_GUARD_M}")
    k2 = np.array([[1, 0], [1, 1]], dtype=np.uint8)
    kron = np.array([[1]], dtype=np.uint8)
    for _ in range(m):
        kron = np.kron(k2, kron)
    perm = bit_reversal_permutation(m)
    return kron[perm, :]


def index_to_monomial(i: int, m: int) -> Monomial:
    """Monomial whose evaluation vector is row i of the transform matrix.

    The variable set is exactly the zero bits of i: row 2^m - 1 is the
    constant monomial 1 (the all-ones row), row 0 is the full product.
    """

    return Monomial.from_row_index(i, m)


def monomial_to_index(f: Monomial, m: int | None = None) -> int:
    """Row index of f's evaluation vector; inverse of index_to_monomial."""

    if m is not None and m != f.m:
        raise ValueError("ambient variable count mismatch")
    return f.row_index
