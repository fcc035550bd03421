"""Exact matrix rank over Q (fraction-free) and over prime fields."""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

import gmpy2
import numpy as np

# three 31-bit primes for the modular oracle
PRIMES = (2147483647, 2147483629, 2147483587)


def _integer_rows(M: Sequence[Sequence]) -> list[list]:
    rows = []
    for row in M:
        den = 1
        for x in row:
            if isinstance(x, Fraction) and x.denominator != 1:
                den = lcm(den, x.denominator)
        rows.append([gmpy2.mpz(int(x * den)) for x in row])
    return rows


def rank_exact(M: Sequence[Sequence[int | Fraction]]) -> int:
    """Rank over the rationals by Bareiss fraction-free elimination.

    Rational rows are first scaled to integers; every division in the
    elimination is exact.
    """
    A = _integer_rows(M)
    n = len(A)
    if n == 0:
        return 0
    m = len(A[0])
    r = 0
    prev = gmpy2.mpz(1)
    for c in range(m):
        piv = next((i for i in range(r, n) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        top = A[r]
        p = top[c]
        for i in range(r + 1, n):
            row = A[i]
            a = row[c]
            if a:
                row[c + 1:] = [(x * p - a * y) // prev for x, y in zip(row[c + 1:], top[c + 1:])]
            elif p != prev:
                row[c + 1:] = [x * p // prev for x in row[c + 1:]]
            row[c] = 0
        prev = p
        r += 1
        if r == n:
            break
    return r


def rank_mod_p(M: Sequence[Sequence[int | Fraction]], p: int) -> int:
    """Rank of M reduced mod a prime p < 2**31 (Gaussian elimination in int64).

    Rational entries must have denominators prime to p.
    """
    if not M or not len(M[0]):
        return 0
    A = np.array([[_mod(x, p) for x in row] for row in M], dtype=np.int64)
    n, m = A.shape
    r = 0
    for c in range(m):
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r] = (A[r] * inv) % p
        below = A[r + 1:, c].copy()
        mask = below != 0
        if mask.any():
            A[r + 1:][mask] = (A[r + 1:][mask] - np.outer(below[mask], A[r]) % p) % p
        r += 1
        if r == n:
            break
    return r


def _mod(x, p: int) -> int:
    if isinstance(x, Fraction):
        return x.numerator * pow(x.denominator, -1, p) % p
    return int(x) % p


def rank_modular_oracle(M, primes: Sequence[int] = PRIMES) -> int:
    """Largest rank over the given prime fields; a lower bound for the rank over Q."""
    return max(rank_mod_p(M, p) for p in primes)
