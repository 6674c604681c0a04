"""Shared fixtures and independent oracles.

The oracles deliberately avoid the package's code paths: determinants
by Laplace expansion instead of Gaussian elimination, diagonal-pair
search by exhaustive enumeration instead of ratio propagation.
"""

from __future__ import annotations

import random
from itertools import product

import pytest

from gcirc import GF2m, GCirculantSpec, Matrix


@pytest.fixture(scope="session")
def ctx165():
    """GF(2^8) with modulus 1 + x^2 + x^5 + x^6 + x^8."""
    return GF2m(8, 0x165)


@pytest.fixture(scope="session")
def ctx11d():
    """GF(2^8) with modulus x^8 + x^4 + x^3 + x^2 + 1."""
    return GF2m(8, 0x11D)


@pytest.fixture(scope="session")
def gf16():
    """GF(2^4) with modulus x^4 + x + 1."""
    return GF2m(4, 0x13)


@pytest.fixture(scope="session")
def gf4():
    """GF(2^2) with modulus x^2 + x + 1."""
    return GF2m(2, 0x7)


def laplace_det(a: Matrix) -> int:
    """Determinant by first-row Laplace expansion (characteristic 2)."""
    k = a.rows
    if k == 1:
        return a[0, 0]
    ctx = a.ctx
    total = 0
    rest = list(range(1, k))
    for j in range(k):
        if a[0, j]:
            cols = [c for c in range(k) if c != j]
            total ^= ctx.mul(a[0, j], laplace_det(a.submatrix(rest, cols)))
    return total


def brute_force_sandwich_pairs(a: Matrix, b: Matrix) -> list[tuple[tuple, tuple]]:
    """Every (d1, d2) over nonzero diagonals with d1[i]*A[i,j]*d2[j] = B[i,j].

    Exponential in k; only for tiny matrices.
    """
    ctx, k = a.ctx, a.rows
    nonzero = range(1, ctx.q)
    out = []
    for d1 in product(nonzero, repeat=k):
        for d2 in product(nonzero, repeat=k):
            if all(
                ctx.mul(d1[i], ctx.mul(a[i, j], d2[j])) == b[i, j]
                for i in range(k)
                for j in range(k)
            ):
                out.append((d1, d2))
    return out


def random_row(rng: random.Random, ctx: GF2m, k: int, nonzero: bool = False) -> tuple[int, ...]:
    lo = 1 if nonzero else 0
    return tuple(rng.randrange(lo, ctx.q) for _ in range(k))


def random_spec(rng: random.Random, ctx: GF2m, k: int) -> GCirculantSpec:
    from math import gcd

    g = rng.choice([g for g in range(k) if gcd(g, k) == 1])
    return GCirculantSpec(ctx, k, g, random_row(rng, ctx, k))
