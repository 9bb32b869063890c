"""Exact rational vectors and matrices.

Vectors are tuples of ``fractions.Fraction``; matrices are tuples of such
rows.  Everything here is pure and exact: no float ever enters or leaves.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

RatVec = tuple[Fraction, ...]
RatMat = tuple[RatVec, ...]

F0 = Fraction(0)
F1 = Fraction(1)


def vec(values: Iterable) -> RatVec:
    return tuple(Fraction(x) for x in values)


def mat(rows: Iterable[Iterable]) -> RatMat:
    out = tuple(vec(r) for r in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("matrix rows have inconsistent lengths")
    return out


def zero_vec(n: int) -> RatVec:
    return (F0,) * n


def is_zero(v: Sequence[Fraction]) -> bool:
    return not any(v)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), F0)


def add(u: Sequence[Fraction], v: Sequence[Fraction]) -> RatVec:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> RatVec:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def neg(v: Sequence[Fraction]) -> RatVec:
    return tuple(-a for a in v)


def scale(v: Sequence[Fraction], c: Fraction) -> RatVec:
    return tuple(c * a for a in v)


def matvec(m: RatMat, v: Sequence[Fraction]) -> RatVec:
    return tuple(dot(row, v) for row in m)


def matmul(a: RatMat, b: RatMat) -> RatMat:
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def transpose(m: RatMat) -> RatMat:
    return tuple(zip(*m)) if m else ()


def identity(n: int) -> RatMat:
    return tuple(tuple(F1 if i == j else F0 for j in range(n)) for i in range(n))


def primitive(v: Sequence[Fraction]) -> RatVec:
    """Scale v by the unique positive rational making it integral with content 1."""
    if is_zero(v):
        return tuple(F0 for _ in v)
    den = lcm(*(x.denominator for x in v))
    ints = [x.numerator * (den // x.denominator) for x in v]
    g = gcd(*ints)
    return tuple(Fraction(i // g) for i in ints)


def rref(rows: Iterable[Sequence[Fraction]]) -> tuple[RatMat, tuple[int, ...]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    work = [list(vec(r)) for r in rows]
    if not work:
        return (), ()
    ncols = len(work[0])
    pivots: list[int] = []
    rank_so_far = 0
    for col in range(ncols):
        pivot_row = next(
            (i for i in range(rank_so_far, len(work)) if work[i][col]), None
        )
        if pivot_row is None:
            continue
        work[rank_so_far], work[pivot_row] = work[pivot_row], work[rank_so_far]
        prow = work[rank_so_far]
        inv = 1 / prow[col]
        work[rank_so_far] = prow = [x * inv for x in prow]
        for i, row in enumerate(work):
            if i != rank_so_far and row[col]:
                f = row[col]
                work[i] = [x - f * p for x, p in zip(row, prow)]
        pivots.append(col)
        rank_so_far += 1
        if rank_so_far == len(work):
            break
    return tuple(tuple(r) for r in work[: len(pivots)]), tuple(pivots)


def rank(rows: Iterable[Sequence[Fraction]]) -> int:
    return len(rref(rows)[0])


def kernel_basis(rows: Iterable[Sequence[Fraction]], n: int) -> RatMat:
    """Canonical basis of the right kernel {x : r . x = 0 for all rows r}."""
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        v = [F0] * n
        v[free] = F1
        for row, p in zip(reduced, pivots):
            v[p] = -row[free]
        basis.append(tuple(v))
    return tuple(basis)


def invert(m: RatMat) -> RatMat | None:
    """Exact inverse of a square matrix, or None if singular."""
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("matrix is not square")
    aug = [list(row) + [F1 if i == j else F0 for j in range(n)] for i, row in enumerate(m)]
    reduced, pivots = rref(aug)
    if pivots != tuple(range(n)):
        return None
    return tuple(tuple(row[n:]) for row in reduced)


def subspace_basis(vectors: Iterable[Sequence[Fraction]]) -> RatMat:
    """Canonical basis of the span: primitive rows of the reduced echelon form."""
    reduced, _ = rref(vectors)
    return tuple(primitive(r) for r in reduced)


def reduce_mod_subspace(v: Sequence[Fraction], basis: RatMat) -> RatVec:
    """Unique coset representative of v modulo span(basis), zeroed at the pivots.

    ``basis`` must come from :func:`subspace_basis` (echelon rows).
    """
    out = vec(v)
    for row in basis:
        p = next(i for i, x in enumerate(row) if x)
        if out[p]:
            out = sub(out, scale(row, out[p] / row[p]))
    return out
