"""Gaussian elimination over GF(2) with Python ints as row bitsets.

Pivots are always taken at the lowest free column, from the first remaining
row that has it, so every result here is a deterministic function of the
input row order.
"""

from __future__ import annotations


def rref(rows: list[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form; returns ``(nonzero rows, pivot columns)``."""
    work = [r for r in rows]
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        bit = 1 << col
        pivot = next((r for r in range(top, len(work)) if work[r] & bit), None)
        if pivot is None:
            continue
        work[top], work[pivot] = work[pivot], work[top]
        for r in range(len(work)):
            if r != top and work[r] & bit:
                work[r] ^= work[top]
        pivots.append(col)
        top += 1
        if top == len(work):
            break
    return work[:top], pivots


def rank(rows: list[int], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def solve(rows: list[int], rhs: list[int], ncols: int) -> int | None:
    """A solution ``x`` (bitset over columns) of ``A x = b``, free variables 0; ``None`` if inconsistent."""
    aug = [r | (b << ncols) for r, b in zip(rows, rhs)]
    reduced, pivots = rref(aug, ncols + 1)
    x = 0
    for row, col in zip(reduced, pivots):
        if col == ncols:
            return None
        if row >> ncols & 1:
            x |= 1 << col
    return x


def left_null_space(rows: list[int], ncols: int) -> list[int]:
    """Basis of ``{y : y^T A = 0}``, each ``y`` a bitset over row indices, in RREF."""
    k = len(rows)
    # carry the combination history of each row in the bits above ncols;
    # after elimination the rows with an empty left block span the null space
    aug = [r | (1 << (ncols + i)) for i, r in enumerate(rows)]
    full, _ = rref(aug, ncols + k)
    low = (1 << ncols) - 1
    basis = [r >> ncols for r in full if not r & low]
    basis, _ = rref(basis, k)
    return basis


def dot(a: int, b: int) -> int:
    return (a & b).bit_count() & 1


def bits_of(x: int) -> list[int]:
    out = []
    i = 0
    while x:
        if x & 1:
            out.append(i)
        x >>= 1
        i += 1
    return out
