"""Dense Gaussian elimination over a FieldSpec.

Matrices are lists of rows of integer encodings.  Everything here is plain
Python; the matrices involved are at most a few dozen wide.
"""

from __future__ import annotations

from typing import Sequence

from .gf import FieldSpec

Matrix = list[list[int]]


def copy(M: Sequence[Sequence[int]]) -> Matrix:
    return [list(row) for row in M]


def matmul(F: FieldSpec, A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    cols = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [0] * cols
        for a, brow in zip(row, B):
            if a:
                for j, b in enumerate(brow):
                    if b:
                        acc[j] = F.add(acc[j], F.mul(a, b))
        out.append(acc)
    return out


def rref(F: FieldSpec, M: Sequence[Sequence[int]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the pivot column list."""
    R = copy(M)
    rows = len(R)
    cols = len(R[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if R[i][c]), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        scale = F.inv(R[r][c])
        R[r] = [F.mul(scale, x) for x in R[r]]
        for i in range(rows):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
    return R, pivots


def rank(F: FieldSpec, M: Sequence[Sequence[int]]) -> int:
    return len(rref(F, M)[1])


def det(F: FieldSpec, M: Sequence[Sequence[int]]) -> int:
    A = copy(M)
    n = len(A)
    result = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if A[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            result = F.neg(result)
        result = F.mul(result, A[c][c])
        inv_p = F.inv(A[c][c])
        for i in range(c + 1, n):
            if A[i][c]:
                f = F.mul(A[i][c], inv_p)
                A[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(A[i], A[c])]
    return result


def inverse(F: FieldSpec, M: Sequence[Sequence[int]]) -> Matrix:
    n = len(M)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(M)]
    R, pivots = rref(F, aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in R]
