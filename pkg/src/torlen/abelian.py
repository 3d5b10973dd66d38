"""Exact integer Smith normal form and abelian invariants.

Everything runs over Python's arbitrary-precision ints; entries like
3 * 2**n arise quickly in the constructions and must not overflow.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class AbelianInvariants:
    """Invariant factors d_1 | d_2 | ... (each >= 2) plus free rank."""

    torsion_coefficients: tuple[int, ...]
    free_rank: int

    def __post_init__(self):
        coeffs = self.torsion_coefficients
        if any(d < 2 for d in coeffs):
            raise ValueError("torsion coefficients must be >= 2")
        if any(coeffs[i + 1] % coeffs[i] for i in range(len(coeffs) - 1)):
            raise ValueError("torsion coefficients must form a divisibility chain")
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")


def smith_normal_form(matrix: list[list[int]]) -> list[int]:
    """Diagonal of the Smith normal form of an integer matrix.

    Returns the list of diagonal entries d_1 | d_2 | ... (non-negative,
    zeros trailing), of length min(rows, cols).
    """
    m = [row[:] for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    diag: list[int] = []
    top = 0
    while top < min(rows, cols):
        # find a nonzero pivot of minimal absolute value
        pivot = None
        for i in range(top, rows):
            for j in range(top, cols):
                if m[i][j] and (pivot is None or abs(m[i][j]) < abs(m[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        m[top], m[pi] = m[pi], m[top]
        for row in m:
            row[top], row[pj] = row[pj], row[top]
        # clear the pivot row and column
        dirty = False
        p = m[top][top]
        for i in range(top + 1, rows):
            q = m[i][top] // p
            if q:
                for j in range(top, cols):
                    m[i][j] -= q * m[top][j]
            if m[i][top]:
                dirty = True
        for j in range(top + 1, cols):
            q = m[top][j] // p
            if q:
                for i in range(top, rows):
                    m[i][j] -= q * m[i][top]
            if m[top][j]:
                dirty = True
        if dirty:
            continue  # remainders left; pick a smaller pivot next pass
        # ensure divisibility of the remaining block by the pivot
        adjusted = False
        for i in range(top + 1, rows):
            for j in range(top + 1, cols):
                if m[i][j] % p:
                    for jj in range(top, cols):
                        m[top][jj] += m[i][jj]
                    adjusted = True
                    break
            if adjusted:
                break
        if adjusted:
            continue
        diag.append(abs(p))
        top += 1
    diag.extend([0] * (min(rows, cols) - len(diag)))
    return diag


def invariants_from_diagonal(diag: list[int], n_generators: int, n_relators: int) -> AbelianInvariants:
    torsion = tuple(d for d in diag if d >= 2)
    rank_of_matrix = sum(1 for d in diag if d != 0)
    return AbelianInvariants(torsion, n_generators - rank_of_matrix)
