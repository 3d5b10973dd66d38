import math
import random
from itertools import combinations

import pytest

from torlen.abelian import AbelianInvariants, invariants_from_diagonal, smith_normal_form


def minors_gcd(matrix, k):
    """gcd of all k x k minors, by brute-force cofactor expansion."""
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0

    def det(sub):
        n = len(sub)
        if n == 1:
            return sub[0][0]
        total = 0
        for j in range(n):
            minor = [row[:j] + row[j + 1 :] for row in sub[1:]]
            total += (-1) ** j * sub[0][j] * det(minor)
        return total

    g = 0
    for rs in combinations(range(rows), k):
        for cs in combinations(range(cols), k):
            sub = [[matrix[i][j] for j in cs] for i in rs]
            g = math.gcd(g, det(sub))
    return g


def snf_oracle(matrix):
    """Independent diagonal via determinantal divisors: d_k = g_k / g_{k-1}
    with g_k the gcd of all k x k minors."""
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    n = min(rows, cols)
    diag = []
    prev = 1
    for k in range(1, n + 1):
        g = minors_gcd(matrix, k)
        if g == 0:
            diag.extend([0] * (n - len(diag)))
            break
        diag.append(g // prev)
        prev = g
    return diag


@pytest.mark.parametrize(
    "matrix, expected",
    [
        ([[2, 0], [0, 3]], [1, 6]),
        ([[1, 0], [0, 0]], [1, 0]),
        ([[0, 0], [0, 0]], [0, 0]),
        ([[2, 4], [6, 8]], [2, 4]),
        ([[3]], [3]),
        ([[6, 0, 0], [0, 10, 0], [0, 0, 15]], [1, 30, 30]),
    ],
)
def test_snf_known_values(matrix, expected):
    assert smith_normal_form(matrix) == expected


def test_snf_divisibility_chain_holds():
    rng = random.Random(99)
    for _ in range(50):
        rows, cols = rng.randint(1, 4), rng.randint(1, 4)
        m = [[rng.randint(-5, 5) for _ in range(cols)] for _ in range(rows)]
        diag = smith_normal_form(m)
        nonzero = [d for d in diag if d]
        for a, b in zip(nonzero, nonzero[1:]):
            assert b % a == 0
        # zeros only at the end
        seen_zero = False
        for d in diag:
            if d == 0:
                seen_zero = True
            else:
                assert not seen_zero


def test_snf_against_minor_gcd_oracle():
    rng = random.Random(42)
    for _ in range(120):
        rows, cols = rng.randint(1, 4), rng.randint(1, 4)
        m = [[rng.randint(-5, 5) for _ in range(cols)] for _ in range(rows)]
        assert smith_normal_form(m) == snf_oracle(m), m


def test_invariants_from_diagonal():
    inv = invariants_from_diagonal([1, 2, 6, 0], 5, 4)
    assert inv == AbelianInvariants((2, 6), 2)


def test_invariants_validation():
    with pytest.raises(ValueError):
        AbelianInvariants((3, 2), 0)  # not a divisibility chain
    with pytest.raises(ValueError):
        AbelianInvariants((1,), 0)  # unit entries excluded
    with pytest.raises(ValueError):
        AbelianInvariants((), -1)
