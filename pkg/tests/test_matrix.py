import random
from fractions import Fraction
from itertools import permutations

import pytest

from mapstrata.fields import GF, QQ
from mapstrata.matrix import ExactMatrix, subsets_colex
from mapstrata.tpoly import QT, TPoly


def naive_det(rows):
    """Leibniz-formula determinant: the independent oracle."""
    n = len(rows)
    total = Fraction(0)
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        # count inversions for the sign
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if seen[i] > seen[j])
        sign = -1 if inv % 2 else 1
        term = Fraction(sign)
        for i in range(n):
            term *= Fraction(rows[i][perm[i]])
        total += term
    return total


def gauss_rank_fractions(rows):
    """Rank oracle: textbook Gaussian elimination directly over Q."""
    m = [[Fraction(c) for c in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(rank + 1, len(m)):
            if m[i][c]:
                f = m[i][c] / m[rank][c]
                for j in range(c, ncols):
                    m[i][j] -= f * m[rank][j]
        rank += 1
    return rank


def test_rank_trivial_cases():
    assert ExactMatrix([[0, 0], [0, 0]]).rank() == 0
    assert ExactMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).rank() == 3


def test_bareiss_against_oracles():
    rng = random.Random(404)
    for _ in range(150):
        nr, nc = rng.randint(1, 5), rng.randint(1, 5)
        rows = [[rng.randint(-6, 6) for _ in range(nc)] for _ in range(nr)]
        m = ExactMatrix(rows)
        assert m.rank() == gauss_rank_fractions(rows)
        if nr == nc:
            assert m.det() == naive_det(rows)


def test_rational_entries():
    rows = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 4), Fraction(1, 6)]]
    m = ExactMatrix(rows)
    assert m.det() == 0
    assert m.rank() == 1
    m2 = ExactMatrix([[Fraction(1, 2), 0], [0, Fraction(2, 3)]])
    assert m2.det() == Fraction(1, 3)


def test_prime_field_rank_and_det():
    F2 = GF(2)
    m = ExactMatrix([[1, 1], [1, 1]], F2)
    assert m.rank() == 1 and m.det().value == 0
    # 2 == 0 mod 2, so this is rank 1 over F_2 but rank 2 over Q
    m2 = ExactMatrix([[1, 1], [1, 3]], F2)
    assert m2.rank() == 1
    assert ExactMatrix([[1, 1], [1, 3]], QQ).rank() == 2


def test_tpoly_matrix_det_and_rank():
    t = TPoly([0, 1])
    one = TPoly([1])
    m = ExactMatrix([[one, t], [t, t * t]], QT)
    assert m.det().is_zero()
    assert m.rank() == 1
    m2 = ExactMatrix([[one, t], [TPoly(), t]], QT)
    assert m2.det() == t
    assert m2.rank() == 2


def test_matmul_and_row_action():
    a = ExactMatrix([[1, 2], [3, 4]])
    b = ExactMatrix([[0, 1], [1, 0]])
    assert (a * b).rows == ExactMatrix([[2, 1], [4, 3]]).rows
    assert a.row_action([1, 1]) == [Fraction(4), Fraction(6)]
    with pytest.raises(ValueError):
        a * ExactMatrix([[1, 2, 3]])


def test_minor_extraction():
    m = ExactMatrix([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
    assert m.minor((0, 1), (0, 1)) == -3
    assert m.minor((0, 1, 2), (0, 1, 2)) == naive_det([[1, 2, 3], [4, 5, 6], [7, 8, 10]])


def test_subsets_colex_order():
    assert subsets_colex(4, 2) == ((0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3))
    assert subsets_colex(3, 3) == ((0, 1, 2),)
    # colex: later subsets have larger maxima
    subs = subsets_colex(6, 3)
    maxima = [s[-1] for s in subs]
    assert maxima == sorted(maxima)
