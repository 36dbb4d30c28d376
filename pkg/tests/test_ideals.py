import random
from fractions import Fraction

import pytest

from mapstrata.errors import GuardExceededError
from mapstrata.ideals import (
    IdealPresentation,
    SymbolicMatrix,
    chart_matrix,
    chart_ring,
    check_minor_extraction,
    check_row_relation,
    find_row_relation,
    groebner_basis,
    ideal_equal,
    minor_ideal,
    staircase_submatrix,
)
from mapstrata.matrix import ExactMatrix
from mapstrata.multipoly import PolyRing


def strs(rows):
    return [[str(e) for e in row] for row in rows]


def test_chart_matrix_examples():
    assert strs(chart_matrix(1, 1, 0).rows) == [["1", "c_0_1"], ["0", "c_1_1"]]
    assert strs(chart_matrix(2, 1, 1).rows) == [
        ["1", "c_0_1", "c_0_2", "0"],
        ["0", "c_1_1", "c_1_2", "0"],
        ["0", "1", "c_0_1", "c_0_2"],
        ["0", "0", "c_1_1", "c_1_2"],
    ]
    assert strs(chart_matrix(1, 2, 0).rows) == [
        ["1", "c_0_1"],
        ["0", "c_1_1"],
        ["0", "c_2_1"],
    ]


def test_chart_ring_variable_order():
    assert chart_ring(2, 2).names == (
        "c_0_1",
        "c_0_2",
        "c_1_1",
        "c_1_2",
        "c_2_1",
        "c_2_2",
    )


def test_minor_ideal_of_generic_two_by_two():
    ring = PolyRing(["a", "b", "c", "d"])
    a, b, c, d = ring.gens()
    m = SymbolicMatrix(ring=ring, rows=((a, b), (c, d)))
    ideal = minor_ideal(m, 2)
    assert len(ideal.generators) == 1
    det = ideal.generators[0]
    assert det == a * d - b * c or det == b * c - a * d


def test_minor_ideal_chart_examples():
    # 2x2 minors of the single-block chart matrix at d=2: the ideal is
    # generated by the two linear variables
    ideal = minor_ideal(chart_matrix(2, 1, 0), 2)
    basis = groebner_basis(ideal)
    assert [str(g) for g in basis.generators] == ["c_1_1", "c_1_2"]
    # top minors of the two-block chart matrix at d=1 cut out c_1_1
    ideal = minor_ideal(chart_matrix(1, 1, 1), 3)
    basis = groebner_basis(ideal)
    assert [str(g) for g in basis.generators] == ["c_1_1"]


def test_minor_ideal_drops_zero_and_duplicate_minors():
    ideal = minor_ideal(chart_matrix(1, 1, 1), 3)
    assert all(g for g in ideal.generators)
    reprs = [str(g) for g in ideal.generators]
    assert len(reprs) == len(set(reprs))


def test_groebner_trivial_cases():
    ring = PolyRing(["x", "y"])
    x, y = ring.gens()
    basis = groebner_basis(IdealPresentation(ring=ring, generators=[y, x]))
    assert [str(g) for g in basis.generators] == ["x", "y"]
    basis = groebner_basis(IdealPresentation(ring=ring, generators=[x * x, x * y]))
    assert sorted(str(g) for g in basis.generators) == ["x*y", "x^2"]


def test_ideal_equal():
    ring = PolyRing(["x", "y"])
    x, y = ring.gens()
    eye = IdealPresentation(ring=ring, generators=[x])
    assert ideal_equal(eye, IdealPresentation(ring=ring, generators=[x, x * y]))
    assert not ideal_equal(eye, IdealPresentation(ring=ring, generators=[x * x]))
    other_ring = PolyRing(["x", "z"])
    with pytest.raises(ValueError):
        ideal_equal(eye, IdealPresentation(ring=other_ring, generators=[]))


def test_groebner_buchberger_nontrivial():
    # <x^2 - y, x y - 1>: reduced basis is {x - y^2, y^3 - 1}
    ring = PolyRing(["x", "y"])
    x, y = ring.gens()
    basis = groebner_basis(
        IdealPresentation(ring=ring, generators=[x * x - y, x * y - ring.one])
    )
    got = sorted(str(g) for g in basis.generators)
    assert got == sorted(["x^2-y", "x*y-1", "y^2-x"]), got


def test_ideal_stability_statement_one():
    # the (2+m)-minor ideal of the m-block chart matrix is m-independent
    for d, n in ((1, 1), (2, 1), (1, 2)):
        base = minor_ideal(chart_matrix(d, n, 0), 2)
        for m in (1, 2):
            other = minor_ideal(chart_matrix(d, n, m), 2 + m)
            assert ideal_equal(base, other), (d, n, m)


def test_ideal_stability_ladder_statement_two():
    # one elimination step: (k+2+m)-minors at m match (k+1+m)-minors at m-1
    for d, n, k in ((2, 1, 1), (2, 2, 1)):
        for m in (d, d + 1):
            upper = minor_ideal(chart_matrix(d, n, m), k + 2 + m)
            lower = minor_ideal(chart_matrix(d, n, m - 1), k + 1 + m)
            assert ideal_equal(upper, lower, unsafe=True), (d, n, k, m)


def test_experimental_stronger_stability_reported_as_evidence():
    # the suspected (unproven) m = k stability; checked in-reach instances
    # only, recorded as evidence, never asserted as a theorem elsewhere
    from mapstrata.ideals import experimental_stability

    assert experimental_stability(3, 1, 1, 1, unsafe=True) is True
    assert experimental_stability(3, 2, 1, 1, unsafe=True) is True
    with pytest.raises(ValueError):
        experimental_stability(2, 1, 1, 1)  # m = d-1 is the proven baseline


def test_row_relation_printed_form_fails_but_search_validates():
    finding = find_row_relation(1, 1, 1)
    assert finding.printed_form_holds is False
    assert finding.validated
    assert any("j(n+1)+1" in v for v in finding.validated)
    for d, n in ((1, 1), (2, 1), (1, 2), (2, 2)):
        for m in (d, d + 1):
            f = find_row_relation(d, n, m)
            assert f.printed_form_holds == check_row_relation(d, n, m)
            assert f.ok(), (d, n, m)
            # the corrected convention always validates
            assert any("c_(i-1)_j*row_(j(n+1)+1)" in v and v.startswith("row_i -") for v in f.validated)


def test_row_relation_requires_m_at_least_d():
    with pytest.raises(ValueError):
        check_row_relation(2, 1, 1)


def test_minor_extraction():
    for d, n in ((1, 1), (2, 1), (1, 2), (2, 2)):
        for m in range(1, d + 2):
            assert check_minor_extraction(d, n, m), (d, n, m)


def test_staircase_submatrix_shape():
    sub = staircase_submatrix(2, 1, 1)
    assert sub.nrows == 3 and sub.ncols == 4
    assert strs(sub.rows)[0] == ["1", "c_0_1", "c_0_2", "0"]
    assert strs(sub.rows)[2] == ["0", "0", "c_1_1", "c_1_2"]


def test_groebner_guard():
    ring = PolyRing([f"x{i}" for i in range(11)])
    with pytest.raises(GuardExceededError):
        groebner_basis(IdealPresentation(ring=ring, generators=[ring.var("x0")]))
    small = PolyRing(["x"])
    x = small.var("x")
    deep = x * x * x * x * x
    with pytest.raises(GuardExceededError):
        groebner_basis(IdealPresentation(ring=small, generators=[deep]))
    groebner_basis(IdealPresentation(ring=small, generators=[deep]), unsafe=True)


def test_specialization_soundness():
    # generators of the r-minor ideal vanish at a point iff the specialized
    # matrix has rank below r
    rng = random.Random(41)
    for _ in range(50):
        d, n, m = rng.randint(1, 2), rng.randint(1, 2), rng.randint(0, 2)
        matrix = chart_matrix(d, n, m)
        r = rng.randint(1, min(matrix.nrows, matrix.ncols))
        ideal = minor_ideal(matrix, r)
        values = [Fraction(rng.randint(-2, 2)) for _ in matrix.ring.names]
        specialized = ExactMatrix(
            [[e.subs(values) for e in row] for row in matrix.rows]
        )
        all_vanish = all(g.subs(values) == 0 for g in ideal.generators)
        assert all_vanish == (specialized.rank() < r)


def _random_invertible(rng, size):
    while True:
        m = [[Fraction(rng.randint(-3, 3)) for _ in range(size)] for _ in range(size)]
        if size == 2 and m[0][0] * m[1][1] - m[0][1] * m[1][0] != 0:
            return m
        if size == 3:
            det = (
                m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
            )
            if det != 0:
                return m


def test_minor_ideal_invariance_under_invertible_factors():
    # I_l(A) = I_l(BA) = I_l(AC) for invertible rational B (rows) and C (cols)
    rng = random.Random(42)
    ring = PolyRing(["u", "v", "w"])
    u, v, w = ring.gens()
    A = SymbolicMatrix(
        ring=ring,
        rows=(
            (u, v, ring.one),
            (w, ring.zero, u + v),
        ),
    )
    for _ in range(5):
        b = _random_invertible(rng, 2)
        rows = []
        for i in range(2):
            rows.append(
                tuple(
                    A.rows[0][j].scale(b[i][0]) + A.rows[1][j].scale(b[i][1])
                    for j in range(3)
                )
            )
        BA = SymbolicMatrix(ring=ring, rows=tuple(rows))
        c = _random_invertible(rng, 3)
        rows = []
        for i in range(2):
            rows.append(
                tuple(
                    sum(
                        (A.rows[i][k].scale(c[k][j]) for k in range(3)),
                        ring.zero,
                    )
                    for j in range(3)
                )
            )
        AC = SymbolicMatrix(ring=ring, rows=tuple(rows))
        for l in (1, 2):
            assert ideal_equal(minor_ideal(A, l), minor_ideal(BA, l))
            assert ideal_equal(minor_ideal(A, l), minor_ideal(AC, l))
