"""Acceptance suite: one test per criterion, every check exact (0 failures
tolerated), each printing its own pass/fail line with the elapsed time.

Run with  python -m pytest tests/test_acceptance.py -v -s  to see the lines.
"""

import random
import time
from itertools import product

from mapstrata.fields import GF
from mapstrata.hodge import e_blowup_closed, e_blowup_recursive, picard_check
from mapstrata.ideals import (
    chart_matrix,
    check_minor_extraction,
    find_row_relation,
    ideal_equal,
    minor_ideal,
)
from mapstrata.resultant import (
    MapPoint,
    gcd_oracle_degree,
    rank_profile,
    resultant_matrix,
    torsion_degree,
)
from mapstrata.sampling import random_family, random_form, random_point_with_torsion
from mapstrata.strata import (
    extract_factor,
    multiplication_matrix,
    plant_factor,
    stratum_census,
    verify_census,
)
from mapstrata.wedge import family_limit, graph_point, wedge_vanishes


def report(number, name, started):
    print(f"ACCEPTANCE {number} PASS ({time.time() - started:.1f}s): {name}")


def enumerate_points(d, n, p):
    field = GF(p)
    ncoords = (d + 1) * (n + 1)
    w = d + 1
    for idx in range(p**ncoords):
        digits = []
        rest = idx
        for _ in range(ncoords):
            digits.append(rest % p)
            rest //= p
        if not any(digits):
            continue
        # one representative per projective point: first nonzero digit 1
        first = next(i for i, c in enumerate(digits) if c)
        if digits[first] != 1:
            continue
        rows = [digits[i * w : (i + 1) * w] for i in range(n + 1)]
        yield MapPoint.from_rows(rows, field)


def test_criterion_1_rank_gcd_equivalence():
    started = time.time()
    rng = random.Random(1001)
    for d, n in product((1, 2, 3), (1, 2, 3)):
        for _ in range(1000):
            t = rng.randint(0, d)
            point = random_point_with_torsion(rng, d, n, t)
            assert torsion_degree(point) == t
            assert gcd_oracle_degree(point) == t
            # rank_profile raises InternalInconsistencyError on any violation
            # of the two-regime formula or the unit rank steps
            profile = rank_profile(point, d)
            assert profile.torsion_degree == t
    report(1, "rank-gcd equivalence, 1000 points per (d,n) in {1,2,3}^2", started)


def test_criterion_2_census_product_structure():
    started = time.time()
    t21 = stratum_census(2, 1, 2)
    assert t21.total == 63
    assert t21.counts == {"interior": 24, 1: 18, 0: 21}
    assert t21.product_predictions[1] == 3 * 6 == 18
    assert t21.product_predictions[0] == 7 * 3 == 21
    t11 = stratum_census(1, 1, 2)
    assert t11.total == 15 and t11.counts == {"interior": 6, 0: 9}
    t12 = stratum_census(1, 2, 2)
    assert t12.total == 63 and t12.counts == {"interior": 42, 0: 21}
    for table in (t21, t11, t12):
        assert verify_census(table) == []
    report(2, "finite-field censuses match the product structure", started)


def test_criterion_3_hodge_formula_equivalence():
    started = time.time()
    for d in range(9):
        for n in range(1, 6):
            rec = e_blowup_recursive(d, n)
            assert rec == e_blowup_closed(d, n), (d, n)
            assert rec.is_palindromic(), (d, n)
            assert rec.coeff(0) == 1, (d, n)
            assert rec.degree == (d + 1) * (n + 1) - 1, (d, n)
    report(3, "recursive == closed blowup polynomial for d<=8, n<=5", started)


def test_criterion_4_picard_coefficient():
    started = time.time()
    for n in range(2, 6):
        for d in range(1, 9):
            result = picard_check(d, n)
            assert result.match, (d, n, result.coefficient)
    flagged = []
    for d in range(1, 9):
        result = picard_check(d, 1)
        if not result.match:
            flagged.append((d, result.coefficient))
            assert result.note  # reported as a finding, not a failure
    print(f"  n=1 flagged findings (coefficient vs d+1): {flagged}")
    report(4, "lambda-coefficient equals d+1 for n>=2; n=1 findings flagged", started)


def test_criterion_5_wedge_vanishing_iff_stratum():
    started = time.time()
    # exhaustive over F_2
    for d, n in ((1, 1), (2, 1), (1, 2)):
        for point in enumerate_points(d, n, 2):
            t = gcd_oracle_degree(point)
            for m in (d - 1, d):
                for l in range(d):
                    assert wedge_vanishes(point, m, l) == (t >= d - l)
    # random over Q, 200 points spread over d <= 3, n <= 2
    rng = random.Random(1005)
    allocation = {(1, 1): 50, (2, 1): 45, (1, 2): 45, (2, 2): 30, (3, 1): 20, (3, 2): 10}
    assert sum(allocation.values()) == 200
    for (d, n), count in allocation.items():
        for _ in range(count):
            t = rng.randint(0, d)
            point = random_point_with_torsion(rng, d, n, t)
            for m in (d - 1, d):
                for l in range(d):
                    assert wedge_vanishes(point, m, l) == (t >= d - l)
    report(5, "minor vanishing iff stratum membership (exhaustive F_2 + 200 Q)", started)


def test_criterion_6_functoriality():
    started = time.time()
    rng = random.Random(1006)
    for d in range(1, 5):
        for k in range(d):
            for n in (1, 2, 3):
                m = d - 1
                for _ in range(500):
                    h = random_form(rng, d - k, bound=5)
                    g = random_point_with_torsion(rng, k, n, 0, bound=5)
                    lhs = resultant_matrix(plant_factor(h, g), m)
                    rhs = resultant_matrix(g, m) * multiplication_matrix(h, k + m)
                    assert lhs == rhs
    report(6, "A_(g.h),m = A_g,m x L_h, 500 samples per (d,k,n), d<=4", started)


def test_criterion_7_determinantal_ideal_stability():
    started = time.time()
    for d, n in ((1, 1), (2, 1), (1, 2)):
        base = minor_ideal(chart_matrix(d, n, 0), 2)
        for m in (1, 2):
            other = minor_ideal(chart_matrix(d, n, m), 2 + m)
            assert ideal_equal(base, other), (d, n, m)
    findings = []
    for d in (1, 2):
        for n in (1, 2):
            for m in range(d, d + 2):  # the elimination identity needs m >= d
                finding = find_row_relation(d, n, m)
                assert finding.ok(), (d, n, m)
                if not finding.printed_form_holds:
                    findings.append((d, n, m, finding.validated[-1]))
            for m in range(1, d + 2):
                assert check_minor_extraction(d, n, m), (d, n, m)
    assert findings, "expected the printed-form indexing finding to be emitted"
    print(f"  row-relation indexing findings emitted for {len(findings)} cases;")
    print(f"  validated convention: {findings[0][3]}")
    report(7, "ideal stability + row relation (finding emitted) + extraction", started)


def test_criterion_8_limit_existence_and_interior_consistency():
    started = time.time()
    rng = random.Random(1008)
    for d, n in ((2, 1), (2, 2)):
        for _ in range(100):
            family = random_family(rng, d, n)
            wt, valuations = family_limit(family)
            assert all(not vec.is_zero() for vec in wt.levels)
            assert len(valuations) == d
        for _ in range(25):
            family = random_family(rng, d, n, interior_center=True)
            wt, _ = family_limit(family)
            assert wt == graph_point(family.limit_point())
    report(8, "family limits land with all levels nonzero; interior fibers agree", started)


def test_criterion_9_round_trip():
    started = time.time()
    boundary = 0
    for point in enumerate_points(2, 1, 2):
        t = torsion_degree(point)
        if t == 0:
            continue
        boundary += 1
        pair = extract_factor(point)
        assert plant_factor(pair.factor, pair.base).projectively_equal(point)
    assert boundary == 63 - 24  # every F_2 boundary point exercised
    rng = random.Random(1009)
    for _ in range(500):
        d = rng.randint(1, 4)
        n = rng.randint(1, 2)
        t = rng.randint(1, d)
        point = random_point_with_torsion(rng, d, n, t)
        pair = extract_factor(point)
        assert torsion_degree(pair.base) == 0
        assert plant_factor(pair.factor, pair.base).projectively_equal(point)
    report(9, "factorization round trip, exhaustive F_2 boundary + 500 Q points", started)
