"""A quick cross-module verification battery for the CLI selftest command.

Each check returns (name, passed, detail); the battery is a scaled-down
version of the acceptance suite, deterministic from its fixed seed.
"""

from __future__ import annotations

import random
from itertools import product

from .fields import GF
from .hodge import e_blowup_closed, e_blowup_recursive, picard_check
from .ideals import (
    check_minor_extraction,
    chart_matrix,
    find_row_relation,
    ideal_equal,
    minor_ideal,
)
from .resultant import MapPoint, gcd_oracle_degree, rank_profile, resultant_matrix
from .sampling import random_family, random_form, random_point_with_torsion
from .strata import (
    extract_factor,
    multiplication_matrix,
    plant_factor,
    stratum_census,
    verify_census,
)
from .wedge import family_limit, graph_point, wedge_vanishes

SEED = 987654321


def _check_rank_gcd(rng):
    for d, n in product((1, 2, 3), (1, 2)):
        for _ in range(8):
            t = rng.randint(0, d)
            point = random_point_with_torsion(rng, d, n, t)
            report = rank_profile(point, d)
            if report.torsion_degree != t or gcd_oracle_degree(point) != t:
                return False, f"planted {t}, got {report.torsion_degree} at (d,n)=({d},{n})"
    return True, "rank torsion == planted gcd degree on all samples"


def _check_census(rng):
    expected = {
        (1, 1): {"interior": 6, 0: 9},
        (2, 1): {"interior": 24, 0: 21, 1: 18},
        (1, 2): {"interior": 42, 0: 21},
    }
    for (d, n), want in expected.items():
        table = stratum_census(d, n, 2)
        if table.counts != want:
            return False, f"census ({d},{n},2) counts {table.counts} != {want}"
        failures = verify_census(table)
        if failures:
            return False, "; ".join(failures)
    return True, "F_2 censuses match product predictions"


def _check_hodge(rng):
    for d in range(6):
        for n in range(1, 4):
            if e_blowup_recursive(d, n) != e_blowup_closed(d, n):
                return False, f"recursion != closed form at (d,n)=({d},{n})"
            if not e_blowup_recursive(d, n).is_palindromic():
                return False, f"not palindromic at (d,n)=({d},{n})"
    for n in range(2, 4):
        for d in range(1, 6):
            if not picard_check(d, n).match:
                return False, f"picard coefficient off at (d,n)=({d},{n})"
    return True, "blowup polynomial identities hold (d<=5, n<=3)"


def _check_wedge(rng):
    # exhaustive over F_2 at (1,1), random over Q up to (2,2)
    field = GF(2)
    for a, b, c, e in product((0, 1), repeat=4):
        if not any((a, b, c, e)):
            continue
        point = MapPoint.from_rows([[a, b], [c, e]], field)
        t = gcd_oracle_degree(point)
        for m in (0, 1):
            if wedge_vanishes(point, m, 0) != (t >= 1):
                return False, f"vanishing mismatch at {point}, m={m}"
    for d, n in ((1, 1), (2, 1), (2, 2)):
        for _ in range(6):
            t = rng.randint(0, d)
            point = random_point_with_torsion(rng, d, n, t)
            for l in range(d):
                if wedge_vanishes(point, d - 1, l) != (t >= d - l):
                    return False, f"vanishing mismatch at {point}, l={l}"
    return True, "minor vanishing matches torsion threshold"


def _check_round_trip(rng):
    for _ in range(20):
        d, n = rng.randint(2, 3), rng.randint(1, 2)
        t = rng.randint(1, d)
        point = random_point_with_torsion(rng, d, n, t)
        pair = extract_factor(point)
        back = plant_factor(pair.factor, pair.base)
        if not back.projectively_equal(point):
            return False, f"round trip failed at {point}"
    return True, "factor extraction inverts planting"


def _check_functoriality(rng):
    for _ in range(20):
        k, n = rng.randint(1, 2), rng.randint(1, 2)
        r = rng.randint(1, 2)
        m = rng.randint(k, k + 2)
        h = random_form(rng, r)
        g = random_point_with_torsion(rng, k, n, 0)
        lhs = resultant_matrix(plant_factor(h, g), m)
        rhs = resultant_matrix(g, m) * multiplication_matrix(h, k + m)
        if lhs != rhs:
            return False, f"matrix functoriality failed for h={h}, g={g}"
    return True, "resultant matrices factor through multiplication matrices"


def _check_ideals(rng):
    for d, n in ((1, 1), (2, 1)):
        base = minor_ideal(chart_matrix(d, n, 0), 2)
        other = minor_ideal(chart_matrix(d, n, 1), 3)
        if not ideal_equal(base, other):
            return False, f"ideal stability failed at (d,n)=({d},{n})"
    finding = find_row_relation(1, 1, 1)
    if not finding.ok():
        return False, "no valid row-relation convention found"
    if not check_minor_extraction(2, 1, 1):
        return False, "minor extraction failed at (2,1,1)"
    return True, "determinantal ideal identities verified (finding reported separately)"


def _check_limits(rng):
    for _ in range(6):
        family = random_family(rng, 2, 1)
        wt, vals = family_limit(family)
        if any(vec.is_zero() for vec in wt.levels):
            return False, f"limit level vanished for {family}"
    for _ in range(4):
        family = random_family(rng, 2, 1, interior_center=True)
        wt, _ = family_limit(family)
        if wt != graph_point(family.limit_point()):
            return False, "interior-center family limit disagrees with graph point"
    return True, "family limits exist and match interior graph points"


CHECKS = [
    ("rank-gcd equivalence", _check_rank_gcd),
    ("finite-field census", _check_census),
    ("blowup polynomial identities", _check_hodge),
    ("wedge vanishing", _check_wedge),
    ("factor round trip", _check_round_trip),
    ("matrix functoriality", _check_functoriality),
    ("determinantal ideals", _check_ideals),
    ("family limits", _check_limits),
]


def run_all(seed=SEED):
    rng = random.Random(seed)
    results = []
    for name, fn in CHECKS:
        ok, detail = fn(rng)
        results.append((name, ok, detail))
    return results
