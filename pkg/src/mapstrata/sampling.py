"""Random generators for map points, factors and families.

Callers own the ``random.Random`` instance, so every consumer (tests, the
selftest battery) is reproducible from its seed.  Planting a common factor of
degree t means multiplying a gcd-free tuple of degree d-t by a random
degree-t form, which is the independent construction the rank criteria are
checked against.
"""

from __future__ import annotations

from .fields import QQ
from .homog import HomogPoly, form_gcd
from .resultant import MapPoint
from .tpoly import TPoly
from .wedge import FamilyPoint


def random_form(rng, degree, field=QQ, bound=9, nonzero=True):
    while True:
        coeffs = [rng.randint(-bound, bound) for _ in range(degree + 1)]
        if not nonzero or any(coeffs):
            return HomogPoly([field.scalar(c) for c in coeffs], field)


def random_coprime_forms(rng, degree, count, field=QQ, bound=9):
    """count forms of the given degree with gcd of degree 0."""
    while True:
        forms = [random_form(rng, degree, field, bound, nonzero=False) for _ in range(count)]
        if all(f.is_zero() for f in forms):
            continue
        if degree == 0 or form_gcd(forms).degree == 0:
            return forms


def random_point_with_torsion(rng, d, n, t, field=QQ, bound=9):
    """A degree-d point whose components share a factor of degree exactly t."""
    if not 0 <= t <= d:
        raise ValueError(f"planted degree must lie in [0, {d}]")
    base = random_coprime_forms(rng, d - t, n + 1, field, bound)
    if t == 0:
        return MapPoint(base, field)
    h = random_form(rng, t, field, bound)
    return MapPoint([b * h for b in base], field)


def random_interior_point(rng, d, n, field=QQ, bound=9):
    return random_point_with_torsion(rng, d, n, 0, field, bound)


def random_family(rng, d, n, bound=4, interior_center=False):
    """A family f0 + t*g with interior generic fiber; optionally force the
    center f0 itself to be interior."""
    while True:
        if interior_center:
            f0 = random_interior_point(rng, d, n, QQ, bound)
        else:
            t = rng.randint(0, d)
            f0 = random_point_with_torsion(rng, d, n, t, QQ, bound)
        rows = []
        for i in range(n + 1):
            rows.append(
                [
                    TPoly([c, rng.randint(-bound, bound)])
                    for c in f0.polys[i].coeffs
                ]
            )
        family = FamilyPoint.from_rows(rows)
        if family.generic_torsion_degree() == 0:
            return family
