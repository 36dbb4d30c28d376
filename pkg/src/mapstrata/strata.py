"""Factorization structure of the boundary strata and finite-field censuses.

A boundary point whose components share a factor h of degree d-k factors as
(common factor, interior degree-k point); ``plant_factor`` and
``extract_factor`` realize the two directions.  ``multiplication_matrix``
gives the linear map "multiply by h" in the monomial bases, which intertwines
resultant matrices:

    resultant_matrix(plant_factor(h, g), m)
        == resultant_matrix(g, m) * multiplication_matrix(h, k + m).

``stratum_census`` enumerates all points of the tuple space over F_p,
classifies each by torsion degree (rank formula, cross-checked against the
gcd on every point), and compares stratum counts against the product
predictions implied by the factorization.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GuardExceededError, InteriorPointError, InternalInconsistencyError
from .fields import GF
from .homog import HomogPoly, form_divexact, form_gcd
from .matrix import ExactMatrix
from .resultant import MapPoint, gcd_oracle_degree, torsion_degree

CENSUS_GUARD = 10**8  # affine representatives


@dataclass
class FactorPair:
    """A boundary point split as (normalized common factor, interior base)."""

    factor: HomogPoly
    base: MapPoint


def plant_factor(h, g):
    """Multiply every component of g by the form h (degree adds)."""
    if h.is_zero():
        raise ValueError("common factor must be nonzero")
    return MapPoint([p * h for p in g.polys], g.field)


def extract_factor(point):
    """Split a boundary point into its gcd and the interior quotient.

    Interior points are rejected: the factorization is the inverse of
    ``plant_factor`` only where a common factor actually exists.
    """
    h = form_gcd(point.polys)
    if h.degree == 0:
        raise InteriorPointError("point is interior (torsion degree 0)")
    base = MapPoint([form_divexact(p, h) for p in point.polys], point.field)
    return FactorPair(factor=h, base=base)


def multiplication_matrix(h, s):
    """Matrix of multiplication by h from degree-s forms to degree-(r+s)
    forms, (s+1) x (r+s+1) in the monomial bases; full row rank."""
    if h.is_zero():
        raise ValueError("multiplier form must be nonzero")
    if s < 0:
        raise ValueError("s must be nonnegative")
    r = h.degree
    zero = h.field.zero
    rows = []
    for t in range(s + 1):
        rows.append(
            [h.coeffs[j - t] if 0 <= j - t <= r else zero for j in range(r + s + 1)]
        )
    return ExactMatrix(rows, h.field)


def projective_count(dim, p):
    """Number of points of P^dim over F_p."""
    return (p ** (dim + 1) - 1) // (p - 1)


@dataclass
class CensusTable:
    """Stratum counts of the degree-d tuple space over F_p.

    ``counts`` maps "interior" and each stratum index k (as int) to the number
    of points with torsion degree exactly d-k; ``product_predictions`` holds
    |P^(d-k)| * |interior at degree k| for each k.
    """

    p: int
    d: int
    n: int
    counts: dict
    product_predictions: dict
    total: int
    expected_total: int

    def interior(self):
        return self.counts["interior"]

    def as_dict(self):
        return {
            "p": self.p,
            "d": self.d,
            "n": self.n,
            "counts": {str(k): v for k, v in self.counts.items()},
            "product_predictions": {
                str(k): v for k, v in self.product_predictions.items()
            },
            "total": self.total,
            "expected_total": self.expected_total,
        }


def _representative(index, p, ncoords):
    # Representatives with first nonzero coordinate 1, ordered by the position
    # of that coordinate and then by the base-p digits of the tail.
    lead = 0
    block = p ** (ncoords - 1)
    while index >= block:
        index -= block
        lead += 1
        block //= p
    coords = [0] * ncoords
    coords[lead] = 1
    for pos in range(ncoords - 1, lead, -1):
        coords[pos] = index % p
        index //= p
    return coords


def _classify_range(args):
    d, n, p, start, stop = args
    field = GF(p)
    ncoords = (d + 1) * (n + 1)
    w = d + 1
    counts = {}
    for idx in range(start, stop):
        flat = _representative(idx, p, ncoords)
        rows = [flat[i * w : (i + 1) * w] for i in range(n + 1)]
        point = MapPoint.from_rows(rows, field)
        t = torsion_degree(point)
        t_gcd = gcd_oracle_degree(point)
        if t != t_gcd:
            raise InternalInconsistencyError(
                f"rank torsion {t} != gcd degree {t_gcd} at point {point}"
            )
        label = "interior" if t == 0 else d - t
        counts[label] = counts.get(label, 0) + 1
    return counts


def stratum_census(d, n, p, max_affine=CENSUS_GUARD, jobs=1, _interior_cache=None):
    """Exhaustive stratum census of the degree-d tuple space over F_p."""
    ncoords = (d + 1) * (n + 1)
    if p**ncoords > max_affine:
        raise GuardExceededError(
            f"census needs p^{ncoords} = {p**ncoords} affine representatives, "
            f"guard is {max_affine}"
        )
    total = projective_count(ncoords - 1, p)
    if jobs > 1:
        from .parallel import merge_counts, split_ranges

        chunks = [(d, n, p, a, b) for a, b in split_ranges(total, jobs)]
        counts = merge_counts(_classify_range, chunks, jobs)
    else:
        counts = _classify_range((d, n, p, 0, total))
    if sum(counts.values()) != total:
        raise InternalInconsistencyError(
            f"census counts sum to {sum(counts.values())}, expected {total}"
        )

    if _interior_cache is None:
        _interior_cache = {}
    predictions = {}
    for k in range(d):
        predictions[k] = projective_count(d - k, p) * _interior_count(
            k, n, p, max_affine, _interior_cache
        )
    counts.setdefault("interior", 0)
    for k in range(d):
        counts.setdefault(k, 0)
    return CensusTable(
        p=p,
        d=d,
        n=n,
        counts=counts,
        product_predictions=predictions,
        total=sum(counts.values()),
        expected_total=total,
    )


def _interior_count(k, n, p, max_affine, cache):
    if k == 0:
        # degree-0 tuples: constants, never a positive-degree common factor
        return projective_count(n, p)
    if k not in cache:
        cache[k] = stratum_census(
            k, n, p, max_affine=max_affine, _interior_cache=cache
        ).interior()
    return cache[k]


def verify_census(table):
    """Check the two product identities; returns a list of failure strings."""
    failures = []
    if table.total != table.expected_total:
        failures.append(
            f"total {table.total} != projective count {table.expected_total}"
        )
    for k in range(table.d):
        got = table.counts.get(k, 0)
        want = table.product_predictions[k]
        if got != want:
            failures.append(f"stratum {k}: count {got} != product prediction {want}")
    segre = projective_count(table.d, table.p) * projective_count(table.n, table.p)
    if table.counts.get(0, 0) != segre:
        failures.append(
            f"stratum 0: count {table.counts.get(0, 0)} != Segre count {segre}"
        )
    return failures
