"""Resultant matrices and the rank classification of map points.

A map point is a projective tuple (f_0, ..., f_n) of degree-d forms.  Its
k-th resultant matrix is the (k+1)(n+1) x (d+k+1) block-Toeplitz matrix whose
row (s, i) holds the coefficients of x^(k-s) y^s f_i; the rank of that matrix
detects the degree of the common factor of the tuple:

    torsion_degree(f) = 2d - rank(matrix at k = d-1),

with the full rank profile obeying the two-regime formula checked by
``rank_profile``.  The gcd of the tuple is the independent oracle for all of
this and is cross-checked wherever the package classifies points in bulk.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import FieldMismatchError, InternalInconsistencyError
from .fields import QQ, normalize_projective
from .homog import HomogPoly, form_gcd
from .matrix import ExactMatrix


class MapPoint:
    """A projective point of the space of (n+1)-tuples of degree-d forms."""

    __slots__ = ("n", "d", "polys", "field")

    def __init__(self, polys, field=None):
        polys = tuple(polys)
        if not polys or len(polys) < 2:
            raise ValueError("need at least two component forms (n >= 1)")
        if field is None:
            field = polys[0].field
        if any(p.field != field for p in polys):
            raise FieldMismatchError("component forms over mixed fields")
        # degree 0 is allowed: constant tuples are the base of the stratum
        # factorization (they arise as quotients by a full-degree factor)
        d = polys[0].degree
        if any(p.degree != d for p in polys):
            raise ValueError("component forms of unequal degree")
        if all(p.is_zero() for p in polys):
            raise ValueError("all component forms are zero")
        self.n = len(polys) - 1
        self.d = d
        self.polys = polys
        self.field = field

    @classmethod
    def from_rows(cls, rows, field=QQ):
        """Build from raw coefficient rows a_{i0}..a_{id} (one per component)."""
        return cls([HomogPoly(r, field) for r in rows], field)

    def coefficient(self, i, j):
        return self.polys[i].coeffs[j]

    def flatten(self):
        """Coefficients in the a_00, a_01, ..., a_nd order."""
        return [c for p in self.polys for c in p.coeffs]

    def normalized(self):
        """Canonical projective representative (shared normalization rule)."""
        flat = normalize_projective(self.flatten(), self.field)
        w = self.d + 1
        rows = [flat[i * w : (i + 1) * w] for i in range(self.n + 1)]
        return MapPoint.from_rows(rows, self.field)

    def projectively_equal(self, other):
        return self.normalized().flatten() == other.normalized().flatten()

    def scale(self, c):
        return MapPoint([p.scale(c) for p in self.polys], self.field)

    def __eq__(self, other):
        if not isinstance(other, MapPoint):
            return NotImplemented
        return self.field == other.field and self.polys == other.polys

    def __hash__(self):
        return hash((self.polys, self.field.name))

    def __repr__(self):
        return f"MapPoint(n={self.n}, d={self.d}, over {self.field.name})"

    def __str__(self):
        return "(" + ", ".join(str(p) for p in self.polys) + ")"


def resultant_matrix(point, k):
    """The k-th resultant matrix of a map point, (k+1)(n+1) x (d+k+1).

    Entry at row s(n+1)+i, column j is a_{i, j-s} (zero outside 0..d): blocks
    indexed by the shift s, rows within a block by the component index i.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    n, d = point.n, point.d
    zero = point.field.zero
    rows = []
    for s in range(k + 1):
        for i in range(n + 1):
            coeffs = point.polys[i].coeffs
            rows.append(
                [coeffs[j - s] if 0 <= j - s <= d else zero for j in range(d + k + 1)]
            )
    return ExactMatrix(rows, point.field)


def multiplier_vector(forms, k):
    """Flatten an (n+1)-tuple of degree-k forms into the row-index order used
    by ``resultant_matrix`` (entry at s(n+1)+i is the x^(k-s) y^s coefficient
    of the i-th form)."""
    if any(w.degree != k for w in forms):
        raise ValueError("multiplier forms must all have degree k")
    return [w.coeffs[s] for s in range(k + 1) for w in forms]


def torsion_degree(point):
    """Degree of the common factor of the tuple, computed by rank alone."""
    if point.d == 0:
        return 0  # constants never share a positive-degree factor
    return 2 * point.d - resultant_matrix(point, point.d - 1).rank()


@dataclass
class StratumReport:
    """Classification of one map point by its rank profile."""

    torsion_degree: int
    stratum: object  # "interior" or the minimal k with the point in C_{d,k}
    rank_profile: dict = dc_field(default_factory=dict)

    def as_dict(self):
        return {
            "torsion_degree": self.torsion_degree,
            "stratum": self.stratum,
            "rank_profile": {str(k): r for k, r in self.rank_profile.items()},
        }


def rank_profile(point, k_max):
    """Ranks of the resultant matrices for k = 0..k_max, with the two-regime
    consistency assertions.  Violations raise InternalInconsistencyError:
    the formulas are theorems, so a failure means a bug, not bad input.
    """
    d = point.d
    if k_max < d - 1:
        raise ValueError(f"k_max must be at least d-1 = {d - 1}")
    ranks = {k: resultant_matrix(point, k).rank() for k in range(k_max + 1)}
    t = torsion_degree(point)
    for k, r in ranks.items():
        if k >= d - t - 1:
            expected = k + 1 + d - t
            if r != expected:
                raise InternalInconsistencyError(
                    f"rank at k={k} is {r}, formula regime expects {expected}"
                )
        elif r < 2 * (k + 1):
            raise InternalInconsistencyError(
                f"rank at k={k} is {r}, below the lower bound {2 * (k + 1)}"
            )
    for k in range(max(d - t - 1, 0), k_max):
        if ranks[k + 1] - ranks[k] != 1:
            raise InternalInconsistencyError(
                f"ranks at k={k},{k + 1} do not step by one: {ranks[k]},{ranks[k + 1]}"
            )
    stratum = "interior" if t == 0 else d - t
    return StratumReport(torsion_degree=t, stratum=stratum, rank_profile=ranks)


def in_stratum(point, k, m):
    """Set-level membership in C_{d,k}: rank of the m-th matrix <= k+1+m."""
    d = point.d
    if not 0 <= k <= d - 1:
        raise ValueError(f"k must lie in [0, {d - 1}], got {k}")
    if m < k:
        raise ValueError(f"m must be at least k = {k}, got {m}")
    return resultant_matrix(point, m).rank() <= k + 1 + m


def gcd_oracle_degree(point):
    """Torsion degree via the gcd, the route independent of any rank."""
    return form_gcd(point.polys).degree
