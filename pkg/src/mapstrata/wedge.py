"""Wedge-minor coordinates of map points and limits of one-parameter families.

For a fixed m >= d-1, the level-l coordinate of a point is the vector of all
r x r minors of its m-th resultant matrix, r = m+2+l, indexed by pairs of
row/column subsets in colexicographic order (row subset outer, column subset
inner).  The tuple of these vectors over l = 0..d-1, each projectively
normalized, realizes the smooth compactification of the interior as a graph
closure: interior points have every level nonzero, and for a one-parameter
family the boundary limit is read off by dividing each level by its minimal
t-adic valuation and evaluating at t=0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import BoundaryPointError, InternalInconsistencyError
from .fields import QQ, normalize_projective
from .homog import HomogPoly
from .matrix import bareiss_rank, subsets_colex
from .resultant import MapPoint, resultant_matrix, torsion_degree
from .tpoly import QT, TPoly


@dataclass(frozen=True)
class WedgeVector:
    """All r x r minors of a resultant matrix at one level, in index order."""

    level: int
    order: int  # r = m+2+level
    nrows: int
    ncols: int
    coords: tuple

    def is_zero(self):
        return not any(self.coords)

    def index_pairs(self):
        """The (row subset, column subset) labels, colex outer/inner."""
        return [
            (R, C)
            for R in subsets_colex(self.nrows, self.order)
            for C in subsets_colex(self.ncols, self.order)
        ]

    def normalized(self, field=QQ):
        coords = tuple(normalize_projective(self.coords, field))
        return WedgeVector(self.level, self.order, self.nrows, self.ncols, coords)


@dataclass(frozen=True)
class WedgeTuple:
    """Normalized level vectors for l = 0..d-1: graph coordinates of a point."""

    m: int
    levels: tuple

    def level(self, l):
        return self.levels[l]

    def __eq__(self, other):
        if not isinstance(other, WedgeTuple):
            return NotImplemented
        return (
            self.m == other.m
            and len(self.levels) == len(other.levels)
            and all(a.coords == b.coords for a, b in zip(self.levels, other.levels))
        )


def _check_wedge_params(point, m, level):
    d = point.d
    if m < d - 1:
        raise ValueError(f"m must be at least d-1 = {d - 1}, got {m}")
    if not 0 <= level <= d - 1:
        raise ValueError(f"level must lie in [0, {d - 1}], got {level}")


def wedge_coords(point, m, level, jobs=1):
    """The raw level-l minor vector of the m-th resultant matrix."""
    _check_wedge_params(point, m, level)
    matrix = resultant_matrix(point, m)
    r = m + 2 + level
    row_sets = subsets_colex(matrix.nrows, r)
    col_sets = subsets_colex(matrix.ncols, r)
    pairs = [(R, C) for R in row_sets for C in col_sets]
    if jobs > 1:
        from .parallel import map_chunks

        coords = map_chunks(_minor_chunk, matrix, pairs, jobs)
    else:
        coords = _minor_chunk(matrix, pairs)
    return WedgeVector(level, r, matrix.nrows, matrix.ncols, tuple(coords))


def _minor_chunk(matrix, pairs):
    return [matrix.minor(R, C) for R, C in pairs]


def wedge_vanishes(point, m, level):
    """Whether every level-l minor vanishes (early exit on a nonzero one).

    Same boolean as ``wedge_coords(...).is_zero()``; the early exit produces
    a nonzero witness without enumerating the remaining minors.
    """
    _check_wedge_params(point, m, level)
    matrix = resultant_matrix(point, m)
    r = m + 2 + level
    for R in subsets_colex(matrix.nrows, r):
        for C in subsets_colex(matrix.ncols, r):
            if matrix.minor(R, C):
                return False
    return True


def graph_point(point, m=None, jobs=1):
    """Graph coordinates of an interior point: every level normalized.

    Boundary points are rejected: their raw tuple has an identically zero
    level, so the rational map is undefined there (take a family limit
    instead).
    """
    if m is None:
        m = point.d - 1
    t = torsion_degree(point)
    if t > 0:
        raise BoundaryPointError(
            f"point has torsion degree {t}; graph coordinates are defined "
            f"only on the interior (use a one-parameter family limit)"
        )
    levels = []
    for l in range(point.d):
        raw = wedge_coords(point, m, l, jobs=jobs)
        if raw.is_zero():
            raise InternalInconsistencyError(
                f"interior point has vanishing level {l} minors"
            )
        levels.append(raw.normalized(point.field))
    return WedgeTuple(m, tuple(levels))


class FamilyPoint:
    """A map point whose coefficients are polynomials in t (a one-parameter
    family); the fiber at t=0 is recorded by ``limit_point``."""

    def __init__(self, point):
        if point.field != QT:
            raise ValueError("family coefficients must be t-polynomials")
        self.point = point

    @classmethod
    def from_rows(cls, rows):
        polys = [HomogPoly(r, QT) for r in rows]
        return cls(MapPoint(polys, QT))

    @property
    def d(self):
        return self.point.d

    @property
    def n(self):
        return self.point.n

    def generic_torsion_degree(self):
        """Torsion degree of the generic fiber (rank over the function field)."""
        matrix = resultant_matrix(self.point, self.d - 1)
        rank = bareiss_rank(matrix.rows, lambda a, b: a.exact_div(b), TPoly([1]))
        return 2 * self.d - rank

    def limit_point(self):
        """The fiber at t=0 with content removed: divide the whole tuple by
        the minimal t-power and evaluate, giving a nonzero map point."""
        coeffs = [c for p in self.point.polys for c in p.coeffs]
        v = min(c.valuation() for c in coeffs if c)
        rows = []
        for i in range(self.n + 1):
            rows.append(
                [c.shift_down(v).at_zero() for c in self.point.polys[i].coeffs]
            )
        return MapPoint.from_rows(rows, QQ)

    def at(self, value):
        """Specialize t to a rational value."""
        rows = [
            [c(Fraction(value)) for c in p.coeffs] for p in self.point.polys
        ]
        return MapPoint.from_rows(rows, QQ)

    def __repr__(self):
        return f"FamilyPoint(n={self.n}, d={self.d})"


def family_limit(family, m=None):
    """Limit of the graph coordinates along a family as t -> 0.

    Returns (WedgeTuple, valuations): per level, every minor is computed as a
    t-polynomial, the level is divided by t^(its minimal valuation) and
    evaluated at t=0, then normalized.  Families whose generic fiber sits in
    the boundary are rejected with the vanishing level named.
    """
    if m is None:
        m = family.d - 1
    generic_t = family.generic_torsion_degree()
    if generic_t > 0:
        raise BoundaryPointError(
            f"generic fiber has torsion degree {generic_t}: level "
            f"{family.d - generic_t} minors vanish identically in t, so the "
            f"family lies in the boundary and has no graph limit"
        )
    matrix = resultant_matrix(family.point, m)
    d = family.d
    levels = []
    valuations = []
    for l in range(d):
        r = m + 2 + l
        minors = [
            matrix.minor(R, C)
            for R in subsets_colex(matrix.nrows, r)
            for C in subsets_colex(matrix.ncols, r)
        ]
        v = min((c.valuation() for c in minors if c), default=math.inf)
        if math.isinf(v):
            raise InternalInconsistencyError(
                f"level {l} minors vanish identically despite interior generic fiber"
            )
        limit = [c.shift_down(v).at_zero() if c else Fraction(0) for c in minors]
        vec = WedgeVector(l, r, matrix.nrows, matrix.ncols, tuple(limit))
        levels.append(vec.normalized(QQ))
        valuations.append(v)
    return WedgeTuple(m, tuple(levels)), valuations
