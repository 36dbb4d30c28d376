"""Homogeneous bivariate forms and their gcd.

A degree-d form is stored densely as the coefficients (a_0, ..., a_d) of the
monomials x^(d-j) y^j.  The gcd of forms is computed by the Euclidean
algorithm on dehomogenizations, with explicit bookkeeping of common x- and
y-power factors (a leading run of zero coefficients is a power of y, a
trailing run is a power of x).
"""

from __future__ import annotations

from .errors import ExactDivisionError, FieldMismatchError
from .fields import QQ


class HomogPoly:
    """A homogeneous form sum_j coeffs[j] * x^(degree-j) * y^j."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs, field=QQ):
        self.coeffs = tuple(field.scalar(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("a form needs at least one coefficient")
        self.field = field

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, HomogPoly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.field.name))

    def __mul__(self, other):
        if not isinstance(other, HomogPoly):
            return NotImplemented
        if self.field != other.field:
            raise FieldMismatchError(
                f"cannot multiply forms over {self.field.name} and {other.field.name}"
            )
        zero = self.field.zero
        out = [zero] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return HomogPoly(out, self.field)

    def scale(self, c):
        c = self.field.scalar(c)
        return HomogPoly([a * c for a in self.coeffs], self.field)

    def normalized(self):
        """Scale so the first nonzero coefficient equals 1."""
        pivot = next((c for c in self.coeffs if c), None)
        if pivot is None:
            raise ValueError("cannot normalize the zero form")
        return HomogPoly([c / pivot for c in self.coeffs], self.field)

    def __str__(self):
        if self.is_zero():
            return "0"
        d = self.degree
        parts = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "*".join(
                filter(None, [_pow_str("x", d - j), _pow_str("y", j)])
            )
            if not mono:
                parts.append(str(c))
            elif c == self.field.one:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"HomogPoly([{', '.join(map(str, self.coeffs))}], {self.field!r})"


def _pow_str(var, e):
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}"


def form(field, *coeffs):
    """Shorthand constructor: form(QQ, 1, 0, -1) is x^2 - y^2."""
    return HomogPoly(coeffs, field)


def _strip_powers(f):
    # f = x^xp * y^yp * core, where core has nonzero first and last coeff
    first = next(j for j, c in enumerate(f.coeffs) if c)
    last = max(j for j, c in enumerate(f.coeffs) if c)
    core = f.coeffs[first : last + 1]
    return f.degree - last, first, core


def _uni_rem(u, v, field):
    # remainder of u by v, coefficient lists in descending x-powers, v[0] != 0
    u = list(u)
    lead = v[0]
    while len(u) >= len(v):
        q = u[0] / lead
        for i in range(len(v)):
            u[i] = u[i] - q * v[i]
        u.pop(0)
        while u and not u[0]:
            u.pop(0)
        if not u:
            break
    return u


def _uni_gcd(u, v, field):
    u, v = list(u), list(v)
    while v:
        u, v = v, _uni_rem(u, v, field)
    return u


def _gcd2(f, g):
    xf, yf, uf = _strip_powers(f)
    xg, yg, ug = _strip_powers(g)
    core = _uni_gcd(list(uf), list(ug), f.field)
    xp, yp = min(xf, xg), min(yf, yg)
    coeffs = [f.field.zero] * yp + list(core) + [f.field.zero] * xp
    return HomogPoly(coeffs, f.field)


def form_gcd(forms):
    """Greatest common divisor of a nonempty family of forms.

    Zero forms are ignored; the result is normalized so its first nonzero
    coefficient is 1.  Raises on an all-zero family.
    """
    forms = list(forms)
    if not forms:
        raise ValueError("gcd of an empty family")
    field = forms[0].field
    if any(f.field != field for f in forms):
        raise FieldMismatchError("gcd inputs over mixed fields")
    nonzero = [f for f in forms if f]
    if not nonzero:
        raise ValueError("gcd of an all-zero family")
    g = nonzero[0]
    for f in nonzero[1:]:
        if g.degree == 0:
            break
        g = _gcd2(g, f)
    return g.normalized()


def form_divexact(f, h):
    """Exact quotient f / h of homogeneous forms; raises if h does not divide f."""
    if f.field != h.field:
        raise FieldMismatchError("division over mixed fields")
    if h.is_zero():
        raise ZeroDivisionError("division by the zero form")
    if f.is_zero():
        return HomogPoly([f.field.zero] * max(f.degree - h.degree + 1, 1), f.field)
    if f.degree < h.degree:
        raise ExactDivisionError(f"{h} does not divide {f}")
    i0 = next(j for j, c in enumerate(h.coeffs) if c)
    lead = h.coeffs[i0]
    dq = f.degree - h.degree
    q = []
    for j in range(dq + 1):
        acc = f.coeffs[j + i0]
        for i in range(max(0, j + i0 - h.degree), j):
            acc = acc - q[i] * h.coeffs[j + i0 - i]
        q.append(acc / lead)
    quotient = HomogPoly(q, f.field)
    if quotient * h != f:
        raise ExactDivisionError(f"{h} does not divide {f}")
    return quotient
