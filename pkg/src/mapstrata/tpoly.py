"""Univariate polynomials in the deformation parameter t over Q.

These serve as the coefficient ring for one-parameter families of map
points: minors of a family's resultant matrix are TPoly values, whose
valuations at t=0 drive the boundary-limit computation.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import ExactDivisionError


class TPoly:
    """A polynomial in t with rational coefficients, trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c):
        return cls([c])

    @classmethod
    def t_power(cls, k, c=1):
        return cls([0] * k + [c])

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else -1

    def valuation(self):
        """Order of vanishing at t=0; +inf for the zero polynomial."""
        if not self.coeffs:
            return math.inf
        return next(i for i, c in enumerate(self.coeffs) if c)

    def __add__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return TPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return TPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return TPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return TPoly(out)

    __rmul__ = __mul__

    def exact_div(self, other):
        """Exact quotient; raises ExactDivisionError on a remainder."""
        other = _lift(other)
        if other is None or other.is_zero():
            raise ZeroDivisionError("division by zero t-polynomial")
        if self.is_zero():
            return TPoly()
        rem = list(self.coeffs)
        div = other.coeffs
        lead = div[-1]
        if len(rem) < len(div):
            raise ExactDivisionError("quotient would not be polynomial")
        q = [Fraction(0)] * (len(rem) - len(div) + 1)
        for k in range(len(q) - 1, -1, -1):
            c = rem[k + len(div) - 1] / lead
            q[k] = c
            if c:
                for i, d in enumerate(div):
                    rem[k + i] -= c * d
        if any(rem):
            raise ExactDivisionError("t-polynomial division left a remainder")
        return TPoly(q)

    def shift_down(self, v):
        """Divide by t^v (requires valuation >= v)."""
        if v == 0:
            return self
        if self.is_zero():
            return self
        if any(self.coeffs[:v]):
            raise ExactDivisionError(f"valuation below {v}")
        return TPoly(self.coeffs[v:])

    def at_zero(self):
        """The value at t=0 as a Fraction."""
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __call__(self, value):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def is_constant(self):
        return len(self.coeffs) <= 1

    def __eq__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                tp = "t" if i == 1 else f"t^{i}"
                if c == 1:
                    parts.append(tp)
                elif c == -1:
                    parts.append(f"-{tp}")
                else:
                    parts.append(f"{c}{tp}")
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    def __repr__(self):
        return f"TPoly({self})"


def _lift(v):
    if isinstance(v, TPoly):
        return v
    if isinstance(v, (int, Fraction)):
        return TPoly([v])
    return None


class TPolyRing:
    """Ring context so HomogPoly can take t-polynomial coefficients."""

    name = "Q[t]"
    characteristic = 0

    def scalar(self, v=0):
        lifted = _lift(v)
        if lifted is None:
            raise TypeError(f"cannot coerce {v!r} into Q[t]")
        return lifted

    @property
    def zero(self):
        return TPoly()

    @property
    def one(self):
        return TPoly([1])

    def parse(self, token):
        return parse_tpoly(token)

    def format(self, x):
        return str(x)

    def __eq__(self, other):
        return isinstance(other, TPolyRing)

    def __hash__(self):
        return hash("Q[t]")

    def __repr__(self):
        return "QT"


QT = TPolyRing()

_TERM_RE = re.compile(
    r"(?P<sign>[+-]?)(?P<coeff>\d+(/\d+)?)?(?P<t>t(\^(?P<exp>\d+))?)?"
)


def parse_tpoly(token):
    """Parse a compact t-polynomial like ``1+2t^2-t`` or ``3/2``."""
    if not token:
        raise ValueError("empty t-polynomial token")
    pos = 0
    terms = []
    while pos < len(token):
        m = _TERM_RE.match(token, pos)
        if not m or m.end() == pos or (m.group("coeff") is None and m.group("t") is None):
            raise ValueError(f"bad t-polynomial near {token[pos:]!r}")
        coeff = Fraction(m.group("coeff")) if m.group("coeff") else Fraction(1)
        if m.group("sign") == "-":
            coeff = -coeff
        if m.group("t"):
            exp = int(m.group("exp")) if m.group("exp") else 1
        else:
            exp = 0
        terms.append((exp, coeff))
        pos = m.end()
    out = [Fraction(0)] * (max(e for e, _ in terms) + 1)
    for e, c in terms:
        out[e] += c
    return TPoly(out)
