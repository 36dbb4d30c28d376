"""Exact scalars: arbitrary-precision rationals and prime fields F_p.

Rationals are stdlib ``fractions.Fraction`` (always reduced, positive
denominator).  F_p elements carry their modulus.  The field context objects
(``QQ``, ``GF(p)``) construct, parse and format scalars and are what the rest
of the package passes around; both kinds of scalar support ``+ - * /`` and
truthiness, which is all the linear algebra needs.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import FieldMismatchError

_RAT_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def _is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class Fp:
    """Element of F_p, stored as the canonical representative in [0, p)."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        self.value = value % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise FieldMismatchError(f"mixed moduli {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return Fp(other, self.p)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return Fp(self.value + other.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return Fp(self.value - other.value, self.p)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return Fp(other.value - self.value, self.p)

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return Fp(self.value * other.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if other.value == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return Fp(self.value * pow(other.value, self.p - 2, self.p), self.p)

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other / self

    def __neg__(self):
        return Fp(-self.value, self.p)

    def __pow__(self, e):
        return Fp(pow(self.value, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"Fp({self.value}, {self.p})"


class RationalField:
    """The rational numbers; scalars are fractions.Fraction."""

    name = "Q"
    characteristic = 0

    def scalar(self, v=0):
        if isinstance(v, Fraction):
            return v
        if isinstance(v, int):
            return Fraction(v)
        raise TypeError(f"cannot coerce {v!r} into Q")

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def parse(self, token):
        if not _RAT_RE.match(token):
            raise ValueError(f"not a rational scalar: {token!r}")
        try:
            return Fraction(token)
        except ZeroDivisionError:
            raise ValueError(f"zero denominator: {token!r}") from None

    def format(self, x):
        return str(x)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class PrimeField:
    """F_p for a prime p < 2^31; scalars are Fp instances."""

    characteristic_bound = 2**31

    def __init__(self, p):
        if not isinstance(p, int) or not _is_prime(p):
            raise ValueError(f"modulus must be prime, got {p}")
        if p >= self.characteristic_bound:
            raise ValueError(f"modulus {p} too large (must be < 2^31)")
        self.p = p

    @property
    def name(self):
        return f"Fp:{self.p}"

    @property
    def characteristic(self):
        return self.p

    def scalar(self, v=0):
        if isinstance(v, Fp):
            if v.p != self.p:
                raise FieldMismatchError(f"mixed moduli {self.p} and {v.p}")
            return v
        if isinstance(v, int):
            return Fp(v, self.p)
        if isinstance(v, Fraction):
            if v.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator of {v} vanishes mod {self.p}")
            return Fp(v.numerator, self.p) / Fp(v.denominator, self.p)
        raise TypeError(f"cannot coerce {v!r} into F_{self.p}")

    @property
    def zero(self):
        return Fp(0, self.p)

    @property
    def one(self):
        return Fp(1, self.p)

    def parse(self, token):
        if not re.match(r"^[+-]?\d+$", token):
            raise ValueError(f"not an F_{self.p} scalar: {token!r}")
        return Fp(int(token), self.p)

    def format(self, x):
        return str(x.value)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


_gf_cache = {}


def GF(p):
    """The prime field with p elements (cached per modulus)."""
    if p not in _gf_cache:
        _gf_cache[p] = PrimeField(p)
    return _gf_cache[p]


def field_by_name(name):
    """Inverse of field.name: "Q" or "Fp:<p>"."""
    if name == "Q":
        return QQ
    if name.startswith("Fp:"):
        return GF(int(name[3:]))
    raise ValueError(f"unknown field name {name!r}")


def normalize_projective(coords, field):
    """Canonical representative of a nonzero coordinate vector up to scale.

    Divides by the first nonzero entry; over Q additionally clears
    denominators and strips integer content, so the result is a primitive
    integer vector whose first nonzero entry is positive.
    """
    pivot = next((c for c in coords if c), None)
    if pivot is None:
        raise ValueError("zero vector has no projective normalization")
    scaled = [c / pivot for c in coords]
    if field.characteristic == 0:
        denom_lcm = math.lcm(*(c.denominator for c in scaled))
        num_gcd = math.gcd(*(c.numerator for c in scaled))
        factor = Fraction(denom_lcm, num_gcd)
        scaled = [c * factor for c in scaled]
    return scaled
