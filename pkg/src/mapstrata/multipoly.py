"""Sparse multivariate polynomials over Q with a fixed variable list.

Monomials are dense exponent tuples against the ring's variable list; the
term order is graded reverse lexicographic with the list order as given.
Polynomials never store zero coefficients or duplicate exponent vectors.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .errors import ExactDivisionError


class PolyRing:
    """Context object fixing the ordered variable list."""

    __slots__ = ("names",)

    def __init__(self, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        self.names = names

    @property
    def nvars(self):
        return len(self.names)

    def var(self, name):
        i = self.names.index(name)
        exps = [0] * self.nvars
        exps[i] = 1
        return MultiPoly({tuple(exps): Fraction(1)}, self)

    def gens(self):
        return [self.var(n) for n in self.names]

    def const(self, c):
        c = Fraction(c)
        if not c:
            return MultiPoly({}, self)
        return MultiPoly({(0,) * self.nvars: c}, self)

    @property
    def zero(self):
        return MultiPoly({}, self)

    @property
    def one(self):
        return self.const(1)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and other.names == self.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"PolyRing({', '.join(self.names)})"


def grevlex_key(mono):
    """Sort key: larger key = larger monomial in graded reverse lex."""
    return (sum(mono), tuple(-e for e in reversed(mono)))


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


class MultiPoly:
    """Immutable sparse polynomial; ``terms`` maps exponent tuple -> Fraction."""

    __slots__ = ("terms", "ring")

    def __init__(self, terms, ring):
        self.terms = {m: c for m, c in terms.items() if c}
        self.ring = ring

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def total_degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def leading_monomial(self):
        return max(self.terms, key=grevlex_key)

    def leading_coeff(self):
        return self.terms[self.leading_monomial()]

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, Fraction(0)) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return MultiPoly(out, self.ring)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({m: -c for m, c in self.terms.items()}, self.ring)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, Fraction(0)) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return MultiPoly(out, self.ring)

    __rmul__ = __mul__

    def scale(self, c):
        c = Fraction(c)
        return MultiPoly({m: v * c for m, v in self.terms.items()}, self.ring)

    def _lift(self, v):
        if isinstance(v, MultiPoly):
            if v.ring != self.ring:
                raise ValueError("mixed polynomial rings")
            return v
        if isinstance(v, (int, Fraction)):
            return self.ring.const(v)
        return None

    def exact_div(self, other):
        """Exact quotient by a single divisor; raises on a remainder."""
        other = self._lift(other)
        if other is None or other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self.ring.zero
        lm, lc = other.leading_monomial(), other.leading_coeff()
        rem = dict(self.terms)
        q = {}
        while rem:
            m = max(rem, key=grevlex_key)
            if not mono_divides(lm, m):
                raise ExactDivisionError("polynomial division left a remainder")
            qm = mono_div(m, lm)
            qc = rem[m] / lc
            q[qm] = qc
            for m2, c2 in other.terms.items():
                mm = mono_mul(qm, m2)
                s = rem.get(mm, Fraction(0)) - qc * c2
                if s:
                    rem[mm] = s
                else:
                    rem.pop(mm, None)
        return MultiPoly(q, self.ring)

    def primitive(self):
        """Content-stripped copy with positive leading coefficient."""
        if self.is_zero():
            return self
        den = lcm(*(c.denominator for c in self.terms.values()))
        num = gcd(*(c.numerator for c in self.terms.values()))
        factor = Fraction(den, num)
        if self.leading_coeff() < 0:
            factor = -factor
        return self.scale(factor)

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(1 / self.leading_coeff())

    def subs(self, values):
        """Evaluate at a full point (sequence of Fractions per variable)."""
        acc = Fraction(0)
        for m, c in self.terms.items():
            term = c
            for v, e in zip(values, m):
                if e:
                    term *= Fraction(v) ** e
            acc += term
        return acc

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: grevlex_key(kv[0]), reverse=True)

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.ring.names, m)
                if e
            ]
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    def __repr__(self):
        return f"MultiPoly({self})"
