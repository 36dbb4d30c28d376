"""Virtual Hodge polynomials and Betti topology of the compactification.

Everything lives on the lambda = uv diagonal (the spaces involved are
projective spaces, products and blowups, so the two-variable polynomial
carries nothing extra).  The blowup recursion and its closed composition-sum
form are computed independently and must agree identically; polynomial
divisions check their remainders and fail loudly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ExactDivisionError


class LambdaPoly:
    """Integer polynomial in lambda, dense coefficients, constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls([1])

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @classmethod
    def all_ones(cls, length):
        """1 + lambda + ... + lambda^(length-1)."""
        return cls([1] * length)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else -1

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return LambdaPoly(out)

    def __sub__(self, other):
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return LambdaPoly(out)

    def __neg__(self):
        return LambdaPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return LambdaPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return LambdaPoly(out)

    def div_exact(self, other):
        """Exact polynomial quotient; remainder must be identically zero."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LambdaPoly()
        rem = list(self.coeffs)
        div = other.coeffs
        lead = div[-1]
        if len(rem) < len(div):
            raise ExactDivisionError("quotient would not be polynomial")
        q = [0] * (len(rem) - len(div) + 1)
        for k in range(len(q) - 1, -1, -1):
            c, r = divmod(rem[k + len(div) - 1], lead)
            if r:
                raise ExactDivisionError("division left a remainder")
            q[k] = c
            if c:
                for i, dcf in enumerate(div):
                    rem[k + i] -= c * dcf
        if any(rem):
            raise ExactDivisionError("division left a remainder")
        return LambdaPoly(q)

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def is_palindromic(self):
        return self.coeffs == self.coeffs[::-1]

    def __eq__(self, other):
        if not isinstance(other, LambdaPoly):
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
                lam = "L" if i == 1 else f"L^{i}"
                if c == 1:
                    parts.append(lam)
                elif c == -1:
                    parts.append(f"-{lam}")
                else:
                    parts.append(f"{c}{lam}")
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    def __repr__(self):
        return f"LambdaPoly({self})"


_LAMBDA_MINUS_ONE = LambdaPoly([-1, 1])


def blowup_factor(i, n):
    """Contribution of one blowup center of codimension n*i:
    ((L^(i+1)-1)/(L-1)) * ((L^(n*i)-L)/(L-1)); zero when n*i = 1."""
    if i < 1 or n < 1:
        raise ValueError("need i >= 1 and n >= 1")
    first = (LambdaPoly.monomial(i + 1) - LambdaPoly.one()).div_exact(_LAMBDA_MINUS_ONE)
    second = (LambdaPoly.monomial(n * i) - LambdaPoly.monomial(1)).div_exact(
        _LAMBDA_MINUS_ONE
    )
    return first * second


def e_map_space(d, n):
    """Hodge polynomial of the naive compactification, a projective space of
    dimension (d+1)(n+1)-1."""
    if d < 0 or n < 1:
        raise ValueError("need d >= 0 and n >= 1")
    return LambdaPoly.all_ones((d + 1) * (n + 1))


def e_blowup_recursive(d, n, _memo=None):
    """Hodge polynomial of the iterated blowup, by the stratum recursion."""
    if d < 0 or n < 1:
        raise ValueError("need d >= 0 and n >= 1")
    if _memo is None:
        _memo = {}
    if d in _memo:
        return _memo[d]
    acc = e_map_space(d, n)
    for k in range(d):
        acc = acc + e_blowup_recursive(k, n, _memo) * blowup_factor(d - k, n)
    _memo[d] = acc
    return acc


def compositions(total):
    """Ordered tuples of positive integers summing to total (the empty tuple
    for total = 0)."""
    if total == 0:
        yield ()
        return
    for head in range(1, total + 1):
        for tail in compositions(total - head):
            yield (head,) + tail


def e_blowup_closed(d, n):
    """The closed composition-sum form; must agree with the recursion."""
    if d < 0 or n < 1:
        raise ValueError("need d >= 0 and n >= 1")
    acc = LambdaPoly.zero()
    for size in range(d + 1):
        for alpha in compositions(size):
            term = e_map_space(d - size, n)
            for part in alpha:
                term = term * blowup_factor(part, n)
            acc = acc + term
    return acc


@dataclass
class BettiReport:
    d: int
    n: int
    betti_even: list  # b_{2i} = coefficient of lambda^i; odd Betti all zero
    euler: int

    def as_dict(self):
        return {
            "d": self.d,
            "n": self.n,
            "betti_even": list(self.betti_even),
            "euler_characteristic": self.euler,
        }


def betti(d, n):
    """Even Betti numbers (coefficients of the blowup polynomial) and the
    Euler characteristic; odd cohomology vanishes for these spaces."""
    e = e_blowup_recursive(d, n)
    return BettiReport(d=d, n=n, betti_even=list(e.coeffs), euler=e(1))


@dataclass
class PicardReport:
    d: int
    n: int
    coefficient: int
    expected: int
    match: bool
    note: str = ""

    def as_dict(self):
        return {
            "d": self.d,
            "n": self.n,
            "lambda_coefficient": self.coefficient,
            "expected_rank": self.expected,
            "match": self.match,
            "note": self.note,
        }


def picard_check(d, n):
    """Compare the lambda-coefficient of the blowup polynomial with the
    divisor-class rank d+1.  For n = 1 the codimension-1 centers contribute
    nothing, so a mismatch there is reported as a finding, never asserted."""
    if d < 1:
        raise ValueError("need d >= 1")
    c1 = e_blowup_recursive(d, n).coeff(1)
    match = c1 == d + 1
    note = ""
    if not match and n == 1:
        note = (
            "codimension-1 centers (n*i = 1) contribute no classes; "
            "flagged finding, not a failure"
        )
    return PicardReport(d=d, n=n, coefficient=c1, expected=d + 1, match=match, note=note)
