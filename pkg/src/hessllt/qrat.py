"""Exact rational-function arithmetic in one grading variable q.

All coefficients are arbitrary-precision rationals (fractions.Fraction);
nothing in this package touches floating point.  A QPoly is a dense tuple
of coefficients indexed by the power of q, with trailing zeros stripped,
so the zero polynomial is the empty tuple and its degree is None rather
than a number.  A QRat is a quotient of two QPoly values kept in canonical
form:

    gcd(numerator, denominator) = 1 and the denominator is monic.

Equality and hashing are therefore structural.  Laurent behavior needs no
separate type: substituting q -> 1/q returns a QRat whose denominator is a
power of q.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .errors import PoleError

Scalar = Union[int, Fraction]
RatLike = Union["QRat", "QPoly", int, Fraction]


def _strip(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class QPoly:
    """Dense univariate polynomial in q over Fraction."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self.coeffs: tuple[Fraction, ...] = _strip([Fraction(c) for c in coeffs])

    @staticmethod
    def zero() -> QPoly:
        return QPoly()

    @staticmethod
    def one() -> QPoly:
        return QPoly([1])

    @staticmethod
    def q() -> QPoly:
        return QPoly([0, 1])

    @staticmethod
    def monomial(k: int, c: Scalar = 1) -> QPoly:
        """c * q^k with k >= 0."""
        if k < 0:
            raise ValueError("monomial exponent must be nonnegative")
        return QPoly([0] * k + [c])

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial (never a valid index)."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __add__(self, other: QPoly) -> QPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    def __neg__(self) -> QPoly:
        return QPoly([-c for c in self.coeffs])

    def __sub__(self, other: QPoly) -> QPoly:
        return self + (-other)

    def __mul__(self, other: QPoly) -> QPoly:
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return QPoly(out)

    def scale(self, c: Scalar) -> QPoly:
        c = Fraction(c)
        return QPoly([a * c for a in self.coeffs])

    def __pow__(self, k: int) -> QPoly:
        if k < 0:
            raise ValueError("negative power of a QPoly; use QRat")
        out, base = QPoly.one(), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divmod(self, other: QPoly) -> tuple[QPoly, QPoly]:
        """Exact polynomial division with remainder."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd, dq = len(other.coeffs) - 1, other.leading()
        quot = [Fraction(0)] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i] / dq
            if c:
                quot[i - dd] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - dd + j] -= c * b
        return QPoly(quot), QPoly(rem)

    def monic(self) -> QPoly:
        if self.is_zero():
            return self
        lead = self.leading()
        return QPoly([c / lead for c in self.coeffs])

    def gcd(self, other: QPoly) -> QPoly:
        """Monic greatest common divisor."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def evaluate(self, point: Scalar) -> Fraction:
        point = Fraction(point)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def compose_power(self, k: int) -> QPoly:
        """Substitute q -> q^k for k >= 1."""
        if k < 1:
            raise ValueError("power substitution needs k >= 1")
        out = [Fraction(0)] * (k * len(self.coeffs) or 1)
        for i, c in enumerate(self.coeffs):
            out[k * i] = c
        return QPoly(out)

    def compose_shift(self, c: Scalar) -> QPoly:
        """Substitute q -> q + c."""
        shift = QPoly([Fraction(c), Fraction(1)])
        acc = QPoly()
        for a in reversed(self.coeffs):
            acc = acc * shift + QPoly([a])
        return acc

    def reversed_to(self, deg: int) -> QPoly:
        """q^deg * p(1/q), valid when deg >= degree of p."""
        if self.is_zero():
            return self
        if deg < len(self.coeffs) - 1:
            raise ValueError("reversal degree below polynomial degree")
        out = [Fraction(0)] * (deg + 1)
        for i, c in enumerate(self.coeffs):
            out[deg - i] = c
        return QPoly(out)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"QPoly({format_poly(self)})"


def format_poly(p: QPoly) -> str:
    """Human form with decreasing powers, e.g. 'q^2 + 2*q - 1/2'."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        if k == 0:
            body = str(abs(c))
        else:
            mag = abs(c)
            var = "q" if k == 1 else f"q^{k}"
            body = var if mag == 1 else f"{mag}*{var}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


class QRat:
    """Reduced quotient of two QPoly values with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: QPoly | Iterable[Scalar] = (), den: QPoly | Iterable[Scalar] = (1,)):
        if not isinstance(num, QPoly):
            num = QPoly(num)
        if not isinstance(den, QPoly):
            den = QPoly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = QPoly(), QPoly.one()
            return
        g = num.gcd(den)
        if g.degree:
            num = num.divmod(g)[0]
            den = den.divmod(g)[0]
        lead = den.leading()
        if lead != 1:
            num = num.scale(Fraction(1) / lead)
            den = den.scale(Fraction(1) / lead)
        self.num, self.den = num, den

    @staticmethod
    def zero() -> QRat:
        return QRat()

    @staticmethod
    def one() -> QRat:
        return QRat((1,))

    @staticmethod
    def q() -> QRat:
        return QRat((0, 1))

    @staticmethod
    def of(value: RatLike) -> QRat:
        if isinstance(value, QRat):
            return value
        if isinstance(value, QPoly):
            return QRat(value)
        return QRat((Fraction(value),))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den == QPoly.one()

    def as_poly(self) -> QPoly:
        if not self.is_polynomial():
            raise ValueError(f"not a polynomial: {self}")
        return self.num

    def __add__(self, other: RatLike) -> QRat:
        o = QRat.of(other)
        return QRat(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> QRat:
        return QRat(-self.num, self.den)

    def __sub__(self, other: RatLike) -> QRat:
        return self + (-QRat.of(other))

    def __rsub__(self, other: RatLike) -> QRat:
        return QRat.of(other) + (-self)

    def __mul__(self, other: RatLike) -> QRat:
        o = QRat.of(other)
        return QRat(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other: RatLike) -> QRat:
        o = QRat.of(other)
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return QRat(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other: RatLike) -> QRat:
        return QRat.of(other) / self

    def __pow__(self, k: int) -> QRat:
        if k < 0:
            if self.is_zero():
                raise ZeroDivisionError("negative power of zero")
            return QRat(self.den, self.num) ** (-k)
        return QRat(self.num ** k, self.den ** k)

    def subs_q_inverse(self) -> QRat:
        """Substitute q -> 1/q."""
        if self.is_zero():
            return self
        d = max(len(self.num.coeffs), len(self.den.coeffs)) - 1
        return QRat(self.num.reversed_to(d), self.den.reversed_to(d))

    def subs_q_power(self, k: int) -> QRat:
        """Substitute q -> q^k, k >= 1."""
        return QRat(self.num.compose_power(k), self.den.compose_power(k))

    def subs_q_shift(self, c: Scalar) -> QRat:
        """Substitute q -> q + c."""
        return QRat(self.num.compose_shift(c), self.den.compose_shift(c))

    def subs_q_plus_one(self) -> QRat:
        return self.subs_q_shift(1)

    def evaluate(self, point: Scalar) -> Fraction:
        """Value at a rational point; the canonical form makes poles genuine."""
        dv = self.den.evaluate(point)
        if dv == 0:
            raise PoleError(f"pole at q = {Fraction(point)}")
        return self.num.evaluate(point) / dv

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, QPoly)):
            other = QRat.of(other)
        return (
            isinstance(other, QRat)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self) -> int:
        return hash((self.num.coeffs, self.den.coeffs))

    def to_string(self) -> str:
        """Canonical serialization '(num)/(den)' with integer coefficients.

        Both polynomials are scaled by the same positive rational so that all
        printed coefficients are integers with overall gcd 1 and the
        denominator's leading coefficient is positive.
        """
        if self.is_zero():
            return "(0)/(1)"
        dens = [c.denominator for c in self.num.coeffs + self.den.coeffs]
        lcm = 1
        for d in dens:
            g = _gcd(lcm, d)
            lcm = lcm // g * d
        nums = [c * lcm for c in self.num.coeffs + self.den.coeffs]
        g = 0
        for c in nums:
            g = _gcd(g, abs(c.numerator))
        scale = Fraction(lcm, g if g else 1)
        num = self.num.scale(scale)
        den = self.den.scale(scale)
        if den.leading() < 0:
            num, den = num.scale(-1), den.scale(-1)
        return f"({format_poly(num)})/({format_poly(den)})"

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"QRat{self.to_string()}"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def substitute(value: QRat, target: str, k: int | None = None, point: Scalar | None = None) -> QRat | Fraction:
    """Dispatch substitution by name.

    target is one of 'q_inverse', 'q_plus_one', 'q_power' (needs k) and
    'rational_point' (needs point, returns a Fraction).
    """
    if target == "q_inverse":
        return value.subs_q_inverse()
    if target == "q_plus_one":
        return value.subs_q_plus_one()
    if target == "q_power":
        if k is None:
            raise ValueError("q_power substitution needs k")
        return value.subs_q_power(k)
    if target == "rational_point":
        if point is None:
            raise ValueError("rational_point substitution needs a point")
        return value.evaluate(point)
    raise ValueError(f"unknown substitution target: {target!r}")
