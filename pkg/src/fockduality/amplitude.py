"""Exact scalar ring for Fock-space operator matrix elements.

An amplitude is ((a + b*i) + (c + d*i)*sqrt(2)) / q with integers a, b, c, d
and a positive integer denominator q.  This covers Gaussian integers, the
sqrt(1/2) factors introduced by the basis change on V, and the rational
coefficients that appear in angular-momentum couplings.  Equality is exact.

Irrational entries outside the ring (e.g. sqrt(6)) fall back to complex
floats at the operator level; see sparse.SparseOperator.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

_SQRT2 = 2 ** 0.5


class Amp:
    """An element of Q(i, sqrt(2)), stored as integer data."""

    __slots__ = ("a", "b", "c", "d", "q")

    def __init__(self, a=0, b=0, c=0, d=0, q=1, _normalized=False):
        if q == 0:
            raise ZeroDivisionError("amplitude denominator is zero")
        if q < 0:
            a, b, c, d, q = -a, -b, -c, -d, -q
        if not _normalized:
            if a == 0 and b == 0 and c == 0 and d == 0:
                q = 1
            else:
                g = gcd(gcd(gcd(abs(a), abs(b)), gcd(abs(c), abs(d))), q)
                if g > 1:
                    a //= g
                    b //= g
                    c //= g
                    d //= g
                    q //= g
        self.a = a
        self.b = b
        self.c = c
        self.d = d
        self.q = q

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_fraction(re, im=0):
        re = Fraction(re)
        im = Fraction(im)
        q = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        return Amp(int(re * q), int(im * q), 0, 0, q)

    # -- predicates ---------------------------------------------------

    def is_zero(self):
        return self.a == 0 and self.b == 0 and self.c == 0 and self.d == 0

    def is_rational(self):
        return self.b == 0 and self.c == 0 and self.d == 0

    def is_gaussian_int(self):
        return self.q == 1 and self.c == 0 and self.d == 0

    def __bool__(self):
        return not self.is_zero()

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        other = as_amp(other)
        q1, q2 = self.q, other.q
        if q1 == q2:
            return Amp(self.a + other.a, self.b + other.b,
                       self.c + other.c, self.d + other.d, q1)
        return Amp(self.a * q2 + other.a * q1, self.b * q2 + other.b * q1,
                   self.c * q2 + other.c * q1, self.d * q2 + other.d * q1,
                   q1 * q2)

    __radd__ = __add__

    def __neg__(self):
        return Amp(-self.a, -self.b, -self.c, -self.d, self.q, _normalized=True)

    def __sub__(self, other):
        return self + (-as_amp(other))

    def __rsub__(self, other):
        return as_amp(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return Amp(self.a * other, self.b * other,
                       self.c * other, self.d * other, self.q)
        other = as_amp(other)
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = other.a, other.b, other.c, other.d
        ra = a1 * a2 - b1 * b2 + 2 * (c1 * c2 - d1 * d2)
        rb = a1 * b2 + b1 * a2 + 2 * (c1 * d2 + d1 * c2)
        rc = a1 * c2 - b1 * d2 + c1 * a2 - d1 * b2
        rd = a1 * d2 + b1 * c2 + c1 * b2 + d1 * a2
        return Amp(ra, rb, rc, rd, self.q * other.q)

    __rmul__ = __mul__

    def conjugate(self):
        return Amp(self.a, -self.b, self.c, -self.d, self.q, _normalized=True)

    def inverse(self):
        """Multiplicative inverse in Q(i, sqrt(2))."""
        if self.is_zero():
            raise ZeroDivisionError("inverting zero amplitude")
        # v = (x + y*sqrt2)/q with Gaussian x, y; 1/v = q*(x - y*sqrt2)/(x^2 - 2 y^2)
        xr, xi, yr, yi = self.a, self.b, self.c, self.d
        nr = xr * xr - xi * xi - 2 * (yr * yr - yi * yi)
        ni = 2 * xr * xi - 4 * yr * yi
        # divide (x - y*sqrt2) by the Gaussian number n = nr + ni*i
        n2 = nr * nr + ni * ni
        # (u)/(n) = u * conj(n) / |n|^2, applied to both components
        ra = xr * nr + xi * ni
        rb = xi * nr - xr * ni
        rc = -(yr * nr + yi * ni)
        rd = -(yi * nr - yr * ni)
        return Amp(self.q * ra, self.q * rb, self.q * rc, self.q * rd, n2)

    def __truediv__(self, other):
        return self * as_amp(other).inverse()

    def __rtruediv__(self, other):
        return as_amp(other) * self.inverse()

    # -- comparisons --------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = as_amp(other)
        if not isinstance(other, Amp):
            return NotImplemented
        return (self.a == other.a and self.b == other.b and
                self.c == other.c and self.d == other.d and self.q == other.q)

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d, self.q))

    # -- conversions --------------------------------------------------

    def to_complex(self):
        return complex((self.a + self.c * _SQRT2) / self.q,
                       (self.b + self.d * _SQRT2) / self.q)

    def rational_parts(self):
        """Return ((re1, im1), (re2, im2)) with value = z1 + z2*sqrt(2), as Fractions."""
        q = self.q
        return ((Fraction(self.a, q), Fraction(self.b, q)),
                (Fraction(self.c, q), Fraction(self.d, q)))

    def to_json(self):
        """Serialize; pure terms use the {re, im, sqrt2pow} schema."""
        (re1, im1), (re2, im2) = self.rational_parts()
        if re2 == 0 and im2 == 0:
            return {"re": str(re1), "im": str(im1), "sqrt2pow": 0}
        if re1 == 0 and im1 == 0:
            return {"re": str(re2), "im": str(im2), "sqrt2pow": 1}
        return {"terms": [{"re": str(re1), "im": str(im1), "sqrt2pow": 0},
                          {"re": str(re2), "im": str(im2), "sqrt2pow": 1}]}

    def __repr__(self):
        parts = []
        if self.a or self.b:
            parts.append(f"({self.a}{self.b:+d}i)")
        if self.c or self.d:
            parts.append(f"({self.c}{self.d:+d}i)*sqrt2")
        body = "+".join(parts) if parts else "0"
        return body if self.q == 1 else f"({body})/{self.q}"


ZERO = Amp(0)
ONE = Amp(1)
MINUS_ONE = Amp(-1)
I_UNIT = Amp(0, 1)
SQRT2 = Amp(0, 0, 1)
SQRT_HALF = Amp(0, 0, 1, 0, 2)
HALF = Amp(1, 0, 0, 0, 2)


def as_amp(x):
    """Coerce an int, Fraction or Amp to Amp."""
    if isinstance(x, Amp):
        return x
    if isinstance(x, int):
        return Amp(x)
    if isinstance(x, Fraction):
        return Amp.from_fraction(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to Amp")


def i_power(n):
    """i**n as an Amp."""
    return (ONE, I_UNIT, MINUS_ONE, Amp(0, -1))[n % 4]


def sqrt_int(n):
    """sqrt(n) as an Amp for n = s**2 or 2*s**2, else None."""
    if n < 0:
        raise ValueError("negative radicand")
    s = isqrt(n)
    if s * s == n:
        return Amp(s)
    if n % 2 == 0:
        s = isqrt(n // 2)
        if 2 * s * s == n:
            return Amp(0, 0, s)
    return None
