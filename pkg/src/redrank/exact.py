"""Exact scalar arithmetic for the rank-bound toolkit.

Provides the real quadratic field Q(sqrt2) (class QSqrt2), exact ratios of
Gamma values at integer and half-integer arguments (GammaRatio), and
directed decimal rendering of exact quantities.  Everything is built on
fractions.Fraction and Python integers; no floating point enters any
comparison or verdict.

All values are immutable and every function is pure, so the module is safe
for concurrent use.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from math import factorial, isqrt
from typing import Union

Rational = Union[int, Fraction]

# 50 decimal digits of pi, verified against a 60-digit independent
# evaluation in the test suite.  Used only for one-sided rounding of
# reported values that carry a power of pi; never for a verdict.
_PI_DIGITS = "314159265358979323846264338327950288419716939937510"
PI_LO = Fraction(int(_PI_DIGITS), 10 ** 50)
PI_HI = Fraction(int(_PI_DIGITS) + 1, 10 ** 50)


def _floor_int_sqrt2(b: int) -> int:
    """floor(b * sqrt(2)) for an integer b, exactly."""
    if b == 0:
        return 0
    if b > 0:
        return isqrt(2 * b * b)
    # sqrt(2)*|b| is irrational for b != 0, so the floor is never exact
    return -isqrt(2 * b * b) - 1


def _as_fraction(x: Rational) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


@total_ordering
class QSqrt2:
    """An element a + b*sqrt(2) of the field Q(sqrt2), held exactly.

    Comparisons resolve the sign of a + b*sqrt(2) by comparing a^2 with
    2*b^2, so ordering is exact.  Instances are immutable and hashable;
    a value with b == 0 hashes like the plain rational it equals.
    """

    __slots__ = ("a", "b")

    def __init__(self, a: Rational = 0, b: Rational = 0) -> None:
        object.__setattr__(self, "a", _as_fraction(a))
        object.__setattr__(self, "b", _as_fraction(b))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("QSqrt2 is immutable")

    # ── constructors ──────────────────────────────────────────────

    @classmethod
    def sqrt2(cls) -> "QSqrt2":
        return cls(0, 1)

    @classmethod
    def from_rational(cls, x: Rational) -> "QSqrt2":
        return cls(x, 0)

    # ── predicates and coercion ──────────────────────────────────

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if self.b != 0:
            raise ValueError(f"{self!r} is irrational")
        return self.a

    @staticmethod
    def _coerce(x: object) -> "QSqrt2 | None":
        if isinstance(x, QSqrt2):
            return x
        if isinstance(x, (int, Fraction)):
            return QSqrt2(x, 0)
        return None

    # ── arithmetic ───────────────────────────────────────────────

    def __add__(self, other: object) -> "QSqrt2":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt2(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other: object) -> "QSqrt2":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt2(self.a - o.a, self.b - o.b)

    def __rsub__(self, other: object) -> "QSqrt2":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt2(o.a - self.a, o.b - self.b)

    def __mul__(self, other: object) -> "QSqrt2":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt2(self.a * o.a + 2 * self.b * o.b,
                      self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "QSqrt2":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        norm = o.a * o.a - 2 * o.b * o.b
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt2)")
        # multiply by the conjugate: 1/(a+b√2) = (a-b√2)/(a²-2b²)
        return QSqrt2((self.a * o.a - 2 * self.b * o.b) / norm,
                      (self.b * o.a - self.a * o.b) / norm)

    def __rtruediv__(self, other: object) -> "QSqrt2":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self) -> "QSqrt2":
        return QSqrt2(-self.a, -self.b)

    def __abs__(self) -> "QSqrt2":
        return -self if self.sign() < 0 else self

    def __pow__(self, k: int) -> "QSqrt2":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (QSqrt2(1) / self) ** (-k)
        result = QSqrt2(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "QSqrt2":
        return QSqrt2(self.a, -self.b)

    # ── ordering ─────────────────────────────────────────────────

    def sign(self) -> int:
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if (a > 0) == (b > 0):
            return 1 if a > 0 else -1
        # opposite signs: |a| vs |b|*sqrt2 decided by a^2 vs 2 b^2
        d = a * a - 2 * b * b
        s = (d > 0) - (d < 0)  # d == 0 impossible: sqrt2 is irrational
        return s if a > 0 else -s

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __lt__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    # ── conversions ──────────────────────────────────────────────

    def floor(self) -> int:
        """Exact floor, via floor(B*sqrt2) computed with integer isqrt."""
        a, b = self.a, self.b
        den = a.denominator * b.denominator
        num_a = a.numerator * b.denominator
        num_b = b.numerator * a.denominator
        return (num_a + _floor_int_sqrt2(num_b)) // den

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * (2.0 ** 0.5)

    def __repr__(self) -> str:
        return f"QSqrt2({self.a!r}, {self.b!r})"

    def __str__(self) -> str:
        if self.b == 0:
            return _frac_str(self.a)
        if self.a == 0:
            return f"{_frac_str(self.b)}*sqrt2"
        if self.b < 0:
            return f"{_frac_str(self.a)} - {_frac_str(-self.b)}*sqrt2"
        return f"{_frac_str(self.a)} + {_frac_str(self.b)}*sqrt2"


def _frac_str(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


SQRT2 = QSqrt2(0, 1)
# cos of the reference separation angle: sqrt(2) - 1
COS_REFERENCE = QSqrt2(-1, 1)


# ── directed decimal rendering ───────────────────────────────────


def _floor_scaled(x: QSqrt2, scale: int) -> int:
    """floor(x * scale) for a positive integer scale, exactly."""
    a, b = x.a, x.b
    den = a.denominator * b.denominator
    num_a = a.numerator * b.denominator * scale
    num_b = b.numerator * a.denominator * scale
    return (num_a + _floor_int_sqrt2(num_b)) // den


def _is_exact_decimal(x: QSqrt2, scale: int) -> bool:
    if x.b != 0:
        return False
    return (x.a * scale).denominator == 1


def decimal_str(value: "QSqrt2 | Fraction | int", digits: int = 30,
                rounding: str = "up") -> str:
    """Render an exact value as a decimal with `digits` significant digits.

    rounding="up" produces a rendering >= the true value, rounding="down"
    one <= it.  The rendering is presentation only; exact values should be
    compared directly.
    """
    if rounding not in ("up", "down"):
        raise ValueError("rounding must be 'up' or 'down'")
    x = QSqrt2._coerce(value)
    if x is None:
        raise TypeError(f"cannot render {type(value).__name__}")
    if digits < 1:
        raise ValueError("digits must be positive")
    s = x.sign()
    if s == 0:
        return "0." + "0" * (digits - 1)
    mag = -x if s < 0 else x
    # toward +infinity on the signed value means: ceil the magnitude of a
    # positive value, floor the magnitude of a negative one
    ceil_mag = (rounding == "up") != (s < 0)

    # decimal exponent: largest e10 with 10^e10 <= mag
    f = mag.floor()
    if f >= 1:
        e10 = len(str(f)) - 1
    else:
        e10 = 0
        scaled = mag
        while scaled.floor() < 1:
            e10 -= 1
            scaled = scaled * 10
            if e10 < -400:
                raise ValueError("value too small to render")

    k = digits - 1 - e10
    scale = 10 ** k if k >= 0 else 1
    if k >= 0:
        m = _floor_scaled(mag, scale)
        exact = _is_exact_decimal(mag, scale)
    else:
        shrunk = mag / (10 ** (-k))
        m = shrunk.floor()
        exact = _is_exact_decimal(mag, 1) and (mag.a.numerator % 10 ** (-k) == 0)
    if ceil_mag and not exact:
        m += 1
        if m == 10 ** digits:
            m //= 10
            e10 += 1
    text = str(m)
    assert len(text) == digits

    if -5 < e10 < 0:
        body = "0." + "0" * (-e10 - 1) + text
    elif 0 <= e10 <= 32:
        if e10 >= digits - 1:
            body = text + "0" * (e10 - digits + 1) + ".0"
        else:
            body = text[:e10 + 1] + "." + text[e10 + 1:]
    else:
        body = text[0] + "." + text[1:] + f"e{e10:+d}"
    return ("-" + body) if s < 0 else body


# ── rational enclosures ──────────────────────────────────────────


def rational_enclosure(x: QSqrt2, digits: int = 40) -> tuple[Fraction, Fraction]:
    """An interval [lo, hi] of rationals containing x, of width 10^-digits
    (width 0 when x is itself rational with a terminating check)."""
    if x.b == 0:
        return (x.a, x.a)
    scale = 10 ** digits
    f = _floor_scaled(x, scale)
    return (Fraction(f, scale), Fraction(f + 1, scale))


def sqrt_enclosure(x: "QSqrt2 | Fraction | int", digits: int = 40) -> tuple[Fraction, Fraction]:
    """An interval [lo, hi] of rationals containing sqrt(x), for x >= 0.

    Exact (lo == hi) when x is a perfect square of a rational that the
    scaling resolves.
    """
    v = QSqrt2._coerce(x)
    if v is None:
        raise TypeError(f"cannot take sqrt of {type(x).__name__}")
    s = v.sign()
    if s < 0:
        raise ValueError("sqrt of a negative value")
    if s == 0:
        return (Fraction(0), Fraction(0))
    scale = 10 ** digits
    big = _floor_scaled(v, scale * scale)
    t = isqrt(big)
    if t * t == big and _is_exact_decimal(v, scale * scale):
        return (Fraction(t, scale), Fraction(t, scale))
    return (Fraction(t, scale), Fraction(t + 1, scale))


# ── Gamma ratios at half-integer points ──────────────────────────


class GammaRatio:
    """A value q * pi^(e/2) with rational q and integer e.

    Closed under multiplication and division; covers every ratio of Gamma
    values at integer and half-integer arguments that the sphere bounds
    need, since Gamma(k) = (k-1)! and Gamma(k + 1/2) = (2k)! sqrt(pi) /
    (4^k k!).
    """

    __slots__ = ("q", "pi_half_power")

    def __init__(self, q: Rational, pi_half_power: int = 0) -> None:
        object.__setattr__(self, "q", _as_fraction(q))
        object.__setattr__(self, "pi_half_power", int(pi_half_power))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("GammaRatio is immutable")

    def __mul__(self, other: object) -> "GammaRatio":
        if isinstance(other, GammaRatio):
            return GammaRatio(self.q * other.q,
                              self.pi_half_power + other.pi_half_power)
        if isinstance(other, (int, Fraction)):
            return GammaRatio(self.q * other, self.pi_half_power)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "GammaRatio":
        if isinstance(other, GammaRatio):
            return GammaRatio(self.q / other.q,
                              self.pi_half_power - other.pi_half_power)
        if isinstance(other, (int, Fraction)):
            return GammaRatio(self.q / other, self.pi_half_power)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GammaRatio):
            return NotImplemented
        if self.q == 0 and other.q == 0:
            return True
        return self.q == other.q and self.pi_half_power == other.pi_half_power

    def __hash__(self) -> int:
        return hash((self.q, self.pi_half_power if self.q else 0))

    def enclosure(self, digits: int = 40) -> tuple[Fraction, Fraction]:
        """Rational interval containing the numeric value (q > 0 only)."""
        if self.q <= 0:
            raise ValueError("enclosure defined for positive values only")
        e = self.pi_half_power
        whole, half = divmod(abs(e), 2)
        lo = PI_LO ** whole
        hi = PI_HI ** whole
        if half:
            rt_lo, _ = sqrt_enclosure(PI_LO, digits)
            _, rt_hi = sqrt_enclosure(PI_HI, digits)
            lo *= rt_lo
            hi *= rt_hi
        if e < 0:
            lo, hi = 1 / hi, 1 / lo
        return (self.q * lo, self.q * hi)

    def __repr__(self) -> str:
        return f"GammaRatio({self.q!r}, {self.pi_half_power})"

    def __str__(self) -> str:
        if self.pi_half_power == 0:
            return _frac_str(self.q)
        return f"{_frac_str(self.q)}*pi^({self.pi_half_power}/2)"


def gamma_half_ratio(n: int) -> GammaRatio:
    """sqrt(pi) * Gamma((n-1)/2) / (2 * Gamma(n/2)) as an exact GammaRatio.

    For even n the value is a rational multiple of pi, for odd n a plain
    rational.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if n % 2 == 1:
        m = (n - 1) // 2
        # Gamma(m) / Gamma(m + 1/2), the sqrt(pi) factors cancel
        q = Fraction(4 ** m * factorial(m) * factorial(m - 1),
                     2 * factorial(2 * m))
        return GammaRatio(q, 0)
    m = n // 2
    # Gamma(m - 1/2) carries sqrt(pi), joining the explicit sqrt(pi)
    q = Fraction(factorial(2 * m - 2),
                 2 * 4 ** (m - 1) * factorial(m - 1) ** 2)
    return GammaRatio(q, 2)
