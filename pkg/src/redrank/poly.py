"""Dense univariate polynomials over Q, Sturm-chain root counting, and the
Gegenbauer ladder used by the sphere-code bounds.

The Gegenbauer polynomials Q_k for dimension n are normalized so that
Q_k(1) = 1 and satisfy

    Q_0 = 1,  Q_1 = t,
    Q_{k+1} = ((2k + n - 2) t Q_k - k Q_{k-1}) / (k + n - 2).

The adjacent families are derived from them by exact polynomial division:

    Q_k^{1,0} = (n-1) (Q_k - Q_{k+1}) / ((2k + n - 1) (1 - t)),
    Q_k^{1,1} = (n-1) (Q_k - Q_{k+2}) / ((2k + n) (1 - t^2)),

and their largest zeros t_k^{1,0} < t_k^{1,1} partition [-1, 1) into the
cells on which the Levenshtein-style bound switches branch.  All root
comparisons go through Sturm counts and exact sign evaluations; no
floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .exact import QSqrt2

Scalar = Union[int, Fraction, QSqrt2]

_ISOLATION_WIDTH = Fraction(1, 2 ** 64)


class RationalPolynomial:
    """A dense polynomial with Fraction coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Union[int, Fraction]] = ()) -> None:
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("RationalPolynomial is immutable")

    @classmethod
    def constant(cls, c: Union[int, Fraction]) -> "RationalPolynomial":
        return cls((c,))

    @classmethod
    def identity(cls) -> "RationalPolynomial":
        """The polynomial t."""
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    # ── ring operations ──────────────────────────────────────────

    def __add__(self, other: object) -> "RationalPolynomial":
        o = _coerce_poly(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RationalPolynomial(out)

    __radd__ = __add__

    def __sub__(self, other: object) -> "RationalPolynomial":
        o = _coerce_poly(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "RationalPolynomial":
        o = _coerce_poly(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other: object) -> "RationalPolynomial":
        o = _coerce_poly(other)
        if o is None:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if ci == 0:
                continue
            for j, cj in enumerate(o.coeffs):
                out[i + j] += ci * cj
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def scaled(self, c: Union[int, Fraction]) -> "RationalPolynomial":
        return RationalPolynomial(tuple(Fraction(c) * x for x in self.coeffs))

    def __eq__(self, other: object) -> bool:
        o = _coerce_poly(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # ── evaluation and calculus ──────────────────────────────────

    def __call__(self, x: Scalar) -> Scalar:
        """Horner evaluation; exact for Fraction and QSqrt2 arguments."""
        acc: Scalar = Fraction(0) if not isinstance(x, QSqrt2) else QSqrt2(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "RationalPolynomial":
        return RationalPolynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def divmod(self, other: "RationalPolynomial") -> tuple["RationalPolynomial", "RationalPolynomial"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(0, self.degree - other.degree + 1)
        rem = list(self.coeffs)
        d = other.degree
        lead = other.leading
        for i in range(len(rem) - 1, d - 1, -1):
            if rem[i] == 0:
                continue
            c = rem[i] / lead
            q[i - d] = c
            for j, oc in enumerate(other.coeffs):
                rem[i - d + j] -= c * oc
        return RationalPolynomial(q), RationalPolynomial(rem)

    def exact_div(self, other: "RationalPolynomial") -> "RationalPolynomial":
        """Division that must be exact; a nonzero remainder is an error."""
        q, r = self.divmod(other)
        if not r.is_zero:
            raise ValueError(f"inexact polynomial division, remainder {r}")
        return q

    def gcd(self, other: "RationalPolynomial") -> "RationalPolynomial":
        """Monic gcd over Q."""
        a, b = self, other
        while not b.is_zero:
            a, b = b, a.divmod(b)[1]
        if a.is_zero:
            return a
        return a.scaled(1 / a.leading)

    def root_bound(self) -> Fraction:
        """A Cauchy bound B with every real root in (-B, B]."""
        if self.degree < 1:
            return Fraction(1)
        lead = abs(self.leading)
        biggest = max(abs(c) for c in self.coeffs[:-1]) if self.degree else Fraction(0)
        return 1 + biggest / lead

    def __repr__(self) -> str:
        return f"RationalPolynomial({self.coeffs!r})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            cs = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            if i == 0:
                term = cs
            elif i == 1:
                term = f"{cs}*t" if mag != 1 else "t"
            else:
                term = f"{cs}*t^{i}" if mag != 1 else f"t^{i}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def decimal_form(self, digits: int = 12) -> str:
        """Coefficients rendered as decimals, for report output."""
        rendered = []
        for i, c in enumerate(self.coeffs):
            rendered.append(f"t^{i}: {float(c):.{digits}g}")
        return "; ".join(rendered) if rendered else "0"


def _coerce_poly(x: object) -> "RationalPolynomial | None":
    if isinstance(x, RationalPolynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return RationalPolynomial((x,))
    return None


# ── Sturm chains ─────────────────────────────────────────────────


def _sign_of(x: Scalar) -> int:
    if isinstance(x, QSqrt2):
        return x.sign()
    return (x > 0) - (x < 0)


class SturmChain:
    """The Sturm sequence p, p', -rem(...), ... of a polynomial.

    For a < b the difference in sign-variation counts gives the number of
    distinct real roots in the half-open interval (a, b].  Zero values are
    skipped when counting variations, which makes the half-open convention
    work even when an endpoint is a root.
    """

    __slots__ = ("polys",)

    def __init__(self, p: RationalPolynomial) -> None:
        if p.is_zero:
            raise ValueError("Sturm chain of the zero polynomial")
        chain = [p]
        if p.degree >= 1:
            chain.append(p.derivative())
            while chain[-1].degree >= 1:
                rem = chain[-2].divmod(chain[-1])[1]
                if rem.is_zero:
                    break
                chain.append(-rem)
        object.__setattr__(self, "polys", tuple(chain))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("SturmChain is immutable")

    def variations_at(self, x: Scalar) -> int:
        signs = [s for s in (_sign_of(p(x)) for p in self.polys) if s != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def count_roots_halfopen(self, a: Scalar, b: Scalar) -> int:
        """Distinct real roots in (a, b]."""
        return self.variations_at(a) - self.variations_at(b)

    def count_roots_above(self, a: Scalar) -> int:
        """Distinct real roots strictly greater than a."""
        bound = self.polys[0].root_bound()
        return self.count_roots_halfopen(a, bound)


def count_distinct_real_roots(p: RationalPolynomial,
                              a: Scalar, b: Scalar) -> int:
    return SturmChain(p).count_roots_halfopen(a, b)


# ── root isolation ───────────────────────────────────────────────


def largest_zero(p: RationalPolynomial,
                 width: Fraction = _ISOLATION_WIDTH) -> tuple[Fraction, Fraction]:
    """An isolating interval (lo, hi] for the largest real root of p.

    The interval contains exactly that root, has width at most `width`,
    and can be refined further by calling again with a smaller width.
    Raises ValueError when p has no real root.
    """
    if p.degree < 1:
        raise ValueError("constant polynomial has no roots")
    chain = SturmChain(p)
    bound = p.root_bound()
    lo, hi = -bound, bound
    if chain.count_roots_halfopen(lo, hi) == 0:
        raise ValueError("polynomial has no real root")
    # push lo rightward past all roots but the largest, then shrink
    while chain.count_roots_halfopen(lo, hi) > 1 or hi - lo > width:
        mid = (lo + hi) / 2
        if chain.count_roots_halfopen(mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
    return lo, hi


def cmp_to_largest_root(p: RationalPolynomial, s: Scalar) -> int:
    """-1, 0, or +1 as s is below, equal to, or above the largest real
    root of p.  Exact: uses a Sturm count above s and a sign evaluation."""
    chain = SturmChain(p)
    if chain.count_roots_above(s) >= 1:
        return -1
    if _sign_of(p(s)) == 0:
        return 0
    bound = p.root_bound()
    if chain.count_roots_halfopen(-bound, bound) == 0:
        raise ValueError("polynomial has no real root")
    return 1


def compare_largest_roots(p1: RationalPolynomial,
                          p2: RationalPolynomial) -> int:
    """Order the largest real roots of p1 and p2: -1, 0, or +1.

    Refines isolating intervals until they separate; when they keep
    overlapping, a common root of gcd(p1, p2) in the overlap certifies
    equality.
    """
    w = Fraction(1, 2 ** 8)
    g = p1.gcd(p2)
    c1 = SturmChain(p1)
    c2 = SturmChain(p2)
    for _ in range(300):
        lo1, hi1 = largest_zero(p1, w)
        lo2, hi2 = largest_zero(p2, w)
        if hi1 <= lo2:
            return -1
        if hi2 <= lo1:
            return 1
        olo, ohi = max(lo1, lo2), min(hi1, hi2)
        if g.degree >= 1 and olo < ohi:
            if (SturmChain(g).count_roots_halfopen(olo, ohi) >= 1
                    and c1.count_roots_halfopen(olo, ohi) == 1
                    and c2.count_roots_halfopen(olo, ohi) == 1):
                return 0
        w /= 2 ** 8
    raise RuntimeError("root comparison failed to converge")


# ── Gegenbauer ladder ────────────────────────────────────────────


@lru_cache(maxsize=None)
def gegenbauer(n: int, k: int) -> RationalPolynomial:
    """Normalized Gegenbauer polynomial Q_k for dimension n, Q_k(1) = 1."""
    if n < 2:
        raise ValueError("dimension must be at least 2")
    if k < 0:
        raise ValueError("index must be nonnegative")
    if k == 0:
        return RationalPolynomial((1,))
    if k == 1:
        return RationalPolynomial.identity()
    t = RationalPolynomial.identity()
    j = k - 1
    num = (t * gegenbauer(n, j)).scaled(2 * j + n - 2) - gegenbauer(n, j - 1).scaled(j)
    return num.scaled(Fraction(1, j + n - 2))


@lru_cache(maxsize=None)
def adjacent_poly(n: int, k: int, kind: str) -> RationalPolynomial:
    """Adjacent Gegenbauer polynomial Q_k^{1,0} (kind "10") or Q_k^{1,1}
    (kind "11") for dimension n, obtained by exact division."""
    if n < 3:
        raise ValueError("dimension must be at least 3")
    if kind == "10":
        if k < 1:
            raise ValueError('kind "10" needs k >= 1')
        num = (gegenbauer(n, k) - gegenbauer(n, k + 1)).scaled(n - 1)
        den = RationalPolynomial((1, -1)).scaled(2 * k + n - 1)  # (2k+n-1)(1-t)
        return num.exact_div(den)
    if kind == "11":
        if k < 0:
            raise ValueError('kind "11" needs k >= 0')
        num = (gegenbauer(n, k) - gegenbauer(n, k + 2)).scaled(n - 1)
        den = RationalPolynomial((1, 0, -1)).scaled(2 * k + n)  # (2k+n)(1-t^2)
        return num.exact_div(den)
    raise ValueError(f'kind must be "10" or "11", got {kind!r}')


def adjacent_largest_zero(n: int, k: int, kind: str,
                          width: Fraction = _ISOLATION_WIDTH) -> tuple[Fraction, Fraction]:
    """Isolating interval for t_k^{1,0} or t_k^{1,1}.  The k = 0 zero of
    kind "11" is -1 by convention (the polynomial is constant)."""
    if kind == "11" and k == 0:
        return (Fraction(-1), Fraction(-1))
    return largest_zero(adjacent_poly(n, k, kind), width)


def locate_interval(n: int, s: Scalar) -> tuple[int, str]:
    """Find the cell of the partition of [-1, 1) holding s.

    Returns (k, branch) where branch "A" means
    t_{k-1}^{1,1} <= s < t_k^{1,0} and branch "B" means
    t_k^{1,0} <= s < t_k^{1,1}.  Membership at the left endpoint is
    closed.  All comparisons are exact sign evaluations and Sturm counts.
    """
    if n < 3:
        raise ValueError("dimension must be at least 3")
    sv = s if isinstance(s, QSqrt2) else Fraction(s)
    if not (-1 <= sv and sv < 1):
        raise ValueError("s must lie in [-1, 1)")
    for k in range(1, 1001):
        # cells are [t_{k-1}^{1,1}, t_k^{1,1}); t_0^{1,1} = -1
        if cmp_to_largest_root(adjacent_poly(n, k, "11"), sv) < 0:
            if cmp_to_largest_root(adjacent_poly(n, k, "10"), sv) < 0:
                return k, "A"
            return k, "B"
    raise RuntimeError("failed to locate s; cell index over 1000")
