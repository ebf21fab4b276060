"""Upper bounds for spherical codes with a prescribed minimal angle, and
the bridge from graphs to such codes.

A spherical code here is a set of unit vectors in R^n whose pairwise
inner products all lie at or below a cosine threshold s.  The module
provides three bound families, all evaluated in exact arithmetic:

  * rankin_bound: the classical bounds 2n at s = 0, n + 1 for s < 0, and
    an integral-based bound for 0 < s < 1 reported with certified
    one-sided rounding,
  * levenshtein_bound: the linear-programming bound built from the
    Gegenbauer ladder, with the branch and level selected exactly by
    locate_interval,
  * closed_form_bound: the elementary envelope (n^2 - 1) / sin(alpha)^n,
    compared to thresholds by squaring into Q(sqrt2).

The cosine threshold of interest is s0 = sqrt(2) - 1.  At s0 a reduced
graph embeds as a code: replace 0 by -1 in the adjacency matrix and
scale rows by 1/sqrt(n) (graph_to_code); the largest pairwise inner
product is then (n - 2d)/n where d is the smallest number of positions
in which two rows differ, and d is at least the minimal rank-drop
removal count.

verify_code_thresholds sweeps a dimension range and compares the bound
at s0 against 5 * 2^((n + offset)/2) - 2, using the Levenshtein bound up
to n = 118 and the closed form beyond, where a ratio-monotonicity
certificate (tail_ratio_certificate) extends the verdict to all larger
dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional, Union

from .exact import (COS_REFERENCE, PI_HI, QSqrt2, decimal_str,
                    gamma_half_ratio, sqrt_enclosure)
from .graphs import Graph, is_reduced, min_removal_for_rank_drop
from .poly import RationalPolynomial, gegenbauer, locate_interval

CosineLike = Union[int, Fraction, QSqrt2]


class LevDenominatorZero(ArithmeticError):
    """The Levenshtein bound formula hit a zero denominator at s."""


def _as_cosine(s: CosineLike) -> QSqrt2:
    v = QSqrt2._coerce(s)
    if v is None:
        raise TypeError(f"cosine must be rational or QSqrt2, got {type(s).__name__}")
    return v


# ── angle parameters ─────────────────────────────────────────────


@dataclass(frozen=True)
class AngleParams:
    """Dimension n together with the derived quantities of a separation
    angle phi, cos(phi) = s in (0, 1), carried exactly in Q(sqrt2).

    alpha is defined by sin(alpha) = sqrt(2) sin(phi/2), so that
    sin^2(alpha) = 1 - s = 2 sin^2(phi/2) and tan^2(alpha) = (1-s)/s.
    """

    n: int
    s: QSqrt2
    two_sin_sq_half: QSqrt2
    sin_sq_alpha: QSqrt2
    tan_sq_alpha: QSqrt2

    @classmethod
    def from_cos(cls, n: int, s: CosineLike) -> "AngleParams":
        if n < 2:
            raise ValueError("dimension must be at least 2")
        sv = _as_cosine(s)
        if not (QSqrt2(0) < sv < QSqrt2(1)):
            raise ValueError("cos(phi) must lie strictly between 0 and 1")
        one_minus = QSqrt2(1) - sv
        params = cls(n, sv, one_minus, one_minus, one_minus / sv)
        params.validate()
        return params

    def validate(self) -> None:
        if self.n < 2:
            raise ValueError("dimension must be at least 2")
        if self.sin_sq_alpha != self.two_sin_sq_half:
            raise ValueError("sin^2(alpha) must equal 2 sin^2(phi/2)")
        if self.tan_sq_alpha * (QSqrt2(1) - self.sin_sq_alpha) != self.sin_sq_alpha:
            raise ValueError("tan^2(alpha) inconsistent with sin^2(alpha)")
        if not (QSqrt2(0) < self.sin_sq_alpha < QSqrt2(1)):
            raise ValueError("alpha must be strictly acute")


def reference_params(n: int) -> AngleParams:
    """Parameters at the reference cosine s0 = sqrt(2) - 1, where
    sin^2(alpha) = 2 - sqrt(2) and tan^2(alpha) = sqrt(2)."""
    return AngleParams.from_cos(n, COS_REFERENCE)


def _check_dimension(n: int, params: AngleParams) -> None:
    if params.n != n:
        raise ValueError(
            f"params built for dimension {params.n}, used with n = {n}")


# ── reports ──────────────────────────────────────────────────────


@dataclass(frozen=True)
class BoundReport:
    """One bound evaluation.  `value` is an exact QSqrt2 when the bound
    is expressible in Q(sqrt2), otherwise a certified rational upper
    value.  `holds` compares the exact value against the exact
    threshold; decimal renderings are presentation only."""

    n: int
    method: str
    value: Union[QSqrt2, Fraction]
    value_is_exact: bool
    threshold: Optional[QSqrt2] = None
    holds: Optional[bool] = None
    k_used: Optional[int] = None
    branch_used: Optional[str] = None
    notes: tuple[str, ...] = ()

    def value_decimal(self, digits: int = 30) -> str:
        return decimal_str(self.value, digits, rounding="up")

    def threshold_decimal(self, digits: int = 30) -> Optional[str]:
        if self.threshold is None:
            return None
        return decimal_str(self.threshold, digits, rounding="down")

    def to_json(self, digits: int = 30, include_exact: bool = False) -> dict:
        out: dict = {
            "n": self.n,
            "method": self.method,
            "value_decimal": self.value_decimal(digits),
            "threshold_decimal": self.threshold_decimal(digits),
            "holds": self.holds,
            "k": self.k_used,
            "branch": self.branch_used,
        }
        if self.notes:
            out["notes"] = list(self.notes)
        if include_exact:
            out["value_exact"] = str(self.value)
            if self.threshold is not None:
                out["threshold_exact"] = str(self.threshold)
        return out


def threshold_value(n: int, offset: int) -> QSqrt2:
    """The comparison threshold 5 * 2^((n + offset)/2) - 2, exact in
    Q(sqrt2) for odd exponents."""
    e = n + offset
    if e % 2 == 0:
        half = e // 2
        a = Fraction(5, 2 ** -half) if half < 0 else Fraction(5 * 2 ** half)
        return QSqrt2(a - 2, 0)
    half = (e - 1) // 2
    b = Fraction(5, 2 ** -half) if half < 0 else Fraction(5 * 2 ** half)
    return QSqrt2(-2, b)


def _holds_by_squares(value_sq: QSqrt2, threshold: QSqrt2) -> bool:
    """value < threshold for positive value given value^2, exact."""
    if threshold.sign() <= 0:
        return False
    return value_sq < threshold * threshold


# ── Rankin-style bounds ──────────────────────────────────────────


@dataclass(frozen=True)
class IntegralBracket:
    """Two-sided enclosure of I = integral_0^alpha sin^(n-2)(t) (cos t -
    cos alpha) dt via

        I = sin^(n+1)(alpha) / ((n^2-1) cos^2(alpha)) *
            (1 - 3 xi tan^2(alpha) / (n+3)),   xi in [0, 1],

    valid when n > max(6 tan^2(alpha) - 3, 5); that guard keeps the
    parenthesized factor above 1/2, so hi/lo < 2.  Endpoints are exact
    in Q(sqrt2) when n is odd (sin^(n+1) is then a whole power of
    sin^2); for even n the squares are exact and rational enclosures
    are available at any precision.
    """

    n: int
    params: AngleParams
    lo_sq: QSqrt2 = field(init=False)
    hi_sq: QSqrt2 = field(init=False)

    def __post_init__(self) -> None:
        n, p = self.n, self.params
        _check_dimension(n, p)
        guard = 6 * p.tan_sq_alpha - 3
        if not (n > 5 and QSqrt2(n) > guard):
            raise ValueError(
                f"bracket needs n > max(6 tan^2(alpha) - 3, 5); n = {n}")
        base = (p.sin_sq_alpha ** (n + 1)) / (QSqrt2((n * n - 1) ** 2) * p.s * p.s)
        f1 = QSqrt2(1) - 3 * p.tan_sq_alpha / (n + 3)
        object.__setattr__(self, "lo_sq", base * f1 * f1)
        object.__setattr__(self, "hi_sq", base)

    def _endpoint_exact(self, which: str) -> Optional[QSqrt2]:
        if self.n % 2 == 0:
            return None
        n, p = self.n, self.params
        root = p.sin_sq_alpha ** ((n + 1) // 2)
        value = root / (QSqrt2(n * n - 1) * p.s)
        if which == "lo":
            value = value * (QSqrt2(1) - 3 * p.tan_sq_alpha / (n + 3))
        return value

    @property
    def lo(self) -> "QSqrt2 | tuple[Fraction, Fraction]":
        exact = self._endpoint_exact("lo")
        return exact if exact is not None else self.lo_enclosure()

    @property
    def hi(self) -> "QSqrt2 | tuple[Fraction, Fraction]":
        exact = self._endpoint_exact("hi")
        return exact if exact is not None else self.hi_enclosure()

    def lo_enclosure(self, digits: int = 40) -> tuple[Fraction, Fraction]:
        return sqrt_enclosure(self.lo_sq, digits)

    def hi_enclosure(self, digits: int = 40) -> tuple[Fraction, Fraction]:
        return sqrt_enclosure(self.hi_sq, digits)

    def ratio_below_two(self) -> bool:
        """hi / lo < 2, exactly (via hi^2 < 4 lo^2)."""
        return self.hi_sq < self.lo_sq * 4

    def contains(self, x: Fraction, strict: bool = True) -> bool:
        """Whether the positive rational x lies in [lo, hi], decided
        exactly by comparing squares."""
        if x <= 0:
            return False
        xsq = QSqrt2(x * x)
        if strict:
            return self.lo_sq < xsq < self.hi_sq
        return self.lo_sq <= xsq <= self.hi_sq


def integral_bracket(n: int, params: AngleParams) -> IntegralBracket:
    return IntegralBracket(n, params)


def rankin_bound(n: int, case: str,
                 params: Optional[AngleParams] = None,
                 threshold: Optional[QSqrt2] = None) -> BoundReport:
    """Code-size bounds by angle regime.

      * case "exactly_half_pi": the maximum is exactly 2n,
      * case "obtuse": at most n + 1 points pairwise at an obtuse angle,
      * case "acute": sqrt(pi) Gamma((n-1)/2) sin(alpha) tan(alpha) /
        (2 Gamma(n/2) I) with I replaced by the certified lower bracket
        endpoint, reported as a one-sided rational upper value.
    """
    if n < 2:
        raise ValueError("dimension must be at least 2")
    if case == "exactly_half_pi":
        value = QSqrt2(2 * n)
        return BoundReport(n, "rankin_half_pi", value, True, threshold,
                           _holds_by_squares(value * value, threshold) if threshold else None,
                           notes=("exact maximum, attained by the cross-polytope",))
    if case == "obtuse":
        value = QSqrt2(n + 1)
        return BoundReport(n, "rankin_obtuse", value, True, threshold,
                           _holds_by_squares(value * value, threshold) if threshold else None)
    if case != "acute":
        raise ValueError(f"unknown case {case!r}")
    if params is None:
        raise ValueError("acute case needs AngleParams")
    integral_bracket(n, params)  # validates the guard
    g = gamma_half_ratio(n)
    p = params
    f1 = QSqrt2(1) - 3 * p.tan_sq_alpha / (n + 3)
    # value^2 = q^2 pi^e (n^2-1)^2 s / ((1-s)^(n-1) f1^2)
    pi_free = (QSqrt2(g.q * g.q * (n * n - 1) ** 2) * p.s
               / ((QSqrt2(1) - p.s) ** (n - 1) * f1 * f1))
    root_hi = sqrt_enclosure(pi_free, 40)[1]
    e = g.pi_half_power
    if e % 2 != 0:
        raise AssertionError("half-integer Gamma ratio should square to integer pi power")
    value_up = root_hi * PI_HI ** (e // 2)
    holds = None
    if threshold is not None:
        holds = _holds_by_squares(QSqrt2(value_up * value_up), threshold)
    return BoundReport(n, "rankin_integral", value_up, False, threshold, holds,
                       notes=("one-sided rounding of the integral bound",))


# ── closed-form envelope ─────────────────────────────────────────

# Conservative dimension from which the closed form is quoted in
# reports at the reference cosine; the analytic guard alone already
# holds from n = 6 there.
CLOSED_FORM_REPORT_FLOOR = 26


def closed_form_bound(n: int, params: AngleParams,
                      threshold: Optional[QSqrt2] = None) -> BoundReport:
    """The envelope (n^2 - 1) / sin(alpha)^n, exact in Q(sqrt2) for even
    n and certified by one-sided rounding for odd n.  Comparisons with
    the threshold square both sides into Q(sqrt2), so the verdict is
    exact for every n."""
    p = params
    _check_dimension(n, p)
    guard = 6 * p.tan_sq_alpha - 3
    if not (n > 5 and QSqrt2(n) > guard):
        raise ValueError(
            f"closed form needs n > max(6 tan^2(alpha) - 3, 5); n = {n}")
    inv = QSqrt2(1) / p.sin_sq_alpha
    value_sq = QSqrt2((n * n - 1) ** 2) * inv ** n
    if n % 2 == 0:
        value: Union[QSqrt2, Fraction] = QSqrt2(n * n - 1) * inv ** (n // 2)
        exact = True
    else:
        value = sqrt_enclosure(value_sq, 40)[1]
        exact = False
    holds = _holds_by_squares(value_sq, threshold) if threshold is not None else None
    notes: tuple[str, ...] = ()
    if p.s == COS_REFERENCE and n < CLOSED_FORM_REPORT_FLOOR:
        notes = (f"below the conservative reporting floor n >= {CLOSED_FORM_REPORT_FLOOR}",)
    return BoundReport(n, "closed_form", value, exact, threshold, holds, notes=notes)


# ── Levenshtein bound ────────────────────────────────────────────


def levenshtein_bound(n: int, s: CosineLike,
                      threshold: Optional[QSqrt2] = None) -> BoundReport:
    """The Gegenbauer-ladder bound at cosine s in [-1, 1).

    With (k, branch) from locate_interval:

      branch A:  C(k+n-3, k-1) *
                 ((2k+n-3)/(n-1) - (Q_{k-1}(s) - Q_k(s)) / ((1-s) Q_k(s)))
      branch B:  C(k+n-2, k) *
                 ((2k+n-1)/(n-1) - (1+s)(Q_k(s) - Q_{k+1}(s)) /
                                   ((1-s)(Q_k(s) + Q_{k+1}(s))))

    Raises LevDenominatorZero when the Q-denominator vanishes at s.
    """
    if n < 3:
        raise ValueError("dimension must be at least 3")
    sv = _as_cosine(s)
    k, branch = locate_interval(n, sv)
    qk = gegenbauer(n, k)(sv)
    one = QSqrt2(1)
    if branch == "A":
        qk1 = gegenbauer(n, k - 1)(sv)
        den = (one - sv) * qk
        if den.sign() == 0:
            raise LevDenominatorZero(f"Q_{k}(s) = 0 at n = {n}")
        value = comb(k + n - 3, k - 1) * (
            QSqrt2(Fraction(2 * k + n - 3, n - 1)) - (qk1 - qk) / den)
    else:
        qk2 = gegenbauer(n, k + 1)(sv)
        den = (one - sv) * (qk + qk2)
        if den.sign() == 0:
            raise LevDenominatorZero(f"Q_{k}(s) + Q_{k+1}(s) = 0 at n = {n}")
        value = comb(k + n - 2, k) * (
            QSqrt2(Fraction(2 * k + n - 1, n - 1)) - (one + sv) * (qk - qk2) / den)
    holds = None
    if threshold is not None:
        holds = threshold.sign() > 0 and value < threshold
    return BoundReport(n, "levenshtein", value, True, threshold, holds,
                       k_used=k, branch_used=branch)


# ── threshold sweeps ─────────────────────────────────────────────

LEVENSHTEIN_CEILING = 118


def verify_code_lemma(n_lo: int, n_hi: int,
                      exponent_offset: int) -> list[BoundReport]:
    """Verify bound(s0) < 5 * 2^((n + exponent_offset)/2) - 2 for every
    dimension in [n_lo, n_hi]: the Levenshtein bound up to n = 118, the
    closed form beyond.  exponent_offset is -4 (the census-driving
    inequality) or +2 (the variant that holds from n = 3; n = 2 is left
    unverified)."""
    if exponent_offset not in (-4, 2):
        raise ValueError("exponent offset must be -4 or +2")
    if n_lo < 3:
        raise ValueError("sweep starts at n >= 3 (n = 2 is unverified)")
    if n_hi < n_lo:
        raise ValueError("empty range")
    reports: list[BoundReport] = []
    for n in range(n_lo, min(n_hi, LEVENSHTEIN_CEILING) + 1):
        reports.append(levenshtein_bound(n, COS_REFERENCE,
                                         threshold_value(n, exponent_offset)))
    if n_hi > LEVENSHTEIN_CEILING:
        reports.extend(closed_form_sweep(max(n_lo, LEVENSHTEIN_CEILING + 1),
                                         n_hi, exponent_offset))
    return reports


def closed_form_sweep(n_lo: int, n_hi: int, offset: int) -> list[BoundReport]:
    """Closed-form reports at s0 for a dimension range, with the power
    (1 + 1/sqrt2)^n maintained incrementally as an integer pair."""
    if n_lo < 6:
        raise ValueError("closed form needs n >= 6 at the reference cosine")
    if n_hi < n_lo:
        raise ValueError("empty range")
    # (2 + sqrt2)^n = A + B sqrt2; (1 + 1/sqrt2)^n = (A + B sqrt2)/2^n
    a, b = 1, 0
    for _ in range(n_lo):
        a, b = 2 * a + 2 * b, a + 2 * b
    ah, bh = 1, 0
    for _ in range(n_lo // 2):
        ah, bh = 2 * ah + 2 * bh, ah + 2 * bh
    reports: list[BoundReport] = []
    for n in range(n_lo, n_hi + 1):
        c = (n * n - 1) ** 2
        denom = 1 << n
        value_sq = QSqrt2(Fraction(c * a, denom), Fraction(c * b, denom))
        thr = threshold_value(n, offset)
        holds = _holds_by_squares(value_sq, thr)
        if n % 2 == 0:
            half_denom = 1 << (n // 2)
            value: Union[QSqrt2, Fraction] = QSqrt2(
                Fraction((n * n - 1) * ah, half_denom),
                Fraction((n * n - 1) * bh, half_denom))
            exact = True
        else:
            value = sqrt_enclosure(value_sq, 40)[1]
            exact = False
        reports.append(BoundReport(n, "closed_form", value, exact, thr, holds))
        a, b = 2 * a + 2 * b, a + 2 * b
        if n % 2 == 1:
            ah, bh = 2 * ah + 2 * bh, ah + 2 * bh
    return reports


@dataclass(frozen=True)
class TailCertificate:
    """Certificate that the closed-form verdict at the window start
    propagates to every larger dimension.

    Writing V(n) for the closed-form value at s0 and U(n) = threshold +
    2 = 5 * 2^((n+offset)/2), one step of growth satisfies

        V(n+1)^2 = V(n)^2 * r(n)^2 * (1 + 1/sqrt2),
        U(n+1)^2 = 2 U(n)^2,         r(n) = ((n+1)^2 - 1)/(n^2 - 1),

    so V(n) < U(n) - 2 propagates to n + 1 whenever r(n)^2 (1 + 1/sqrt2)
    < 2 and U(n) >= 1/(2 - sqrt2).  r(n) is strictly decreasing (the
    cross-multiplied difference is the everywhere-positive polynomial
    2n^2 + 4n + 3), so checking the ratio condition at the window start
    and across the window certifies every dimension beyond it.
    """

    window: tuple[int, int]
    offset: int
    boundary_holds: bool
    ratio_ok_at_start: bool
    ratio_ok_all_window: bool
    ratio_decreasing_symbolic: bool
    threshold_floor_ok: bool

    @property
    def extends_beyond_window(self) -> bool:
        return (self.boundary_holds and self.ratio_ok_at_start
                and self.ratio_ok_all_window
                and self.ratio_decreasing_symbolic
                and self.threshold_floor_ok)


def tail_ratio_certificate(n_lo: int = LEVENSHTEIN_CEILING,
                           n_hi: int = 10 ** 4,
                           offset: int = -4) -> TailCertificate:
    if n_lo < 6 or n_hi < n_lo:
        raise ValueError("certificate window must start at n >= 6")
    growth = QSqrt2(1, Fraction(1, 2))  # 1 + 1/sqrt2
    two = QSqrt2(2)

    def ratio(n: int) -> Fraction:
        return Fraction((n + 1) ** 2 - 1, n * n - 1)

    def ratio_ok(n: int) -> bool:
        r = ratio(n)
        return QSqrt2(r * r) * growth < two

    boundary = closed_form_bound(n_lo, reference_params(n_lo),
                                 threshold_value(n_lo, offset))
    ratio_all = all(ratio_ok(n) for n in range(n_lo, n_hi + 1))

    # r(n) > r(n+1) cross-multiplies to 2n^2 + 4n + 3 > 0; verify the
    # expansion symbolically and its positivity by coefficient signs
    t = RationalPolynomial.identity()
    lhs = (2 * t + 1) * (t * t + 2 * t)
    rhs = (2 * t + 3) * (t * t - 1)
    diff = lhs - rhs
    symbolic = (diff == RationalPolynomial((3, 4, 2))
                and all(c > 0 for c in diff.coeffs))

    # U(n_lo) - 2 >= 0 and U(n_lo) >= 1/(2 - sqrt2): ample at any real n
    u_floor = threshold_value(n_lo, offset) + 2 - QSqrt2(1) / QSqrt2(2, -1)
    return TailCertificate((n_lo, n_hi), offset,
                           bool(boundary.holds),
                           ratio_ok(n_lo), ratio_all, symbolic,
                           u_floor.sign() > 0)


# ── graphs as codes ──────────────────────────────────────────────


@dataclass(frozen=True)
class CodeReport:
    """A reduced graph rendered as unit vectors: the rows of the
    adjacency matrix with 0 replaced by -1, scaled by 1/sqrt(n)."""

    order: int
    vectors: tuple[tuple[int, ...], ...]
    max_inner_product: Fraction
    max_pair: tuple[int, int]
    min_rank_drop_removal: int
    cosine_cap: Fraction
    within_cap: bool
    obtuse_ok: Optional[bool]

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "normalization": f"1/sqrt({self.order})",
            "vectors": [list(v) for v in self.vectors],
            "max_inner_product": str(self.max_inner_product),
            "max_pair": list(self.max_pair),
            "min_rank_drop_removal": self.min_rank_drop_removal,
            "cosine_cap": str(self.cosine_cap),
            "within_cap": self.within_cap,
            "obtuse_ok": self.obtuse_ok,
        }


def graph_to_code(g: Graph) -> CodeReport:
    """Embed a reduced graph on n >= 2 vertices as a spherical code.

    Two rows differ in exactly the symmetric-difference positions of the
    corresponding vertex pair, so every pairwise inner product is
    (n - 2d)/n with d >= min_removal_for_rank_drop(g); the report checks
    that cap, and additionally that the products are all non-positive
    when the removal count reaches n/2.
    """
    if g.n < 2:
        raise ValueError("code embedding needs at least 2 vertices")
    if not is_reduced(g):
        raise ValueError("code embedding requires a reduced graph")
    n = g.n
    vectors = tuple(
        tuple(1 if g.rows[u] >> v & 1 else -1 for v in range(n))
        for u in range(n))
    best: Optional[tuple[Fraction, tuple[int, int]]] = None
    for u in range(n):
        for v in range(u + 1, n):
            differing = (g.rows[u] ^ g.rows[v]).bit_count()
            inner = Fraction(n - 2 * differing, n)
            if best is None or inner > best[0]:
                best = (inner, (u, v))
    assert best is not None
    rho = min_removal_for_rank_drop(g)
    cap = Fraction(n - 2 * rho, n)
    obtuse_ok = (best[0] <= 0) if 2 * rho >= n else None
    return CodeReport(n, vectors, best[0], best[1], rho, cap,
                      best[0] <= cap, obtuse_ok)
