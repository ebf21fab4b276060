"""Exact arithmetic in Q(sqrt2): field laws, ordering, directed
decimal rendering, enclosures, and the half-integer gamma ratios.

Random cases are seeded and cross-checked against mpmath at 100
digits, so a sign or rounding bug cannot hide behind float noise.
"""

import random
from fractions import Fraction

import pytest
from mpmath import mp, mpf, sqrt as mpsqrt

from redrank.exact import (COS_REFERENCE, PI_HI, PI_LO, GammaRatio, QSqrt2,
                           decimal_str, gamma_half_ratio, rational_enclosure,
                           sqrt_enclosure)


def _to_mpf(x, dps=100):
    mp.dps = dps
    a = mpf(x.a.numerator) / mpf(x.a.denominator)
    b = mpf(x.b.numerator) / mpf(x.b.denominator)
    return a + b * mpsqrt(2)


def _random_values(count, seed, span=999, denom=99):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        a = Fraction(rng.randint(-span, span), rng.randint(1, denom))
        b = Fraction(rng.randint(-span, span), rng.randint(1, denom))
        out.append(QSqrt2(a, b))
    return out


def test_construction_and_accessors():
    x = QSqrt2(Fraction(1, 2), 3)
    assert x.a == Fraction(1, 2) and x.b == 3
    assert QSqrt2.sqrt2() == QSqrt2(0, 1)
    assert QSqrt2.from_rational(Fraction(7, 3)).is_rational
    assert not QSqrt2.sqrt2().is_rational
    assert QSqrt2(Fraction(7, 3)).as_fraction() == Fraction(7, 3)
    with pytest.raises(ValueError):
        QSqrt2(0, 1).as_fraction()


def test_field_laws_on_seeded_randoms():
    vals = _random_values(60, seed=20240301)
    for i in range(0, 57, 3):
        x, y, z = vals[i], vals[i + 1], vals[i + 2]
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + (-x) == QSqrt2(0)
        if x != QSqrt2(0):
            assert x * (1 / x) == QSqrt2(1)
            assert (y / x) * x == y
    assert QSqrt2.sqrt2() * QSqrt2.sqrt2() == QSqrt2(2)


def test_mixed_operand_coercion():
    x = QSqrt2(1, 1)
    assert x + 1 == QSqrt2(2, 1)
    assert 1 + x == QSqrt2(2, 1)
    assert 2 - x == QSqrt2(1, -1)
    assert Fraction(1, 2) * x == QSqrt2(Fraction(1, 2), Fraction(1, 2))
    assert 1 / QSqrt2(0, 1) == QSqrt2(0, Fraction(1, 2))
    with pytest.raises(TypeError):
        x + 0.5


def test_conjugate_and_norm():
    for x in _random_values(40, seed=7):
        norm = x * x.conjugate()
        assert norm.is_rational
        assert norm.as_fraction() == x.a * x.a - 2 * x.b * x.b


def test_power():
    s = QSqrt2(2, 1)
    assert s ** 0 == QSqrt2(1)
    assert s ** 5 == s * s * s * s * s
    assert s ** -2 == 1 / (s * s)


def test_sign_matches_mpmath_on_seeded_randoms():
    for x in _random_values(1000, seed=991):
        approx = _to_mpf(x)
        expected = 0 if x.a == 0 and x.b == 0 else (1 if approx > 0 else -1)
        assert x.sign() == expected


def test_sign_on_pell_convergents():
    # p/q -> sqrt2 convergents satisfy p^2 - 2q^2 = +-1, so p/q - sqrt2
    # alternates sign while shrinking below any float's resolution.
    p, q = 1, 1
    for _ in range(60):
        p, q = p + 2 * q, p + q
        x = QSqrt2(Fraction(p, q), -1)
        assert x.sign() == (1 if p * p - 2 * q * q == 1 else -1)


def test_ordering_total_and_consistent():
    vals = _random_values(200, seed=35)
    for i in range(0, 200, 2):
        x, y = vals[i], vals[i + 1]
        assert (x < y) + (y < x) + (x == y) == 1
        if x < y:
            assert -y < -x
            assert x + 1 < y + 1


def test_floor():
    assert QSqrt2(0, 1).floor() == 1
    assert QSqrt2(0, -1).floor() == -2
    assert QSqrt2(3).floor() == 3
    assert QSqrt2(Fraction(-7, 2)).floor() == -4
    mp.dps = 100
    for x in _random_values(300, seed=4242):
        assert x.floor() == int(mp.floor(_to_mpf(x)))


def test_float_conversion():
    assert float(QSqrt2(0, 1)) == pytest.approx(2 ** 0.5)
    assert float(COS_REFERENCE) == pytest.approx(2 ** 0.5 - 1)


def test_str_rendering():
    assert str(QSqrt2(Fraction(3, 4))) == "3/4"
    assert str(QSqrt2(5)) == "5"
    assert str(QSqrt2(Fraction(1, 2), Fraction(-2, 3))) == "1/2 - 2/3*sqrt2"
    assert str(QSqrt2(0, 1)) == "1*sqrt2"


def test_cos_reference_value():
    assert COS_REFERENCE == QSqrt2(-1, 1)
    assert (COS_REFERENCE + 1) ** 2 == QSqrt2(2)
    assert decimal_str(COS_REFERENCE, 30, "down") == \
        "0.414213562373095048801688724209"
    assert decimal_str(COS_REFERENCE, 30, "up") == \
        "0.414213562373095048801688724210"


def test_decimal_str_directed_rounding():
    # digits counts significant digits; exact decimals render the same
    # in both directions
    assert decimal_str(Fraction(1, 8), 3, "down") == "0.125"
    assert decimal_str(Fraction(1, 8), 3, "up") == "0.125"
    assert decimal_str(7, 2, "down") == "7.0"
    assert decimal_str(Fraction(1, 700), 3, "down") == "0.00142"
    assert decimal_str(Fraction(1, 700), 3, "up") == "0.00143"
    assert decimal_str(123456, 4, "down") == "123400.0"
    assert decimal_str(123456, 4, "up") == "123500.0"
    # inexact values differ by one unit in the last place
    lo = decimal_str(Fraction(1, 3), 5, "down")
    hi = decimal_str(Fraction(1, 3), 5, "up")
    assert lo == "0.33333" and hi == "0.33334"
    # down means toward -infinity, up toward +infinity
    assert decimal_str(QSqrt2(0, -1), 4, "down") == "-1.415"
    assert decimal_str(QSqrt2(0, -1), 4, "up") == "-1.414"
    with pytest.raises(ValueError):
        decimal_str(Fraction(1, 3), 5, "nearest")


def test_decimal_str_brackets_true_value():
    mp.dps = 100
    for x in _random_values(100, seed=606):
        lo = mpf(decimal_str(x, 25, "down"))
        hi = mpf(decimal_str(x, 25, "up"))
        v = _to_mpf(x)
        assert lo <= v <= hi
        assert hi - lo <= max(abs(v), mpf(1)) * mpf(10) ** -23


def test_pi_bounds():
    assert PI_LO < PI_HI
    assert PI_HI - PI_LO < Fraction(1, 10 ** 49)
    mp.dps = 80
    pi = mp.pi
    assert mpf(PI_LO.numerator) / mpf(PI_LO.denominator) < pi
    assert mpf(PI_HI.numerator) / mpf(PI_HI.denominator) > pi


def test_rational_enclosure():
    x = QSqrt2(Fraction(1, 3), Fraction(2, 7))
    lo, hi = rational_enclosure(x, 30)
    assert lo < hi
    assert hi - lo <= Fraction(2, 10 ** 30)
    mp.dps = 60
    v = _to_mpf(x, 60)
    assert mpf(lo.numerator) / lo.denominator < v < mpf(hi.numerator) / hi.denominator


def test_sqrt_enclosure():
    lo, hi = sqrt_enclosure(Fraction(2), 30)
    assert lo * lo <= 2 <= hi * hi
    assert hi - lo <= Fraction(2, 10 ** 30)
    # perfect squares pinch to the exact root
    lo, hi = sqrt_enclosure(Fraction(9, 4), 10)
    assert lo == hi == Fraction(3, 2)
    lo, hi = sqrt_enclosure(QSqrt2(3, 2), 25)   # 3 + 2*sqrt2 = (1+sqrt2)^2
    v = QSqrt2(1, 1)
    assert QSqrt2(lo) <= v <= QSqrt2(hi)
    with pytest.raises(ValueError):
        sqrt_enclosure(Fraction(-1))


def test_gamma_half_ratio_oracles():
    assert gamma_half_ratio(3) == GammaRatio(1, 0)
    assert gamma_half_ratio(4) == GammaRatio(Fraction(1, 4), 2)
    assert gamma_half_ratio(5) == GammaRatio(Fraction(2, 3), 0)
    assert gamma_half_ratio(8) == GammaRatio(Fraction(5, 32), 2)
    assert gamma_half_ratio(9) == GammaRatio(Fraction(16, 35), 0)


def test_gamma_half_ratio_matches_mpmath():
    # gamma_half_ratio(n) = sqrt(pi) Gamma((n-1)/2) / (2 Gamma(n/2))
    mp.dps = 60
    for n in range(3, 40):
        lo, hi = gamma_half_ratio(n).enclosure(40)
        truth = mp.sqrt(mp.pi) * mp.gamma(mpf(n - 1) / 2) / \
            (2 * mp.gamma(mpf(n) / 2))
        eps = mpf(10) ** -50   # mpmath's own roundoff at 60 dps
        assert mpf(lo.numerator) / lo.denominator <= truth + eps
        assert mpf(hi.numerator) / hi.denominator >= truth - eps


def test_gamma_ratio_algebra():
    x = GammaRatio(Fraction(1, 4), 2)
    y = GammaRatio(Fraction(2, 3), 0)
    assert x * y == GammaRatio(Fraction(1, 6), 2)
    assert (x / y) * y == x
    assert x * Fraction(4) == GammaRatio(1, 2)
