from fractions import Fraction

import pytest

from qwitt.src.kernel.exceptions import (
    GcdOfZerosError,
    NotAPolynomialError,
    NotDivisibleError,
    UnitImageError,
)
from qwitt.src.kernel.laurent import LaurentPoly, euclid_div, exact_div, laurent_gcd, substitute
from qwitt.src.kernel.sampling import random_laurent, random_polynomial, seeded_rng
from qwitt.src.kernel.scalars import Q
from qwitt.src.kernel.twist import TwistContext

from .conftest import poly


def test_geometric_product(t):
    assert (1 - Q * t) * (1 + Q * t + Q**2 * t**2) == 1 - Q**3 * t**3


def test_unit_monomials():
    assert LaurentPoly.monomial(-2) * LaurentPoly.monomial(2) == LaurentPoly.one()
    assert LaurentPoly.monomial(3, Q) ** -1 == LaurentPoly.monomial(-3, 1 / Q)


def test_product_with_zero(t):
    assert ((1 - Q * t) * LaurentPoly.zero()).is_zero()


def test_no_zero_coefficients_stored(t):
    f = (1 + t) - t
    assert f == LaurentPoly.one()
    assert f.exponents() == [0]


def test_valuation_and_degree():
    f = poly({-3: 1, 2: Q})
    assert f.valuation == -3
    assert f.degree == 2
    with pytest.raises(ValueError):
        LaurentPoly.zero().valuation


def test_exact_division(t):
    assert exact_div(t**2 - Q**2 * t**4, 1 - Q * t) == t**2 + Q * t**3
    f = poly({-1: 2, 0: Q, 4: 1 / Q})
    assert exact_div(f, f) == LaurentPoly.one()


def test_exact_division_refuses(t):
    with pytest.raises(NotDivisibleError, match="not divisible"):
        exact_div(1 + t, 1 - Q * t)


def test_negative_power_needs_a_monomial(t):
    with pytest.raises(NotDivisibleError):
        (1 + t) ** -1


def test_gcd_with_zero(t):
    f = 2 * t - 2 * Q * t**2
    assert laurent_gcd([f, LaurentPoly.zero()]) == 1 - Q * t


def test_gcd_of_zeros():
    with pytest.raises(GcdOfZerosError, match="gcd of zeros"):
        laurent_gcd([LaurentPoly.zero(), LaurentPoly.zero()])


def test_euclidean_division(t):
    assert euclid_div(t, 1 - Q * t) == (LaurentPoly.constant(-1 / Q), LaurentPoly.constant(1 / Q))
    assert euclid_div(1 - Q * t, 1 - Q * t) == (LaurentPoly.one(), LaurentPoly.zero())
    assert euclid_div(1 + t**2, 1 - Q * t**2) == (LaurentPoly.constant(-1 / Q), LaurentPoly.constant(1 + 1 / Q))


def test_euclidean_division_needs_polynomials(t):
    with pytest.raises(NotAPolynomialError, match="not a polynomial"):
        euclid_div(t**-1, 1 - Q * t)


def test_substitute(t):
    assert substitute(t, Q, 2) == Q * t**2
    assert substitute(1 - Q * t, Q, 2) == 1 - Q**2 * t**2
    assert substitute(t**-1, Q, 0) == LaurentPoly.constant(1 / Q)


def test_substitute_zero_image(t):
    with pytest.raises(UnitImageError, match="unit must map to unit"):
        substitute(t, 0, 1)


def test_render(t):
    assert (1 - Q * t**2).render() == "1 - q*t^2"
    assert poly({-3: 1, 1: 2}).render() == "t^-3 + 2*t"
    assert poly({1: (1 - Q**2) / Q}).render() == "(1 - q^2)/(q)*t"
    assert poly({0: Fraction(-1, 2), 2: 1 + Q}).render() == "-1/2 + (1 + q)*t^2"
    assert LaurentPoly.zero().render() == "0"


def test_json_form(t):
    assert (1 - Q * t**2).to_json() == [[0, "1"], [2, "-q"]]


def test_normalized(t):
    assert (3 * t**-2 - 3 * Q * t**-1).normalized() == 1 - Q * t


def test_randomized_domain_and_division():
    ctx = TwistContext.create(2)
    rng = seeded_rng(0, "laurent-domain")
    for _ in range(20):
        f = random_laurent(rng, ctx, (-3, 3))
        h = random_laurent(rng, ctx, (-3, 3))
        assert not (f * h).is_zero()
        assert exact_div(f * h, h) == f


def test_randomized_euclid_round_trip():
    ctx = TwistContext.create(3)
    rng = seeded_rng(0, "laurent-euclid")
    for _ in range(20):
        f = random_polynomial(rng, ctx, 5)
        g = random_polynomial(rng, ctx, 3)
        quotient, remainder = euclid_div(f, g)
        assert quotient * g + remainder == f
        assert remainder.is_zero() or remainder.degree < g.degree


def test_randomized_substitution_is_a_homomorphism():
    ctx = TwistContext.create(-2)
    rng = seeded_rng(0, "laurent-substitute")
    for _ in range(20):
        f = random_laurent(rng, ctx, (-3, 3))
        h = random_laurent(rng, ctx, (-3, 3))
        assert substitute(f * h, Q, -2) == substitute(f, Q, -2) * substitute(h, Q, -2)
        assert substitute(f + h, Q, -2) == substitute(f, Q, -2) + substitute(h, Q, -2)
