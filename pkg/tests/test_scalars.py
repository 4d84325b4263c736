from fractions import Fraction
from itertools import product

import pytest

from qwitt.src.kernel.exceptions import NonzeroQError, PoleError, ZeroDivisorError
from qwitt.src.kernel.scalars import ONE, Q, ZERO, QRational, qr_arith, qr_eval

SAMPLES = [ONE, -Q, Q / 2, 1 / Q, (1 + Q) / (1 - Q), Q**2 - 3, QRational(2, 3)]


def test_add_over_common_denominator():
    assert qr_arith(Q, 1 / Q, "add") == (Q**2 + 1) / Q


def test_difference_of_squares():
    assert qr_arith(1 - Q, 1 + Q, "mul") == 1 - Q**2


def test_division_reduces():
    assert qr_arith(1 - Q**2, 1 - Q, "div") == 1 + Q


def test_division_by_zero():
    with pytest.raises(ZeroDivisorError, match="zero divisor"):
        qr_arith(Q, ZERO, "div")


def test_evaluate():
    assert qr_eval(1 + Q, Fraction(1, 2)) == Fraction(3, 2)
    assert qr_eval((1 - Q**2) / (1 - Q), 3) == 4


def test_evaluate_at_pole():
    with pytest.raises(PoleError, match="pole"):
        qr_eval(1 / (1 - Q), 1)


def test_evaluate_at_zero():
    with pytest.raises(NonzeroQError, match="q must be nonzero"):
        qr_eval(1 + Q, 0)


def test_denominator_is_monic_and_reduced():
    x = (2 * Q) / (4 * Q**2 + 4 * Q)
    assert x == QRational(1, 2) / (1 + Q)
    assert x.denominator.LC == 1
    assert x.render() == "(1/2)/(1 + q)"


def test_render():
    assert ((1 - Q**2) / Q).render() == "(1 - q^2)/(q)"
    assert (-Q).render() == "-q"
    assert QRational(-3, 4).render() == "-3/4"
    assert ZERO.render() == "0"


def test_constants_hash_like_fractions():
    assert hash(QRational.lift(Fraction(1, 2))) == hash(Fraction(1, 2))
    assert QRational.lift(Fraction(1, 2)) == Fraction(1, 2)
    assert {QRational.lift(3): "x"}[QRational(6, 2)] == "x"


def test_q_power():
    assert QRational.q_power(-2) == 1 / Q**2
    assert QRational.q_power(3) == Q * Q * Q


def test_field_axioms():
    for a, b, c in product(SAMPLES, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
    for a in SAMPLES:
        assert a * (1 / a) == ONE
        assert a - a == ZERO


def test_evaluation_is_multiplicative():
    for a, b in product(SAMPLES, repeat=2):
        assert qr_eval(a * b, 5) == qr_eval(a, 5) * qr_eval(b, 5)
