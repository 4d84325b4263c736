"""
Exact scalars: the rational-function field Q(q) in the deformation parameter q.

Numerator and denominator are sparse polynomials of sympy's ``QQ[q]`` ring.
Values are kept reduced with a monic denominator, so equal values share one
representation and render identically.
"""

from fractions import Fraction
from typing import Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, ring

from .exceptions import NonzeroQError, PoleError, ZeroDivisorError

_RING, _QGEN = ring("q", QQ)
_ZERO = _RING.zero
_ONE = _RING.one

ScalarLike = Union["QRational", int, Fraction]


def _to_fraction(coeff) -> Fraction:
    return Fraction(int(coeff.numerator), int(coeff.denominator))


def _ground(value: Union[int, Fraction]) -> PolyElement:
    if isinstance(value, Fraction):
        return _RING(QQ(value.numerator, value.denominator))
    return _RING(QQ(value))


def _normalize(num: PolyElement, den: PolyElement) -> Tuple[PolyElement, PolyElement]:
    if not den:
        raise ZeroDivisorError()
    if not num:
        return _ZERO, _ONE
    if den.is_ground:
        lc = den.LC
        return (num if lc == 1 else num.quo_ground(lc)), _ONE
    _, num, den = num.cofactors(den)
    lc = den.LC
    if lc != 1:
        num = num.quo_ground(lc)
        den = den.quo_ground(lc)
    return num, den


def _render_poly(poly: PolyElement) -> str:
    if not poly:
        return "0"
    pieces = []
    for (k,), coeff in sorted(poly.items(), key=lambda item: item[0][0]):
        c = _to_fraction(coeff)
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = "q" if k == 1 else f"q^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        pieces.append((c < 0, body))
    negative, body = pieces[0]
    out = f"-{body}" if negative else body
    for negative, body in pieces[1:]:
        out += f" - {body}" if negative else f" + {body}"
    return out


class QRational:
    """An element of Q(q), reduced, with monic denominator; zero is 0/1"""

    __slots__ = ("_num", "_den")

    def __init__(self, numerator: Union[ScalarLike, PolyElement] = 0, denominator: Union[ScalarLike, PolyElement] = 1):
        num = numerator if isinstance(numerator, PolyElement) else _ground(numerator)
        den = denominator if isinstance(denominator, PolyElement) else _ground(denominator)
        self._num, self._den = _normalize(num, den)

    @classmethod
    def _raw(cls, num: PolyElement, den: PolyElement) -> "QRational":
        # caller guarantees the pair is already normalized
        obj = object.__new__(cls)
        obj._num = num
        obj._den = den
        return obj

    @classmethod
    def q(cls) -> "QRational":
        return cls._raw(_QGEN, _ONE)

    @classmethod
    def q_power(cls, k: int) -> "QRational":
        """q**k for any integer k"""
        if k >= 0:
            return cls._raw(_QGEN**k, _ONE)
        return cls._raw(_ONE, _QGEN ** (-k))

    @classmethod
    def lift(cls, value: ScalarLike) -> "QRational":
        if isinstance(value, QRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls._raw(_ground(value), _ONE)
        raise TypeError(f"Cannot interpret {value!r} as a scalar in Q(q)")

    @property
    def numerator(self) -> PolyElement:
        return self._num

    @property
    def denominator(self) -> PolyElement:
        return self._den

    def is_zero(self) -> bool:
        return not self._num

    def is_constant(self) -> bool:
        return self._den == _ONE and self._num.is_ground

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return _to_fraction(self._num.LC) if self._num else Fraction(0)

    def is_monomial(self) -> bool:
        """True for c*q^k with c rational and k >= 0"""
        return self._den == _ONE and len(self._num) == 1

    # Arithmetic

    def __add__(self, other: ScalarLike) -> "QRational":
        try:
            other = QRational.lift(other)
        except TypeError:
            return NotImplemented
        if self._den == other._den:
            if self._den == _ONE:
                return QRational._raw(self._num + other._num, _ONE)
            return QRational(self._num + other._num, self._den)
        return QRational(self._num * other._den + other._num * self._den, self._den * other._den)

    __radd__ = __add__

    def __neg__(self) -> "QRational":
        return QRational._raw(-self._num, self._den)

    def __sub__(self, other: ScalarLike) -> "QRational":
        try:
            other = QRational.lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: ScalarLike) -> "QRational":
        return QRational.lift(other) - self

    def __mul__(self, other: ScalarLike) -> "QRational":
        try:
            other = QRational.lift(other)
        except TypeError:
            return NotImplemented
        if not self._num or not other._num:
            return QRational._raw(_ZERO, _ONE)
        if self._den == _ONE and other._den == _ONE:
            return QRational._raw(self._num * other._num, _ONE)
        return QRational(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other: ScalarLike) -> "QRational":
        try:
            other = QRational.lift(other)
        except TypeError:
            return NotImplemented
        if not other._num:
            raise ZeroDivisorError()
        if other.is_constant():
            return QRational._raw(self._num.quo_ground(other._num.LC), self._den)
        return QRational(self._num * other._den, self._den * other._num)

    def __rtruediv__(self, other: ScalarLike) -> "QRational":
        return QRational.lift(other) / self

    def __pow__(self, n: int) -> "QRational":
        if n >= 0:
            return QRational._raw(self._num**n, self._den**n)
        if not self._num:
            raise ZeroDivisorError()
        return QRational(self._den ** (-n), self._num ** (-n))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (QRational, int, Fraction)):
            return NotImplemented
        other = QRational.lift(other)
        return self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        if self.is_constant():
            return hash(self.constant_value())
        return hash((frozenset(self._num.items()), frozenset(self._den.items())))

    def __bool__(self) -> bool:
        return bool(self._num)

    # Specialization

    def evaluate(self, q0: Union[int, Fraction]) -> Fraction:
        """Value at q = q0 (exact); q0 must be nonzero and not a pole"""
        q0 = Fraction(q0)
        if q0 == 0:
            raise NonzeroQError()
        den = _poly_value(self._den, q0)
        if den == 0:
            raise PoleError()
        return _poly_value(self._num, q0) / den

    # Rendering

    def render(self) -> str:
        if self._den == _ONE:
            return _render_poly(self._num)
        return f"({_render_poly(self._num)})/({_render_poly(self._den)})"

    def term_parts(self) -> Tuple[bool, str, bool]:
        """(negative, body, is_atomic) used when this scalar multiplies a power of t"""
        if self.is_monomial():
            c = _to_fraction(self._num.LC)
            return c < 0, _render_poly(self._num if c > 0 else -self._num), True
        if self._den == _ONE:
            return False, f"({_render_poly(self._num)})", False
        return False, self.render(), False

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"QRational({self.render()!r})"


def _poly_value(poly: PolyElement, x: Fraction) -> Fraction:
    return sum((_to_fraction(c) * x**k for (k,), c in poly.items()), Fraction(0))


ZERO = QRational._raw(_ZERO, _ONE)
ONE = QRational._raw(_ONE, _ONE)
Q = QRational.q()


def qr_arith(a: QRational, b: QRational, op: str) -> QRational:
    """Field arithmetic dispatched by name (add, sub, mul, div)"""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"Unknown scalar operation: {op}")


def qr_eval(a: QRational, q0: Union[int, Fraction]) -> Fraction:
    return a.evaluate(q0)
