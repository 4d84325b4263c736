"""
The commutative algebra A = Q(q)[t, t^-1] of Laurent polynomials.

A LaurentPoly is a sparse, immutable map from integer exponents of t to
nonzero QRational coefficients.
"""

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from .exceptions import GcdOfZerosError, NotAPolynomialError, NotDivisibleError, UnitImageError, ZeroDivisorError
from .scalars import ONE, QRational, ScalarLike


class LaurentPoly:
    """Sparse Laurent polynomial in t over Q(q)"""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[int, ScalarLike]] = None):
        clean: Dict[int, QRational] = {}
        for exp, coeff in (terms or {}).items():
            coeff = QRational.lift(coeff)
            if coeff:
                clean[int(exp)] = coeff
        self._terms = clean

    @classmethod
    def _raw(cls, terms: Dict[int, QRational]) -> "LaurentPoly":
        obj = object.__new__(cls)
        obj._terms = {e: c for e, c in terms.items() if c}
        return obj

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls._raw({0: ONE})

    @classmethod
    def constant(cls, c: ScalarLike) -> "LaurentPoly":
        return cls._raw({0: QRational.lift(c)})

    @classmethod
    def monomial(cls, exp: int, coeff: ScalarLike = 1) -> "LaurentPoly":
        return cls._raw({exp: QRational.lift(coeff)})

    @classmethod
    def lift(cls, value: Union["LaurentPoly", ScalarLike]) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            return value
        return cls.constant(value)

    # Inspection

    def items(self) -> List[Tuple[int, QRational]]:
        """Terms ascending by exponent"""
        return sorted(self._terms.items())

    def exponents(self) -> List[int]:
        return sorted(self._terms)

    def coeff(self, exp: int) -> QRational:
        return self._terms.get(exp, QRational.lift(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("valuation of the zero polynomial is undefined")
        return min(self._terms)

    @property
    def degree(self) -> int:
        if not self._terms:
            raise ValueError("degree of the zero polynomial is undefined")
        return max(self._terms)

    def is_polynomial(self) -> bool:
        """True when no negative power of t occurs"""
        return not self._terms or self.valuation >= 0

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    # Arithmetic

    def __add__(self, other: Union["LaurentPoly", ScalarLike]) -> "LaurentPoly":
        try:
            other = LaurentPoly.lift(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for exp, coeff in other._terms.items():
            out[exp] = out[exp] + coeff if exp in out else coeff
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Union["LaurentPoly", ScalarLike]) -> "LaurentPoly":
        try:
            other = LaurentPoly.lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Union["LaurentPoly", ScalarLike]) -> "LaurentPoly":
        return LaurentPoly.lift(other) - self

    def __mul__(self, other: Union["LaurentPoly", ScalarLike]) -> "LaurentPoly":
        if isinstance(other, (QRational, int, Fraction)):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: Dict[int, QRational] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exp = e1 + e2
                prod = c1 * c2
                out[exp] = out[exp] + prod if exp in out else prod
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_monomial():
                raise NotDivisibleError("only monomials are units")
            (exp, coeff), = self._terms.items()
            return LaurentPoly._raw({exp * n: coeff**n})
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c: ScalarLike) -> "LaurentPoly":
        c = QRational.lift(c)
        if not c:
            return LaurentPoly.zero()
        return LaurentPoly._raw({e: coeff * c for e, coeff in self._terms.items()})

    def shift(self, k: int) -> "LaurentPoly":
        """t^k times self"""
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def normalized(self) -> "LaurentPoly":
        """Associate with valuation 0 and constant term 1"""
        if not self._terms:
            return self
        shifted = self.shift(-self.valuation)
        return shifted.scale(ONE / shifted._terms[0])

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, (QRational, int, Fraction)):
            return self == LaurentPoly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # Rendering

    def render(self) -> str:
        if not self._terms:
            return "0"
        out = ""
        for exp, coeff in self.items():
            negative, body, atomic = coeff.term_parts()
            if exp == 0:
                text = body
            else:
                tpart = "t" if exp == 1 else f"t^{exp}"
                text = tpart if atomic and body == "1" else f"{body}*{tpart}"
            if not out:
                out = f"-{text}" if negative else text
            else:
                out += f" - {text}" if negative else f" + {text}"
        return out

    def to_json(self) -> List[List[Union[int, str]]]:
        return [[exp, coeff.render()] for exp, coeff in self.items()]

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.render()!r})"


def exact_div(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """h with f = g*h, raising NotDivisibleError when g does not divide f in A"""
    if g.is_zero():
        raise ZeroDivisorError()
    if f.is_zero():
        return LaurentPoly.zero()
    fv, gv = f.valuation, g.valuation
    rem = {e - fv: c for e, c in f.items()}
    divisor = {e - gv: c for e, c in g.items()}
    span = max(rem) - max(divisor)
    if span < 0:
        raise NotDivisibleError()
    lead = divisor[0]
    quotient: Dict[int, QRational] = {}
    # ascending division: both shifted operands have a nonzero constant term
    for k in range(span + 1):
        c = rem.get(k)
        if c is None:
            continue
        factor = c / lead
        quotient[k] = factor
        for e, gc in divisor.items():
            exp = e + k
            value = rem.get(exp, QRational.lift(0)) - factor * gc
            if value:
                rem[exp] = value
            else:
                rem.pop(exp, None)
    if rem:
        raise NotDivisibleError()
    return LaurentPoly._raw(quotient).shift(fv - gv)


def divides(g: LaurentPoly, f: LaurentPoly) -> bool:
    try:
        exact_div(f, g)
    except NotDivisibleError:
        return False
    return True


def euclid_div(f: LaurentPoly, g: LaurentPoly) -> Tuple[LaurentPoly, LaurentPoly]:
    """Euclidean division of polynomials in t: f = quotient*g + remainder, deg remainder < deg g"""
    if not f.is_polynomial() or not g.is_polynomial():
        raise NotAPolynomialError()
    if g.is_zero():
        raise ZeroDivisorError()
    dg = g.degree
    lead = g.coeff(dg)
    divisor = g.items()
    rem: Dict[int, QRational] = dict(f.items())
    quotient: Dict[int, QRational] = {}
    while rem and max(rem) >= dg:
        top = max(rem)
        factor = rem[top] / lead
        quotient[top - dg] = factor
        for e, gc in divisor:
            exp = e + top - dg
            value = rem.get(exp, QRational.lift(0)) - factor * gc
            if value:
                rem[exp] = value
            else:
                rem.pop(exp, None)
    return LaurentPoly._raw(quotient), LaurentPoly._raw(rem)


def laurent_gcd(fs: Iterable[LaurentPoly]) -> LaurentPoly:
    """gcd in A, normalized to a polynomial with constant term 1"""
    nonzero = [f.normalized() for f in fs if not f.is_zero()]
    if not nonzero:
        raise GcdOfZerosError()
    acc = nonzero[0]
    for f in nonzero[1:]:
        if acc == LaurentPoly.one():
            break
        a, b = acc, f
        while not b.is_zero():
            a, b = b, euclid_div(a, b)[1]
        acc = a.normalized()
    return acc


def substitute(f: LaurentPoly, c: ScalarLike, e: int) -> LaurentPoly:
    """Image of f under the ring endomorphism t -> c*t^e"""
    c = QRational.lift(c)
    if not c:
        raise UnitImageError()
    out: Dict[int, QRational] = {}
    for n, a in f.items():
        exp = n * e
        value = a * c**n
        out[exp] = out[exp] + value if exp in out else value
    return LaurentPoly._raw(out)
