"""
Ore extension A[X; sigma, D] for a sigma-derivation D = c*Delta.

Elements are kept in left normal form sum(a_i * X^i); products use the rewrite
rule X*a = sigma(a)*X + D(a).
"""

from typing import Dict, Mapping, Optional

from .derivation import SigmaDerivation, der_apply, der_is_inner
from .exceptions import ContextMismatchError, NotInnerTwistError
from .laurent import LaurentPoly
from .twist import TwistContext, sigma_apply


class OrePoly:
    """sum(coeffs[i] * X^i) in A[X; sigma, twist]"""

    __slots__ = ("ctx", "twist", "_coeffs")

    def __init__(self, twist: SigmaDerivation, coeffs: Optional[Mapping[int, LaurentPoly]] = None):
        self.ctx: TwistContext = twist.ctx
        self.twist = twist
        self._coeffs: Dict[int, LaurentPoly] = {i: a for i, a in (coeffs or {}).items() if not a.is_zero()}

    @classmethod
    def x(cls, twist: SigmaDerivation) -> "OrePoly":
        return cls(twist, {1: LaurentPoly.one()})

    @classmethod
    def constant(cls, twist: SigmaDerivation, a: LaurentPoly) -> "OrePoly":
        return cls(twist, {0: a})

    def coeff(self, i: int) -> LaurentPoly:
        return self._coeffs.get(i, LaurentPoly.zero())

    @property
    def degree(self) -> int:
        if not self._coeffs:
            raise ValueError("degree of the zero element is undefined")
        return max(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def _check(self, other: "OrePoly") -> None:
        if self.twist != other.twist:
            raise ContextMismatchError()

    def __add__(self, other: "OrePoly") -> "OrePoly":
        self._check(other)
        out = dict(self._coeffs)
        for i, a in other._coeffs.items():
            out[i] = out[i] + a if i in out else a
        return OrePoly(self.twist, out)

    def __mul__(self, other: "OrePoly") -> "OrePoly":
        return ore_mul(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrePoly):
            return NotImplemented
        return self.twist == other.twist and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.twist, frozenset(self._coeffs.items())))

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for i in sorted(self._coeffs):
            power = "" if i == 0 else ("*X" if i == 1 else f"*X^{i}")
            parts.append(f"({self._coeffs[i]}){power}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"OrePoly({self})"


def _x_times(u: Dict[int, LaurentPoly], twist: SigmaDerivation) -> Dict[int, LaurentPoly]:
    """X * sum(c_k X^k) = sum(sigma(c_k) X^(k+1) + D(c_k) X^k)"""
    ctx = twist.ctx
    out: Dict[int, LaurentPoly] = {}
    for k, c in u.items():
        for exp, value in ((k + 1, sigma_apply(ctx, c)), (k, der_apply(twist, c))):
            if value.is_zero():
                continue
            out[exp] = out[exp] + value if exp in out else value
    return {k: c for k, c in out.items() if not c.is_zero()}


def ore_mul(u: OrePoly, v: OrePoly) -> OrePoly:
    u._check(v)
    twist = u.twist
    result: Dict[int, LaurentPoly] = {}
    for j, b in v._coeffs.items():
        # X^i * b in normal form, built up one power of X at a time
        x_power_b: Dict[int, LaurentPoly] = {0: b}
        for i in range(max(u._coeffs, default=-1) + 1):
            a = u._coeffs.get(i)
            if a is not None:
                for k, c in x_power_b.items():
                    exp = k + j
                    term = a * c
                    result[exp] = result[exp] + term if exp in result else term
            x_power_b = _x_times(x_power_b, twist)
    return OrePoly(twist, result)


def untwisted_ring(ctx: TwistContext) -> SigmaDerivation:
    """The zero derivation, whose Ore extension is A[Y; sigma]"""
    return SigmaDerivation(ctx, LaurentPoly.zero())


def ore_untwist(u: OrePoly) -> OrePoly:
    """Image under the A-linear algebra map X -> Y + p into A[Y; sigma], for twist = Delta_p"""
    p = der_is_inner(u.twist)
    if p is None:
        raise NotInnerTwistError()
    target = untwisted_ring(u.ctx)
    y_plus_p = OrePoly(target, {1: LaurentPoly.one(), 0: p})
    result = OrePoly(target)
    power = OrePoly.constant(target, LaurentPoly.one())
    for i in range(max(u._coeffs, default=-1) + 1):
        a = u._coeffs.get(i)
        if a is not None:
            result = result + OrePoly.constant(target, a) * power
        power = power * y_plus_p
    return result
