"""
Decomposition D_sigma(A) = C d_0 + ... + C d_{d-1} + Inn, reduction modulo
inner derivations, the Z/dZ grading and the congruences for reduced brackets.

Modulo g = 1 - lambda*t^d every t^j reduces to lambda^-p * t^i with j = i + p*d,
which is the production path of ``canonical_form``. The division-based
algorithm is kept as ``canonical_form_by_division`` and both must agree.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .derivation import SigmaDerivation, basis_d, der_bracket, der_is_inner
from .exceptions import IndexRangeError, NoFreePartError
from .laurent import LaurentPoly, divides, euclid_div, exact_div, substitute
from .scalars import ZERO, QRational
from .twist import TwistContext

logger = logging.getLogger("QWitt.canonical")

MATCH = "match"
SIGN_FLIP = "sign"
MISMATCH = "mismatch"


@dataclass(frozen=True)
class CanonicalForm:
    """coeff = sum(alphas[i] * t^i) + inner_witness * g"""

    alphas: Tuple[QRational, ...]
    inner_witness: LaurentPoly

    @property
    def d_coordinates(self) -> Tuple[QRational, ...]:
        """Coordinates over d_0 ... d_{d-1}; d_i = -t^i*Delta flips every sign"""
        return tuple(-a for a in self.alphas)

    def free_part(self) -> LaurentPoly:
        return LaurentPoly({i: a for i, a in enumerate(self.alphas)})

    def reassemble(self, ctx: TwistContext) -> LaurentPoly:
        return self.free_part() + self.inner_witness * ctx.g

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.alphas) and self.inner_witness.is_zero()


@dataclass(frozen=True)
class GradedSplit:
    """coeff = sum over k of t^k * components[k](T)"""

    components: Dict[int, LaurentPoly]

    def support(self) -> List[int]:
        return sorted(k for k, p in self.components.items() if not p.is_zero())

    def reassemble(self, ctx: TwistContext) -> LaurentPoly:
        total = LaurentPoly.zero()
        for k, p in self.components.items():
            total = total + substitute(p, ctx.q, ctx.s - 1).shift(k)
        return total


@dataclass(frozen=True)
class CongruenceCheck:
    """A predicted reduction modulo Inn compared with the reduced bracket"""

    name: str
    n: int
    m: int
    actual: Tuple[QRational, ...]
    predicted: Tuple[QRational, ...]

    @property
    def outcome(self) -> str:
        if self.actual == self.predicted:
            return MATCH
        if self.actual == tuple(-c for c in self.predicted):
            return SIGN_FLIP
        return MISMATCH


def _require_free_part(ctx: TwistContext) -> None:
    if ctx.d == 0:
        raise NoFreePartError()


def canonical_form(D: SigmaDerivation) -> CanonicalForm:
    ctx = D.ctx
    if ctx.d == 0:
        return CanonicalForm((), exact_div(D.coeff, ctx.g))
    d = ctx.d
    alphas = [ZERO] * d
    for j, c in D.coeff.items():
        i = j % d
        p = (j - i) // d
        alphas[i] = alphas[i] + c * ctx.lam ** (-p)
    free = LaurentPoly({i: a for i, a in enumerate(alphas)})
    return CanonicalForm(tuple(alphas), exact_div(D.coeff - free, ctx.g))


def canonical_form_by_division(D: SigmaDerivation) -> CanonicalForm:
    """Raise the valuation by subtracting c*t^v*g, then divide by g in Q(q)[t]"""
    ctx = D.ctx
    if ctx.d == 0:
        return CanonicalForm((), exact_div(D.coeff, ctx.g))
    f = D.coeff
    witness = LaurentPoly.zero()
    while f and f.valuation < 0:
        v = f.valuation
        step = LaurentPoly.monomial(v, f.coeff(v))
        f = f - step * ctx.g
        witness = witness + step
    quotient, remainder = euclid_div(f, ctx.g)
    alphas = tuple(remainder.coeff(i) for i in range(ctx.d))
    return CanonicalForm(alphas, witness + quotient)


def congruent_mod_inner(D1: SigmaDerivation, D2: SigmaDerivation) -> bool:
    return der_is_inner(D1 - D2) is not None


def is_inner_via_T(D: SigmaDerivation) -> bool:
    """Membership in Inn tested as (1 - T) | coeff"""
    return divides(LaurentPoly.one() - D.ctx.T, D.coeff)


def reduce_basis(ctx: TwistContext, m: int) -> Tuple[QRational, int]:
    """(c, i) with 0 <= i < d and d_m = c*d_i modulo Inn"""
    _require_free_part(ctx)
    i = m % ctx.d
    p = (m - i) // ctx.d
    return ctx.lam ** (-p), i


def check_basis_shift(ctx: TwistContext, m: int) -> bool:
    """d_m = lambda^-1 * d_{m-d} modulo Inn"""
    _require_free_part(ctx)
    return congruent_mod_inner(basis_d(ctx, m), basis_d(ctx, m - ctx.d).times(1 / ctx.lam))


def graded_split(D: SigmaDerivation) -> GradedSplit:
    ctx = D.ctx
    components: Dict[int, Dict[int, QRational]] = {}
    if ctx.d == 0:
        for j, c in D.coeff.items():
            components[j] = {0: c}
    else:
        d = ctx.d
        # t^(p*d) is q^-p * T^p when s > 1 and q^p * T^-p when s < 1
        direction = 1 if ctx.s > 1 else -1
        for j, c in D.coeff.items():
            k = j % d
            p = (j - k) // d
            bucket = components.setdefault(k, {})
            bucket[direction * p] = c * ctx.q ** (-direction * p)
    return GradedSplit({k: LaurentPoly(terms) for k, terms in components.items()})


def homogeneous_residue(split: GradedSplit) -> Optional[int]:
    support = split.support()
    return support[0] if len(support) == 1 else None


def check_grading_closure(D1: SigmaDerivation, D2: SigmaDerivation) -> bool:
    """Bracket of homogeneous elements of degrees a, b is homogeneous of degree a + b"""
    ctx = D1.ctx
    _require_free_part(ctx)
    a = homogeneous_residue(graded_split(D1))
    b = homogeneous_residue(graded_split(D2))
    if a is None or b is None:
        raise ValueError("grading closure needs homogeneous operands")
    support = graded_split(der_bracket(D1, D2)).support()
    return support in ([], [(a + b) % ctx.d])


def _coordinates(ctx: TwistContext, c: QRational, i: int) -> Tuple[QRational, ...]:
    return tuple(c if j == i else ZERO for j in range(ctx.d))


def _scaled_basis(ctx: TwistContext, c: QRational, m: int) -> Tuple[QRational, ...]:
    factor, i = reduce_basis(ctx, m)
    return _coordinates(ctx, c * factor, i)


def mod_inner_bracket(ctx: TwistContext, n: int, m: int) -> Tuple[QRational, ...]:
    """[d_n, d_m] reduced to coordinates over d_0 ... d_{d-1}"""
    _require_free_part(ctx)
    return canonical_form(der_bracket(basis_d(ctx, n), basis_d(ctx, m))).d_coordinates


def mod_inner_bracket_g(ctx: TwistContext, n: int, m: int) -> Tuple[QRational, ...]:
    """[d_n, g*d_m] reduced to coordinates over d_0 ... d_{d-1}, for 0 <= n < d"""
    _require_free_part(ctx)
    if not 0 <= n < ctx.d:
        raise IndexRangeError()
    return canonical_form(der_bracket(basis_d(ctx, n), basis_d(ctx, m).times(ctx.g))).d_coordinates


def check_bracket_congruence(ctx: TwistContext, n: int, m: int) -> CongruenceCheck:
    """[d_n, d_m] against (n - m)*d_{n+m}"""
    return CongruenceCheck(
        "bracket-congruence",
        n,
        m,
        mod_inner_bracket(ctx, n, m),
        _scaled_basis(ctx, QRational.lift(n - m), n + m),
    )


def check_low_bracket(ctx: TwistContext, n: int, m: int) -> CongruenceCheck:
    """Reduced [d_n, d_m] for 0 <= n < m < d, split on whether n + m reaches d"""
    _require_free_part(ctx)
    if not 0 <= n < m < ctx.d:
        raise IndexRangeError("need 0≤n<m<d")
    diff = QRational.lift(n - m)
    if n + m < ctx.d:
        predicted = _coordinates(ctx, diff, n + m)
    elif ctx.s >= 1:
        predicted = _coordinates(ctx, diff / ctx.q, n + m - ctx.d)
    else:
        predicted = _coordinates(ctx, diff * ctx.q, n + m - ctx.d)
    return CongruenceCheck("low-bracket", n, m, mod_inner_bracket(ctx, n, m), predicted)


def check_g_bracket(ctx: TwistContext, n: int, m: int) -> CongruenceCheck:
    """[d_n, g*d_m] against -d * q^(-eps*p) * d_{n+m-p*d}, eps = sign(s - 1), p = floor((n+m)/d)"""
    actual = mod_inner_bracket_g(ctx, n, m)
    d = ctx.d
    p = (n + m) // d
    eps = 1 if ctx.s > 1 else -1
    predicted = _coordinates(ctx, -d * ctx.q ** (-eps * p), n + m - p * d)
    return CongruenceCheck("g-bracket", n, m, actual, predicted)


def check_g_remark(ctx: TwistContext, n: int) -> CongruenceCheck:
    """[d_n, g*Delta] against -d*d_n"""
    _require_free_part(ctx)
    if not 0 <= n < ctx.d:
        raise IndexRangeError()
    g_delta = SigmaDerivation(ctx, ctx.g)
    actual = canonical_form(der_bracket(basis_d(ctx, n), g_delta)).d_coordinates
    return CongruenceCheck("g-remark", n, 0, actual, _coordinates(ctx, QRational.lift(-ctx.d), n))


def check_exact_d0_d1(ctx: TwistContext) -> bool:
    """[d_0, d_1] == -d_1 exactly, without reduction"""
    return der_bracket(basis_d(ctx, 0), basis_d(ctx, 1)) == -basis_d(ctx, 1)
