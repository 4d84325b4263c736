"""
The endomorphism sigma(t) = q*t^s of A and the objects derived from it.

``TwistContext.create`` computes g = gcd((id - sigma)(A)) in its closed form
1 - lambda*t^d, the twist factor delta = sigma(g)/g by exact division, and the
monomial T = q*t^(s-1). The canonical generator is Delta = (id - sigma)/g.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, Optional, Tuple

from .exceptions import GcdConventionViolated, NonzeroQError, NotDivisibleError, SigmaIsIdentityError
from .laurent import LaurentPoly, exact_div, laurent_gcd, substitute
from .scalars import Q, QRational

logger = logging.getLogger("QWitt.twist")


@dataclass(frozen=True)
class TwistContext:
    """sigma(t) = q*t^s, with q formal (q_value None) or a nonzero rational"""

    s: int
    q_value: Optional[Fraction] = None
    q: QRational = field(default=Q, compare=False, repr=False)
    g: LaurentPoly = field(default_factory=LaurentPoly.one, compare=False, repr=False)
    d: int = field(default=0, compare=False, repr=False)
    lam: QRational = field(default=Q, compare=False, repr=False)
    T: LaurentPoly = field(default_factory=LaurentPoly.one, compare=False, repr=False)
    delta: LaurentPoly = field(default_factory=LaurentPoly.one, compare=False, repr=False)
    sigma_g: LaurentPoly = field(default_factory=LaurentPoly.one, compare=False, repr=False)
    alpha: QRational = field(default=Q, compare=False, repr=False)
    k: int = field(default=0, compare=False, repr=False)

    @classmethod
    def create(cls, s: int, q_value: Optional[Fraction] = None) -> "TwistContext":
        if q_value is not None:
            q_value = Fraction(q_value)
            if q_value == 0:
                raise NonzeroQError()
            if s == 1 and q_value == 1:
                raise SigmaIsIdentityError()
        q = Q if q_value is None else QRational.lift(q_value)

        if s >= 1:
            d, lam, alpha, k = s - 1, q, QRational.lift(1), 0
        else:
            d, lam, alpha, k = 1 - s, 1 / q, -q, 1 - s
        g = LaurentPoly.one() - LaurentPoly.monomial(d, lam)
        sigma_g = substitute(g, q, s)
        try:
            delta = exact_div(sigma_g, g)
        except NotDivisibleError:
            raise GcdConventionViolated(f"sigma(g) is not a multiple of g for s={s}")

        ctx = cls(
            s=s,
            q_value=q_value,
            q=q,
            g=g,
            d=d,
            lam=lam,
            T=LaurentPoly.monomial(s - 1, q),
            delta=delta,
            sigma_g=sigma_g,
            alpha=alpha,
            k=k,
        )
        logger.debug(f"Created twist context s={s} q={ctx.qmode}: g={g}, delta={delta}")
        return ctx

    @property
    def qmode(self) -> str:
        return "formal" if self.q_value is None else str(self.q_value)

    def convention_constants(self) -> Tuple[QRational, int]:
        """(alpha, k) with g = alpha^-1 * t^(k-1) * (t - q*t^s)"""
        return self.alpha, self.k

    def g_from_convention(self) -> LaurentPoly:
        inner = LaurentPoly.monomial(1) - LaurentPoly.monomial(self.s, self.q)
        return inner.shift(self.k - 1).scale(1 / self.alpha)

    def is_injective(self) -> bool:
        return self.s != 0

    def is_surjective(self) -> bool:
        return self.s in (1, -1)

    def describe(self) -> Dict[str, Any]:
        return {
            "s": self.s,
            "qmode": self.qmode,
            "g": self.g.render(),
            "d": self.d,
            "lambda": self.lam.render(),
            "T": self.T.render(),
            "delta": self.delta.render(),
            "injective": self.is_injective(),
            "surjective": self.is_surjective(),
        }


def sigma_apply(ctx: TwistContext, f: LaurentPoly) -> LaurentPoly:
    return substitute(f, ctx.q, ctx.s)


def delta_apply(ctx: TwistContext, f: LaurentPoly) -> LaurentPoly:
    """Delta(f) = (f - sigma(f)) / g"""
    try:
        return exact_div(f - sigma_apply(ctx, f), ctx.g)
    except NotDivisibleError:
        raise GcdConventionViolated(f"(id - sigma)({f}) is not divisible by g={ctx.g}")


def geometric_integer(base: LaurentPoly, n: int) -> LaurentPoly:
    """{n}_X = (X^n - 1)/(X - 1) for a unit monomial X, as a geometric sum"""
    if n >= 0:
        return sum((base**j for j in range(n)), LaurentPoly.zero())
    return -sum((base**j for j in range(n, 0)), LaurentPoly.zero())


def t_integer(ctx: TwistContext, n: int) -> LaurentPoly:
    """{n}_T"""
    return geometric_integer(ctx.T, n)


def twist_factor_closed_form(ctx: TwistContext) -> LaurentPoly:
    """{s}_T for s >= 1 and {s}_(T^-1) for s < 1; must equal delta"""
    base = ctx.T if ctx.s >= 1 else ctx.T**-1
    return geometric_integer(base, ctx.s)


def image_gcd(ctx: TwistContext, exponents: Iterable[int]) -> LaurentPoly:
    """gcd of (id - sigma)(t^n) over the given exponents"""
    images = []
    for n in exponents:
        tn = LaurentPoly.monomial(n)
        images.append(tn - sigma_apply(ctx, tn))
    return laurent_gcd(images)


def check_operator_identity(ctx: TwistContext, window: Tuple[int, int]) -> bool:
    """Delta(sigma(t^n)) == delta * sigma(Delta(t^n)) for every n in the window"""
    lo, hi = window
    for n in range(lo, hi + 1):
        tn = LaurentPoly.monomial(n)
        if delta_apply(ctx, sigma_apply(ctx, tn)) != ctx.delta * sigma_apply(ctx, delta_apply(ctx, tn)):
            logger.debug(f"Operator identity fails at s={ctx.s}, n={n}")
            return False
    return True
