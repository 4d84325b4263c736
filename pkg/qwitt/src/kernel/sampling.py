"""Seeded random inputs for the randomized checks"""

import random
from typing import List, Tuple

from .derivation import SigmaDerivation
from .laurent import LaurentPoly
from .ore import OrePoly
from .scalars import QRational
from .twist import TwistContext


def seeded_rng(seed: int, *labels: object) -> random.Random:
    """Independent, reproducible stream per (seed, labels)"""
    return random.Random(":".join(str(part) for part in (seed, *labels)))


def coefficient_pool(ctx: TwistContext) -> List[QRational]:
    """Small coefficients that keep rational functions in q from blowing up"""
    pool = [QRational.lift(c) for c in (1, -1, 2, -2)]
    pool += [QRational.lift(1) / 2, QRational.lift(-1) / 2, ctx.q, 1 / ctx.q]
    return pool


def random_laurent(rng: random.Random, ctx: TwistContext, window: Tuple[int, int], max_terms: int = 3) -> LaurentPoly:
    """Nonzero Laurent polynomial with exponents inside the window"""
    lo, hi = window
    exponents = rng.sample(range(lo, hi + 1), k=rng.randint(1, min(max_terms, hi - lo + 1)))
    pool = coefficient_pool(ctx)
    return LaurentPoly({e: rng.choice(pool) for e in exponents})


def random_polynomial(rng: random.Random, ctx: TwistContext, max_degree: int, max_terms: int = 3) -> LaurentPoly:
    return random_laurent(rng, ctx, (0, max_degree), max_terms)


def random_homogeneous(
    rng: random.Random, ctx: TwistContext, residue: int, window: Tuple[int, int], max_terms: int = 2
) -> SigmaDerivation:
    """Nonzero coeff*Delta whose exponents are all congruent to residue mod d"""
    lo, hi = window
    exponents = [e for e in range(lo, hi + 1) if e % ctx.d == residue % ctx.d]
    chosen = rng.sample(exponents, k=rng.randint(1, min(max_terms, len(exponents))))
    pool = coefficient_pool(ctx)
    return SigmaDerivation(ctx, LaurentPoly({e: rng.choice(pool) for e in chosen}))


def random_ore(rng: random.Random, twist: SigmaDerivation, window: Tuple[int, int], max_degree: int = 1) -> OrePoly:
    coeffs = {i: random_laurent(rng, twist.ctx, window, max_terms=2) for i in range(max_degree + 1)}
    return OrePoly(twist, coeffs)
