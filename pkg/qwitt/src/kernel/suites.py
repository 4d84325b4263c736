import asyncio
import logging
from datetime import datetime
from itertools import combinations, combinations_with_replacement
from typing import Callable, Dict, List, Optional, Tuple, TypedDict

from . import canonical as canon
from .config import RunConfig
from .derivation import (
    SigmaDerivation,
    basis_d,
    bracket_closed_form,
    bracket_four_case,
    check_composition,
    check_inner_closure,
    check_leibniz,
    check_skew,
    check_symmetry,
    check_twisted_jacobi,
    der_bracket,
    der_inner_from,
    der_is_inner,
    t_action_identity,
)
from .laurent import LaurentPoly
from .ore import OrePoly, ore_untwist, untwisted_ring
from .report import DEVIATION, REFUTED, SKIPPED, VERIFIED, Claim, any_refuted, make_claim
from .sampling import random_homogeneous, random_laurent, random_ore, seeded_rng
from .ssets import check_inclusion_chain, verify_theorem_ssets
from .twist import (
    TwistContext,
    check_operator_identity,
    image_gcd,
    t_integer,
    twist_factor_closed_form,
)

logger = logging.getLogger("QWitt.suites")

SuiteCheck = Callable[[TwistContext, RunConfig], List[Claim]]


class SuiteTaskResult(TypedDict):
    suite: str
    s: int
    claims: List[Claim]
    error_message: str
    execution_time_seconds: float


def _skipped(claim_id: str, reason: str) -> Claim:
    return {"id": claim_id, "status": SKIPPED, "evidence": reason}


def _deviation(claim_id: str, evidence: str) -> Claim:
    return {"id": claim_id, "status": DEVIATION, "evidence": evidence}


def _pairs(window: Tuple[int, int]) -> List[Tuple[int, int]]:
    lo, hi = window
    return [(n, m) for n in range(lo, hi + 1) for m in range(lo, hi + 1)]


# Suite checks. Each returns its claims in a fixed order.


def twist_suite(ctx: TwistContext, config: RunConfig) -> List[Claim]:
    N = config.check_window
    rng = seeded_rng(config.seed, "twist", ctx.s)
    claims = [
        make_claim(
            "twist/operator-identity", check_operator_identity(ctx, (-N, N)), f"Delta o sigma on t^n, |n| <= {N}"
        ),
        make_claim("twist/g-convention", ctx.g == ctx.g_from_convention(), f"g = {ctx.g}"),
        make_claim("twist/delta-closed-form", ctx.delta == twist_factor_closed_form(ctx), f"delta = {ctx.delta}"),
    ]

    if N > 0:
        found = image_gcd(ctx, [n for n in range(-N, N + 1) if n != 0])
        claims.append(
            make_claim("twist/g-is-image-gcd", found == ctx.g.normalized(), f"gcd over |n| <= {N} is {found}")
        )

    recurrences = all(
        t_integer(ctx, n + 1) == t_integer(ctx, n) + ctx.T**n
        and (ctx.T - 1) * t_integer(ctx, n) == ctx.T**n - 1
        for n in range(-N, N + 1)
    )
    claims.append(make_claim("twist/t-integer-recurrences", recurrences, f"{{n+1}} = {{n}} + T^n, |n| <= {N}"))
    claims.append(
        make_claim(
            "twist/t-action",
            all(t_action_identity(ctx, n) for n in range(-N, N + 1)),
            "T*d_n = q*d_{n+s-1}",
        )
    )

    delta = SigmaDerivation(ctx, LaurentPoly.one())
    leibniz_ok, symmetry_ok = True, True
    for _ in range(config.samples):
        f = random_laurent(rng, ctx, config.window)
        h = random_laurent(rng, ctx, config.window)
        other = SigmaDerivation(ctx, random_laurent(rng, ctx, config.window))
        leibniz_ok = leibniz_ok and check_leibniz(delta, f, h) and check_leibniz(other, f, h)
        symmetry_ok = symmetry_ok and check_symmetry(delta, f, h) and check_symmetry(other, f, h)
    claims.append(make_claim("twist/leibniz", leibniz_ok, f"{config.samples} seeded pairs, D = Delta and D = c*Delta"))
    claims.append(make_claim("twist/symmetry", symmetry_ok, f"{config.samples} seeded pairs"))
    return claims


def skew_suite(ctx: TwistContext, config: RunConfig) -> List[Claim]:
    rng = seeded_rng(config.seed, "skew", ctx.s)
    failures = [(n, m) for n, m in _pairs(config.window) if not check_skew(basis_d(ctx, n), basis_d(ctx, m))]
    claims = [
        make_claim(
            "skew/basis",
            not failures,
            f"first failure at (n, m) = {failures[0]}" if failures else f"all pairs over {config.window}",
        )
    ]

    skew_ok, composition_ok = True, True
    for _ in range(config.samples):
        D1 = SigmaDerivation(ctx, random_laurent(rng, ctx, config.window))
        D2 = SigmaDerivation(ctx, random_laurent(rng, ctx, config.window))
        f = random_laurent(rng, ctx, config.window)
        skew_ok = skew_ok and check_skew(D1, D2)
        composition_ok = composition_ok and check_composition(D1, D2, f)
    claims.append(make_claim("skew/random", skew_ok, f"{config.samples} seeded pairs"))
    claims.append(make_claim("skew/composition", composition_ok, "coefficient formula equals the composition bracket"))
    return claims


def jacobi_suite(ctx: TwistContext, config: RunConfig) -> List[Claim]:
    lo, hi = config.window
    # the six-term sum is alternating, so sorted triples cover every ordering
    for i, j, k in combinations_with_replacement(range(lo, hi + 1), 3):
        if not check_twisted_jacobi(ctx, LaurentPoly.monomial(i), LaurentPoly.monomial(j), LaurentPoly.monomial(k)):
            return [make_claim("jacobi/monomials", False, f"fails for (t^{i}, t^{j}, t^{k})")]
    return [make_claim("jacobi/monomials", True, f"all monomial triples over {lo}..{hi}, delta = {ctx.delta}")]


def three_way_suite(ctx: TwistContext, config: RunConfig) -> List[Claim]:
    pairs = _pairs(config.window)
    oracle = {(n, m): der_bracket(basis_d(ctx, n), basis_d(ctx, m)) for n, m in pairs}

    four_case_bad = [(n, m) for n, m in pairs if bracket_four_case(ctx, n, m) != oracle[(n, m)]]
    claims = [
        make_claim(
            "three-way/four-case",
            not four_case_bad,
            f"differs at {four_case_bad[:5]}" if four_case_bad else f"{len(pairs)} pairs agree",
        )
    ]

    if ctx.s >= 1:
        closed_bad = [(n, m) for n, m in pairs if bracket_closed_form(ctx, n, m) != oracle[(n, m)]]
        claims.append(
            make_claim(
                "three-way/closed-form",
                not closed_bad,
                f"differs at {closed_bad[:5]}" if closed_bad else f"{len(pairs)} pairs agree",
            )
        )
    else:
        # the T-integer form is not asserted below s = 1; record how it relates to the bracket
        disagree, minus_T = [], True
        for n, m in pairs:
            stated = basis_d(ctx, n + m).times(t_integer(ctx, n) - t_integer(ctx, m))
            if stated != oracle[(n, m)]:
                disagree.append((n, m))
            minus_T = minus_T and oracle[(n, m)] == stated.times(-ctx.T)
        relation = "; the bracket equals -T times it on every pair" if minus_T else ""
        claims.append(
            _deviation(
                "three-way/closed-form",
                f"T-integer form differs from the bracket on {len(disagree)} of {len(pairs)} pairs{relation}",
            )
        )

    if ctx.d >= 1:
        graded = all(
            all((e - (n + m)) % ctx.d == 0 for e in oracle[(n, m)].coeff.exponents()) for n, m in pairs
        )
        claims.append(make_claim("three-way/grading", graded, f"exponents of [d_n, d_m] congruent to n+m mod {ctx.d}"))
    return claims


def inner_suite(ctx: TwistContext, config: RunConfig) -> List[Claim]:
    rng = seeded_rng(config.seed, "inner", ctx.s)
    closure_ok, round_trip_ok = True, True
    for _ in range(config.samples):
        p = random_laurent(rng, ctx, config.window)
        r = random_laurent(rng, ctx, config.window)
        closure_ok = closure_ok and check_inner_closure(ctx, p, r)
        round_trip_ok = round_trip_ok and der_is_inner(der_inner_from(ctx, p)) == p
    claims = [
        make_claim("inner/closure", closure_ok, f"{config.samples} seeded (p, r) pairs, both witness forms"),
        make_claim("inner/round-trip", round_trip_ok, "Delta_p determines p"),
    ]
    if ctx.s == 1:
        lo, hi = config.window
        every = all(der_is_inner(basis_d(ctx, n)) is not None for n in range(lo, hi + 1))
        claims.append(make_claim("inner/all-inner", every, "g = 1 - q is a unit"))
    return claims


def decomp_suite(ctx: TwistContext, config: RunConfig) -> List[Claim]:
    rng = seeded_rng(config.seed, "decomp", ctx.s)
    reassembly_ok, agree_ok, membership_ok = True, True, True
    for _ in range(config.samples):
        D = SigmaDerivation(ctx, random_laurent(rng, ctx, config.window))
        fast = canon.canonical_form(D)
        slow = canon.canonical_form_by_division(D)
        reassembly_ok = reassembly_ok and fast.reassemble(ctx) == D.coeff
        agree_ok = agree_ok and fast == slow
        inner = der_inner_from(ctx, D.coeff)
        membership_ok = membership_ok and canon.is_inner_via_T(inner) and (
            canon.is_inner_via_T(D) == (der_is_inner(D) is not None)
        )
    zero = canon.canonical_form(SigmaDerivation(ctx, LaurentPoly.zero()))
    claims = [
        make_claim("decomp/reassembly", reassembly_ok, f"{config.samples} seeded coefficients"),
        make_claim("decomp/two-algorithms", agree_ok, "modular reduction equals division algorithm"),
        make_claim("decomp/zero", zero.is_zero(), "zero derivation decomposes to zero"),
        make_claim("decomp/inn-is-one-minus-T", membership_ok, "D in Inn iff (1 - T) divides its coefficient"),
    ]
    return claims


def grading_suite(ctx: TwistContext, config: RunConfig) -> List[Claim]:
    rng = seeded_rng(config.seed, "grading", ctx.s)
    reassembly_ok = True
    for _ in range(config.samples):
        D = SigmaDerivation(ctx, random_laurent(rng, ctx, config.window))
        reassembly_ok = reassembly_ok and canon.graded_split(D).reassemble(ctx) == D.coeff
    claims = [make_claim("grading/reassembly", reassembly_ok, f"{config.samples} seeded coefficients")]

    if ctx.d == 0:
        claims.append(_skipped("grading/closure", "d = 0, grading is by t-exponent"))
        return claims
    closure_ok = True
    for a in range(ctx.d):
        for b in range(ctx.d):
            for _ in range(config.samples):
                D1 = random_homogeneous(rng, ctx, a, config.window)
                D2 = random_homogeneous(rng, ctx, b, config.window)
                closure_ok = closure_ok and canon.check_grading_closure(D1, D2)
    claims.append(make_claim("grading/closure", closure_ok, f"all residue pairs mod {ctx.d}, {config.samples} each"))
    return claims


def _congruence_claim(
    claim_id: str, checks: List[canon.CongruenceCheck], expected: str, assert_sign: bool
) -> List[Claim]:
    """Magnitude and index always asserted; the sign is asserted only when assert_sign"""
    mismatched = [(c.n, c.m) for c in checks if c.outcome == canon.MISMATCH]
    if mismatched:
        return [make_claim(claim_id, False, f"magnitude or index differs at {mismatched[:5]}")]
    off_sign = [(c.n, c.m) for c in checks if c.outcome != expected]
    if not off_sign:
        return [make_claim(claim_id, True, f"{len(checks)} cases, sign {expected}")]
    if assert_sign:
        return [make_claim(claim_id, False, f"sign differs at {off_sign[:5]}")]
    return [_deviation(claim_id, f"sign deviates on {len(off_sign)} of {len(checks)} cases: {off_sign}")]


def mod_inner_suite(ctx: TwistContext, config: RunConfig) -> List[Claim]:
    if ctx.d == 0:
        return [_skipped("mod-inner", "no free part for s = 1")]
    lo, hi = config.window
    strict = ctx.s > 1
    claims: List[Claim] = []

    shift_ok = all(canon.check_basis_shift(ctx, m) for m in range(lo, hi + 1))
    claims.append(make_claim("mod-inner/basis-shift", shift_ok, f"d_m = lambda^-1 d_(m-d), lambda = {ctx.lam}"))

    congruences = [canon.check_bracket_congruence(ctx, n, m) for n, m in _pairs(config.window) if n >= 0]
    claims += _congruence_claim("mod-inner/bracket-congruence", congruences, canon.MATCH, strict)

    low = [canon.check_low_bracket(ctx, n, m) for n, m in combinations(range(ctx.d), 2)]
    if low:
        claims += _congruence_claim("mod-inner/low-bracket", low, canon.MATCH, strict)

    exact = canon.check_exact_d0_d1(ctx)
    if strict:
        claims.append(make_claim("mod-inner/exact-d0-d1", exact, "[d_0, d_1] = -d_1 without reduction"))
    elif not exact:
        bracket = der_bracket(basis_d(ctx, 0), basis_d(ctx, 1))
        claims.append(_deviation("mod-inner/exact-d0-d1", f"[d_0, d_1] = {bracket}"))

    g_checks = [canon.check_g_bracket(ctx, n, m) for n in range(ctx.d) for m in range(lo, hi + 1)]
    # the bracket gives +d for s > 1 where the stated formula carries -d
    expected = canon.SIGN_FLIP if strict else canon.MATCH
    claims += _congruence_claim("mod-inner/g-bracket", g_checks, expected, strict)
    if strict:
        claims.append(_deviation("mod-inner/g-bracket-stated-sign", "reduced [d_n, g*d_m] carries +d, stated as -d"))

    remark = [canon.check_g_remark(ctx, n) for n in range(ctx.d)]
    claims += _congruence_claim("mod-inner/g-remark", remark, canon.MATCH, strict)
    return claims


def ssets_suite(ctx: TwistContext, config: RunConfig) -> List[Claim]:
    report = verify_theorem_ssets(ctx, config.window)
    claims = [{**claim, "id": f"ssets/{claim['id']}"} for claim in report.claims]
    chain = check_inclusion_chain(ctx, config.window)
    claims.append(make_claim("ssets/inclusion-chain", chain, "S^1 in Inn and [Inn, S^1] in the g*sigma(g) bound"))
    return claims


def _ore_twists(ctx: TwistContext) -> Dict[str, SigmaDerivation]:
    return {
        "Delta": SigmaDerivation(ctx, LaurentPoly.one()),
        "g*Delta": SigmaDerivation(ctx, ctx.g),
        "t*Delta": SigmaDerivation(ctx, LaurentPoly.monomial(1)),
    }


def ore_suite(ctx: TwistContext, config: RunConfig) -> List[Claim]:
    window = (max(config.window[0], -2), min(config.window[1], 2))
    claims: List[Claim] = []
    for name, twist in _ore_twists(ctx).items():
        rng = seeded_rng(config.seed, "ore", ctx.s, name)
        assoc_ok, degree_ok = True, True
        for _ in range(config.samples):
            u, v, w = (random_ore(rng, twist, window) for _ in range(3))
            assoc_ok = assoc_ok and (u * v) * w == u * (v * w)
            if ctx.is_injective():
                degree_ok = degree_ok and (u * v).degree == u.degree + v.degree
        claims.append(make_claim(f"ore/associativity[{name}]", assoc_ok, f"{config.samples} seeded triples"))
        if ctx.is_injective():
            claims.append(make_claim(f"ore/degree[{name}]", degree_ok, "deg(uv) = deg u + deg v"))
        else:
            claims.append(_skipped(f"ore/degree[{name}]", "sigma is not injective for s = 0"))

    for name, p in (("Delta_1", LaurentPoly.one()), ("Delta_t", LaurentPoly.monomial(1))):
        twist = der_inner_from(ctx, p)
        rng = seeded_rng(config.seed, "ore-untwist", ctx.s, name)
        ok = ore_untwist(OrePoly.x(twist)) == OrePoly(untwisted_ring(ctx), {0: p, 1: LaurentPoly.one()})
        for _ in range(config.samples):
            u, v = random_ore(rng, twist, window), random_ore(rng, twist, window)
            ok = ok and ore_untwist(u * v) == ore_untwist(u) * ore_untwist(v)
        claims.append(make_claim(f"ore/untwist[{name}]", ok, f"X -> Y + p multiplicative on {config.samples} pairs"))
    return claims


SUITE_CHECKS: Dict[str, SuiteCheck] = {
    "twist": twist_suite,
    "skew": skew_suite,
    "jacobi": jacobi_suite,
    "three-way": three_way_suite,
    "inner": inner_suite,
    "decomp": decomp_suite,
    "grading": grading_suite,
    "mod-inner": mod_inner_suite,
    "ssets": ssets_suite,
    "ore": ore_suite,
}


class SuiteTask:
    """One suite evaluated for one twist context"""

    def __init__(self, suite: str, ctx: TwistContext, config: RunConfig):
        self.suite = suite
        self.ctx = ctx
        self.config = config
        self.check = SUITE_CHECKS[suite]

    async def run(self) -> SuiteTaskResult:
        start_time = datetime.now()
        logger.info(f"Starting suite {self.suite} for s={self.ctx.s}")

        result: SuiteTaskResult = {
            "suite": self.suite,
            "s": self.ctx.s,
            "claims": [],
            "error_message": "",
            "execution_time_seconds": 0.0,
        }

        try:
            result["claims"] = await asyncio.to_thread(self.check, self.ctx, self.config)
        except Exception as e:
            logger.error(f"Suite {self.suite} failed for s={self.ctx.s}: {str(e)}")
            result["error_message"] = str(e)
            result["claims"] = [make_claim(f"{self.suite}/error", False, str(e))]

        duration = (datetime.now() - start_time).total_seconds()
        result["execution_time_seconds"] = duration
        logger.info(f"Suite {self.suite} for s={self.ctx.s} completed in {duration:.2f}s")
        return result


class SuiteRunner:
    """Runs every selected (suite, s) pair concurrently and reassembles results in order"""

    def __init__(self, config: RunConfig, contexts: Optional[List[TwistContext]] = None):
        self.config = config
        self.contexts = contexts or [TwistContext.create(s, config.q_value) for s in config.s_values]
        self.tasks = [SuiteTask(suite, ctx, config) for ctx in self.contexts for suite in config.suites]

    async def run_all(self) -> List[SuiteTaskResult]:
        start_time = datetime.now()
        logger.info(f"Running {len(self.tasks)} suite tasks")

        tasks = [asyncio.create_task(task.run(), name=f"{task.suite}:{task.ctx.s}") for task in self.tasks]
        results = await asyncio.gather(*tasks)

        claims = [claim for result in results for claim in result["claims"]]
        statuses = (VERIFIED, REFUTED, SKIPPED, DEVIATION)
        counts = {status: sum(1 for c in claims if c["status"] == status) for status in statuses}
        duration = (datetime.now() - start_time).total_seconds()
        logger.info(
            f"Run Summary - Verified: {counts[VERIFIED]}, Refuted: {counts[REFUTED]}, Skipped: {counts[SKIPPED]}, "
            f"Deviations: {counts[DEVIATION]}, Duration: {duration:.2f}s"
        )
        return list(results)


def run_suite(config: RunConfig) -> Tuple[int, List[SuiteTaskResult]]:
    """Exit status (0 ok, 1 some claim refuted) and the ordered results"""
    results = asyncio.run(SuiteRunner(config).run_all())
    refuted = any(any_refuted(result["claims"]) for result in results)
    return (1 if refuted else 0), results
