import pytest

from qwitt.src.kernel.canonical import (
    MATCH,
    SIGN_FLIP,
    canonical_form,
    canonical_form_by_division,
    check_bracket_congruence,
    check_basis_shift,
    check_exact_d0_d1,
    check_g_bracket,
    check_g_remark,
    check_grading_closure,
    check_low_bracket,
    congruent_mod_inner,
    graded_split,
    is_inner_via_T,
    mod_inner_bracket,
    mod_inner_bracket_g,
    reduce_basis,
)
from qwitt.src.kernel.derivation import SigmaDerivation, basis_d, der_is_inner
from qwitt.src.kernel.exceptions import IndexRangeError, NoFreePartError
from qwitt.src.kernel.laurent import LaurentPoly
from qwitt.src.kernel.sampling import random_homogeneous, random_laurent, seeded_rng
from qwitt.src.kernel.scalars import ONE, Q, ZERO, QRational
from qwitt.src.kernel.twist import TwistContext

from .conftest import S_GRID


def test_canonical_form_examples(t, ctx2):
    form = canonical_form(SigmaDerivation(ctx2, t))
    assert form.alphas == (1 / Q,)
    assert form.inner_witness == LaurentPoly.constant(-1 / Q)

    inner = canonical_form(SigmaDerivation(ctx2, ctx2.g))
    assert inner.alphas == (ZERO,)
    assert inner.inner_witness == LaurentPoly.one()

    d1 = canonical_form(basis_d(ctx2, 1))
    assert d1.alphas == (-1 / Q,)
    assert d1.d_coordinates == (1 / Q,)
    assert d1.inner_witness == LaurentPoly.constant(1 / Q)


def test_zero_decomposes_to_zero(ctx2):
    zero = SigmaDerivation(ctx2, LaurentPoly.zero())
    assert canonical_form(zero).is_zero()
    assert canonical_form_by_division(zero).is_zero()


def test_linear_twist_has_empty_free_part(t):
    ctx = TwistContext.create(1)
    form = canonical_form(SigmaDerivation(ctx, t))
    assert form.alphas == ()
    assert form.inner_witness == t * (1 / (1 - Q))


@pytest.mark.parametrize("s", S_GRID)
def test_two_algorithms_agree_and_reassemble(s):
    ctx = TwistContext.create(s)
    rng = seeded_rng(0, "decomp", s)
    for _ in range(20):
        D = SigmaDerivation(ctx, random_laurent(rng, ctx, (-5, 5)))
        form = canonical_form(D)
        assert form == canonical_form_by_division(D)
        assert form.reassemble(ctx) == D.coeff


def test_congruence_mod_inner(ctx2):
    assert congruent_mod_inner(basis_d(ctx2, 1), basis_d(ctx2, 0).times(1 / Q))
    ctx0 = TwistContext.create(0)
    assert congruent_mod_inner(basis_d(ctx0, 1), basis_d(ctx0, 0).times(Q))
    assert not congruent_mod_inner(basis_d(ctx2, 0), SigmaDerivation(ctx2, LaurentPoly.zero()))


@pytest.mark.parametrize("s", S_GRID + (1,))
def test_inner_is_one_minus_T_multiples(s):
    ctx = TwistContext.create(s)
    rng = seeded_rng(0, "inn-T", s)
    for _ in range(10):
        D = SigmaDerivation(ctx, random_laurent(rng, ctx, (-4, 4)))
        assert is_inner_via_T(D) == (der_is_inner(D) is not None)
        assert is_inner_via_T(D.times(1 - ctx.T))


def test_reduce_basis():
    assert reduce_basis(TwistContext.create(2), 3) == (Q**-3, 0)
    assert reduce_basis(TwistContext.create(3), 1) == (ONE, 1)
    assert reduce_basis(TwistContext.create(0), 2) == (Q**2, 0)
    with pytest.raises(NoFreePartError, match="no free part"):
        reduce_basis(TwistContext.create(1), 3)


@pytest.mark.parametrize("s", S_GRID)
def test_basis_shift(s):
    ctx = TwistContext.create(s)
    assert all(check_basis_shift(ctx, m) for m in range(-5, 6))


def test_graded_split_example(t):
    ctx = TwistContext.create(3)
    split = graded_split(SigmaDerivation(ctx, t + t**2 + t**3))
    assert split.components == {
        0: LaurentPoly.monomial(1, 1 / Q),
        1: LaurentPoly({0: 1, 1: 1 / Q}),
    }
    assert split.support() == [0, 1]
    assert split.reassemble(ctx) == t + t**2 + t**3


def test_graded_split_of_basis_monomial():
    ctx = TwistContext.create(4)
    split = graded_split(SigmaDerivation(ctx, LaurentPoly.monomial(2)))
    assert split.components == {2: LaurentPoly.one()}


def test_graded_split_by_exponent_for_linear_twist(t):
    ctx = TwistContext.create(1)
    split = graded_split(SigmaDerivation(ctx, t + 2 * t**3))
    assert split.components == {1: LaurentPoly.one(), 3: LaurentPoly.constant(2)}
    assert split.reassemble(ctx) == t + 2 * t**3


@pytest.mark.parametrize("s", S_GRID)
def test_grading_reassembly_and_closure(s):
    ctx = TwistContext.create(s)
    rng = seeded_rng(0, "grading", s)
    for _ in range(10):
        D = SigmaDerivation(ctx, random_laurent(rng, ctx, (-5, 5)))
        assert graded_split(D).reassemble(ctx) == D.coeff
    for a in range(ctx.d):
        for b in range(ctx.d):
            for _ in range(3):
                D1 = random_homogeneous(rng, ctx, a, (-4, 4))
                D2 = random_homogeneous(rng, ctx, b, (-4, 4))
                assert check_grading_closure(D1, D2)


def test_mod_inner_bracket_examples():
    assert mod_inner_bracket(TwistContext.create(5), 1, 2) == (ZERO, ZERO, ZERO, QRational.lift(-1))
    assert mod_inner_bracket(TwistContext.create(3), 1, 2) == (ZERO, -1 / Q)
    assert mod_inner_bracket(TwistContext.create(0), 0, 1) == (Q,)


def test_mod_inner_bracket_needs_free_part():
    with pytest.raises(NoFreePartError):
        mod_inner_bracket(TwistContext.create(1), 0, 1)


def test_g_bracket_examples():
    assert mod_inner_bracket_g(TwistContext.create(2), 0, 0) == (ONE,)
    ctx3 = TwistContext.create(3)
    assert mod_inner_bracket_g(ctx3, 1, 0) == (ZERO, QRational.lift(2))
    assert check_g_bracket(ctx3, 1, 0).outcome == SIGN_FLIP


def test_g_bracket_index_range():
    with pytest.raises(IndexRangeError, match="n must satisfy 0≤n<d"):
        mod_inner_bracket_g(TwistContext.create(3), 2, 0)


@pytest.mark.parametrize("s", (2, 3, 4))
def test_congruences_hold_exactly_above_one(s):
    ctx = TwistContext.create(s)
    for n in range(0, 4):
        for m in range(-3, 4):
            assert check_bracket_congruence(ctx, n, m).outcome == MATCH
    for n in range(ctx.d):
        for m in range(n + 1, ctx.d):
            assert check_low_bracket(ctx, n, m).outcome == MATCH
        assert check_g_remark(ctx, n).outcome == MATCH
        for m in range(-3, 4):
            assert check_g_bracket(ctx, n, m).outcome == SIGN_FLIP
    assert check_exact_d0_d1(ctx)


def test_congruence_signs_below_one():
    ctx = TwistContext.create(-2)
    assert check_bracket_congruence(ctx, 0, 1).outcome == SIGN_FLIP
    assert check_low_bracket(ctx, 0, 1).outcome == SIGN_FLIP
    assert check_g_remark(ctx, 0).outcome == SIGN_FLIP
    assert check_g_bracket(ctx, 0, 1).outcome == MATCH
