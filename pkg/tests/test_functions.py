from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from symcont import (
    SQRT2,
    Affine,
    Combined,
    ConfigurationError,
    Const,
    DomainError,
    FinitePoints,
    FuncPiece,
    Identity,
    IntervalPiece,
    IntervalUnion,
    Monomial,
    NaturalReciprocals,
    OddPrimeReciprocals,
    Piecewise,
    QuadExt,
    Reciprocal,
    Staircase,
    bounded_on,
    describe_function,
    evaluate,
    one_sided_limits,
    scale,
    sup_abs_diff,
)
from symcont.functions import formula_limit, rational_value, tile_formulas

from conftest import qx


def indicator_sqrt2() -> Piecewise:
    # 1 at sqrt2, 0 at every rational point of the carrier
    return Piecewise(
        (
            FuncPiece(FinitePoints.of(SQRT2), Const(1)),
            FuncPiece(
                IntervalUnion(
                    (
                        IntervalPiece(qx(0), SQRT2, True, False),
                        IntervalPiece(SQRT2, qx(2), False, True),
                    )
                ),
                Const(0),
            ),
        )
    )


class TestAtoms:
    def test_reciprocal(self):
        assert evaluate(Reciprocal(), qx(Fraction(1, 5))) == qx(5)
        assert evaluate(Reciprocal(), SQRT2) == SQRT2 / 2

    def test_reciprocal_at_zero(self):
        with pytest.raises(DomainError):
            evaluate(Reciprocal(), qx(0))

    def test_affine(self):
        f = Affine(Fraction(3, 2), -1)
        assert evaluate(f, qx(4)) == qx(5)
        assert evaluate(f, SQRT2) == SQRT2 * Fraction(3, 2) - 1

    def test_monomial(self):
        assert evaluate(Monomial(3), qx(-2)) == qx(-8)
        assert evaluate(Monomial(2), SQRT2) == qx(2)
        with pytest.raises(ConfigurationError):
            Monomial(0)

    def test_identity_const(self):
        assert evaluate(Identity(), SQRT2) == SQRT2
        assert evaluate(Const(Fraction(2, 7)), qx(100)) == qx(Fraction(2, 7))

    def test_limit_diverges_only_for_reciprocal_at_zero(self):
        assert formula_limit(Reciprocal(), qx(0)) is None
        assert formula_limit(Reciprocal(), qx(2)) == qx(Fraction(1, 2))
        assert formula_limit(Monomial(2), qx(0)) == qx(0)


class TestPiecewise:
    def test_first_matching_region_wins(self):
        f = indicator_sqrt2()
        assert evaluate(f, SQRT2) == qx(1)
        assert evaluate(f, qx(1)) == qx(0)
        assert evaluate(f, qx(Fraction(7, 5))) == qx(0)

    def test_uncovered_point(self):
        f = Piecewise((FuncPiece(FinitePoints.of(qx(0)), Const(1)),))
        with pytest.raises(DomainError):
            evaluate(f, qx(1))

    def test_empty_rejected(self):
        with pytest.raises(ConfigurationError):
            Piecewise(())

    def test_staircase_blocks(self):
        stair = Staircase("A", 4)
        pieces = stair.block_pieces()
        f = Piecewise(
            tuple(
                FuncPiece(IntervalUnion((p,)), Const(2 * i - 1))
                for i, p in enumerate(pieces, start=1)
            )
        )
        # second block starts at 5/2 and carries the value 3
        assert evaluate(f, qx(Fraction(5, 2))) == qx(3)
        assert evaluate(f, qx(1)) == qx(1)


class TestCombined:
    def test_scale(self):
        f = scale(Const(2), 3)
        assert evaluate(f, qx(0)) == qx(6)
        assert f.op == "scale" and f.alpha == qx(3)

    def test_sub_self_is_zero(self):
        f = Affine(2, -5)
        diff = Combined("sub", (f, f))
        for x in (qx(0), SQRT2, qx(Fraction(-7, 3))):
            assert evaluate(diff, x) == qx(0)

    def test_add_mul_div(self):
        g = Combined("add", (Identity(), Const(1)))
        assert evaluate(g, qx(2)) == qx(3)
        h = Combined("mul", (Identity(), Identity()))
        assert evaluate(h, SQRT2) == qx(2)
        q = Combined("div", (Const(1), Identity()))
        assert evaluate(q, qx(4)) == qx(Fraction(1, 4))
        with pytest.raises(DomainError):
            evaluate(q, qx(0))

    def test_validation(self):
        with pytest.raises(ConfigurationError):
            Combined("pow", (Identity(),))
        with pytest.raises(ConfigurationError):
            Combined("scale", (Identity(), Identity()), qx(1))
        with pytest.raises(ConfigurationError):
            Combined("scale", (Identity(),))
        with pytest.raises(ConfigurationError):
            Combined("div", (Identity(),))
        with pytest.raises(ConfigurationError):
            Combined("add", (Identity(),))

    @settings(max_examples=50, deadline=None)
    @given(
        st.fractions(min_value=-9, max_value=9, max_denominator=10),
        st.fractions(min_value=-9, max_value=9, max_denominator=10),
        st.fractions(min_value=-9, max_value=9, max_denominator=10),
    )
    def test_pointwise_homomorphism(self, a, b, x):
        fa, fb = Affine(a, 1), Affine(b, -2)
        pt = qx(x)
        la, lb = evaluate(fa, pt), evaluate(fb, pt)
        assert evaluate(Combined("add", (fa, fb)), pt) == la + lb
        assert evaluate(Combined("sub", (fa, fb)), pt) == la - lb
        assert evaluate(Combined("mul", (fa, fb)), pt) == la * lb
        assert evaluate(scale(fa, Fraction(5, 3)), pt) == la * Fraction(5, 3)


class TestOneSidedLimits:
    def test_matching_closure_values(self):
        pieces = (
            IntervalPiece(qx(0), qx(1), True, False),
            IntervalPiece(qx(1), qx(2), True, True),
        )
        f = Piecewise(
            (
                FuncPiece(IntervalUnion((pieces[0],)), Monomial(2)),
                FuncPiece(IntervalUnion((pieces[1],)), Const(1)),
            )
        )
        left, right = one_sided_limits(f, pieces, qx(1))
        assert left.exists and left.value == qx(1)
        assert right.exists and right.value == qx(1)

    def test_jump(self):
        pieces = (
            IntervalPiece(qx(0), qx(1), True, False),
            IntervalPiece(qx(1), qx(2), True, True),
        )
        f = Piecewise(
            (
                FuncPiece(IntervalUnion((pieces[0],)), Const(0)),
                FuncPiece(IntervalUnion((pieces[1],)), Const(5)),
            )
        )
        left, right = one_sided_limits(f, pieces, qx(1))
        assert left.value == qx(0) and right.value == qx(5)

    def test_missing_side(self):
        pieces = (IntervalPiece(qx(0), qx(1)),)
        left, right = one_sided_limits(Identity(), pieces, qx(0))
        assert not left.exists
        assert right.exists and right.value == qx(0)

    def test_divergent_side(self):
        pieces = (IntervalPiece(qx(0), qx(1), False, True),)
        left, right = one_sided_limits(Reciprocal(), pieces, qx(0))
        assert right.exists and right.value is None


class TestBounds:
    def test_reciprocal_on_primes(self):
        d = OddPrimeReciprocals(100, with_zero=False)
        rep = bounded_on(Reciprocal(), d)
        assert rep.value == qx(97)
        assert rep.attained_at == qx(Fraction(1, 97))
        assert not rep.unbounded

    def test_const(self):
        rep = bounded_on(Const(-1), NaturalReciprocals(10, with_zero=True))
        assert rep.value == qx(1)

    def test_analytic_blocks(self):
        stair = Staircase("A", 4)
        rep = bounded_on(Identity(), stair)
        assert rep.method == "analytic"
        assert rep.value == qx(stair.breakpoints()[-1])

    def test_unbounded_near_zero(self):
        dom = IntervalUnion((IntervalPiece(qx(0), qx(1), False, True),))
        rep = bounded_on(Reciprocal(), dom)
        assert rep.unbounded and rep.value is None

    def test_reciprocal_through_zero_rejected(self):
        dom = IntervalUnion((IntervalPiece(qx(-1), qx(1)),))
        with pytest.raises(ConfigurationError):
            bounded_on(Reciprocal(), dom)


class TestSupAbsDiff:
    def test_affine_vs_const(self):
        dom = IntervalUnion((IntervalPiece(qx(0), qx(2)),))
        assert sup_abs_diff(Affine(1, 0), Const(1), dom) == qx(1)

    def test_monomial_tail(self):
        dom = IntervalUnion((IntervalPiece(qx(0), qx(1), True, False),))
        # sup |x^2 - 1| on [0, 1) is attained in the closure at 0
        assert sup_abs_diff(Monomial(2), Const(1), dom) == qx(1)

    def test_identical(self):
        dom = IntervalUnion((IntervalPiece(qx(1), qx(3)),))
        assert sup_abs_diff(Reciprocal(), Reciprocal(), dom) == qx(0)

    def test_unsupported_pair(self):
        dom = IntervalUnion((IntervalPiece(qx(1), qx(3)),))
        with pytest.raises(ConfigurationError):
            sup_abs_diff(Monomial(2), Monomial(3), dom)


class TestTiling:
    def test_bare_formula_covers_all(self):
        pieces = (IntervalPiece(qx(0), qx(1)), IntervalPiece(qx(2), qx(3)))
        tiles = tile_formulas(Identity(), pieces)
        assert [fm for _, fm in tiles] == [Identity(), Identity()]

    def test_owner_must_be_unique(self):
        piece = IntervalPiece(qx(0), qx(1))
        f = Piecewise(
            (
                FuncPiece(IntervalUnion((piece,)), Const(0)),
                FuncPiece(IntervalUnion((piece,)), Const(1)),
            )
        )
        with pytest.raises(ConfigurationError):
            tile_formulas(f, (piece,))

    def test_unowned_piece(self):
        f = Piecewise((FuncPiece(FinitePoints.of(qx(9)), Const(0)),))
        with pytest.raises(ConfigurationError):
            tile_formulas(f, (IntervalPiece(qx(0), qx(1)),))


class TestDescriptions:
    def test_readable(self):
        assert describe_function(Reciprocal()) == "1/x"
        assert "piecewise" in describe_function(indicator_sqrt2())
        assert "x^2" in describe_function(Monomial(2))

    def test_rational_value(self):
        assert rational_value(qx(Fraction(3, 4))) == Fraction(3, 4)
        assert rational_value(SQRT2) is None
