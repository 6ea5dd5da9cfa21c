import random
from decimal import Decimal
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from symcont import (
    ONE,
    SQRT2,
    ZERO,
    ParseError,
    QuadExt,
    as_quadext,
    compare,
    format_quadext,
    format_rational,
    midpoint,
    parse_quadext,
    parse_rational,
)

from conftest import dec, qx


class TestConstruction:
    def test_of_coerces(self):
        assert QuadExt.of(3) == QuadExt(Fraction(3))
        assert QuadExt.of("2/5") == QuadExt(Fraction(2, 5))
        assert QuadExt.of(1, "1/2") == QuadExt(Fraction(1), Fraction(1, 2))

    def test_constants(self):
        assert ZERO.sign() == 0
        assert ONE == 1
        assert SQRT2 * SQRT2 == 2

    def test_as_quadext(self):
        assert as_quadext(Fraction(7, 3)) == qx(Fraction(7, 3))
        assert as_quadext(5) == qx(5)
        with pytest.raises(TypeError):
            as_quadext("nope")

    def test_is_rational(self):
        assert qx(3, 0).is_rational()
        assert not SQRT2.is_rational()


class TestSign:
    def test_pure_rational(self):
        assert qx(Fraction(-1, 7)).sign() == -1
        assert qx(0).sign() == 0

    def test_pure_irrational(self):
        assert SQRT2.sign() == 1
        assert (-SQRT2).sign() == -1

    def test_mixed_dominant_rational(self):
        # 3 - 2*sqrt2 = 3 - 2.828... > 0
        assert QuadExt(Fraction(3), Fraction(-2)).sign() == 1
        assert QuadExt(Fraction(-3), Fraction(2)).sign() == -1

    def test_mixed_dominant_irrational(self):
        # 1 - sqrt2 < 0
        assert QuadExt(Fraction(1), Fraction(-1)).sign() == -1
        assert QuadExt(Fraction(-1), Fraction(1)).sign() == 1

    def test_sign_matches_decimal_oracle(self):
        rng = random.Random(7)
        for _ in range(500):
            x = QuadExt(
                Fraction(rng.randint(-50, 50), rng.randint(1, 40)),
                Fraction(rng.randint(-50, 50), rng.randint(1, 40)),
            )
            d = dec(x)
            expected = 0 if d == 0 else (1 if d > 0 else -1)
            assert x.sign() == expected


class TestArithmetic:
    def test_add_sub(self):
        a = QuadExt(Fraction(1, 2), Fraction(3))
        b = QuadExt(Fraction(1, 3), Fraction(-1))
        assert a + b == QuadExt(Fraction(5, 6), Fraction(2))
        assert a - b == QuadExt(Fraction(1, 6), Fraction(4))
        assert a + Fraction(1, 2) == QuadExt(Fraction(1), Fraction(3))
        assert 1 + a == QuadExt(Fraction(3, 2), Fraction(3))

    def test_mul(self):
        a = QuadExt(Fraction(1), Fraction(1))
        b = QuadExt(Fraction(1), Fraction(-1))
        assert a * b == QuadExt(Fraction(-1))  # (1+s)(1-s) = 1-2
        assert (SQRT2 * 3) == QuadExt(Fraction(0), Fraction(3))

    def test_div_exact(self):
        assert (ONE / SQRT2) * SQRT2 == ONE
        a = QuadExt(Fraction(3, 7), Fraction(-2, 5))
        b = QuadExt(Fraction(1, 3), Fraction(4))
        assert (a / b) * b == a

    def test_div_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            ONE / ZERO

    def test_abs_neg(self):
        x = QuadExt(Fraction(1), Fraction(-1))  # negative
        assert abs(x) == -x
        assert abs(-x) == -x

    def test_random_roundtrips(self):
        rng = random.Random(11)
        for _ in range(2000):
            a = QuadExt(
                Fraction(rng.randint(-99, 99), rng.randint(1, 30)),
                Fraction(rng.randint(-99, 99), rng.randint(1, 30)),
            )
            b = QuadExt(
                Fraction(rng.randint(-99, 99), rng.randint(1, 30)),
                Fraction(rng.randint(-99, 99), rng.randint(1, 30)),
            )
            if b.sign() == 0:
                continue
            assert (a / b) * b == a
            assert (a * b) / b == a


class TestOrder:
    def test_comparisons(self):
        assert QuadExt(Fraction(7, 5)) < SQRT2 < QuadExt(Fraction(3, 2))
        assert SQRT2 <= SQRT2
        assert qx(2) > SQRT2

    def test_eq_hash_match_fraction(self):
        assert qx(Fraction(3, 4)) == Fraction(3, 4)
        assert hash(qx(Fraction(3, 4))) == hash(Fraction(3, 4))
        assert hash(qx(5)) == hash(5)

    def test_order_embedding_vs_decimal(self):
        rng = random.Random(13)
        for _ in range(1000):
            x = QuadExt(
                Fraction(rng.randint(-500, 500), rng.randint(1, 60)),
                Fraction(rng.randint(-500, 500), rng.randint(1, 60)),
            )
            y = QuadExt(
                Fraction(rng.randint(-500, 500), rng.randint(1, 60)),
                Fraction(rng.randint(-500, 500), rng.randint(1, 60)),
            )
            c = compare(x, y)
            dx, dy = dec(x), dec(y)
            assert c == (0 if dx == dy else (1 if dx > dy else -1))

    def test_float_close(self):
        assert abs(float(SQRT2) - 2**0.5) < 1e-12


class TestMidpoint:
    def test_rational_with_sqrt2(self):
        m = midpoint(qx(Fraction(7, 5)), SQRT2)
        assert m.irr == Fraction(1, 2)
        assert m.rat == Fraction(7, 10)

    def test_plain(self):
        assert midpoint(qx(0), qx(1)) == qx(Fraction(1, 2))


class TestRendering:
    def test_format_rational_forms(self):
        assert format_rational(Fraction(3)) == "3"
        assert format_rational(Fraction(-2, 7)) == "-2/7"
        assert parse_rational("5/8") == Fraction(5, 8)
        with pytest.raises(ParseError):
            parse_rational("x")

    def test_format_quadext_forms(self):
        assert format_quadext(qx(Fraction(3, 4))) == "3/4"
        assert format_quadext(SQRT2) == "0 + 1*sqrt2"
        assert format_quadext(qx(2) - SQRT2) == "2 - 1*sqrt2"
        assert format_quadext(QuadExt(Fraction(1, 2), Fraction(-1, 3))) == (
            "1/2 - 1/3*sqrt2"
        )

    def test_parse_forms(self):
        assert parse_quadext("3/4") == qx(Fraction(3, 4))
        assert parse_quadext("-2") == qx(-2)
        assert parse_quadext("sqrt2") == SQRT2
        assert parse_quadext("-sqrt2") == -SQRT2
        assert parse_quadext("3*sqrt2") == SQRT2 * 3
        assert parse_quadext("-1/2*sqrt2") == SQRT2 / -2
        assert parse_quadext("1 + 1/2*sqrt2") == QuadExt(
            Fraction(1), Fraction(1, 2)
        )
        assert parse_quadext(" 2 - 1*sqrt2 ") == qx(2) - SQRT2

    def test_parse_errors(self):
        for bad in ("", "one", "1 +", "sqrt3", "1/0", "2 - 1/0*sqrt2"):
            with pytest.raises(ParseError):
                parse_quadext(bad)

    def test_roundtrip_random(self):
        rng = random.Random(17)
        for _ in range(300):
            x = QuadExt(
                Fraction(rng.randint(-999, 999), rng.randint(1, 99)),
                Fraction(rng.randint(-999, 999), rng.randint(1, 99)),
            )
            assert parse_quadext(format_quadext(x)) == x


small_fractions = st.fractions(
    min_value=-20, max_value=20, max_denominator=12
)


@st.composite
def quadexts(draw):
    return QuadExt(draw(small_fractions), draw(small_fractions))


class TestFieldProperties:
    @given(quadexts(), quadexts())
    def test_commutative(self, a, b):
        assert a + b == b + a
        assert a * b == b * a

    @given(quadexts(), quadexts(), quadexts())
    def test_associative_distributive(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c

    @given(quadexts())
    def test_inverse(self, a):
        assert a + (-a) == ZERO
        if a.sign() != 0:
            assert a * (ONE / a) == ONE

    @given(quadexts(), quadexts())
    def test_order_translation_invariant(self, a, b):
        c = QuadExt(Fraction(1, 3), Fraction(2))
        assert (a < b) == (a + c < b + c)
