import random
from fractions import Fraction

import pytest

from tropmod.rationals import NEG_INF, POS_INF
from tropmod.semiring import (
    TROPICAL_ONE,
    TROPICAL_ZERO,
    AffineFunction,
    TropicalNumber,
    TropicalPolynomial,
    eval_polynomial,
    is_zero_point,
    trop_add,
    trop_mul,
)


def test_trop_add():
    assert trop_add(2, 3) == 3
    assert trop_add(NEG_INF, 5) == 5
    assert trop_add(-1, -1) == -1


def test_trop_mul():
    assert trop_mul(2, 3) == 5
    assert trop_mul(Fraction(7, 3), 0) == Fraction(7, 3)
    assert trop_mul(NEG_INF, 7) == TROPICAL_ZERO


def test_units():
    assert trop_add(TROPICAL_ZERO, Fraction(-9, 2)) == Fraction(-9, 2)
    assert trop_mul(TROPICAL_ONE, Fraction(-9, 2)) == Fraction(-9, 2)


def test_positive_infinity_rejected():
    with pytest.raises(ValueError):
        TropicalNumber(POS_INF)


def test_inverse_is_group_law():
    rng = random.Random(1)
    for _ in range(50):
        a = TropicalNumber(Fraction(rng.randint(-100, 100), rng.randint(1, 40)))
        assert trop_mul(a, a.inverse()) == TROPICAL_ONE
    with pytest.raises(ArithmeticError):
        TROPICAL_ZERO.inverse()


def test_distributivity_sampled():
    rng = random.Random(2)
    samples = [TROPICAL_ZERO] + [
        TropicalNumber(Fraction(rng.randint(-60, 60), rng.randint(1, 11)))
        for _ in range(25)
    ]
    for _ in range(300):
        a, b, c = rng.choice(samples), rng.choice(samples), rng.choice(samples)
        assert trop_mul(a, trop_add(b, c)) == trop_add(trop_mul(a, b), trop_mul(a, c))


LINE = TropicalPolynomial.of({(1, 0): 0, (0, 1): 0, (0, 0): 0})


def test_eval_polynomial():
    assert eval_polynomial(LINE, (0, 0)) == 0
    assert eval_polynomial(LINE, (5, 3)) == 5
    f = TropicalPolynomial.of({(2,): 0, (1,): 1})
    assert eval_polynomial(f, (2,)) == 4  # max(0 + 2*2, 1 + 2)


def test_eval_is_pointwise_max_of_terms():
    rng = random.Random(3)
    for _ in range(50):
        nterms = rng.randint(1, 5)
        f = TropicalPolynomial.of(
            {
                (rng.randint(-3, 3), rng.randint(-3, 3)): Fraction(rng.randint(-9, 9))
                for _ in range(nterms)
            }
        )
        x = (Fraction(rng.randint(-20, 20), 3), Fraction(rng.randint(-20, 20), 7))
        assert eval_polynomial(f, x) == max(f.term_values(x))


def test_zero_points_of_the_line():
    # the tropical line max(x, y, 0) has its vertex at the origin
    assert is_zero_point(LINE, (0, 0)) is True
    assert is_zero_point(LINE, (5, 3)) is False
    assert is_zero_point(LINE, (2, 2)) is True


def test_zero_points_are_nowhere_dense():
    rng = random.Random(4)
    for _ in range(60):
        f = TropicalPolynomial.of(
            {
                (rng.randint(-2, 2), rng.randint(-2, 2)): Fraction(rng.randint(-5, 5))
                for _ in range(rng.randint(2, 4))
            }
        )
        x = [Fraction(rng.randint(-10, 10)), Fraction(rng.randint(-10, 10))]
        if not is_zero_point(f, x):
            continue
        # a generic small rational perturbation leaves the corner locus
        eps = Fraction(1, rng.choice([10007, 10009, 10037]))
        moved = [x[0] + eps, x[1] + eps * Fraction(3, 7)]
        values = f.term_values(moved)
        assert values.count(max(values)) == 1


def test_polynomial_of_drops_tropical_zero_terms():
    f = TropicalPolynomial.of({(1,): 2, (0,): NEG_INF})
    assert len(f.terms) == 1
    with pytest.raises(ValueError):
        TropicalPolynomial.of({(0,): NEG_INF})


def test_affine_function_and_inverse_are_polynomials():
    f = AffineFunction((2, -1), Fraction(1, 3))
    g = f.tropical_inverse()
    x = (Fraction(5), Fraction(-2, 3))
    assert f(x) + g(x) == 0
    assert f.to_polynomial()(x) == f(x)
    assert g.to_polynomial()(x) == g(x)
    assert len(f.to_polynomial().terms) == 1


def test_floats_rejected():
    with pytest.raises(TypeError):
        TropicalNumber(0.5)
    with pytest.raises(TypeError):
        eval_polynomial(LINE, (0.1, 0))
