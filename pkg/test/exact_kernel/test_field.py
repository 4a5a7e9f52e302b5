import random
import unittest
from fractions import Fraction

from exact_kernel.errors import ExponentError, PolynomialDivisionError, SingularLocusError
from exact_kernel.field import (
    K,
    as_ratfunc,
    constant_value,
    degree,
    depends_on,
    divide,
    exact_sqrt,
    rat,
    substitute,
    substitute_all,
    t,
    taylor_coefficients,
    th_0,
    u,
    u1,
    variables_of,
    x,
)


def random_poly(rng: random.Random, terms: int = 4):
    result = K.zero
    for _ in range(terms):
        coeff = rat(rng.randint(-9, 9), rng.randint(1, 5))
        result += coeff * t ** rng.randint(0, 2) * x ** rng.randint(0, 2) * u ** rng.randint(0, 1)
    return result


def random_ratfunc(rng: random.Random):
    den = K.zero
    while not den:
        den = random_poly(rng, 2)
    return random_poly(rng) / den


class TestArithmetic(unittest.TestCase):

    def test_difference_of_squares(self):
        self.assertEqual((t + x) * (t - x), t**2 - x**2)

    def test_exact_cancellation(self):
        quotient = (t**2 - x**2) / (t - x)
        self.assertEqual(quotient, t + x)
        self.assertEqual(quotient.denom, 1)

    def test_rational_constants(self):
        self.assertEqual(rat(1, 2) + rat(1, 3), rat(5, 6))
        self.assertEqual(constant_value(rat(1, 2) + rat(1, 3)), Fraction(5, 6))

    def test_zero_is_canonical(self):
        self.assertEqual((t - t).denom, 1)
        self.assertFalse(t - t)

    def test_division_by_zero_polynomial(self):
        with self.assertRaises(PolynomialDivisionError):
            divide(t, x - x)
        with self.assertRaises(ZeroDivisionError):
            rat(1, 0)

    def test_coercion(self):
        self.assertEqual(as_ratfunc("3/4"), rat(3, 4))
        self.assertEqual(as_ratfunc(Fraction(-2, 6)), rat(-1, 3))
        self.assertEqual(as_ratfunc(7), rat(7))
        with self.assertRaises(TypeError):
            as_ratfunc(True)

    def test_ring_axioms_on_random_triples(self):
        rng = random.Random(11)
        for _ in range(20):
            a, b, c = random_ratfunc(rng), random_ratfunc(rng), random_ratfunc(rng)
            self.assertEqual((a + b) + c, a + (b + c))
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertFalse(a - a)

    def test_normalization_is_idempotent(self):
        rng = random.Random(5)
        for _ in range(20):
            f = random_ratfunc(rng)
            self.assertEqual(K.new(f.numer, f.denom), f)


class TestSubstitution(unittest.TestCase):

    def test_substitute_rational_function(self):
        self.assertEqual(substitute(t**2 + x, t, x / 2), x**2 / 4 + x)
        self.assertEqual(substitute(1 / (t - u), t, x), 1 / (x - u))

    def test_substitute_untouched_variable(self):
        f = u**2 / (x - 1)
        self.assertIs(substitute(f, t, 5), f)

    def test_substitute_all_is_sequential(self):
        f = t * x + u
        self.assertEqual(substitute_all(f, {t: 2, x: 3}), 6 + u)
        self.assertEqual(substitute_all(f, [(t, x), (x, 2)]), 4 + u)

    def test_singular_locus_names_the_factor(self):
        f = u1 / (u * (u - x))
        with self.assertRaises(SingularLocusError) as ctx:
            substitute(f, u, x)
        factor = ctx.exception.factor
        self.assertIn("u", factor)
        self.assertIn("x", factor)

    def test_substitution_commutes_with_arithmetic(self):
        rng = random.Random(3)
        for _ in range(10):
            a, b = random_poly(rng), random_poly(rng)
            value = rat(rng.randint(2, 9), rng.randint(11, 17))
            self.assertEqual(substitute(a * b, x, value), substitute(a, x, value) * substitute(b, x, value))


class TestInspection(unittest.TestCase):

    def test_variables_and_degree(self):
        f = (t**3 * x + u) / (x - 1)
        self.assertEqual(variables_of(f), (t, x, u))
        self.assertTrue(depends_on(f, t))
        self.assertFalse(depends_on(f, th_0))
        self.assertEqual(degree(f, t), (3, 0))
        self.assertEqual(degree(f, x), (1, 1))
        self.assertEqual(degree(K.zero, t), (-1, 0))

    def test_taylor_coefficients(self):
        coefficients = taylor_coefficients(1 / (1 - t), t, 0, 4)
        self.assertEqual(coefficients, [K.one] * 4)
        shifted = taylor_coefficients(t**2, t, x, 3)
        self.assertEqual(shifted, [x**2, 2 * x, K.one])

    def test_exact_sqrt(self):
        self.assertEqual(exact_sqrt(th_0**2 / 4), th_0 / 2)
        self.assertEqual(exact_sqrt((1 - th_0) ** 2) ** 2, (1 - th_0) ** 2)
        self.assertEqual(exact_sqrt(rat(9, 16)), rat(3, 4))
        self.assertFalse(exact_sqrt(K.zero))
        with self.assertRaises(ExponentError):
            exact_sqrt(th_0)
        with self.assertRaises(ExponentError):
            exact_sqrt(rat(2))


if __name__ == "__main__":
    unittest.main()
