import unittest

from exact_kernel.errors import ExponentError, FrobeniusError, IrregularSingularityError
from exact_kernel.fuchs import (
    INFINITY,
    first_order_exponent,
    frobenius_obstruction,
    indicial_exponents,
    indicial_polynomial,
    riemann_scheme,
)
from exact_kernel.field import K, rat, t, th_0, u, x
from exact_kernel.operators import LinOp

LEGENDRE = LinOp.of(c_tt=t * (t - 1), c_t=2 * t - 1, c_0=rat(1, 4))


class TestIndicialExponents(unittest.TestCase):

    def test_legendre_scheme(self):
        scheme = riemann_scheme(LEGENDRE, [0, 1, INFINITY])
        self.assertEqual(scheme.exponents(0), (K.zero, K.zero))
        self.assertEqual(scheme.exponents(1), (K.zero, K.zero))
        self.assertEqual(scheme.exponents(INFINITY), (rat(-1, 2), rat(-1, 2)))
        self.assertFalse(scheme.fuchs_defect())
        self.assertEqual(scheme.as_rows()[2], ("infinity", "-1/2", "-1/2"))

    def test_symbolic_exponents(self):
        # psi'' + (1 - th_0^2)/(4 t^2) psi: exponents (1 -+ th_0)/2
        op = LinOp.of(c_tt=1, c_0=(1 - th_0**2) / (4 * t**2))
        low, high = indicial_exponents(op, 0)
        self.assertEqual({low, high}, {(1 - th_0) / 2, (1 + th_0) / 2})
        self.assertEqual(indicial_polynomial(op, 0), (-K.one, (1 - th_0**2) / 4))

    def test_point_depending_on_other_variables(self):
        op = LinOp.of(c_tt=1, c_0=rat(-3, 4) / (t - u) ** 2 + x / (t - u))
        self.assertEqual(set(indicial_exponents(op, u)), {rat(-1, 2), rat(3, 2)})

    def test_irregular_points(self):
        with self.assertRaises(IrregularSingularityError):
            indicial_exponents(LinOp.of(c_tt=1, c_0=1 / t**3), 0)
        with self.assertRaises(IrregularSingularityError):
            indicial_exponents(LinOp.of(c_tt=1, c_0=1), INFINITY)

    def test_non_square_discriminant(self):
        with self.assertRaises(ExponentError):
            indicial_exponents(LinOp.of(c_tt=1, c_0=x / t**2), 0)

    def test_operator_must_be_an_ode_in_t(self):
        with self.assertRaises(ValueError):
            indicial_exponents(LinOp.of(c_tt=1, c_x=1), 0)


class TestFirstOrderExponent(unittest.TestCase):

    def test_simple_pole(self):
        op = LinOp.of(c_t=2 * (t - u), c_0=1)
        self.assertEqual(first_order_exponent(op, u), rat(-1, 2))
        self.assertEqual(first_order_exponent(op, INFINITY), rat(-1, 2))
        self.assertEqual(first_order_exponent(op, 0), K.zero)

    def test_rejects_second_order(self):
        with self.assertRaises(ValueError):
            first_order_exponent(LEGENDRE, 0)


class TestFrobeniusObstruction(unittest.TestCase):

    def test_log_free_resonance(self):
        # psi'' - 2 psi / t^2 has solutions t^2 and 1/t
        op = LinOp.of(c_tt=1, c_0=-2 / t**2)
        self.assertFalse(frobenius_obstruction(op, 0, -1, 3))

    def test_perturbed_resonance(self):
        op = LinOp.of(c_tt=1, c_0=-2 / t**2 + 1 / t)
        self.assertEqual(frobenius_obstruction(op, 0, -1, 3), rat(1, 4))

    def test_equal_exponents_rejected(self):
        op = LinOp.of(c_tt=1, c_0=rat(1, 4) / (t - u) ** 2)
        with self.assertRaisesRegex(FrobeniusError, "coincide"):
            frobenius_obstruction(op, u, rat(1, 2), 1)

    def test_bad_gap(self):
        op = LinOp.of(c_tt=1, c_0=-2 / t**2)
        for gap in (0, -1, 1.5, True):
            with self.subTest(gap=gap):
                with self.assertRaises(FrobeniusError):
                    frobenius_obstruction(op, 0, -1, gap)

    def test_intermediate_resonance(self):
        op = LinOp.of(c_tt=1, c_0=-2 / t**2)
        with self.assertRaisesRegex(FrobeniusError, "intermediate resonance"):
            frobenius_obstruction(op, 0, -2, 5)


if __name__ == "__main__":
    unittest.main()
