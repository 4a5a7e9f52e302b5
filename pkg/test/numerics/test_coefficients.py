import unittest

from exact_kernel.field import t, th_0, u, x
from numerics.coefficients import compile_ratfunc, heat_coefficients, legendre_coefficients, pvi_function, wave_coefficients
from numerics.errors import NumericDomainError
from painleve_forms.theta import Theta


class TestCompiledCoefficients(unittest.TestCase):

    def test_rational_function(self):
        f = compile_ratfunc((t - x) / (u + 1))
        self.assertAlmostEqual(f(3.0, 1.0, 1.0, 0.0), 1.0)

    def test_free_symbols_are_refused(self):
        with self.assertRaises(NumericDomainError):
            compile_ratfunc(th_0 * t)
        with self.assertRaises(NumericDomainError):
            compile_ratfunc(u * t, ("t",))

    def test_symbolic_theta_is_refused(self):
        with self.assertRaises(NumericDomainError):
            wave_coefficients(Theta.symbolic())

    def test_pvi_right_side(self):
        self.assertAlmostEqual(pvi_function(Theta.of(1, 0, 0, 0))(3.0, 2.0, 0.0), -7 / 36, places=12)

    def test_heat_coefficients_for_zero_theta(self):
        heat = heat_coefficients(Theta.of(0, 0, 0, 0))
        # t(t-1)(t-x), -x(x-1) and (t-x)/4 at t = 2, x = 3
        self.assertAlmostEqual(heat.c_tt(2.0, 3.0, 0.5, 0.0), -2.0)
        self.assertAlmostEqual(heat.c_x(2.0, 3.0, 0.5, 0.0), -6.0)
        self.assertAlmostEqual(heat.c_0(2.0, 3.0, 0.5, 0.0), -0.25)

    def test_legendre_coefficients(self):
        op = legendre_coefficients()
        self.assertAlmostEqual(op.c_tt(0.5), -0.25)
        self.assertAlmostEqual(op.c_t(0.5), 0.0)
        self.assertAlmostEqual(op.c_0(0.5), 0.25)


if __name__ == "__main__":
    unittest.main()
