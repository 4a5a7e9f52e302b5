import unittest

from exact_kernel.errors import RewriteError
from exact_kernel.field import K, rat, substitute, substitute_all, t, u, u1, x
from exact_kernel.fuchs import INFINITY
from exact_kernel.operators import LinOp
from exact_kernel.partial_fractions import partial_fractions_t
from painleve_forms.lax import (
    apparent_obstruction,
    build_lax,
    compat_jets,
    compat_residual,
    compatibility_condition,
    expected_riemann_scheme,
    garnier_forms,
    lax_pde_reduction_exponent,
    lax_riemann_scheme,
)
from painleve_forms.pvi import pvi_rhs, x_flow
from painleve_forms.theta import PviParams, Theta

SAMPLE = Theta.of(rat(1, 2), rat(1, 3), rat(1, 5), rat(1, 7))


class TestGarnierForms(unittest.TestCase):

    def test_W_values(self):
        forms = garnier_forms(SAMPLE)
        self.assertEqual(substitute(forms.W, t, x), K.one)
        self.assertEqual(substitute(forms.W, t, 0), K.zero)
        self.assertEqual(substitute(forms.W, t, 1), K.zero)

    def test_g_coefficients(self):
        forms = garnier_forms(Theta.symbolic())
        self.assertEqual(forms.g1, -x * (x - 1) / (2 * (u - x)))
        self.assertEqual(forms.g0, rat(1, 2) - u)

    def test_double_pole_at_u(self):
        minus_half_S = -garnier_forms(Theta.symbolic()).S / 2
        split = partial_fractions_t(minus_half_S, (0, 1, x, u))
        self.assertEqual(split.part(u).order, 2)
        self.assertEqual(split.part(u).coefficients[1], rat(3, 4))

    def test_operators(self):
        pair = build_lax(SAMPLE)
        self.assertEqual(pair.L1.c_tt, K.one)
        self.assertEqual(pair.L1.c_0, pair.forms.S / 2)
        self.assertEqual(pair.L2.c_x, K.one)
        self.assertEqual(pair.L2.c_t, pair.forms.W)
        self.assertEqual(pair.L2.c_0, -pair.forms.W.diff(t) / 2)


class TestCompatibility(unittest.TestCase):

    def test_rational_theta_residual_vanishes(self):
        pair = build_lax(SAMPLE)
        self.assertFalse(compat_residual(pair.L1, pair.L2, x_flow(SAMPLE)))

    def test_symbolic_theta_residual_vanishes(self):
        theta = Theta.symbolic()
        pair = build_lax(theta)
        self.assertFalse(compat_residual(pair.L1, pair.L2, x_flow(theta)))

    def test_closed_form_matches_rewriting(self):
        pair = build_lax(SAMPLE)
        flow = x_flow(SAMPLE)
        flow = flow.with_image(u1, flow.images[u1] + x)
        residual = compat_residual(pair.L1, pair.L2, flow)
        self.assertTrue(residual)
        self.assertEqual(residual, compatibility_condition(pair.forms, flow))

    def test_spot_check_at_a_point(self):
        pair = build_lax(SAMPLE)
        residual = compat_residual(pair.L1, pair.L2, x_flow(SAMPLE))
        self.assertEqual(substitute_all(residual, {t: 7, x: 2, u: 3, u1: 5}), K.zero)

    def test_perturbed_flow_is_detected(self):
        pair = build_lax(SAMPLE)
        params = PviParams.from_theta(SAMPLE)
        flow = x_flow(SAMPLE).with_image(u1, pvi_rhs(params) + 1)
        self.assertTrue(compat_residual(pair.L1, pair.L2, flow))

    def test_psi_t_part_is_identically_zero(self):
        pair = build_lax(SAMPLE)
        _, psi_t_part = compat_jets(pair.L1, pair.L2, x_flow(SAMPLE).with_image(u1, K.zero))
        self.assertFalse(psi_t_part)

    def test_operators_out_of_normal_form(self):
        pair = build_lax(SAMPLE)
        with self.assertRaises(RewriteError):
            compat_residual(pair.L2, pair.L1, x_flow(SAMPLE))
        with self.assertRaises(RewriteError):
            compat_residual(pair.L1, LinOp.of(c_t=1), x_flow(SAMPLE))


class TestLocalAnalysis(unittest.TestCase):

    def test_riemann_scheme_symbolic(self):
        theta = Theta.symbolic()
        scheme = lax_riemann_scheme(build_lax(theta))
        for point, pair in expected_riemann_scheme(theta).items():
            with self.subTest(point=point if point == INFINITY else str(point)):
                self.assertEqual(set(scheme.exponents(point)), set(pair))
        self.assertFalse(scheme.fuchs_defect())

    def test_apparent_singularity(self):
        self.assertFalse(apparent_obstruction(build_lax(Theta.symbolic())))

    def test_perturbed_double_pole_is_not_apparent(self):
        pair = build_lax(SAMPLE)
        # -S/2 gets 1/(t-u)^2 in place of 3/4/(t-u)^2
        perturbed = LinOp(pair.L1.c_tt, pair.L1.c_t, pair.L1.c_x, pair.L1.c_0 - rat(1, 4) / (t - u) ** 2)
        self.assertTrue(apparent_obstruction(type(pair)(perturbed, pair.L2, pair.forms, pair.theta)))

    def test_pde_reduction_exponent(self):
        self.assertEqual(lax_pde_reduction_exponent(build_lax(SAMPLE)), rat(-1, 2))


if __name__ == "__main__":
    unittest.main()
