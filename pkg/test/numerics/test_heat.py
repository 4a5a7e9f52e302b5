import unittest

import numpy as np

from numerics.export import HEAT_COLUMNS, heat_frame
from numerics.heat import HeatResidual, heat_residual, heat_sweep
from numerics.integrator import Tolerances, integrate_pvi
from numerics.wave import WaveGrid
from painleve_forms.theta import Theta

NODES = (-0.6, -0.3, 0.8, 1.4, 3.0)
TOL = Tolerances(rtol=1e-12, atol=1e-14, richardson_levels=3)


def random_grid(nodes, seed: int, x: float = 2.0) -> WaveGrid:
    rng = np.random.default_rng(seed)
    n = len(nodes)
    return WaveGrid.of(nodes, rng.normal(size=n) + 1j * rng.normal(size=n),
                       rng.normal(size=n) + 1j * rng.normal(size=n), x)


class TestHeatResidual(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.traj = integrate_pvi(Theta.parse("1/2,1/3,1/5,1/7"), 2.0, 0.5, 0.0, 2.5, TOL)
        cls.grid = random_grid(NODES, seed=11)
        cls.sweep = heat_sweep(cls.traj, cls.grid, 2.2, 0.1, TOL)

    def test_second_order_convergence_at_every_node(self):
        self.assertEqual([r.t for r in self.sweep], list(NODES))
        for result in self.sweep:
            with self.subTest(t=result.t):
                self.assertEqual(result.steps, (0.1, 0.05, 0.025))
                self.assertTrue(result.passed(1.9), result.orders)
                self.assertLess(result.residual_h2, result.residual_h)

    def test_single_node(self):
        result = heat_residual(self.traj, self.grid, 0.8, 2.2, 0.1, TOL)
        self.assertEqual(result.t, 0.8)
        self.assertGreaterEqual(result.order, 1.9)

    def test_unknown_node(self):
        with self.assertRaises(ValueError):
            heat_residual(self.traj, self.grid, 0.7, 2.2, 0.1, TOL)

    def test_perturbed_psi_coefficient_does_not_converge(self):
        for result in heat_sweep(self.traj, self.grid, 2.2, 0.1, TOL, psi_coefficient_shift=1.0):
            with self.subTest(t=result.t):
                self.assertFalse(result.passed(1.9))
                self.assertLess(result.order, 1.0)

    def test_frame(self):
        frame = heat_frame(self.sweep)
        self.assertEqual(list(frame.columns), HEAT_COLUMNS)
        self.assertEqual(len(frame), len(NODES))
        self.assertEqual(frame["x"].tolist(), [2.2] * len(NODES))


class TestPicardHeatResidual(unittest.TestCase):

    def test_second_order_convergence(self):
        traj = integrate_pvi(Theta.of(0, 0, 0, 0), 2.0, 0.5, 0.0, 2.5, TOL)
        for result in heat_sweep(traj, random_grid((-0.6, 0.8, 3.0), seed=5), 2.2, 0.1, TOL):
            with self.subTest(t=result.t):
                self.assertTrue(result.passed(1.9), result.orders)


class TestObservedOrder(unittest.TestCase):

    def test_orders_from_residual_ratios(self):
        result = HeatResidual(0.5, 2.0, (0.1, 0.05, 0.025), (2.0**-10, 2.0**-12, 2.0**-14))
        self.assertEqual(result.orders, (2.0, 2.0))
        self.assertEqual(result.order, 2.0)
        self.assertTrue(result.passed(1.9))

    def test_flat_residuals_fail(self):
        result = HeatResidual(0.5, 2.0, (0.1, 0.05), (0.3, 0.3))
        self.assertEqual(result.order, 0.0)
        self.assertFalse(result.passed(1.9))


if __name__ == "__main__":
    unittest.main()
