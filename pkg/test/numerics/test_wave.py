import math
import unittest
from unittest.mock import patch

import numpy as np

from numerics.errors import WaveTransportError
from numerics.integrator import Tolerances, integrate_pvi
from numerics.wave import WaveGrid, check_exclusion, psi_tt, seed_wave_grid, wave_transport, wave_transport_path
from painleve_forms.theta import Theta

THETA = Theta.parse("1/2,1/3,1/5,1/7")
NODES = (-0.6, -0.3, 0.8, 1.4, 3.0)
TOL = Tolerances(rtol=1e-10, atol=1e-12)


def random_grid(rng: np.random.Generator, x: float = 2.0) -> WaveGrid:
    n = len(NODES)
    return WaveGrid.of(NODES, rng.normal(size=n) + 1j * rng.normal(size=n),
                       rng.normal(size=n) + 1j * rng.normal(size=n), x)


class TestWaveTransport(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.traj = integrate_pvi(THETA, 2.0, 0.5, 0.0, 2.4, TOL)

    def test_zero_data_stays_zero(self):
        zero = WaveGrid.of(NODES, np.zeros(len(NODES)), np.zeros(len(NODES)), 2.0)
        moved = wave_transport(self.traj, zero, 2.3, TOL)
        self.assertEqual(moved.x, 2.3)
        self.assertTrue(np.all(moved.psi == 0))
        self.assertTrue(np.all(moved.dpsi == 0))

    def test_superposition(self):
        rng = np.random.default_rng(7)
        first, second = random_grid(rng), random_grid(rng)
        a, b = 1.5 - 0.5j, -0.25 + 2j
        combined = wave_transport(self.traj, first.combine(a, second, b), 2.3, TOL)
        separate = wave_transport(self.traj, first, 2.3, TOL).combine(
            a, wave_transport(self.traj, second, 2.3, TOL), b)
        scale = np.max(np.abs(combined.state()))
        self.assertLessEqual(np.max(np.abs(combined.state() - separate.state())) / scale, 100 * TOL.rtol)

    def test_path_matches_single_targets(self):
        grid = random_grid(np.random.default_rng(3), x=2.2)
        there_and_back = wave_transport_path(self.traj, grid, [2.1, 2.2, 2.3], TOL)
        self.assertEqual([g.x for g in there_and_back], [2.1, 2.2, 2.3])
        np.testing.assert_array_equal(there_and_back[1].psi, grid.psi)
        np.testing.assert_allclose(there_and_back[2].psi, wave_transport(self.traj, grid, 2.3, TOL).psi, rtol=1e-12)

    def test_node_entering_the_exclusion_zone_of_u(self):
        grid = WaveGrid.of([0.5005], [1.0], [0.0], 2.0)
        with self.assertRaises(WaveTransportError) as ctx:
            wave_transport(self.traj, grid, 2.3, TOL)
        self.assertEqual(ctx.exception.node, 0.5005)

    def test_node_crossed_by_x(self):
        grid = WaveGrid.of([2.2], [1.0], [0.0], 2.0)
        with self.assertRaises(WaveTransportError) as ctx:
            wave_transport(self.traj, grid, 2.3, TOL)
        self.assertEqual(ctx.exception.node, 2.2)
        self.assertLess(abs(ctx.exception.x - 2.2), 5e-3)

    def test_target_outside_the_trajectory(self):
        with self.assertRaises(WaveTransportError):
            wave_transport(self.traj, random_grid(np.random.default_rng(1)), 2.5, TOL)

    def test_grid_validation(self):
        with self.assertRaises(ValueError):
            WaveGrid.of([0.2, 0.2], [1, 1], [0, 0], 2.0)
        with self.assertRaises(ValueError):
            WaveGrid.of([0.2, 0.3], [1], [0, 0], 2.0)


class TestExclusionGuard(unittest.TestCase):
    """Along u = x/(3x - 2) the point t = u sweeps from 0.5 to about 0.913 as x runs from 2 down to 1.05."""

    @classmethod
    def setUpClass(cls):
        cls.traj = integrate_pvi(Theta.of(1, 0, 0, 0), 2.0, 0.5, -0.125, 1.05, TOL)

    @staticmethod
    def crossing(node: float) -> float:
        return 2 * node / (3 * node - 1)

    def test_nodes_swept_by_u_between_samples(self):
        for node in (0.72, 0.75, 0.81, 0.83, 0.85, 0.86, 0.88, 0.89, 0.9):
            with self.subTest(node=node):
                with self.assertRaises(WaveTransportError) as ctx:
                    check_exclusion(self.traj, np.array([node]), 2.0, 1.05, TOL.exclusion_radius)
                self.assertEqual(ctx.exception.node, node)
                self.assertLess(abs(ctx.exception.x - self.crossing(node)), 0.01)

    def test_every_swept_node_is_reported(self):
        for node in np.linspace(0.55, 0.9, 36):
            with self.subTest(node=node):
                with self.assertRaises(WaveTransportError):
                    check_exclusion(self.traj, np.array([node]), 2.0, 1.05, TOL.exclusion_radius)

    def test_node_beyond_the_sweep_is_left_alone(self):
        check_exclusion(self.traj, np.array([0.3, 0.95]), 2.0, 1.05, TOL.exclusion_radius)

    def test_transport_across_u_is_refused(self):
        grid = WaveGrid.of([0.72], [1.0], [0.0], 2.0)
        with self.assertRaises(WaveTransportError) as ctx:
            wave_transport(self.traj, grid, 1.1, TOL)
        self.assertEqual(ctx.exception.node, 0.72)

    def test_transport_stops_at_the_zone_without_the_sampled_guard(self):
        grid = WaveGrid.of([0.72], [1.0], [0.0], 2.0)
        with patch("numerics.wave.check_exclusion"):
            with self.assertRaises(WaveTransportError) as ctx:
                wave_transport(self.traj, grid, 1.1, TOL)
        self.assertEqual(ctx.exception.node, 0.72)
        self.assertLess(abs(ctx.exception.x - self.crossing(0.72)), 0.01)
        self.assertGreater(ctx.exception.x, self.crossing(0.72))


class TestSeedWaveGrid(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.tol = Tolerances(rtol=1e-13, atol=1e-15)
        cls.traj = integrate_pvi(THETA, 2.0, 0.5, 0.0, 2.4, cls.tol)

    def test_second_difference_converges_to_the_t_equation(self):
        centre = 1.6
        nodes = sorted({centre + k * s for s in (0.04, 0.02) for k in (-1, 0, 1)})
        grid = seed_wave_grid(self.traj, 2.2, 1.5, 1.0 + 0.5j, -0.25j, nodes, self.tol)
        index = {node: i for i, node in enumerate(grid.nodes)}
        exact = psi_tt(self.traj, grid)[index[centre]]
        errors = []
        for s in (0.04, 0.02):
            second = (grid.psi[index[centre + s]] - 2 * grid.psi[index[centre]] + grid.psi[index[centre - s]]) / s**2
            errors.append(abs(second - exact))
        self.assertGreaterEqual(math.log2(errors[0] / errors[1]), 1.9)

    def test_seed_value_is_kept_at_t0(self):
        grid = seed_wave_grid(self.traj, 2.2, 1.5, 1.0 + 0.5j, -0.25j, [1.5, 1.7], self.tol)
        self.assertEqual(grid.psi[0], 1.0 + 0.5j)
        self.assertEqual(grid.dpsi[0], -0.25j)

    def test_nodes_must_share_the_interval_of_t0(self):
        with self.assertRaises(WaveTransportError) as ctx:
            seed_wave_grid(self.traj, 2.2, 1.5, 1.0, 0.0, [0.8, 1.7], self.tol)
        self.assertEqual(ctx.exception.node, 0.8)


if __name__ == "__main__":
    unittest.main()
