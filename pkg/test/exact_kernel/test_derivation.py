import random
import unittest

from exact_kernel.derivation import D_T, Derivation, derive
from exact_kernel.errors import InertSymbolError
from exact_kernel.field import K, g, gp, rat, t, u, u1, x


def random_ratfunc(rng: random.Random):
    num = sum(rat(rng.randint(-5, 5)) * t ** rng.randint(0, 2) * x ** rng.randint(0, 2) * u ** rng.randint(0, 2)
              for _ in range(3))
    return num / (t - rng.randint(1, 4) * x + u)


class TestDerivation(unittest.TestCase):

    def setUp(self):
        self.flow = Derivation("x_flow", {x: K.one, u: u1, u1: t * u})

    def test_partial_t(self):
        self.assertEqual(D_T(t**2 * x), 2 * t * x)
        self.assertEqual(D_T(u * u1 + x), K.zero)

    def test_constants_map_to_zero(self):
        self.assertEqual(derive(self.flow, rat(7, 3)), K.zero)

    def test_flow_images(self):
        self.assertEqual(self.flow(u), u1)
        self.assertEqual(self.flow(u1), t * u)
        self.assertEqual(self.flow(x * u), u + x * u1)

    def test_leibniz_rule(self):
        rng = random.Random(7)
        for _ in range(15):
            f, h = random_ratfunc(rng), random_ratfunc(rng)
            self.assertEqual(self.flow(f * h), self.flow(f) * h + f * self.flow(h))

    def test_quotient_rule(self):
        rng = random.Random(8)
        for _ in range(15):
            f, h = random_ratfunc(rng), random_ratfunc(rng)
            if not h:
                continue
            self.assertEqual(self.flow(f / h) * h**2, self.flow(f) * h - f * self.flow(h))

    def test_inert_symbol_is_a_hard_error(self):
        with self.assertRaisesRegex(InertSymbolError, "derivative of inert gauge symbol requested"):
            self.flow(gp * u)
        with self.assertRaises(InertSymbolError):
            self.flow(g)

    def test_inert_symbols_are_functions_of_x_only(self):
        self.assertEqual(D_T(gp * t**2), 2 * t * gp)

    def test_with_image_extends_the_flow(self):
        flow = self.flow.with_image(gp, x)
        self.assertEqual(flow(gp * u), x * u + gp * u1)
        with self.assertRaises(InertSymbolError):
            self.flow(gp)


if __name__ == "__main__":
    unittest.main()
