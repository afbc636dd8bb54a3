import unittest
from fractions import Fraction
import numpy as np
from crpchips.algebra import chips as cp
from crpchips.algebra.perm import Permutation, random_permutation

class TestChips(unittest.TestCase):
    rng = np.random.default_rng(5)

    def test_validation(self):
        with self.assertRaises(ValueError):
            cp.Chip(1, 1, (('vl', 1, 1, 0),))
        with self.assertRaises(ValueError):
            cp.Chip(0, 1, (('ht', 1, 1, 0),))
        with self.assertRaises(ValueError):
            cp.Chip(0, 0, (), (1,))
        with self.assertRaises(KeyError):
            cp.Chip(1, 0, (('xx', 1, 1, Fraction(1, 2)),))

    def test_identity(self):
        c = cp.random_chip(2, 3, self.rng)
        self.assertEqual(cp.multiply(cp.identity_chip(2), c), c)
        self.assertEqual(cp.multiply(c, cp.identity_chip(3)), c)
        with self.assertRaises(ValueError):
            cp.multiply(c, cp.identity_chip(2))

    def test_chip_from_pair(self):
        e1 = Permutation.identity(1)
        self.assertEqual(cp.chip_from_pair(e1, e1, 0, 0), cp.identity_chip(0))
        t = Permutation((2, 1))
        self.assertEqual(cp.chip_from_pair(t, Permutation.identity(2), 0, 0), \
                cp.center_element([2]))
        c3 = Permutation.from_cycles([[1, 2, 3]])
        self.assertEqual(cp.chip_from_pair(c3, Permutation.identity(3), 0, 0).circles, (3,))
        # trivial extension does not change the chip
        g1, g2 = random_permutation(4, self.rng), random_permutation(4, self.rng)
        self.assertEqual(cp.chip_from_pair(g1, g2, 2, 1), \
                cp.chip_from_pair(g1.extend(6), g2.extend(6), 2, 1))

    def test_lambda(self):
        lam = cp.lambda_chip(2, 1)
        self.assertEqual((lam.dst, lam.src), (1, 2))
        self.assertEqual(cp.multiply(lam, cp.involute(lam)), cp.identity_chip(1))
        want = cp.Chip(2, 2, (('vl', 1, 1, 0), ('vr', 1, 1, 0), ('hb', 2, 2, Fraction(1, 2)), \
                ('ht', 2, 2, Fraction(1, 2))))
        self.assertEqual(cp.multiply(cp.involute(lam), lam), want)
        with self.assertRaises(ValueError):
            cp.lambda_chip(1, 2)

    def test_involute(self):
        for _ in range(20):
            c = cp.random_chip(2, 3, self.rng)
            d = cp.involute(c)
            self.assertEqual((d.dst, d.src), (3, 2))
            self.assertEqual(cp.involute(d), c)

    def test_associativity(self):
        for _ in range(100):
            a, b, c, d = (int(v) for v in self.rng.integers(0, 4, size=4))
            f, g, h = cp.random_chip(a, b, self.rng), cp.random_chip(b, c, self.rng), \
                    cp.random_chip(c, d, self.rng)
            self.assertEqual(cp.multiply(cp.multiply(f, g), h), cp.multiply(f, cp.multiply(g, h)))
            self.assertEqual(cp.involute(cp.multiply(f, g)), \
                    cp.multiply(cp.involute(g), cp.involute(f)))

    def test_theta(self):
        self.assertEqual(cp.theta_element(1, 2).images, (1, 4, 5, 2, 3))
        with self.assertRaises(ValueError):
            cp.theta_element(0, 0)

    def test_double_coset_product(self):
        for _ in range(20):
            g = (random_permutation(4, self.rng), random_permutation(4, self.rng))
            h = (random_permutation(4, self.rng), random_permutation(4, self.rng))
            chip, j0 = cp.double_coset_product(g, h, 2, 1, 2)
            want = cp.multiply(cp.chip_from_pair(g[0], g[1], 2, 1), \
                    cp.chip_from_pair(h[0], h[1], 1, 2))
            self.assertEqual(chip, want)
            self.assertGreaterEqual(j0, 1)

    def test_center(self):
        self.assertEqual(cp.cycles_representative([3, 2]).images, (2, 1, 4, 5, 3))
        c = cp.center_element([3, 2], 1)
        self.assertEqual(c.circles, (2, 3))
        self.assertEqual(cp.multiply(c, cp.identity_chip(1)), c)
        with self.assertRaises(ValueError):
            cp.center_element([1])

    def test_json(self):
        c = cp.random_chip(2, 2, self.rng)
        self.assertEqual(cp.Chip.from_json(c.to_json()), c)

if __name__ == '__main__':
    unittest.main()
