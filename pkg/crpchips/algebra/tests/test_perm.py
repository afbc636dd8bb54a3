import unittest
from fractions import Fraction
import numpy as np
from numpy import testing as npt
from crpchips.algebra import perm as pm
from crpchips.utils.guards import GuardError

class TestPerm(unittest.TestCase):
    p = pm.Permutation.from_cycles([[1, 3, 2]])

    def test_permutation(self):
        self.assertEqual(self.p.images, (3, 1, 2))
        self.assertEqual(self.p.cycles(), [(1, 3, 2)])
        self.assertEqual(str(self.p), "(1 3 2)")
        self.assertEqual(str(pm.Permutation.identity(3)), "e")
        self.assertEqual(self.p * self.p.inverse(), pm.Permutation.identity(3))
        self.assertEqual(self.p ** 3, pm.Permutation.identity(3))
        self.assertEqual(self.p ** -1, self.p.inverse())
        self.assertEqual(self.p(5), 5)
        self.assertEqual(self.p.extend(4).images, (3, 1, 2, 4))
        self.assertEqual(self.p.cycle_type(), (3,))
        self.assertEqual(pm.Permutation.from_json({'cycles': [[2, 4]], 'degree': 5}).images, \
                (1, 4, 3, 2, 5))
        with self.assertRaises(ValueError):
            pm.Permutation((1, 1))
        with self.assertRaises(ValueError):
            pm.Permutation.from_cycles([[1, 2], [2, 3]])

    def test_product(self):
        a = pm.Permutation((2, 1, 3))
        b = pm.Permutation((1, 3, 2))
        # apply b first
        self.assertEqual((a * b).images, (2, 3, 1))
        self.assertEqual((b * a).images, (3, 1, 2))

    def test_project(self):
        self.assertEqual(pm.project(self.p, 2).images, (2, 1))
        self.assertEqual(pm.project_step(self.p), pm.project(self.p, 2))
        q = pm.Permutation.from_cycles([[1, 4], [2, 5, 3]])
        self.assertEqual(pm.project(q, 2).images, (1, 2))
        self.assertEqual(pm.project(q, 3).images, (1, 3, 2))
        self.assertEqual(pm.project_step(pm.project_step(q)), pm.project(q, 3))
        with self.assertRaises(ValueError):
            pm.project(q, 6)
        with self.assertRaises(ValueError):
            pm.project(q, 0)

    def test_ewens_mass(self):
        self.assertEqual(pm.ewens_mass(pm.Permutation.identity(2), 1), Fraction(1, 2))
        self.assertEqual(pm.ewens_mass(self.p, '1/2'), Fraction(1, 2) / (Fraction(1, 2) \
                * Fraction(3, 2) * Fraction(5, 2)))
        total = sum(pm.ewens_mass(g, '7/3') for g in pm.all_permutations(4))
        self.assertEqual(total, 1)
        with self.assertRaises(ValueError):
            pm.ewens_mass(self.p, 0)

    def test_rn_exponent(self):
        e = pm.Permutation.identity(2)
        t = pm.Permutation((2, 1))
        self.assertEqual(pm.act_finite(e, t, e), t)
        self.assertEqual(pm.rn_exponent_finite(e, t, e), -1)
        self.assertEqual(pm.rn_exponent_finite(t, e, t), 1)
        with self.assertRaises(ValueError):
            pm.act_finite(e, self.p, e)

    def test_pushforward(self):
        for z in ['1/2', 1, '7/3']:
            passed, rep = pm.pushforward_check(4, z)
            self.assertTrue(passed)
            self.assertEqual(rep['offending'], [])
            self.assertTrue(rep['equivariance'])
        only_identity = lambda g: 1 if g.is_identity() else 0
        passed, rep = pm.pushforward_check(3, 1, measure=only_identity, equivariance=False)
        self.assertFalse(passed)
        self.assertEqual(len(rep['offending']), 2)
        self.assertIsNone(rep['equivariance'])

    def test_guard(self):
        with self.assertRaises(GuardError):
            next(pm.all_permutations(9))
        self.assertEqual(len(list(pm.all_permutations(3))), 6)

    def test_cycle_counts(self):
        law = pm.cycle_count_distribution(3, 1)
        self.assertEqual(law, {1: Fraction(1, 3), 2: Fraction(1, 2), 3: Fraction(1, 6)})
        self.assertEqual(sum(pm.cycle_count_distribution(6, '2/5').values()), 1)
        self.assertEqual(pm.expected_cycles(5, 2), Fraction(29, 10))

    def test_sample_ewens(self):
        rng = np.random.default_rng(0)
        counts = np.array([pm.sample_ewens(5, 2, rng).count_cycles() for _ in range(20000)])
        npt.assert_allclose(counts.mean(), 2.9, atol=0.05)
        law = pm.cycle_count_distribution(5, 2)
        for c in range(1, 6):
            npt.assert_allclose((counts == c).mean(), float(law[c]), atol=0.02)

if __name__ == '__main__':
    unittest.main()
