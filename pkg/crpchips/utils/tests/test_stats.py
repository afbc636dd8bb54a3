import unittest
import numpy as np
from numpy import testing as npt
from crpchips.utils import stats as st
from crpchips.utils.guards import GuardError, check_guard, expected_cost

class TestStats(unittest.TestCase):

    def test_ks_critical(self):
        npt.assert_allclose(st.ks_critical(1, None, 0.01), 1.6276, atol=1e-4)
        npt.assert_allclose(st.ks_critical(100, 100, 0.01), 1.6276 * np.sqrt(0.02), atol=1e-4)

    def test_ks_two_sample(self):
        rng = np.random.default_rng(0)
        same = st.ks_two_sample(rng.random(5000), rng.random(5000))
        self.assertTrue(same['passed'])
        shifted = st.ks_two_sample(rng.random(5000), rng.random(5000) + 0.2)
        self.assertFalse(shifted['passed'])
        self.assertEqual(set(same.keys()), {'statistic', 'critical', 'pvalue', 'passed'})

    def test_ks_uniform(self):
        rng = np.random.default_rng(1)
        self.assertTrue(st.ks_uniform(rng.random(5000) * 2, 0, 2)['passed'])
        self.assertFalse(st.ks_uniform(rng.random(5000) ** 2)['passed'])

    def test_empirical_law(self):
        law = st.empirical_law([1, 1, -1, 0])
        self.assertEqual(law, {-1: 0.25, 0: 0.25, 1: 0.5})

    def test_tv_distance(self):
        self.assertEqual(st.tv_distance({0: 0.5, 1: 0.5}, {0: 0.5, 1: 0.5}), 0.0)
        npt.assert_allclose(st.tv_distance({0: 1.0}, {1: 1.0}), 1.0)
        npt.assert_allclose(st.tv_distance({0: 0.7, 1: 0.3}, {0: 0.5, 2: 0.5}), 0.5)

    def test_mean_se(self):
        m, se = st.mean_se(np.array([1.0, 2.0, 3.0]))
        npt.assert_allclose(m, 2.0)
        npt.assert_allclose(se, 1.0 / np.sqrt(3.0))
        m, se = st.mean_se(np.array([1.0]))
        self.assertTrue(np.isinf(se))

    def test_within_se(self):
        self.assertTrue(st.within_se(1.0, 0.1, 1.25))
        self.assertFalse(st.within_se(1.0, 0.1, 1.5))
        self.assertTrue(st.within_se(1.0, 0.0, 1.0))

    def test_guards(self):
        self.assertEqual(check_guard('engine', 6), 6)
        with self.assertRaises(GuardError) as cm:
            check_guard('engine', 7)
        self.assertEqual(cm.exception.limit, 6)
        self.assertEqual(check_guard('engine', 7, unsafe=True), 7)
        self.assertEqual(check_guard('engine', 7, limit=8), 7)
        with self.assertRaises(KeyError):
            check_guard('nothing', 1)
        self.assertEqual(expected_cost('enumeration', 3), 36.0)

if __name__ == '__main__':
    unittest.main()
