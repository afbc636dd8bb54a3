import unittest
import warnings
from dataclasses import replace
from numpy import testing as npt
from crpchips.restaurant import tables as tb
from crpchips.engines.cycles import act_cycles
from crpchips.engines.simulate import simulate
from crpchips.engines import compare as cm

class TestCompare(unittest.TestCase):
    res = tb.Restaurant.from_lengths([0.75, 0.25])
    loose = {'tv': 0.03, 'se': 5.0, 'ks_alpha': 1e-4}

    def setUp(self):
        self.m = act_cycles([2], self.res)

    def test_exponent_law(self):
        law = cm.exponent_law(self.m)
        npt.assert_allclose([law[1], law[-1]], [0.625, 0.375])

    def test_against_itself(self):
        e = cm.empirical_from_mixture(self.m, 20000, seed=5)
        self.assertEqual(e.fingerprint, self.m.fingerprint)
        rep = cm.compare_report(self.m, e, limits=self.loose, seed=6)
        self.assertTrue(rep['passed'])
        self.assertTrue(rep['mass']['passed'])
        self.assertEqual(len(rep['laplace']), 2 * len(cm.u_grid))
        self.assertEqual(rep['thresholds']['tv'], 0.03)

    def test_oracle(self):
        e = simulate([2], self.res, 5000, seed=8, threads=1)
        rep = cm.compare_report(self.m, e, grid=[1.0, 3.0], limits=self.loose, seed=9)
        self.assertTrue(rep['passed'])
        self.assertLessEqual(rep['tv'], 0.03)

    def test_oracle_many_tables(self):
        res = tb.Restaurant.from_lengths([0.5 ** i for i in range(1, 31)])
        m = act_cycles([2], res)
        self.assertGreater(m.truncation_error, 0.0)
        with warnings.catch_warnings():
            warnings.simplefilter('ignore')
            e = simulate([2], res, 5000, seed=10, threads=1)
        rep = cm.compare_report(m, e, grid=[1.0, 3.0], limits=self.loose, seed=11)
        self.assertTrue(rep['passed'])

    def test_wrong_source(self):
        e = cm.empirical_from_mixture(self.m, 2000, seed=5)
        with self.assertRaises(ValueError):
            cm.compare_report(self.m, replace(e, fingerprint='0' * 16))

    def test_few_samples(self):
        e = cm.empirical_from_mixture(self.m, 200, seed=5)
        with warnings.catch_warnings(record=True) as w:
            warnings.simplefilter('always')
            cm.compare_report(self.m, e, limits={'tv': 1.0, 'se': 100.0, 'ks_alpha': 1e-6})
        self.assertTrue(any('draws' in str(x.message) for x in w))

if __name__ == '__main__':
    unittest.main()
