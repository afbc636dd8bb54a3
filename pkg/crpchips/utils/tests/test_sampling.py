import os
import unittest
import numpy as np
from numpy import testing as npt
from crpchips.utils import sampling as sp

def _square(x):
    return x * x

class TestSampling(unittest.TestCase):

    def test_make_rng(self):
        rng = np.random.default_rng(1)
        self.assertIs(sp.make_rng(rng), rng)
        npt.assert_equal(sp.make_rng(7).random(3), sp.make_rng(7).random(3))

    def test_batch_layout(self):
        self.assertEqual(sp.batch_layout(10, 4), [4, 4, 2])
        self.assertEqual(sp.batch_layout(8, 4), [4, 4])
        self.assertEqual(sp.batch_layout(0, 4), [])
        self.assertEqual(sum(sp.batch_layout(50001)), 50001)
        with self.assertRaises(ValueError):
            sp.batch_layout(-1)

    def test_batch_seeds(self):
        a = [np.random.default_rng(s).random() for s in sp.batch_seeds(3, 4)]
        b = [np.random.default_rng(s).random() for s in sp.batch_seeds(3, 4)]
        self.assertEqual(a, b)
        self.assertEqual(len(set(a)), 4)

    def test_default_threads(self):
        old = os.environ.get('CRPCHIPS_THREADS')
        try:
            os.environ['CRPCHIPS_THREADS'] = '3'
            self.assertEqual(sp.default_threads(), 3)
            os.environ['CRPCHIPS_THREADS'] = 'many'
            with self.assertWarns(UserWarning):
                self.assertEqual(sp.default_threads(), 1)
        finally:
            if old is None:
                os.environ.pop('CRPCHIPS_THREADS', None)
            else:
                os.environ['CRPCHIPS_THREADS'] = old

    def test_parallel_map(self):
        self.assertEqual(sp.parallel_map(_square, [1, 2, 3], threads=1), [1, 4, 9])
        self.assertEqual(sp.parallel_map(_square, [1, 2, 3], threads=2), [1, 4, 9])

    def test_uniform_simplex(self):
        X = sp.uniform_simplex(1000, 4, 2.0, sp.make_rng(0))
        self.assertEqual(X.shape, (1000, 4))
        npt.assert_allclose(X.sum(axis=1), 2.0)
        self.assertTrue(np.all(X >= 0))
        npt.assert_allclose(X.mean(axis=0), 0.5, atol=0.05)
        npt.assert_allclose(sp.uniform_simplex(3, 1, 1.5), 1.5)
        with self.assertRaises(ValueError):
            sp.uniform_simplex(1, 0)

    def test_circle_points(self):
        x = sp.circle_points(5, 0.3, 1)
        self.assertEqual(len(x), 5)
        self.assertTrue(np.all(np.diff(x) >= 0))
        self.assertTrue(np.all((x >= 0) & (x < 0.3)))

if __name__ == '__main__':
    unittest.main()
