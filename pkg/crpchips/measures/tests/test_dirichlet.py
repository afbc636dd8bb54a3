import unittest
import numpy as np
from numpy import testing as npt
from crpchips.measures import dirichlet as dr
from crpchips.utils.stats import within_se

class TestDirichlet(unittest.TestCase):
    flat = dr.DirichletSpec((1, 1), 1.0)

    def test_spec(self):
        with self.assertRaises(ValueError):
            dr.DirichletSpec((0, 0), 1.0)
        with self.assertRaises(ValueError):
            dr.DirichletSpec((1, -1), 1.0)
        with self.assertRaises(ValueError):
            dr.DirichletSpec((1, 1), 0.0)
        with self.assertRaises(ValueError):
            dr.ConvolutionSpec((self.flat, dr.DirichletSpec((1, 1, 1), 1.0)))
        with self.assertRaises(ValueError):
            dr.ConvolutionSpec(())
        spec = dr.DirichletSpec((0, 2, 1), 0.5)
        self.assertEqual(spec.support, (1, 2))
        self.assertEqual(dr.DirichletSpec.from_json(spec.to_json()), spec)
        conv = dr.ConvolutionSpec((spec, dr.DirichletSpec((1, 0, 0), 0.25)))
        self.assertEqual(conv.ell, 0.75)
        self.assertEqual(dr.ConvolutionSpec.from_json(conv.to_json()), conv)
        self.assertEqual(dr.ConvolutionSpec.from_json(spec.to_json()).components, (spec,))

    def test_density(self):
        npt.assert_allclose(dr.density(self.flat, [0.3, 0.7]), 1.0)
        spec = dr.DirichletSpec((2, 1), 2.0)
        npt.assert_allclose(dr.density(spec, [1.0, 1.0]), 0.5)
        self.assertEqual(dr.density(spec, [0.5, 0.5]), 0.0)
        self.assertEqual(dr.density(dr.DirichletSpec((0, 3), 1.0), [0.0, 1.0]), 0.0)
        with self.assertRaises(ValueError):
            dr.density(spec, [1.0])

    def test_atoms_mean(self):
        pt, mass = dr.atoms(dr.DirichletSpec((0, 3), 0.5))[0]
        npt.assert_equal(pt, [0.0, 0.5])
        self.assertEqual(mass, 1.0)
        self.assertEqual(dr.atoms(self.flat), [])
        npt.assert_allclose(dr.mean(dr.DirichletSpec((2, 1), 3.0)), [2.0, 1.0])

    def test_sample(self):
        spec = dr.DirichletSpec((2, 0, 1), 1.5)
        X = dr.sample(spec, 20000, 0)
        self.assertEqual(X.shape, (20000, 3))
        npt.assert_allclose(X.sum(axis=1), 1.5)
        npt.assert_equal(X[:, 1], 0.0)
        npt.assert_allclose(X.mean(axis=0), dr.mean(spec), atol=0.01)
        conv = dr.ConvolutionSpec((spec, dr.DirichletSpec((0, 1, 0), 0.5)))
        X = dr.sample(conv, 100, 1)
        npt.assert_allclose(X[:, 1], 0.5)
        npt.assert_allclose(X.sum(axis=1), 2.0)

    def test_laplace_closed_form(self):
        e = np.exp
        npt.assert_allclose(dr.laplace(self.flat, [1.0, 2.0]), e(-1) - e(-2), rtol=1e-12)
        npt.assert_allclose(dr.laplace(self.flat, [1.0, 1.0]), e(-1), rtol=1e-12)
        npt.assert_allclose(dr.laplace(self.flat, [1.0, 1.0 + 1e-5]), \
                (e(-1) - e(-1 - 1e-5)) / 1e-5, rtol=1e-8)
        npt.assert_allclose(dr.laplace(dr.DirichletSpec((2, 1), 1.0), [0.0, 1.0]), \
                2 * e(-1), rtol=1e-12)
        npt.assert_allclose(dr.laplace(dr.DirichletSpec((1, 1), 2.0), [1.0, 0.0]), \
                (1 - e(-2)) / 2, rtol=1e-12)
        npt.assert_allclose(dr.laplace(dr.DirichletSpec((3,), 0.5), [2.0]), e(-1.0), rtol=1e-12)
        npt.assert_allclose(dr.laplace(dr.DirichletSpec((1, 0, 1), 1.0), [1.0, 5.0, 2.0]), \
                dr.laplace(self.flat, [1.0, 2.0]), rtol=1e-12)
        a, b = dr.DirichletSpec((2, 1), 0.7), dr.DirichletSpec((1, 3), 0.4)
        u = np.array([0.5, 1.5])
        npt.assert_allclose(dr.laplace(dr.ConvolutionSpec((a, b)), u), \
                dr.laplace(a, u) * dr.laplace(b, u), rtol=1e-12)

    def test_laplace_contour(self):
        rng = np.random.default_rng(2)
        for _ in range(5):
            k = tuple(int(v) for v in rng.integers(1, 3, size=3))
            spec = dr.DirichletSpec(k, float(rng.uniform(1.0, 2.0)))
            u = rng.uniform(0, 4, size=3) + 1j * rng.uniform(-1, 1, size=3)
            npt.assert_allclose(dr.laplace(spec, u, mode='contour'), dr.laplace(spec, u), \
                    atol=1e-6)

    def test_laplace_mc(self):
        spec = dr.DirichletSpec((2, 3, 1), 1.0)
        u = np.array([0.5, 2.0, 3.0])
        est, se = dr.laplace_mc(spec, u, 100000, 3)
        self.assertTrue(within_se(est.real, se, dr.laplace(spec, u).real, k=4.0))

    def test_laplace_errors(self):
        with self.assertRaises(ValueError):
            dr.laplace(self.flat, [1.0])
        with self.assertRaises(ValueError):
            dr.laplace(self.flat, [-1.0, 1.0])
        with self.assertRaises(KeyError):
            dr.laplace(self.flat, [1.0, 1.0], mode='series')
        with self.assertRaises(NotImplementedError):
            dr.laplace(dr.DirichletSpec((1.5, 1), 1.0), [1.0, 2.0])

    def test_aggregation(self):
        rep = dr.aggregate_check(5, (2, 3), 1.0, 20000, 0, alpha=0.001)
        self.assertTrue(rep['passed'])
        self.assertEqual(len(rep['marginals']), 2)
        with self.assertRaises(ValueError):
            dr.aggregate_check(4, (2, 3))

if __name__ == '__main__':
    unittest.main()
