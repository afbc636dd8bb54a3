import unittest
import numpy as np
from numpy import testing as npt
from crpchips.restaurant import tables as tb
from crpchips.engines import center as ct
from crpchips.utils.guards import GuardError

class TestCenter(unittest.TestCase):
    res = tb.Restaurant.from_lengths([0.5, 0.25, 0.25])
    occ = tb.OccupiedRestaurant(res, ((1, 0.1), (3, 0.2)))

    def test_framed_surface(self):
        rng = np.random.default_rng(0)
        for _ in range(20):
            out = ct.sample_framed_surface(3, [0.5, 0.5], rng)
            self.assertEqual(sorted(x for _, c in out for x in c), [1, 2, 3])
            self.assertEqual(len(set(t for t, _ in out)), len(out))

    def test_one_draw(self):
        rng = np.random.default_rng(1)
        for fn in [ct.act_center_sample, ct.simulate_direct_center]:
            for _ in range(50):
                exp, out, removed, added = fn([2], self.occ, seed=rng, details=True)
                self.assertIn(exp, (-1, 1))
                self.assertEqual(exp, len(added) - len(removed))
                self.assertEqual(out.count, 2)
                lengths = out.restaurant.length_map()
                if exp == -1:
                    npt.assert_allclose(lengths[added[0]], \
                            sum(self.res.length_of(t) for t in removed))
                if 3 not in removed:
                    self.assertEqual(out.guests[1], (3, 0.2))

    def test_split_law(self):
        # both auxiliary guests on one table split it
        rng = np.random.default_rng(2)
        for fn in [ct.act_center_sample, ct.simulate_direct_center]:
            exps = [fn([2], self.occ, seed=rng)[0] for _ in range(4000)]
            npt.assert_allclose(np.mean(np.array(exps) == 1), 0.375, atol=0.03)

    def test_place_reversed(self):
        rng = np.random.default_rng(3)
        cyc = [4, 1, 3, 2]
        for _ in range(20):
            eta = ct.place_reversed(cyc, 0.5, rng)
            self.assertTrue(all(0.0 <= p < 0.5 for p in eta.values()))
            clockwise = sorted(eta, key=eta.get)
            start = clockwise.index(cyc[0])
            self.assertEqual(clockwise[start:] + clockwise[:start], [4, 2, 3, 1])

    def test_cycle_law(self):
        # one 3-cycle on two tables: same exponent law both ways
        rng = np.random.default_rng(4)
        occ = tb.OccupiedRestaurant(tb.Restaurant.from_lengths([0.7, 0.3]), ((1, 0.3),))
        means = [np.mean([fn([3], occ, seed=rng)[0] for _ in range(6000)]) \
                for fn in [ct.act_center_sample, ct.simulate_direct_center]]
        npt.assert_allclose(means[0], means[1], atol=0.1)

    def test_errors(self):
        with self.assertRaises(GuardError):
            ct.act_center_sample([3, 4], self.occ)
        with self.assertRaises(ValueError):
            ct.act_center_sample([1], self.occ)

if __name__ == '__main__':
    unittest.main()
