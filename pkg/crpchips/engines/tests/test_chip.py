import unittest
from fractions import Fraction
from crpchips.algebra.perm import Permutation
from crpchips.algebra import chips as cp
from crpchips.restaurant import tables as tb
from crpchips.surfaces.framed import ChipData, TableSignature
from crpchips.engines.chip import act_chip
from crpchips.engines import mixture as mx
from crpchips.utils.guards import GuardError

def _weights(m):
    return {c.rn_exponent: c.weight for c in m.components}

class TestActChip(unittest.TestCase):
    e1 = Permutation.identity(1)
    point = TableSignature(Permutation((1,)), (0.5,), (0.25,))

    def test_identity(self):
        m = act_chip(ChipData(self.e1), self.point)
        self.assertEqual(len(m.components), 1)
        c = m.components[0]
        self.assertEqual((c.weight, c.rn_exponent, c.rho), (1, 0, self.e1))
        self.assertEqual(m.truncation_error, 0.0)
        self.assertTrue(mx.check_normalization(m)['passed'])

    def test_one_spacing(self):
        m = act_chip(ChipData(self.e1, (1,)), self.point)
        self.assertEqual(_weights(m), {-1: Fraction(1, 4), 1: Fraction(1, 2)})
        self.assertEqual(m.truncation_error, 0.25)
        self.assertTrue(all(c.arcs == 1 for c in m.components))
        self.assertTrue(mx.check_normalization(m)['passed'])

    def test_occupied(self):
        res = tb.Restaurant.from_lengths([0.5, 0.25])
        occ = tb.OccupiedRestaurant(res, ((1, 0.2),))
        m = act_chip(ChipData(self.e1, (1,)), occ)
        self.assertEqual(_weights(m), {-1: Fraction(1, 4), 1: Fraction(1, 2)})

    def test_max_tables(self):
        point = TableSignature(Permutation((1,)), (0.5,), (0.25, 0.125))
        chip = ChipData(self.e1, (1,))
        m = act_chip(chip, point)
        self.assertEqual(sum(c.weight for c in m.components if c.rn_exponent == -1), \
                Fraction(3, 8))
        self.assertEqual(m.truncation_error, 0.125)
        m1 = act_chip(chip, point, max_tables=1)
        self.assertEqual(_weights(m1), {-1: Fraction(1, 4), 1: Fraction(1, 2)})
        self.assertEqual(m1.truncation_error, 0.25)
        self.assertEqual(m1.fingerprint, m.fingerprint)
        self.assertTrue(mx.check_normalization(m1)['passed'])

    def test_errors(self):
        with self.assertRaises(TypeError):
            act_chip(cp.identity_chip(1), self.point)
        with self.assertRaises(GuardError):
            act_chip(ChipData(self.e1, (3,), (3,)), self.point)

if __name__ == '__main__':
    unittest.main()
