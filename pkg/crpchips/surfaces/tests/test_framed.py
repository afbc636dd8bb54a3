import unittest
from fractions import Fraction
from numpy import testing as npt
from crpchips.algebra.perm import Permutation
from crpchips.algebra import chips as cp
from crpchips.restaurant import tables as tb
from crpchips.surfaces.framed import ChipData, TableSignature, enumerate_gamma_framed
from crpchips.utils.guards import GuardError

class TestChipData(unittest.TestCase):
    e1 = Permutation.identity(1)

    def test_permutation(self):
        self.assertEqual(ChipData(self.e1).permutation(), self.e1)
        self.assertEqual(ChipData(self.e1, (1,)).permutation().images, (2, 1))
        c = ChipData(self.e1, k=(3, 2))
        self.assertEqual(c.k, (2, 3))
        self.assertEqual(c.N, 6)
        self.assertEqual(c.permutation().images, (1, 3, 2, 5, 6, 4))
        c = ChipData(Permutation((2, 1)), (0, 2))
        self.assertEqual(c.permutation().images, (2, 3, 4, 1))

    def test_validation(self):
        with self.assertRaises(ValueError):
            ChipData(self.e1, (1, 1))
        with self.assertRaises(ValueError):
            ChipData(self.e1, (-1,))
        with self.assertRaises(ValueError):
            ChipData(self.e1, k=(1,))

    def test_to_chip(self):
        self.assertEqual(ChipData(self.e1).to_chip(), cp.identity_chip(1))
        self.assertEqual(ChipData(Permutation(()), k=(2,)).to_chip(), cp.center_element([2]))
        c = ChipData(Permutation((2, 1)), (1, 0), (2,)).to_chip()
        self.assertEqual((c.dst, c.src), (2, 2))
        self.assertEqual(c.circles, (2,))

    def test_json(self):
        c = ChipData(Permutation((2, 1)), (1, 0), (2,))
        self.assertEqual(ChipData.from_json(c.to_json()), c)

class TestTableSignature(unittest.TestCase):

    def test_signature(self):
        sig = TableSignature(Permutation((1,)), (0.5,), (0.25,))
        self.assertEqual(sig.occupied_ids, (1,))
        self.assertEqual(sig.free_ids, (2,))
        npt.assert_allclose(sig.tail_mass, 0.25)
        self.assertEqual(TableSignature.from_json(sig.to_json()), sig)
        with self.assertRaises(ValueError):
            TableSignature(Permutation((1,)), (0.5, 0.1))
        with self.assertRaises(ValueError):
            TableSignature(Permutation((1,)), (0.8,), (0.3,))
        with self.assertRaises(ValueError):
            TableSignature(Permutation((1,)), (0.0,))

    def test_from_occupied(self):
        res = tb.Restaurant.from_lengths([0.5, 0.3, 0.2])
        occ = tb.OccupiedRestaurant(res, ((2, 0.1), (1, 0.2)))
        sig = TableSignature.from_occupied(occ, 1)
        self.assertEqual(sig.tau, Permutation((1,)))
        self.assertEqual(sig.arcs, (0.3,))
        self.assertEqual(sig.occupied_ids, (2,))
        self.assertEqual(sig.free, (0.5, 0.2))
        self.assertEqual(sig.free_ids, (1, 3))
        sig = TableSignature.from_occupied(occ)
        self.assertEqual(sig.occupied_ids, (2, 1))
        self.assertEqual(sig.free_ids, (3,))

class TestFramed(unittest.TestCase):
    e1 = Permutation.identity(1)
    point = TableSignature(Permutation((1,)), (0.5,), (0.25,))

    def test_identity(self):
        out = enumerate_gamma_framed(ChipData(self.e1), self.point)
        self.assertEqual(len(out), 1)
        self.assertEqual(out[0].weight, 1)
        self.assertEqual(out[0].exponent, 0)
        self.assertEqual(out[0].rho, self.e1)

    def test_one_spacing(self):
        merge, split = enumerate_gamma_framed(ChipData(self.e1, (1,)), self.point)
        self.assertEqual(merge.exponent, -1)
        self.assertEqual(merge.weight, Fraction(1, 4))
        self.assertEqual(merge.free_used, (2,))
        npt.assert_equal(merge.incidence(), [[1], [1]])
        self.assertEqual(split.exponent, 1)
        self.assertEqual(split.weight, Fraction(1, 2))
        self.assertEqual(split.free_used, ())
        npt.assert_equal(split.incidence(), [[1, 1]])
        self.assertEqual(merge.aut_b, 1)
        self.assertEqual(merge.to_json()['rn_exp'], -1)

    def test_no_free_table(self):
        point = TableSignature(Permutation((1,)), (0.5,))
        out = enumerate_gamma_framed(ChipData(self.e1, (1,)), point)
        self.assertEqual([s.exponent for s in out], [1])

    def test_errors(self):
        with self.assertRaises(ValueError):
            enumerate_gamma_framed(ChipData(Permutation((2, 1))), self.point)
        with self.assertRaises(GuardError):
            enumerate_gamma_framed(ChipData(self.e1, (3,), (3,)), self.point)

if __name__ == '__main__':
    unittest.main()
