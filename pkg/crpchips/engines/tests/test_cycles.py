import unittest
from fractions import Fraction
from crpchips.restaurant import tables as tb
from crpchips.engines import cycles as cy
from crpchips.engines import mixture as mx
from crpchips.utils.guards import GuardError

def _by_removed(m):
    return {(c.removed, c.rn_exponent): c for c in m.components}

class TestCycles(unittest.TestCase):
    res = tb.Restaurant.from_lengths([0.75, 0.25])

    def test_two_cycle(self):
        # splits weigh ell^2, the merge 2 ell ell'
        m = cy.act_cycles([2], self.res)
        comps = _by_removed(m)
        self.assertEqual(len(comps), 3)
        self.assertEqual(comps[((1,), 1)].weight, Fraction(9, 16))
        self.assertEqual(comps[((2,), 1)].weight, Fraction(1, 16))
        self.assertEqual(comps[((1, 2), -1)].weight, Fraction(3, 8))
        self.assertEqual(mx.law_fingerprint(comps[((1,), 1)].replacement), (((1, 1), 0.75),))
        self.assertEqual(mx.law_fingerprint(comps[((1, 2), -1)].replacement), \
                (((1,), 0.75), ((1,), 0.25)))
        self.assertEqual(m.truncation_error, 0.0)
        self.assertTrue(mx.check_normalization(m)['passed'])
        self.assertEqual(m.fingerprint, mx.mixture_fingerprint([2], self.res))

    def test_max_tables(self):
        res = tb.Restaurant.from_lengths([0.5, 0.25, 0.25])
        self.assertEqual(cy.stored_tables(res, 1), ([1], [0.5]))
        m = cy.act_cycles([2], res, max_tables=1)
        self.assertEqual(len(m.components), 1)
        self.assertEqual(m.components[0].weight, Fraction(1, 4))
        self.assertEqual(m.components[0].rn_exponent, 1)
        self.assertEqual(m.truncation_error, 0.75)
        self.assertTrue(mx.check_normalization(m)['passed'])

    def test_calibrate(self):
        rep = cy.calibrate([2], self.res)
        self.assertIn(['centralizer', 'full_aut'], rep['matching'])
        self.assertEqual(len(rep['runs']), len(cy.prefactors) * len(cy.divisor_modes))
        rep = cy.calibrate([3], self.res)
        self.assertIn(['centralizer', 'full_aut'], rep['matching'])
        self.assertNotIn(['factorial', 'full_aut'], rep['matching'])

    def test_compare_mixtures(self):
        m = cy.act_cycles([3], self.res)
        rep = cy.compare_mixtures(m, m)
        self.assertTrue(rep['equal'])
        self.assertEqual(rep['ratios'], ['1'])
        lit = cy.act_cycles_literal([3], self.res, 'full_aut', 'factorial')
        rep = cy.compare_mixtures(m, lit)
        self.assertFalse(rep['equal'])
        self.assertEqual(rep['ratios'], ['2'])

    def test_errors(self):
        with self.assertRaises(ValueError):
            cy.act_cycles([1], self.res)
        with self.assertRaises(ValueError):
            cy.act_cycles([], self.res)
        with self.assertRaises(GuardError):
            cy.act_cycles([3, 4], self.res)
        with self.assertRaises(KeyError):
            cy.act_cycles_literal([2], self.res, divisor_mode='all')
        with self.assertRaises(KeyError):
            cy.act_cycles_literal([2], self.res, prefactor='none')

if __name__ == '__main__':
    unittest.main()
