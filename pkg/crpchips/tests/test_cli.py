import os
import unittest
import tempfile
from fractions import Fraction
from crpchips import cli
from crpchips import verify as vf
from crpchips.algebra import chips as cp
from crpchips.algebra.perm import Permutation
from crpchips.restaurant import tables as tb
from crpchips.engines.mixture import MixtureMeasure
from crpchips.utils import io

class TestCli(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.out = os.path.join(self.tmp.name, 'out.json')

    def tearDown(self):
        self.tmp.cleanup()

    def test_usage(self):
        self.assertEqual(cli.execute([]), 2)
        self.assertEqual(cli.execute(['act-cycles', '--k', '2']), 2)
        self.assertEqual(cli.execute(['verify', 'nosuch', '--out', self.out]), 2)

    def test_verify_list(self):
        self.assertEqual(cli.execute(['verify', '--list', '--out', self.out]), 0)
        with open(self.out) as fp:
            self.assertEqual(fp.read().split(), list(vf.suites.keys()))

    def test_guard(self):
        self.assertEqual(cli.execute(['enum-gamma', '--k', '4,5', '--out', self.out]), 3)

    def test_chip_from_pair(self):
        argv = ['chip-from-pair', '--g1', '2,1', '--g2', '1,2', '--dst', '2', '--src', '2', \
                '--out', self.out]
        self.assertEqual(cli.execute(argv), 0)
        c = cp.Chip.from_json(io.loadjson(self.out, 'chip'))
        self.assertEqual(c, cp.chip_from_pair(Permutation((2, 1)), Permutation((1, 2)), 2, 2))

    def test_act_cycles(self):
        fname = os.path.join(self.tmp.name, 'res.json')
        io.savejson(fname, tb.Restaurant.from_lengths([0.75, 0.25]).to_json(), 'restaurant')
        for engine in ['labeled', 'literal']:
            argv = ['act-cycles', '--k', '2', '--restaurant', fname, '--engine', engine, \
                    '--out', self.out]
            self.assertEqual(cli.execute(argv), 0)
            m = MixtureMeasure.from_json(io.loadjson(self.out, 'mixture'))
            self.assertEqual(sum(c.weight for c in m.components), Fraction(1))
        self.assertEqual(cli.execute(['simulate', '--restaurant', fname]), 2)

    def test_dessin(self):
        argv = ['dessin', '--triple', '1', '1', '1', '--out', self.out]
        self.assertEqual(cli.execute(argv), 0)
        with open(self.out) as fp:
            self.assertTrue(fp.read().startswith('graph'))

class TestVerify(unittest.TestCase):

    def test_suites(self):
        rep = vf.run_suite('thm2-calibration', configs=1, tables=3, seed=1)
        self.assertEqual(rep['suite'], 'cycles-calibration')
        self.assertTrue(rep['passed'])
        self.assertTrue(vf.run_suite('surfaces', trials=20, max_n=4, seed=2)['passed'])
        self.assertTrue(vf.run_suite('chip-assoc', trials=20, max_size=3, seed=3)['passed'])
        rep = vf.run_suite('ewens-projection', n=3, samples=3000, seed=4, tol=0.06)
        self.assertEqual(len(rep['runs']), 4)
        self.assertTrue(rep['passed'])
        with self.assertRaises(KeyError):
            vf.run_suite('nosuch')

if __name__ == '__main__':
    unittest.main()
