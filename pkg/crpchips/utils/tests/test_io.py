import io as _io
import os
import tempfile
import unittest
from fractions import Fraction
import numpy as np
import jsonschema
from crpchips.utils import io
from crpchips.algebra.chips import identity_chip

class TestIo(unittest.TestCase):

    def test_tolist(self):
        x = [np.array([1, 2, 3]), np.array([[1, 2], [3, 4]]), \
                [np.array([1, 2]), np.array([3])], (np.array([1, 2]), np.array([3, 4])), \
                {'a': np.array([1.5]), 'b': (1, np.int64(2))}, np.float64(0.5)]
        y = [[1, 2, 3], [[1, 2], [3, 4]], [[1, 2], [3]], [[1, 2], [3, 4]], \
                {'a': [1.5], 'b': [1, 2]}, 0.5]
        for i in range(len(x)):
            self.assertEqual(io.tolist(x[i]), y[i])
        self.assertIsInstance(io.tolist(np.int64(3)), int)

    def test_reals(self):
        for x in [0.1, 1.0 / 3.0, 2.5e-17, 1 - 1e-16]:
            s = io.fmt_real(x)
            self.assertIsInstance(s, str)
            self.assertEqual(io.parse_real(s), x)
        self.assertEqual(io.parse_real(2), 2.0)

    def test_rationals(self):
        self.assertEqual(io.encode_rational(Fraction(3, 6)), {'num': 1, 'den': 2})
        self.assertEqual(io.decode_rational({'num': 2, 'den': 4}), Fraction(1, 2))
        self.assertEqual(io.decode_rational('3/7'), Fraction(3, 7))
        self.assertEqual(io.decode_rational(5), Fraction(5))
        with self.assertRaises(ValueError):
            io.decode_rational({'num': 1, 'den': 0})
        with self.assertRaises(TypeError):
            io.decode_rational(0.5)

    def test_half(self):
        self.assertEqual(io.encode_half(Fraction(3, 2)), '3/2')
        self.assertEqual(io.encode_half(2), '4/2')
        self.assertEqual(io.decode_half('3/2'), Fraction(3, 2))
        self.assertEqual(io.decode_half(1), Fraction(1))
        with self.assertRaises(ValueError):
            io.encode_half(Fraction(1, 3))
        with self.assertRaises(ValueError):
            io.decode_half('1/3')

    def test_schema(self):
        doc = identity_chip(2).to_json()
        self.assertEqual(io.validate(doc, 'chip'), doc)
        bad = dict(doc, circles=[1])
        with self.assertRaises(jsonschema.ValidationError):
            io.validate(bad, 'chip')
        with self.assertRaises(OSError):
            io.load_schema('no-such-schema')

    def test_dumps(self):
        a = io.dumps({'b': 1, 'a': [np.int64(1), 2]})
        b = io.dumps({'a': [1, 2], 'b': 1})
        self.assertEqual(a, b)

    def test_files(self):
        doc = identity_chip(1).to_json()
        with tempfile.TemporaryDirectory() as d:
            fname = os.path.join(d, 'chip.json')
            io.savejson(fname, doc, 'chip')
            self.assertEqual(io.loadjson(fname, 'chip'), doc)
            with self.assertRaises(OSError):
                io.loadjson(os.path.join(d, 'missing.json'))

    def test_jsonl(self):
        fp = _io.StringIO()
        count = io.dump_jsonl(fp, [{'x': 1}, {'x': np.int64(2)}])
        self.assertEqual(count, 2)
        self.assertEqual(fp.getvalue(), '{"x":1}\n{"x":2}\n')

if __name__ == '__main__':
    unittest.main()
