import unittest
from crpchips.algebra.perm import Permutation
from crpchips.surfaces import checker as ck
from crpchips.surfaces.dessin import dessin_graph, to_dessin_dot

class TestDessin(unittest.TestCase):

    def test_single_triangle(self):
        e = Permutation.identity(1)
        s = ck.from_triple(e, e, e)
        nodes, edges = dessin_graph(s)
        self.assertEqual(nodes, [('bc', (1,)), ('ca', (1,))])
        self.assertEqual(edges, [(1, 0, 0)])
        self.assertEqual(to_dessin_dot(s, 'one'), \
                'graph one {\n'
                '  bc0 [label="1", style=filled];\n'
                '  ca0 [label="1", style=solid];\n'
                '  bc0 -- ca0 [label="1"];\n'
                '}\n')

    def test_engine_surface(self):
        t = Permutation((2, 1))
        es = ck.EngineSurface(t, Permutation.identity(2))
        nodes, edges = dessin_graph(es)
        self.assertEqual(len(nodes), 3)
        self.assertEqual(len(edges), 2)
        self.assertEqual(sorted(b for _, b, _ in edges), [0, 1])
        self.assertEqual(set(c for _, _, c in edges), {0})
        dot = to_dessin_dot(es)
        self.assertTrue(dot.startswith('graph dessin {'))
        self.assertEqual(dot.count(' -- '), 2)
        self.assertEqual(dot, to_dessin_dot(es.surface()))

if __name__ == '__main__':
    unittest.main()
