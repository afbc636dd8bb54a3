"""checker.py -- Checker surfaces, their vertices and automorphisms

    A labeled checker surface of size n is glued from n white and n
    black triangles with sides colored a, b, c. The a-side of white k is
    glued to the a-side of black ga(k), and likewise for b and c, so the
    surface is the triple (ga, gb, gc) of S_n. Around a vertex the
    triangles alternate, and the white triangles met there form a cycle
    of one of

        gb^{-1} ga    (vertices between a- and b-edges),
        gc^{-1} gb    (between b and c),
        ga^{-1} gc    (between c and a).

    The polymorphism engines use the surfaces (g, 1, u^{-1}) of a
    pair (g, u). For them the vertex families are A = cycles of g
    (ab-vertices), B = cycles of u (bc-vertices) and C = cycles of u g
    (ca-vertices); black triangle t sits in the B-vertex of t and in
    the C-vertex of g^{-1}(t). The same letters are used for general
    triples. The rule naming A, B, C by the colors of the adjacent
    edges is `color_rule_vertices()`.

    Copyright (C) 2026
    crpchips developers

.. moduleauthor:: crpchips developers

"""

import math
import logging
import itertools
from dataclasses import dataclass
from collections import Counter

import numpy as np
from scipy.cluster.hierarchy import DisjointSet

from crpchips.algebra.perm import Permutation, all_permutations
from crpchips.algebra.chips import cycles_representative
from crpchips.utils import guards as gd

__all__ = ["CheckerSurface", "UnlabeledSurface", "EngineSurface", "GammaClass", "from_triple", \
        "vertices", "surface_stats", "color_rule_vertices", "incidence_matrix", "centralizer", \
        "canonical_form", "isomorphic", "stabilizer_order", "pair_class_key", "canonical_pair", \
        "automorphisms", "enumerate_gamma", "burnside_count", "ribbon_boundaries", \
        "ribbon_check", "inserted_permutation", "insert_after"]

logger = logging.getLogger(__name__)

_colors = ('a', 'b', 'c')

@dataclass(frozen=True)
class CheckerSurface:
    r"""A labeled checker surface given by its gluing edges.

    Parameters
    ----------
    n : int
        Number of white (and of black) triangles.
    edges : tuple of (str, int, int)
        `(color, white, black)` for each of the `3 n` glued sides.
    """
    n: int
    edges: tuple

    def __post_init__(self):
        edges = tuple(sorted((str(c), int(w), int(b)) for c, w, b in self.edges))
        object.__setattr__(self, 'edges', edges)
        if self.n < 1:
            raise ValueError("A checker surface needs n >= 1, got {:d}.".format(self.n))
        for col in _colors:
            ws = sorted(w for c, w, _ in edges if c == col)
            bs = sorted(b for c, _, b in edges if c == col)
            if ws != list(range(1, self.n + 1)) or bs != ws:
                raise ValueError("Sides of color '{:s}' are not glued one to one.".format(col))

    def gluing(self, color):
        r"""The permutation sending white k to the black triangle across its `color` side."""
        images = [0] * self.n
        for c, w, b in self.edges:
            if c == color:
                images[w - 1] = b
        return Permutation(tuple(images))

    def triple(self):
        return tuple(self.gluing(c) for c in _colors)

    def to_json(self):
        return {'triple': [g.to_json() for g in self.triple()]}

    @classmethod
    def from_json(cls, obj):
        return from_triple(*[Permutation.from_json(g) for g in obj['triple']])

@dataclass(frozen=True)
class UnlabeledSurface:
    r"""The lexicographically least triple in the relabeling orbit of a surface."""
    triple: tuple

    def surface(self):
        return from_triple(*[Permutation(t) for t in self.triple])

@dataclass(frozen=True)
class EngineSurface:
    r"""The surface (g, 1, u^{-1}) of a pair of permutations of common degree."""
    g: Permutation
    u: Permutation

    def __post_init__(self):
        if self.g.degree != self.u.degree:
            raise ValueError("Degree mismatch: {:d} and {:d}.".format(self.g.degree, self.u.degree))

    @property
    def n(self):
        return self.g.degree

    @property
    def v(self):
        return self.u * self.g

    def surface(self):
        return from_triple(self.g, Permutation.identity(self.n), self.u.inverse())

    def a_vertices(self):
        return self.g.cycles()

    def b_vertices(self):
        return self.u.cycles()

    def c_vertices(self):
        return self.v.cycles()

def from_triple(ga, gb, gc):
    r"""Glue the checker surface of the triple (ga, gb, gc)."""
    n = ga.degree
    if gb.degree != n or gc.degree != n:
        raise ValueError("Degree mismatch: {:s}.".format(str([ga.degree, gb.degree, gc.degree])))
    edges = [(col, k, g(k)) for col, g in zip(_colors, (ga, gb, gc)) for k in range(1, n + 1)]
    return CheckerSurface(n, tuple(edges))

def _as_surface(s):
    return s.surface() if isinstance(s, EngineSurface) else s

def vertices(s):
    r"""Vertices of `s` by the colors of their edges, as cycles of white triangles.

    Returns
    -------
    v : dict
        Keys 'ab', 'bc', 'ca'.
    """
    ga, gb, gc = _as_surface(s).triple()
    return {'ab': (gb.inverse() * ga).cycles(), 'bc': (gc.inverse() * gb).cycles(), \
            'ca': (ga.inverse() * gc).cycles()}

def _components(s):
    r"""Connected components as lists of white triangles."""
    ds = DisjointSet()
    for c, w, b in s.edges:
        ds.add(('w', w))
        ds.add(('b', b))
        ds.merge(('w', w), ('b', b))
    comps = {}
    for w in range(1, s.n + 1):
        comps.setdefault(ds[('w', w)], []).append(w)
    return sorted(comps.values())

def surface_stats(s):
    r"""Vertex orders, Euler characteristic, components and genera.

    Parameters
    ----------
    s : CheckerSurface or EngineSurface

    Returns
    -------
    stats : dict
        `A`, `B`, `C`: sorted vertex orders; `euler`: V - E + F;
        `components`: number of connected components; `genus`: genus of
        each component, ordered by least white triangle.
    """
    surf = _as_surface(s)
    vx = vertices(surf)
    comps = _components(surf)
    where = {w: i for i, comp in enumerate(comps) for w in comp}
    V = [0] * len(comps)
    for cyc in vx['ab'] + vx['bc'] + vx['ca']:
        V[where[cyc[0]]] += 1
    genus = []
    for i, comp in enumerate(comps):
        chi = V[i] - 3 * len(comp) + 2 * len(comp)
        genus.append((2 - chi) // 2)
    return {'A': sorted(len(c) for c in vx['ab']), 'B': sorted(len(c) for c in vx['bc']), \
            'C': sorted(len(c) for c in vx['ca']), 'euler': sum(V) - surf.n, \
            'components': len(comps), 'genus': genus}

def color_rule_vertices(s):
    r"""Vertex orders with letters given by the colors of adjacent edges.

    A: edges b and c; B: edges a and c; C: edges a and b.
    """
    vx = vertices(s)
    return {'A': sorted(len(c) for c in vx['bc']), 'B': sorted(len(c) for c in vx['ca']), \
            'C': sorted(len(c) for c in vx['ab'])}

def incidence_matrix(es):
    r"""Black-triangle counts shared by B-vertices (rows) and C-vertices (columns).

    Rows follow `es.b_vertices()`, columns `es.c_vertices()`. Entry
    `m[beta][gamma] = #{j : g(j) in B_beta, j in C_gamma}`.

    Returns
    -------
    m : ndarray of int
    """
    B, C = es.b_vertices(), es.c_vertices()
    row = {t: i for i, cyc in enumerate(B) for t in cyc}
    col = {t: i for i, cyc in enumerate(C) for t in cyc}
    m = np.zeros((len(B), len(C)), dtype=int)
    for j in range(1, es.n + 1):
        m[row[es.g(j)], col[j]] += 1
    return m

def centralizer(g):
    r"""All permutations commuting with `g`.

    They permute the cycles of each length among themselves and rotate
    each; there are `prod_m m^{i_m} i_m!` of them, `i_m` the number of
    cycles of length `m`.
    """
    by_len = {}
    for c in g.cycles():
        by_len.setdefault(len(c), []).append(c)
    blocks = []
    for m, cycs in sorted(by_len.items()):
        choices = []
        for perm in itertools.permutations(range(len(cycs))):
            for rot in itertools.product(range(m), repeat=len(cycs)):
                choices.append([(cycs[i], cycs[perm[i]], rot[i]) for i in range(len(cycs))])
        blocks.append(choices)
    out = []
    for pick in itertools.product(*blocks):
        images = [0] * g.degree
        for block in pick:
            for src, dst, r in block:
                m = len(src)
                for i, x in enumerate(src):
                    images[x - 1] = dst[(i + r) % m]
        out.append(Permutation(tuple(images)))
    return out

def _conj(s, x):
    r"""`s x s^{-1}` as an image tuple."""
    images = [0] * x.degree
    for i in range(1, x.degree + 1):
        images[s(i) - 1] = s(x(i))
    return tuple(images)

def canonical_form(s, unsafe=False):
    r"""The least triple in the orbit of `s` under (ga, gb, gc) -> (t ga s^{-1}, t gb s^{-1}, t gc s^{-1}).

    The least first entry is the identity, reached with `t = s ga^{-1}`;
    what remains is the least simultaneous conjugate of
    `(ga^{-1} gb, ga^{-1} gc)`.
    """
    surf = _as_surface(s)
    gd.check_guard('enumeration', surf.n, unsafe=unsafe)
    ga, gb, gc = surf.triple()
    return UnlabeledSurface((tuple(range(1, surf.n + 1)),) + canonical_pair(ga.inverse() * gb, \
            ga.inverse() * gc, unsafe=True))

def isomorphic(s1, s2):
    return canonical_form(s1) == canonical_form(s2)

def stabilizer_order(s):
    r"""Order of the relabeling stabilizer of `s` (the centralizer of the pair
    `(ga^{-1} gb, ga^{-1} gc)`)."""
    ga, gb, gc = _as_surface(s).triple()
    x, y = ga.inverse() * gb, ga.inverse() * gc
    return sum(1 for c in centralizer(x) if c * y == y * c)

def canonical_pair(x, y, unsafe=False):
    r"""Least `(s x s^{-1}, s y s^{-1})` over `s` in S_n, as image tuples."""
    gd.check_guard('enumeration', x.degree, unsafe=unsafe)
    best = None
    for s in all_permutations(x.degree, unsafe=True):
        cx = _conj(s, x)
        if best is not None and cx > best[0]:
            continue
        cand = (cx, _conj(s, y))
        if best is None or cand < best:
            best = cand
    return best

def pair_class_key(u, cent):
    r"""Class key of `(g, u)` under conjugation, for `cent` the centralizer of `g`.

    The least conjugate of `u` by the centralizer; two pairs with the same
    `g` are conjugate exactly when their keys agree.
    """
    return min(_conj(c, u) for c in cent)

def automorphisms(es, cent=None):
    r"""Automorphism orders of the engine surface `es`.

    Returns
    -------
    orders : dict
        `full_order`: number of permutations commuting with `g` and `u`;
        `b_fixing_order`: those that in addition fix every cycle of `u`
        as a set.
    """
    cent = centralizer(es.g) if cent is None else cent
    cycle_of = {t: i for i, cyc in enumerate(es.u.cycles()) for t in cyc}
    full = fixing = 0
    for c in cent:
        if c * es.u != es.u * c:
            continue
        full += 1
        if all(cycle_of[c(t)] == cycle_of[t] for t in range(1, es.n + 1)):
            fixing += 1
    return {'full_order': full, 'b_fixing_order': fixing}

@dataclass(frozen=True)
class GammaClass:
    r"""One conjugation class of pairs (g, u) with `g` of a given cycle type."""
    surface: EngineSurface
    key: tuple
    orbit_size: int
    full_aut: int
    b_fixing_aut: int
    incidence: tuple

    @property
    def b_profile(self):
        return tuple(sorted(len(c) for c in self.surface.b_vertices()))

    @property
    def c_profile(self):
        return tuple(sorted(len(c) for c in self.surface.c_vertices()))

    def to_json(self):
        return {'g': self.surface.g.to_json(), 'u': self.surface.u.to_json(), \
                'orbit_size': self.orbit_size, 'full_aut': self.full_aut, \
                'b_fixing_aut': self.b_fixing_aut, 'incidence': [list(r) for r in self.incidence], \
                'stats': surface_stats(self.surface)}

def enumerate_gamma(cycle_lengths, unsafe=False):
    r"""Classes of surfaces (g, 1, u^{-1}) whose A-vertices have orders `cycle_lengths`.

    `g` is fixed to `cycles_representative(cycle_lengths)` and `u` runs
    over S_n; two pairs are in one class when they are simultaneously
    conjugate, i.e. when `u` and `u'` are conjugate by the centralizer
    of `g`.

    Parameters
    ----------
    cycle_lengths : sequence of int
        Orders `k_j >= 2`, with `n = sum(k_j)`.
    unsafe : bool, optional
        Lift the enumeration guard. Default `False` when optional.

    Returns
    -------
    classes : list of GammaClass
        Sorted by class key.
    """
    g = cycles_representative(cycle_lengths)
    n = g.degree
    gd.check_guard('enumeration', n, unsafe=unsafe)
    cent = centralizer(g)
    counts = Counter(pair_class_key(u, cent) for u in all_permutations(n, unsafe=True))
    out = []
    for key in sorted(counts):
        es = EngineSurface(g, Permutation(key))
        aut = automorphisms(es, cent)
        out.append(GammaClass(es, key, counts[key], aut['full_order'], aut['b_fixing_order'], \
                tuple(tuple(int(v) for v in r) for r in incidence_matrix(es))))
    logger.info("enumerated %d classes for %s", len(out), str(sorted(cycle_lengths)))
    return out

def _centralizer_order(cycle_type):
    c = Counter(cycle_type)
    return math.prod(m ** i * math.factorial(i) for m, i in c.items())

def burnside_count(cycle_lengths):
    r"""Number of conjugation classes of pairs (g, u), counted by Burnside's lemma.

    The centralizer of `g` acts on S_n by conjugation; the fixed points
    of `c` are the centralizer of `c` in S_n.
    """
    g = cycles_representative(cycle_lengths)
    cent = centralizer(g)
    total = sum(_centralizer_order(c.cycle_type()) for c in cent)
    if total % len(cent):
        raise ArithmeticError("Burnside sum {:d} not divisible by {:d}.".format(total, len(cent)))
    return total // len(cent)

def ribbon_boundaries(g, h):
    r"""Boundary components of the bipartite ribbon graph of `(g, h)`.

    Edges 1..n join the A-vertex of their g-cycle to the B-vertex of
    their h-cycle; at each vertex the edges follow the cycle. Walking a
    boundary component, rotate at the current vertex and cross the edge.

    Returns
    -------
    faces : list of (tuple, tuple)
        For each component the labels met leaving A-vertices and the
        labels met leaving B-vertices, in order.
    """
    n = g.degree
    seen = set()
    faces = []
    for start in range(1, n + 1):
        if ('A', start) in seen:
            continue
        a_labels, b_labels = [], []
        side, i = 'A', start
        while (side, i) not in seen:
            seen.add((side, i))
            if side == 'A':
                a_labels.append(i)
                side, i = 'B', g(i)
            else:
                b_labels.append(i)
                side, i = 'A', h(i)
        faces.append((tuple(a_labels), tuple(b_labels)))
    return faces

def _cyclic_set(cycles):
    out = set()
    for c in cycles:
        k = c.index(min(c))
        out.add(tuple(c[k:]) + tuple(c[:k]))
    return out

def ribbon_check(g, h):
    r"""True when the boundary labels reproduce the cycles of `h g` and `g h`."""
    faces = ribbon_boundaries(g, h)
    return _cyclic_set([f[0] for f in faces]) == _cyclic_set((h * g).cycles()) \
            and _cyclic_set([f[1] for f in faces if f[1]]) == _cyclic_set((g * h).cycles())

def inserted_permutation(h, j, r):
    r"""Insert the new symbols `n + 1, ..., n + r` after `j` in its cycle of `h`."""
    n = h.degree
    images = list(h.images) + [0] * r
    k = h(j)
    images[j - 1] = n + 1
    for q in range(n + 1, n + r):
        images[q - 1] = q + 1
    images[n + r - 1] = k
    return Permutation(tuple(images))

def insert_after(s, j, r):
    r"""Local surgery on the surface (g, 1, h^{-1}) inserting `r` labels after `j` in `h`.

    The c-side joining white `h(j)` to black `j` is cut; the new white and
    black triangles `q = n + 1, ..., n + r` are glued to each other along
    a and b and chained along c between them.
    """
    surf = _as_surface(s)
    n = surf.n
    gc = surf.gluing('c')
    k = gc.inverse()(j)
    edges = [e for e in surf.edges if e != ('c', k, j)]
    qs = list(range(n + 1, n + r + 1))
    for q in qs:
        edges += [('a', q, q), ('b', q, q)]
    edges.append(('c', k, qs[-1]))
    for i in range(len(qs) - 1, 0, -1):
        edges.append(('c', qs[i], qs[i - 1]))
    edges.append(('c', qs[0], j))
    return CheckerSurface(n + r, tuple(edges))
