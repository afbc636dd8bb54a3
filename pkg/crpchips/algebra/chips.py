"""chips.py -- Chips: double cosets of the bisymmetric group as diagrams

    A chip of type (alpha, beta) has `beta` pairs of endpoints on top
    (left and right copies of 1..beta) and `alpha` pairs at the bottom.
    Endpoints are matched by arcs of four kinds:

        'vl'  top-left i  -> bottom-left j,    integer length
        'vr'  top-right i -> bottom-right j,   integer length
        'ht'  top-left i  -- top-right j,      half-integer length
        'hb'  bottom-left i -- bottom-right j, half-integer length

    plus a multiset of closed circles of integer length >= 2. Lengths
    are half the number of crosses an arc passes through. Chips compose
    by gluing (`multiply`), and a pair (g1, g2) of finitary permutations
    gives a chip by closing the strands above `beta` and below `alpha`
    with one-cross connectors (`chip_from_pair`).

    `multiply(f, g)` stacks `g` on top of `f`: it is the composition of
    morphisms `g: gamma -> beta` and `f: beta -> alpha`, and matches the
    group product `f g` of the underlying pairs.

    Copyright (C) 2026
    crpchips developers

.. moduleauthor:: crpchips developers

"""

import logging
from fractions import Fraction
from typing import NamedTuple
from dataclasses import dataclass

from scipy.cluster.hierarchy import DisjointSet

from crpchips.algebra.perm import Permutation, random_permutation
from crpchips.utils import io
from crpchips.utils.sampling import make_rng

__all__ = ["Arc", "Chip", "identity_chip", "circles_chip", "multiply", "involute", \
        "lambda_chip", "theta_element", "chip_from_pair", "center_element", \
        "cycles_representative", "double_coset_product", "random_chip"]

logger = logging.getLogger(__name__)

_half = Fraction(1, 2)

# endpoint sides of each arc kind
_kinds = {'vl': (('t', 'l'), ('b', 'l')), 'vr': (('t', 'r'), ('b', 'r')), \
        'ht': (('t', 'l'), ('t', 'r')), 'hb': (('b', 'l'), ('b', 'r'))}

class Arc(NamedTuple):
    kind: str
    frm: int
    to: int
    length: Fraction

    def endpoints(self):
        a, b = _kinds[self.kind]
        return (a + (self.frm,), b + (self.to,))

@dataclass(frozen=True)
class Chip:
    r"""A morphism of the chip category from `src` (top) to `dst` (bottom).

    Parameters
    ----------
    dst : int
        alpha, the number of bottom pairs.
    src : int
        beta, the number of top pairs.
    arcs : tuple of Arc
        A perfect matching of the `2 (alpha + beta)` endpoints. Stored sorted.
    circles : tuple of int
        Lengths of the closed circles, each `>= 2`. Stored sorted.
    """
    dst: int
    src: int
    arcs: tuple = ()
    circles: tuple = ()

    def __post_init__(self):
        arcs = tuple(sorted(Arc(a[0], int(a[1]), int(a[2]), Fraction(a[3])) for a in self.arcs))
        circles = tuple(sorted(int(c) for c in self.circles))
        object.__setattr__(self, 'arcs', arcs)
        object.__setattr__(self, 'circles', circles)
        if any(c < 2 for c in circles):
            raise ValueError("Circles of length < 2 are not stored: {:s}.".format(str(circles)))
        seen = set()
        for a in arcs:
            if a.kind not in _kinds:
                raise KeyError("Invalid 'kind', use any of {:s}".format(str(list(_kinds.keys()))))
            if a.length < 0:
                raise ValueError("Negative arc length in {:s}.".format(str(a)))
            horizontal = a.kind in ('ht', 'hb')
            if (a.length * 2).denominator != 1 or ((a.length * 2) % 2 == 1) != horizontal:
                raise ValueError("Arc {:s} has a length of the wrong parity.".format(str(a)))
            for e in a.endpoints():
                size = self.src if e[0] == 't' else self.dst
                if not (1 <= e[2] <= size) or e in seen:
                    raise ValueError("Arcs do not match the endpoints of a ({:d}, {:d}) chip." \
                            .format(self.dst, self.src))
                seen.add(e)
        if len(seen) != 2 * (self.dst + self.src):
            raise ValueError("Arcs leave endpoints of a ({:d}, {:d}) chip unmatched." \
                    .format(self.dst, self.src))

    def to_json(self):
        return {'dst': self.dst, 'src': self.src, \
                'arcs': [{'kind': a.kind, 'from': a.frm, 'to': a.to, \
                    'len': io.encode_half(a.length)} for a in self.arcs], \
                'circles': list(self.circles)}

    @classmethod
    def from_json(cls, obj):
        arcs = [(a['kind'], a['from'], a['to'], io.decode_half(a['len'])) for a in obj['arcs']]
        return cls(int(obj['dst']), int(obj['src']), tuple(arcs), tuple(obj['circles']))

def identity_chip(n):
    r"""The identity of the object `n`: arcs `i -> i` of length 0 on both sides."""
    return lambda_chip(n, n)

def circles_chip(lengths, n=0):
    r"""Circles `lengths` in the chip category at `(n, n)` with identity arcs."""
    base = identity_chip(n)
    return Chip(n, n, base.arcs, tuple(lengths))

def _trace(dst, src, edges, boundary):
    r"""Close up a graph of arcs into a chip.

    `edges` are `(node, node, length)`; `boundary` maps boundary nodes
    to endpoints `(side, half, index)`. Every other node has degree 2.
    """
    ds = DisjointSet()
    for a, b, _ in edges:
        ds.add(a)
        ds.add(b)
        ds.merge(a, b)
    total, ends = {}, {}
    for a, _, x in edges:
        root = ds[a]
        total[root] = total.get(root, Fraction(0)) + x
    for node, ep in boundary.items():
        ends.setdefault(ds[node], []).append(ep)
    arcs, circles = [], []
    for root, x in total.items():
        eps = sorted(ends.get(root, []))
        if not eps:
            if x != 1:
                circles.append(x)
            continue
        if len(eps) != 2:
            raise ValueError("Traced component with {:d} endpoints.".format(len(eps)))
        (s1, h1, i1), (s2, h2, i2) = eps
        if (h1 == h2) == (s1 == s2):
            raise ValueError("Traced an arc between {:s} and {:s}.".format(str(eps[0]), str(eps[1])))
        if h1 == h2:
            # vertical: eps sorted puts bottom ('b') before top ('t')
            arcs.append(('v' + h1, i2, i1, x))
        else:
            arcs.append(('h' + s1, i1, i2, x))
    for x in circles:
        if x.denominator != 1:
            raise ValueError("Traced a circle of non-integer length {:s}.".format(str(x)))
    return Chip(dst, src, tuple(arcs), tuple(int(x) for x in circles))

def multiply(f, g):
    r"""Glue the top of `f` to the bottom of `g`.

    Parameters
    ----------
    f : Chip
        Of type `(alpha, beta)`.
    g : Chip
        Of type `(beta, gamma)`.

    Returns
    -------
    fg : Chip
        Of type `(alpha, gamma)`; arcs passing through the interface are
        joined and their lengths add, closed loops become circles,
        circles of length 1 are discarded and the circle multisets of
        `f` and `g` are kept.
    """
    if f.src != g.dst:
        raise ValueError("Cannot glue a chip with {:d} top pairs to one with {:d} bottom pairs." \
                .format(f.src, g.dst))
    edges, boundary = [], {}
    for a in f.arcs:
        p, q = a.endpoints()
        # f's top is the interface, named by its endpoint
        edges.append((('f',) + p if p[0] == 'b' else ('m',) + p[1:], \
                ('f',) + q if q[0] == 'b' else ('m',) + q[1:], a.length))
    for a in g.arcs:
        p, q = a.endpoints()
        edges.append((('g',) + p if p[0] == 't' else ('m',) + p[1:], \
                ('g',) + q if q[0] == 't' else ('m',) + q[1:], a.length))
    for side in ('l', 'r'):
        for i in range(1, f.dst + 1):
            boundary[('f', 'b', side, i)] = ('b', side, i)
        for i in range(1, g.src + 1):
            boundary[('g', 't', side, i)] = ('t', side, i)
    out = _trace(f.dst, g.src, edges, boundary)
    return Chip(out.dst, out.src, out.arcs, out.circles + f.circles + g.circles)

def involute(c):
    r"""Exchange top and bottom; vertical arcs reverse, 'ht' and 'hb' swap."""
    flip = {'vl': 'vl', 'vr': 'vr', 'ht': 'hb', 'hb': 'ht'}
    arcs = []
    for a in c.arcs:
        if a.kind in ('vl', 'vr'):
            arcs.append(Arc(a.kind, a.to, a.frm, a.length))
        else:
            arcs.append(Arc(flip[a.kind], a.frm, a.to, a.length))
    return Chip(c.src, c.dst, tuple(arcs), c.circles)

def lambda_chip(m, n):
    r"""The forgetting chip of type `(n, m)`.

    Vertical arcs `i -> i` of length 0 on both sides for `i <= n` and
    top arcs `i_l -- i_r` of length 1/2 for `n < i <= m`.
    """
    if n < 0 or n > m:
        raise ValueError("lambda_chip needs 0 <= n <= m, got m = {:d}, n = {:d}.".format(m, n))
    arcs = [Arc(k, i, i, Fraction(0)) for i in range(1, n + 1) for k in ('vl', 'vr')]
    arcs += [Arc('ht', i, i, _half) for i in range(n + 1, m + 1)]
    return Chip(n, m, tuple(arcs))

def theta_element(beta, j):
    r"""The block swap of degree `beta + 2 j`.

    Fixes 1..beta and exchanges the blocks (beta, beta + j] and
    (beta + j, beta + 2 j] in order.
    """
    if beta < 0 or j < 1:
        raise ValueError("theta needs beta >= 0 and j >= 1, got {:d}, {:d}.".format(beta, j))
    images = list(range(1, beta + 1))
    images += [k + j for k in range(beta + 1, beta + j + 1)]
    images += [k - j for k in range(beta + j + 1, beta + 2 * j + 1)]
    return Permutation(tuple(images))

def chip_from_pair(g1, g2, dst, src):
    r"""The chip of the pair `(g1, g2)` with `dst` bottom and `src` top pairs.

    Strands run from top-left `i` to bottom-left `g1(i)` and from
    top-right `i` to bottom-right `g2(i)`. Above `src` and below `dst`
    the left and right copies of each index are joined by a connector
    carrying one cross. Traced arcs get half their cross count as
    length and loops of length 1 are dropped, so the result does not
    depend on the degree the pair is extended to.

    Parameters
    ----------
    g1, g2 : Permutation
    dst : int
        alpha.
    src : int
        beta.

    Returns
    -------
    c : Chip
    """
    if dst < 0 or src < 0:
        raise ValueError("Chip sizes must be nonnegative, got {:d}, {:d}.".format(dst, src))
    N = max(dst, src, g1.degree, g2.degree)
    edges, boundary = [], {}
    for i in range(1, N + 1):
        edges.append((('t', 'l', i), ('b', 'l', g1(i)), Fraction(0)))
        edges.append((('t', 'r', i), ('b', 'r', g2(i)), Fraction(0)))
        if i > src:
            edges.append((('t', 'l', i), ('t', 'r', i), _half))
        if i > dst:
            edges.append((('b', 'l', i), ('b', 'r', i), _half))
    for side in ('l', 'r'):
        for i in range(1, src + 1):
            boundary[('t', side, i)] = ('t', side, i)
        for i in range(1, dst + 1):
            boundary[('b', side, i)] = ('b', side, i)
    return _trace(dst, src, edges, boundary)

def center_element(cycle_lengths, n=0):
    r"""The central element with circles `cycle_lengths` with identity arcs on `n`."""
    lengths = [int(k) for k in cycle_lengths]
    if any(k <= 1 for k in lengths):
        raise ValueError("Central circles need lengths >= 2, got {:s}.".format(str(lengths)))
    return circles_chip(lengths, n)

def cycles_representative(cycle_lengths):
    r"""The permutation with consecutive blocks of the given lengths as cycles.

    Lengths are sorted ascending, so {2, 3} gives (1 2)(3 4 5).
    """
    lengths = sorted(int(k) for k in cycle_lengths)
    if any(k < 2 for k in lengths):
        raise ValueError("Cycle lengths must be >= 2, got {:s}.".format(str(lengths)))
    cycles, start = [], 1
    for k in lengths:
        cycles.append(tuple(range(start, start + k)))
        start += k
    return Permutation.from_cycles(cycles, start - 1)

def _pair_product(g, h, beta, j):
    theta = theta_element(beta, j)
    n = max(g[0].degree, g[1].degree, h[0].degree, h[1].degree, theta.degree)
    return tuple(g[s].extend(n) * theta.extend(n) * h[s].extend(n) for s in (0, 1))

def double_coset_product(g, h, alpha, beta, gamma, max_j=None):
    r"""The stabilized product `g theta h` of two bisymmetric pairs.

    Parameters
    ----------
    g : tuple of Permutation
        A pair `(g1, g2)` read at `(alpha, beta)`.
    h : tuple of Permutation
        A pair `(h1, h2)` read at `(beta, gamma)`.
    alpha, beta, gamma : int
    max_j : int, optional
        Last shift tried. Default two past the largest degree when optional.

    Returns
    -------
    chip : Chip
        `chip_from_pair(g theta h)` at the largest shift.
    j0 : int
        The least shift from which the chips stay constant up to `max_j`.
    """
    support = max(g[0].degree, g[1].degree, h[0].degree, h[1].degree, alpha, beta, gamma)
    max_j = support + 2 if max_j is None else int(max_j)
    chips = []
    for j in range(1, max_j + 1):
        p = _pair_product(g, h, beta, j)
        chips.append(chip_from_pair(p[0], p[1], alpha, gamma))
    j0 = max_j
    while j0 > 1 and chips[j0 - 2] == chips[-1]:
        j0 -= 1
    return chips[-1], j0

def random_chip(dst, src, rng=None, extra=2):
    r"""A chip of type `(dst, src)` from a uniform pair of degree `max(dst, src) + extra`."""
    rng = make_rng(rng)
    n = max(dst, src) + extra
    return chip_from_pair(random_permutation(n, rng), random_permutation(n, rng), dst, src)
