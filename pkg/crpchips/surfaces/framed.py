"""framed.py -- Framed surfaces of a trivial-left chip over a point

    A chip with trivial left half is given by `ChipData(sigma, phi, k)`:
    the labels 1..n are joined by arcs i -> sigma(i) carrying phi_i
    label-less white triangles, and there are closed A-vertices of orders
    k_j. It is realized by one permutation `g` of degree
    N = n + sum(phi) + sum(k), which inserts phi_i fresh symbols between
    i and sigma(i) and adds the k_j-cycles on fresh symbols.

    A point is a `TableSignature(tau, arcs, free)`: n labeled guests in
    the cyclic order tau, the arc after guest i having length arcs[i-1],
    and unlabeled tables of lengths `free`.

    Seating N - n extra guests on the point gives a guest permutation u
    of S_N with `project(u, n) = tau`. Cutting all arcs between guests
    and regluing by g gives `v = u g`. Piece t is the old arc from guest
    t to u(t); in the new restaurant the arc after j is piece g(j).
    After forgetting the extra guests, label j is followed by the pieces
    R(j) = g(j), g(v(j)), ... up to the next label rho(j), and every
    label-free cycle of v becomes a new unlabeled table.

    Copyright (C) 2026
    crpchips developers

.. moduleauthor:: crpchips developers

"""

import math
import logging
import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from crpchips.algebra.perm import Permutation, all_permutations, project
from crpchips.algebra.chips import chip_from_pair, lambda_chip, multiply, involute
from crpchips.restaurant.tables import project_finite
from crpchips.surfaces.checker import centralizer
from crpchips.utils import io
from crpchips.utils import guards as gd

__all__ = ["ChipData", "TableSignature", "FramedStructure", "enumerate_gamma_framed"]

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class ChipData:
    r"""A chip with trivial left half.

    Parameters
    ----------
    sigma : Permutation
        The permutation of the labels 1..n read along the arcs.
    phi : tuple of int
        `phi[i - 1] >= 0` label-less white triangles on the arc from `i`.
    k : tuple of int
        Orders `>= 2` of the closed A-vertices.
    """
    sigma: Permutation
    phi: tuple = ()
    k: tuple = ()

    def __post_init__(self):
        phi = tuple(int(p) for p in self.phi) if self.phi else (0,) * self.sigma.degree
        object.__setattr__(self, 'phi', phi)
        object.__setattr__(self, 'k', tuple(sorted(int(c) for c in self.k)))
        if len(phi) != self.sigma.degree:
            raise ValueError("Need one spacing per label: {:d} labels, {:d} spacings." \
                    .format(self.sigma.degree, len(phi)))
        if any(p < 0 for p in phi):
            raise ValueError("Spacings must be nonnegative, got {:s}.".format(str(list(phi))))
        if any(c < 2 for c in self.k):
            raise ValueError("Cycle lengths must be >= 2, got {:s}.".format(str(list(self.k))))

    @property
    def n(self):
        return self.sigma.degree

    @property
    def N(self):
        return self.n + sum(self.phi) + sum(self.k)

    def permutation(self):
        r"""The permutation `g` of S_N realizing the chip."""
        images = [0] * self.N
        nxt = self.n + 1
        for i in range(1, self.n + 1):
            prev = i
            for _ in range(self.phi[i - 1]):
                images[prev - 1] = nxt
                prev, nxt = nxt, nxt + 1
            images[prev - 1] = self.sigma(i)
        for c in self.k:
            block = list(range(nxt, nxt + c))
            for a, b in zip(block, block[1:] + block[:1]):
                images[a - 1] = b
            nxt += c
        return Permutation(tuple(images))

    def to_chip(self):
        r"""The chip `lam* (1, g) lam` with `lam = lambda_chip(N, n)`."""
        lam = lambda_chip(self.N, self.n)
        pair = chip_from_pair(Permutation.identity(self.N), self.permutation(), self.N, self.N)
        return multiply(multiply(lam, pair), involute(lam))

    def to_json(self):
        return {'sigma': self.sigma.to_json(), 'phi': list(self.phi), 'k': list(self.k)}

    @classmethod
    def from_json(cls, obj):
        return cls(Permutation.from_json(obj['sigma']), tuple(obj.get('phi', ())), \
                tuple(obj.get('k', ())))

@dataclass(frozen=True)
class TableSignature:
    r"""A point: labeled guests with their arcs, and unlabeled tables.

    Parameters
    ----------
    tau : Permutation
        Cyclic order of the labeled guests.
    arcs : tuple of float
        `arcs[i - 1]` is the length of the arc from guest `i` to `tau(i)`.
    free : tuple of float
        Lengths of the unlabeled tables.
    occupied_ids, free_ids : tuple of int, optional
        Table ids; occupied tables are ordered by their least guest.
        Default consecutive ids when optional.
    tail_mass : float, optional
        Mass not covered by the stored tables. Default `1 - sum` when optional.
    """
    tau: Permutation
    arcs: tuple
    free: tuple = ()
    occupied_ids: tuple = ()
    free_ids: tuple = ()
    tail_mass: float = None

    def __post_init__(self):
        arcs = tuple(float(x) for x in self.arcs)
        free = tuple(float(x) for x in self.free)
        object.__setattr__(self, 'arcs', arcs)
        object.__setattr__(self, 'free', free)
        if len(arcs) != self.tau.degree:
            raise ValueError("Need one arc per labeled guest: {:d} guests, {:d} arcs." \
                    .format(self.tau.degree, len(arcs)))
        if any(x <= 0 for x in arcs + free):
            raise ValueError("Arc and table lengths must be positive.")
        occ = self.occupied_ids or tuple(range(1, self.tau.count_cycles() + 1))
        fids = self.free_ids or tuple(range(len(occ) + 1, len(occ) + len(free) + 1))
        if len(occ) != self.tau.count_cycles() or len(fids) != len(free):
            raise ValueError("Table ids do not match the tables of the point.")
        object.__setattr__(self, 'occupied_ids', tuple(int(i) for i in occ))
        object.__setattr__(self, 'free_ids', tuple(int(i) for i in fids))
        total = math.fsum(arcs + free)
        if total > 1.0 + 1e-10:
            raise ValueError("Lengths sum to {:.17g} > 1.".format(total))
        tail = max(0.0, 1.0 - total) if self.tail_mass is None else float(self.tail_mass)
        object.__setattr__(self, 'tail_mass', tail)

    @property
    def n(self):
        return self.tau.degree

    @classmethod
    def from_occupied(cls, occ, n=None):
        r"""Read the signature of the first `n` guests of an occupied restaurant.

        Guests beyond `n` are ignored. Default `n = occ.count` when optional.
        """
        n = occ.count if n is None else n
        tau = project_finite(occ, n)
        res = occ.restaurant
        lengths = res.length_map()
        arcs = [0.0] * n
        for t in set(occ.guests[i][0] for i in range(n)):
            seat = [i for i in occ.seating(t) if i <= n]
            for a, i in enumerate(seat):
                j = seat[(a + 1) % len(seat)]
                d = (occ.guests[j - 1][1] - occ.guests[i - 1][1]) % lengths[t]
                arcs[i - 1] = d if j != i else lengths[t]
        occupied = []
        for cyc in tau.cycles():
            occupied.append(occ.table_of(cyc[0]))
        free = [(i, x) for i, x in zip(res.ids, res.lengths) if i not in set(occupied)]
        return cls(tau, tuple(arcs), tuple(x for _, x in free), tuple(occupied), \
                tuple(i for i, _ in free), res.tail_mass)

    def to_json(self):
        return {'tau': self.tau.to_json(), 'arcs': [io.fmt_real(x) for x in self.arcs], \
                'free': [io.fmt_real(x) for x in self.free], \
                'occupied_ids': list(self.occupied_ids), 'free_ids': list(self.free_ids), \
                'tail_mass': io.fmt_real(self.tail_mass)}

    @classmethod
    def from_json(cls, obj):
        return cls(Permutation.from_json(obj['tau']), \
                tuple(io.parse_real(x) for x in obj['arcs']), \
                tuple(io.parse_real(x) for x in obj.get('free', [])), \
                tuple(obj.get('occupied_ids', ())), tuple(obj.get('free_ids', ())), \
                io.parse_real(obj['tail_mass']) if 'tail_mass' in obj else None)

@dataclass(frozen=True)
class FramedStructure:
    r"""One labeled framed surface over a point, with its weight.

    Rows of the incidence are the labeled arcs 1..n followed by the
    framed unlabeled B-vertices; columns are the new arcs 1..n followed
    by the label-free C-vertices.

    Attributes
    ----------
    u, v : Permutation
        Guest order before and after regluing, `v = u g`.
    rho : Permutation
        The new order of the labels, `project(v, n)`.
    a_vertices : tuple
        Cycles of `g` holding labels.
    omega : tuple of (tuple, int)
        Framing: each B-vertex (cycle of u) with its table id.
    phi_cycles, psi_cycles : tuple
        C-vertices (cycles of v) with and without labels.
    chains_arcs, chains_free : tuple
        T(i): the pieces of labeled arc i in order; T(B): the pieces of
        each framed unlabeled B-vertex.
    returns_arcs, returns_free : tuple
        R(j): the pieces following label j; R(C): the pieces of each
        label-free C-vertex.
    row_lengths : tuple of float
    free_used : tuple of int
        Ids of the framed unlabeled tables.
    aut_b : int
        Automorphisms fixing the labels and every B-vertex.
    weight : Fraction
    exponent : int
        #C - #B.
    """
    u: Permutation
    v: Permutation
    rho: Permutation
    a_vertices: tuple
    omega: tuple
    phi_cycles: tuple
    psi_cycles: tuple
    chains_arcs: tuple
    chains_free: tuple
    returns_arcs: tuple
    returns_free: tuple
    row_lengths: tuple
    free_used: tuple
    aut_b: int
    weight: Fraction
    exponent: int

    def incidence(self):
        r"""Piece counts `m[row][column]`."""
        column = {}
        for c, pieces in enumerate(self.returns_arcs + self.returns_free):
            for t in pieces:
                column[t] = c
        cols = len(self.returns_arcs) + len(self.returns_free)
        m = np.zeros((len(self.row_lengths), cols), dtype=int)
        for r, pieces in enumerate(self.chains_arcs + self.chains_free):
            for t in pieces:
                m[r, column[t]] += 1
        return m

    def to_json(self):
        return {'u': self.u.to_json(), 'v': self.v.to_json(), 'rho': self.rho.to_json(), \
                'omega': [[list(c), t] for c, t in self.omega], \
                'incidence': io.tolist(self.incidence()), \
                'row_lengths': [io.fmt_real(x) for x in self.row_lengths], \
                'free_used': list(self.free_used), 'aut_b': self.aut_b, \
                'weight': io.encode_rational(self.weight), 'rn_exp': self.exponent}

def _arc_chain(u, i, n):
    chain = [i]
    t = u(i)
    while t > n:
        chain.append(t)
        t = u(t)
    return tuple(chain)

def _returns(g, v, j, n):
    pieces = [g(j)]
    x = v(j)
    while x > n:
        pieces.append(g(x))
        x = v(x)
    return tuple(pieces)

def _aut_b(u, cent, n):
    cycle_of = {t: i for i, cyc in enumerate(u.cycles()) for t in cyc}
    count = 0
    for c in cent:
        if any(c(i) != i for i in range(1, n + 1)) or c * u != u * c:
            continue
        if all(cycle_of[c(t)] == cycle_of[t] for t in range(1, u.degree + 1)):
            count += 1
    return count

def enumerate_gamma_framed(chip, point, unsafe=False):
    r"""All labeled framed surfaces of the chip `chip` over the point `point`.

    Parameters
    ----------
    chip : ChipData
    point : TableSignature
        With the same number of labels as `chip`.
    unsafe : bool, optional
        Lift the engine guard on N. Default `False` when optional.

    Returns
    -------
    structures : list of FramedStructure
        One per seating of the extra guests (arcs and their order, or
        an injective framing of the remaining cycles onto unlabeled
        tables), with weight
        `prod_i l_i^{s_i} / s_i! prod_B ell^{|B|} / (|B| - 1)!`.
    """
    n, N = chip.n, chip.N
    if point.n != n:
        raise ValueError("Chip has {:d} labels, the point {:d} guests.".format(n, point.n))
    gd.check_guard('engine', N, unsafe=unsafe)
    g = chip.permutation()
    cent = centralizer(g)
    a_vertices = tuple(c for c in g.cycles() if min(c) <= n)
    tau_cycles = point.tau.cycles()
    out = []
    for u in all_permutations(N, unsafe=True):
        if n and project(u, n) != point.tau:
            continue
        chains_arcs = tuple(_arc_chain(u, i, n) for i in range(1, n + 1))
        base = Fraction(1)
        for i, chain in enumerate(chains_arcs):
            s = len(chain) - 1
            base *= Fraction(point.arcs[i]) ** s / math.factorial(s)
        free_cycles = [c for c in u.cycles() if min(c) > n]
        if len(free_cycles) > len(point.free):
            continue
        v = u * g
        rho = project(v, n) if n else Permutation(())
        returns_arcs = tuple(_returns(g, v, j, n) for j in range(1, n + 1))
        psi = tuple(c for c in v.cycles() if min(c) > n)
        phi_cycles = tuple(c for c in v.cycles() if min(c) <= n)
        returns_free = tuple(tuple(g(x) for x in c) for c in psi)
        exponent = v.count_cycles() - u.count_cycles()
        aut = _aut_b(u, cent, n)
        cycle_of = {t: c for c in u.cycles() for t in c}
        labeled = [(cycle_of[c[0]], point.occupied_ids[k]) for k, c in enumerate(tau_cycles)]
        for frame in itertools.permutations(range(len(point.free)), len(free_cycles)):
            weight = base
            for c, t in zip(free_cycles, frame):
                weight *= Fraction(point.free[t]) ** len(c) / math.factorial(len(c) - 1)
            omega = labeled + [(c, point.free_ids[t]) for c, t in zip(free_cycles, frame)]
            out.append(FramedStructure(u, v, rho, a_vertices, \
                    tuple(omega), \
                    phi_cycles, psi, chains_arcs, tuple(free_cycles), returns_arcs, returns_free, \
                    point.arcs + tuple(point.free[t] for t in frame), \
                    tuple(point.free_ids[t] for t in frame), aut, weight, exponent))
    logger.info("%d framed structures for N = %d over %d labels", len(out), N, n)
    return out
