"""tables.py -- Poisson-Dirichlet restaurants and the cut-and-glue action

    This module provides the continuum side of virtual permutations: a
    restaurant is a countable family of oriented circular tables whose
    lengths sum to one (stored truncated, with the missing mass kept as
    `tail_mass`), and an occupied restaurant adds finitely many guests
    at real positions. On top of these the module implements the
    Poisson-Dirichlet samplers, uniform guest placement and forgetting,
    the finite projections to S_n, the S_inf x S_inf cut-and-glue action
    with its Radon-Nikodym exponent, orientation reversal and the
    arc-length estimate by counting auxiliary guests.

    Conventions. Table ids are opaque integers; fresh ids are never
    reused. Positions are offsets in `[0, length)` from an arbitrary
    anchor, increasing clockwise. The successor of a guest is the next
    guest clockwise on its table, so the guests 1..n of an occupied
    restaurant define a permutation of S_n. Forgetting goes from more
    guests to fewer, placing from fewer to more.

    Copyright (C) 2026
    crpchips developers

.. moduleauthor:: crpchips developers

"""

import math
import logging
import warnings
from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np
from scipy.special import exp1

from crpchips.algebra.perm import Permutation
from crpchips.utils import io
from crpchips.utils.sampling import make_rng

__all__ = ["truncation", "DomainError", "Restaurant", "OccupiedRestaurant", \
        "sample_tables", "place_guests", "forget_guests", "sample_occupied", \
        "project_finite", "act", "invert", "arc_length_estimate"]

logger = logging.getLogger(__name__)

# Default truncation of sampled restaurants.
truncation = {'max_tables': 256, 'min_tail': 1e-10}

# Tolerance on sum(lengths) + tail_mass = 1.
_mass_tol = 1e-10

class DomainError(ValueError):
    r"""Raised when a geometric query has no meaning for the given guests."""
    pass

@dataclass(frozen=True)
class Restaurant:
    r"""Tables with lengths, stored in decreasing order of length.

    Parameters
    ----------
    z : Fraction
        The Poisson-Dirichlet parameter.
    ids : tuple of int
        Opaque table ids, aligned with `lengths`.
    lengths : tuple of float
        Table lengths, strictly positive, non-increasing.
    tail_mass : float
        Mass of the unstored tables.
    next_id : int
        The next fresh id. Default `max(ids) + 1` when optional.
    """
    z: Fraction
    ids: tuple
    lengths: tuple
    tail_mass: float = 0.0
    next_id: int = 0

    def __post_init__(self):
        object.__setattr__(self, 'z', Fraction(self.z))
        object.__setattr__(self, 'ids', tuple(int(i) for i in self.ids))
        object.__setattr__(self, 'lengths', tuple(float(x) for x in self.lengths))
        object.__setattr__(self, 'tail_mass', float(self.tail_mass))
        if self.z <= 0:
            raise ValueError("Parameter z must be positive, got {:s}.".format(str(self.z)))
        if len(self.ids) != len(self.lengths) or len(set(self.ids)) != len(self.ids):
            raise ValueError("Table ids must be distinct and aligned with lengths.")
        if any(x <= 0 for x in self.lengths):
            raise ValueError("Table lengths must be positive.")
        if any(a < b for a, b in zip(self.lengths, self.lengths[1:])):
            raise ValueError("Table lengths must be non-increasing.")
        if self.tail_mass < 0:
            raise ValueError("Tail mass must be nonnegative, got {:g}.".format(self.tail_mass))
        if abs(sum(self.lengths) + self.tail_mass - 1.0) > _mass_tol:
            raise ValueError("Lengths plus tail sum to {:.17g}, not 1." \
                    .format(sum(self.lengths) + self.tail_mass))
        top = max(self.ids) + 1 if self.ids else 1
        object.__setattr__(self, 'next_id', max(int(self.next_id), top))

    @classmethod
    def from_lengths(cls, lengths, z=1, tail_mass=None, ids=None):
        r"""Build a restaurant from unsorted lengths.

        Parameters
        ----------
        lengths : array_like
            Positive table lengths.
        z : Fraction, int or str, optional
            Default 1 when optional.
        tail_mass : float, optional
            Default `1 - sum(lengths)` when optional.
        ids : sequence of int, optional
            Default `1, 2, ...` in the given order when optional.

        Returns
        -------
        r : Restaurant
        """
        lengths = [float(x) for x in lengths]
        ids = list(range(1, len(lengths) + 1)) if ids is None else list(ids)
        tail_mass = max(0.0, 1.0 - math.fsum(lengths)) if tail_mass is None else tail_mass
        order = sorted(range(len(lengths)), key=lambda i: (-lengths[i], ids[i]))
        return cls(z, tuple(ids[i] for i in order), tuple(lengths[i] for i in order), tail_mass)

    @property
    def table_count(self):
        return len(self.ids)

    def length_of(self, table):
        return self.lengths[self.ids.index(table)]

    def length_map(self):
        return dict(zip(self.ids, self.lengths))

    def to_json(self):
        return {'z': io.encode_rational(self.z), 'ids': list(self.ids), \
                'lengths': [io.fmt_real(x) for x in self.lengths], \
                'tail_mass': io.fmt_real(self.tail_mass)}

    @classmethod
    def from_json(cls, obj):
        lengths = [io.parse_real(x) for x in obj['lengths']]
        ids = obj.get('ids')
        return cls.from_lengths(lengths, z=io.decode_rational(obj['z']), \
                tail_mass=io.parse_real(obj.get('tail_mass', 0.0)), ids=ids)

@dataclass(frozen=True)
class OccupiedRestaurant:
    r"""A restaurant with guests 1..n seated at positions on its tables.

    Parameters
    ----------
    restaurant : Restaurant
    guests : tuple of (int, float)
        `guests[i - 1] = (table id, position)` of guest `i`.
    placement_error : float
        Upper bound on the probability that a placement was redrawn away
        from the unstored tail.
    """
    restaurant: Restaurant
    guests: tuple = ()
    placement_error: float = 0.0

    def __post_init__(self):
        guests = tuple((int(t), float(p)) for t, p in self.guests)
        object.__setattr__(self, 'guests', guests)
        lengths = self.restaurant.length_map()
        seen = set()
        for t, p in guests:
            if t not in lengths:
                raise ValueError("Guest on unknown table {:d}.".format(t))
            if not (0.0 <= p < lengths[t]):
                raise ValueError("Position {:.17g} outside table {:d} of length {:.17g}." \
                        .format(p, t, lengths[t]))
            if (t, p) in seen:
                raise ValueError("Two guests share position {:.17g} on table {:d}.".format(p, t))
            seen.add((t, p))

    @property
    def count(self):
        return len(self.guests)

    def table_of(self, i):
        return self.guests[i - 1][0]

    def seating(self, table):
        r"""Guests on `table` in clockwise order, as a list of indices."""
        at = [i for i, (t, _) in enumerate(self.guests, start=1) if t == table]
        return sorted(at, key=lambda i: self.guests[i - 1][1])

    def arcs(self, table):
        r"""Clockwise arcs between consecutive guests on `table`.

        Returns
        -------
        arcs : list of (int, float)
            `(i, length of the arc from i to the next guest)`; a lone
            guest owns the whole table.
        """
        L = self.restaurant.length_of(table)
        seat = self.seating(table)
        out = []
        for k, i in enumerate(seat):
            j = seat[(k + 1) % len(seat)]
            d = (self.guests[j - 1][1] - self.guests[i - 1][1]) % L
            out.append((i, d if j != i else L))
        return out

    def occupied_tables(self):
        return sorted(set(t for t, _ in self.guests))

    def to_json(self):
        obj = self.restaurant.to_json()
        obj['guests'] = [{'table': t, 'pos': io.fmt_real(p)} for t, p in self.guests]
        obj['placement_error'] = io.fmt_real(self.placement_error)
        return obj

    @classmethod
    def from_json(cls, obj):
        guests = tuple((g['table'], io.parse_real(g['pos'])) for g in obj.get('guests', []))
        return cls(Restaurant.from_json(obj), guests, \
                io.parse_real(obj.get('placement_error', 0.0)))

def _as_occupied(r):
    return r if isinstance(r, OccupiedRestaurant) else OccupiedRestaurant(r)

def _fill_region(count, propose, accept, rng):
    r"""Draw `count` points from `propose`, keeping each with probability `accept(x)`."""
    jumps = np.empty(0)
    while len(jumps) < count:
        x = propose(2 * (count - len(jumps)) + 8)
        jumps = np.concatenate([jumps, x[rng.random(len(x)) < accept(x)]])
    return jumps[:count]

def _poisson_jumps(z, x0, rng):
    r"""Jumps above `x0` of the Poisson process with intensity z x^{-1} e^{-x} dx.

    The restrictions to `(x0, 1)` and `(max(1, x0), inf)` are independent
    Poisson processes, each with its own count and its own rejection
    sampler.
    """
    a = max(1.0, x0)
    # a + Exp(1) proposal, density ratio a / x
    jumps = _fill_region(rng.poisson(z * exp1(a)), \
            lambda size: a + rng.exponential(size=size), lambda x: a / x, rng)
    if x0 < 1.0:
        # log-uniform proposal, density ratio e^{-x}
        small = _fill_region(rng.poisson(z * (exp1(x0) - exp1(1.0))), \
                lambda size: x0 * np.exp(rng.random(size) * -math.log(x0)), \
                lambda x: np.exp(-x), rng)
        jumps = np.concatenate([small, jumps])
    return jumps

def sample_tables(z, method='poisson', max_tables=None, min_tail=None, seed=None):
    r"""Sample a Poisson-Dirichlet(z) restaurant.

    Two constructions are offered. `'poisson'` draws the jumps of the
    Poisson process with intensity `z x^{-1} e^{-x} dx` above a cutoff
    `x0 = -log(1 - min_tail)`, so the expected normalized mass of the
    jumps below the cutoff is `min_tail`; that mass (taken at its mean
    `z (1 - e^{-x0})`) goes to the tail and the jumps are normalized by
    the total. `'stick-breaking'` draws GEM(z) sticks `Beta(1, z)` until
    `max_tables` sticks are drawn or the remainder is below `min_tail`,
    then sorts them. In both cases only the `max_tables` largest tables
    are stored.

    Parameters
    ----------
    z : Fraction, int, float or str
        The positive parameter.
    method : str, optional
        `'poisson'` or `'stick-breaking'`. Default `'poisson'` when optional.
    max_tables : int, optional
        Default `truncation['max_tables']` when optional.
    min_tail : float, optional
        Default `truncation['min_tail']` when optional.
    seed : int or numpy.random.Generator, optional

    Returns
    -------
    r : Restaurant
    """
    max_tables = truncation['max_tables'] if max_tables is None else int(max_tables)
    min_tail = truncation['min_tail'] if min_tail is None else float(min_tail)
    if max_tables < 1:
        raise ValueError("Need at least one table, got max_tables = {:d}.".format(max_tables))
    if not (0.0 < min_tail < 1.0):
        raise ValueError("Tail mass bound must lie in (0, 1), got {:g}.".format(min_tail))
    zq = Fraction(z) if not isinstance(z, float) else Fraction(z).limit_denominator(10 ** 9)
    zf = float(zq)
    if zf <= 0:
        raise ValueError("Parameter z must be positive, got {:s}.".format(str(z)))
    rng = make_rng(seed)

    if method == 'poisson':
        x0 = -math.log1p(-min_tail)
        jumps = _poisson_jumps(zf, x0, rng)
        while len(jumps) == 0:
            jumps = _poisson_jumps(zf, x0, rng)
        small = zf * -math.expm1(-x0)
        total = jumps.sum() + small
        w = jumps / total
    elif method == 'stick-breaking':
        w, rest = [], 1.0
        while len(w) < max_tables and rest >= min_tail:
            v = rng.beta(1.0, zf)
            w.append(rest * v)
            rest *= 1.0 - v
        w = np.array(w)
    else:
        raise KeyError("Invalid 'method', use any of {:s}".format(str(['poisson', 'stick-breaking'])))

    ids = np.arange(1, len(w) + 1)
    order = np.argsort(-w, kind='stable')
    keep = order[:max_tables]
    lengths = w[keep]
    # everything not stored goes to the tail
    tail = max(0.0, 1.0 - math.fsum(lengths.tolist()))
    logger.debug("sampled %d tables (%s), tail %.3g", len(keep), method, tail)
    return Restaurant(zq, tuple(ids[keep].tolist()), tuple(lengths.tolist()), tail)

def place_guests(r, count, seed=None):
    r"""Seat `count` new guests independently and uniformly on the stored tables.

    A placement that would land in the unstored tail is redrawn among
    the stored tables; the probability of any such event is added to
    `placement_error`.

    Parameters
    ----------
    r : Restaurant or OccupiedRestaurant
    count : int
        Number of new guests, numbered after the existing ones.
    seed : int or numpy.random.Generator, optional

    Returns
    -------
    occ : OccupiedRestaurant
    """
    occ = _as_occupied(r)
    if count < 0:
        raise ValueError("Guest count must be nonnegative, got {:d}.".format(count))
    if count == 0:
        return occ
    rng = make_rng(seed)
    res = occ.restaurant
    lengths = np.array(res.lengths)
    table = rng.choice(len(lengths), size=count, p=lengths / lengths.sum())
    pos = rng.random(count) * lengths[table]
    guests = occ.guests + tuple((res.ids[t], float(p)) for t, p in zip(table, pos))
    error = 1.0 - (1.0 - occ.placement_error) * (1.0 - res.tail_mass) ** count
    if res.tail_mass > 0.01:
        warnings.warn("Tail mass {:.3g} is large, placements are biased.".format(res.tail_mass))
    return OccupiedRestaurant(res, guests, error)

def forget_guests(occ, keep):
    r"""Remove guests `keep + 1, ...`; the tables are left unchanged."""
    occ = _as_occupied(occ)
    if keep < 0 or keep > occ.count:
        raise ValueError("Cannot keep {:d} of {:d} guests.".format(keep, occ.count))
    return replace(occ, guests=occ.guests[:keep])

def sample_occupied(z, n, seed=None, **kwargs):
    r"""Sample a restaurant and seat `n` guests on it (one generator for both)."""
    rng = make_rng(seed)
    return place_guests(sample_tables(z, seed=rng, **kwargs), n, seed=rng)

def project_finite(occ, n):
    r"""The permutation of 1..n read off the clockwise order of guests per table.

    Parameters
    ----------
    occ : OccupiedRestaurant
        With at least `n` guests.
    n : int

    Returns
    -------
    p : Permutation
        Degree `n`; guests beyond `n` are ignored.
    """
    if n < 0 or n > occ.count:
        raise ValueError("Cannot project {:d} guests onto S_{:d}.".format(occ.count, n))
    images = [0] * n
    for t in set(occ.guests[i][0] for i in range(n)):
        seat = [i for i in occ.seating(t) if i <= n]
        for k, i in enumerate(seat):
            images[i - 1] = seat[(k + 1) % len(seat)]
    return Permutation(tuple(images))

def _cut_and_glue(occ, cut, g):
    r"""Cut the tables at the guests `cut` and reglue according to `g`.

    Local guest `a` is the global guest `cut[a - 1]`; `u` is the
    permutation of the local guests read from the tables. The arc
    ending at local guest `j` is glued to the arc starting at `g(j)`,
    so the new order of local guests is `v = u o g`. Guests outside
    `cut` ride along inside their arcs. Tables holding no guest moved
    by `g` are kept as they are; the others are replaced by fresh
    tables, one per cycle of `v` through a moved guest.

    Returns
    -------
    occ : OccupiedRestaurant
        Guest indices are unchanged.
    exponent : int
        `#cycles(v) - #cycles(u)`.
    removed : list of int
        Ids of the replaced tables.
    added : list of int
        Ids of the new tables, in order of their least local guest.
    """
    m = len(cut)
    if g.degree != m:
        raise ValueError("Gluing permutation has degree {:d}, expected {:d}.".format(g.degree, m))
    res = occ.restaurant
    lengths = res.length_map()
    local = {c: a for a, c in enumerate(cut, start=1)}
    moved = [a for a in range(1, m + 1) if g(a) != a]
    if not moved:
        return occ, 0, [], []
    touched = sorted(set(occ.table_of(cut[a - 1]) for a in moved))

    # arcs after each local guest, with the riders they carry
    u = [0] * (m + 1)
    seg = [0.0] * (m + 1)
    riders = [[] for _ in range(m + 1)]
    for t in touched:
        L = lengths[t]
        seat = occ.seating(t)
        cuts = [i for i in seat if i in local]
        for k, i in enumerate(cuts):
            j = cuts[(k + 1) % len(cuts)]
            a = local[i]
            u[a] = local[j]
            seg[a] = (occ.guests[j - 1][1] - occ.guests[i - 1][1]) % L if j != i else L
        # riders sit after the last cut guest before them, clockwise
        start = seat.index(cuts[0])
        owner = None
        for k in range(len(seat)):
            i = seat[(start + k) % len(seat)]
            if i in local:
                owner = i
            else:
                d = (occ.guests[i - 1][1] - occ.guests[owner - 1][1]) % L
                riders[local[owner]].append((i, d))

    u_cycles_before = len(touched)
    guests = list(occ.guests)
    new_ids, new_lengths = [], []
    next_id = res.next_id
    seen = set()
    v_cycles = 0
    on_touched = set(a for a in range(1, m + 1) if occ.table_of(cut[a - 1]) in touched)
    for a in sorted(on_touched):
        if a in seen:
            continue
        v_cycles += 1
        tid = next_id
        next_id += 1
        pos = 0.0
        cyc = []
        j = a
        while j not in seen:
            seen.add(j)
            cyc.append((j, pos))
            piece = g(j)
            for i, d in riders[piece]:
                cyc.append((i, pos + d))
            pos += seg[piece]
            j = u[piece]
        for i, p in cyc:
            guests[i - 1] = (tid, p % pos)
        new_ids.append(tid)
        new_lengths.append(pos)

    keep = [(i, x) for i, x in zip(res.ids, res.lengths) if i not in set(touched)]
    ids = [i for i, _ in keep] + new_ids
    all_lengths = [x for _, x in keep] + new_lengths
    order = sorted(range(len(ids)), key=lambda k: (-all_lengths[k], ids[k]))
    # roundoff in the summed arcs goes to the tail bookkeeping
    total = math.fsum(all_lengths)
    tail = max(0.0, res.tail_mass + (math.fsum(res.lengths) - total))
    new_res = Restaurant(res.z, tuple(ids[k] for k in order), \
            tuple(all_lengths[k] for k in order), tail, next_id)
    exponent = v_cycles - u_cycles_before
    return OccupiedRestaurant(new_res, tuple(guests), occ.placement_error), exponent, touched, new_ids

def act(occ, left, right, details=False):
    r"""The cut-and-glue action of `(left, right)` in S_n x S_n.

    The result has guest permutation `left^{-1} u right`, where `u` is
    the permutation of guests 1..n. It is obtained by regluing with
    `right o left^{-1}` and then renaming guest `left(k)` as guest `k`.
    Guests beyond `n` ride along on their arcs.

    Parameters
    ----------
    occ : OccupiedRestaurant
        With at least `n` guests.
    left, right : Permutation
        Of common degree `n`.
    details : bool, optional
        Also return the removed and added table ids. Default `False`
        when optional.

    Returns
    -------
    occ : OccupiedRestaurant
    rn_exponent : int
        Number of tables after minus number of tables before.
    removed, added : list of int
        Only when `details` is set.
    """
    n = left.degree
    if right.degree != n:
        raise ValueError("Degree mismatch: left {:d}, right {:d}.".format(n, right.degree))
    if n > occ.count:
        raise ValueError("Action of degree {:d} needs at least {:d} guests, got {:d}." \
                .format(n, n, occ.count))
    g = right * left.inverse()
    out, exponent, removed, added = _cut_and_glue(occ, list(range(1, n + 1)), g)
    if not left.is_identity():
        guests = list(out.guests)
        for k in range(1, n + 1):
            guests[k - 1] = out.guests[left(k) - 1]
        out = replace(out, guests=tuple(guests))
    if details:
        return out, exponent, removed, added
    return out, exponent

def invert(occ):
    r"""Reverse the orientation of every table; lengths are unchanged."""
    lengths = occ.restaurant.length_map()
    guests = tuple((t, (lengths[t] - p) % lengths[t]) for t, p in occ.guests)
    return replace(occ, guests=guests)

def arc_length_estimate(occ, i, j, N, seed=None):
    r"""Estimate the clockwise arc length from guest `i` to guest `j`.

    Auxiliary guests are placed until there are `N` in total; the
    number `p_ij` of guests strictly inside the clockwise arc from `i`
    to `j` gives the estimate `p_ij / N`.

    Parameters
    ----------
    occ : OccupiedRestaurant
    i, j : int
        Guests on a common table.
    N : int
        Total guest count after placement, at least the current count.
    seed : int or numpy.random.Generator, optional

    Returns
    -------
    estimate : float
    """
    if occ.table_of(i) != occ.table_of(j):
        raise DomainError("Guests {:d} and {:d} sit at different tables.".format(i, j))
    if N < occ.count:
        raise ValueError("N = {:d} is below the current guest count {:d}.".format(N, occ.count))
    full = place_guests(occ, N - occ.count, seed=seed)
    t = occ.table_of(i)
    L = full.restaurant.length_of(t)
    pi, pj = full.guests[i - 1][1], full.guests[j - 1][1]
    span = (pj - pi) % L if i != j else L
    inside = sum(1 for k, (s, p) in enumerate(full.guests, start=1) \
            if s == t and k not in (i, j) and 0.0 < (p - pi) % L < span)
    return inside / N
