"""center.py -- Sampling the action of a central element on an occupied restaurant

    `act_center_sample` draws from the spreaded image of an occupied
    restaurant under the central chip of circles k_1, ..., k_p: a framed
    surface is chosen with probability proportional to its weight, the
    maps eta placing the white triangles of each B-vertex on its table
    in reversed cyclic order are drawn, and the new tables are glued
    from the arcs between those points. Guests ride along on their arcs.

    `simulate_direct_center` realizes the same law directly: seat
    sum(k_j) auxiliary guests after the existing ones, cut and glue at
    them, then forget them.

    Copyright (C) 2026
    crpchips developers

.. moduleauthor:: crpchips developers

"""

import math
import logging

import numpy as np

from crpchips.algebra.chips import cycles_representative
from crpchips.restaurant.tables import Restaurant, OccupiedRestaurant, place_guests, \
        forget_guests, _cut_and_glue
from crpchips.utils import guards as gd
from crpchips.utils.sampling import make_rng

__all__ = ["sample_framed_surface", "place_reversed", "act_center_sample", "simulate_direct_center"]

logger = logging.getLogger(__name__)

def sample_framed_surface(n, lengths, rng):
    r"""Draw the cycles of u and their tables with probability proportional
    to `prod ell^{|B|} / (|B| - 1)!`.

    Each of the `n` white triangles picks a table independently with
    probability proportional to its length; the triangles on one table
    are then put in a uniform cyclic order.

    Returns
    -------
    cycles : list of (int, list of int)
        Table index and the cycle of u on it.
    """
    p = np.asarray(lengths, dtype=float)
    table = rng.choice(len(p), size=n, p=p / p.sum())
    out = []
    for t in sorted(set(table.tolist())):
        members = [i + 1 for i in range(n) if table[i] == t]
        order = rng.permutation(len(members))
        out.append((t, [members[i] for i in order]))
    return out

def place_reversed(cyc, length, rng):
    r"""Uniform points on a table of `length` carrying the triangles of
    the cycle `cyc` in reversed cyclic order.

    Going clockwise from the point of `cyc[a]` the next point is that of
    `cyc[a - 1]`.

    Returns
    -------
    eta : dict
        Triangle -> position in `[0, length)`.
    """
    pts = np.sort(rng.random(len(cyc)) * length)
    shift = rng.integers(len(cyc))
    return {x: float(pts[(shift - a) % len(cyc)]) for a, x in enumerate(cyc)}

def act_center_sample(cycle_lengths, occ, seed=None, unsafe=False, details=False):
    r"""One draw of the action of the central chip of circles k_j on `occ`.

    Parameters
    ----------
    cycle_lengths : sequence of int
        The k_j, each `>= 2`.
    occ : OccupiedRestaurant
    seed : int or numpy.random.Generator, optional
    unsafe : bool, optional
        Lift the engine guard on `sum(k_j)`. Default `False` when optional.
    details : bool, optional
        Also return the removed and added table ids. Default `False` when optional.

    Returns
    -------
    rn_exponent : int
    occ : OccupiedRestaurant
        Untouched tables and the guests on them are unchanged.
    """
    rng = make_rng(seed)
    g = cycles_representative(cycle_lengths)
    n = g.degree
    gd.check_guard('engine', n, unsafe=unsafe)
    if not isinstance(occ, OccupiedRestaurant):
        occ = OccupiedRestaurant(occ)
    res = occ.restaurant
    framed = sample_framed_surface(n, res.lengths, rng)

    # eta: white triangle -> (table index, position); back = u^{-1}
    back = [0] * (n + 1)
    eta = [None] * (n + 1)
    for t, cyc in framed:
        for a, x in enumerate(cyc):
            back[cyc[(a + 1) % len(cyc)]] = x
        for x, p in place_reversed(cyc, res.lengths[t], rng).items():
            eta[x] = (t, p)

    def arc(x):
        # runs clockwise from eta(x) to eta(u^{-1}(x))
        t, p = eta[x]
        q = eta[back[x]][1]
        return (q - p) % res.lengths[t] if back[x] != x else res.lengths[t]

    # guests inside each arc J(x), with their offsets
    riders = [[] for _ in range(n + 1)]
    for i, (tid, pos) in enumerate(occ.guests, start=1):
        idx = res.ids.index(tid)
        best = None
        for x in range(1, n + 1):
            if eta[x][0] != idx:
                continue
            d = (pos - eta[x][1]) % res.lengths[idx]
            if best is None or d < best[1]:
                best = (x, d)
        if best is not None:
            riders[best[0]].append((i, best[1]))

    guests = list(occ.guests)
    next_id = res.next_id
    new_ids, new_lengths = [], []
    seen = set()
    for a in range(1, n + 1):
        if a in seen:
            continue
        tid, next_id = next_id, next_id + 1
        pos = 0.0
        placed = []
        j = a
        while j not in seen:
            seen.add(j)
            piece = g(j)
            for i, d in riders[piece]:
                placed.append((i, pos + d))
            pos += arc(piece)
            j = back[piece]
        for i, p in placed:
            guests[i - 1] = (tid, p % pos)
        new_ids.append(tid)
        new_lengths.append(pos)

    removed = sorted(set(res.ids[t] for t, _ in framed))
    keep = [(i, x) for i, x in zip(res.ids, res.lengths) if i not in removed]
    ids = [i for i, _ in keep] + new_ids
    lengths = [x for _, x in keep] + new_lengths
    order = sorted(range(len(ids)), key=lambda k: (-lengths[k], ids[k]))
    tail = max(0.0, res.tail_mass + math.fsum(res.lengths) - math.fsum(lengths))
    out = OccupiedRestaurant(Restaurant(res.z, tuple(ids[k] for k in order), \
            tuple(lengths[k] for k in order), tail, next_id), tuple(guests), \
            1.0 - (1.0 - occ.placement_error) * (1.0 - res.tail_mass) ** n)
    exponent = len(new_ids) - len(framed)
    if details:
        return exponent, out, removed, new_ids
    return exponent, out

def simulate_direct_center(cycle_lengths, occ, seed=None, unsafe=False, details=False):
    r"""One draw of the same action through auxiliary guests.

    Returns
    -------
    rn_exponent : int
    occ : OccupiedRestaurant
    """
    g = cycles_representative(cycle_lengths)
    n = g.degree
    gd.check_guard('engine', n, unsafe=unsafe)
    if not isinstance(occ, OccupiedRestaurant):
        occ = OccupiedRestaurant(occ)
    m = occ.count
    full = place_guests(occ, n, seed=seed)
    out, exponent, removed, added = _cut_and_glue(full, list(range(m + 1, m + n + 1)), g)
    out = forget_guests(out, m)
    if details:
        return exponent, out, removed, added
    return exponent, out
