"""cycles.py -- Spreaded images under the central chips of circles k_1, ..., k_p

    Two engines compute the image of a restaurant under the central
    chip of circles k_j.

    `act_cycles` is the labeled construction. Put n = sum(k_j) guests
    on the tables: a permutation u of S_n (their cyclic order) together
    with an injective framing of the cycles of u onto tables has weight
    prod_B ell^{|B|} / (|B| - 1)!. Regluing by g = cycles_representative
    gives v = u g; each cycle of v is a new table and the new lengths
    follow, row by row over the framed tables, the Dirichlet law with
    parameters the row of the incidence matrix of the surface (g, 1, u^{-1})
    scaled to the table length. The exponent is #C - #B.

    `act_cycles_literal` sums over conjugation classes of pairs (g, u)
    instead, with a constant prefactor and an automorphism divisor. With
    the prefactor prod k_j prod i_m! (the centralizer order of g) and the
    full automorphism divisor it reproduces the labeled engine exactly;
    `calibrate` reports which prefactor and divisor choices do.

    Copyright (C) 2026
    crpchips developers

.. moduleauthor:: crpchips developers

"""

import math
import logging
import itertools
from collections import Counter
from fractions import Fraction

from crpchips.algebra.perm import all_permutations
from crpchips.algebra.chips import cycles_representative
from crpchips.measures import dirichlet as dr
from crpchips.surfaces.checker import EngineSurface, centralizer, pair_class_key, \
        incidence_matrix, enumerate_gamma
from crpchips.engines import mixture as mx
from crpchips.utils import guards as gd

__all__ = ["prefactors", "divisor_modes", "stored_tables", "act_cycles", \
        "act_cycles_literal", "compare_mixtures", "calibrate"]

logger = logging.getLogger(__name__)

divisor_modes = ['full_aut', 'aut_b']

def _prefactor_centralizer(k):
    iota = Counter(k)
    return math.prod(k) * math.prod(math.factorial(i) for i in iota.values())

def _prefactor_multiplicity(k):
    iota = Counter(k)
    return math.prod(k) * math.prod(iota.values())

def _prefactor_factorial(k):
    iota = Counter(k)
    return math.prod(math.factorial(c) for c in k) * math.prod(iota.values())

prefactors = {'centralizer': _prefactor_centralizer, 'multiplicity': _prefactor_multiplicity, \
        'factorial': _prefactor_factorial}

def _check_lengths(cycle_lengths):
    k = sorted(int(c) for c in cycle_lengths)
    if not k:
        raise ValueError("Need at least one cycle length.")
    if any(c < 2 for c in k):
        raise ValueError("Cycle lengths must be >= 2, got {:s}.".format(str(k)))
    return k

def stored_tables(r, max_tables=None):
    r"""Ids and lengths of the tables receiving guests in the engines.

    Returns
    -------
    ids : list of int
    lengths : list of float
    """
    max_tables = mx.framing['max_tables'] if max_tables is None else int(max_tables)
    res = r.restaurant if hasattr(r, 'restaurant') else r
    return list(res.ids[:max_tables]), list(res.lengths[:max_tables])

def _framed_components(g, u, ids, lengths, scale, surface):
    r"""Components of the pair `(g, u)` for every injective framing of the cycles of `u`."""
    es = EngineSurface(g, u)
    B = u.cycles()
    m = incidence_matrix(es)
    exponent = len(es.c_vertices()) - len(B)
    out = []
    for frame in itertools.permutations(range(len(ids)), len(B)):
        weight = Fraction(scale)
        for cyc, t in zip(B, frame):
            weight *= Fraction(lengths[t]) ** len(cyc) / math.factorial(len(cyc) - 1)
        rows = sorted(range(len(B)), key=lambda b: ids[frame[b]])
        spec = dr.ConvolutionSpec(tuple(dr.DirichletSpec(tuple(int(x) for x in m[b]), \
                lengths[frame[b]]) for b in rows))
        out.append(mx.MixtureComponent(weight, exponent, tuple(ids[t] for t in frame), \
                mx.canonical_replacement(spec), surface=surface))
    return out

def _truncation(lengths, n, tail_mass):
    return max(0.0, 1.0 - math.fsum(lengths) ** n, tail_mass)

def act_cycles(cycle_lengths, r, unsafe=False, max_tables=None):
    r"""The labeled engine: the spreaded image of `r` under circles k_j.

    Parameters
    ----------
    cycle_lengths : sequence of int
        The k_j, each `>= 2`.
    r : Restaurant or OccupiedRestaurant
        Guests already seated play no role.
    unsafe : bool, optional
        Lift the engine guard on `n = sum(k_j)`. Default `False` when optional.
    max_tables : int, optional
        Default `framing['max_tables']` when optional.

    Returns
    -------
    m : MixtureMeasure
        Components merged by surface class, removed tables, law and exponent.
    """
    k = _check_lengths(cycle_lengths)
    g = cycles_representative(k)
    n = g.degree
    gd.check_guard('engine', n, unsafe=unsafe)
    ids, lengths = stored_tables(r, max_tables)
    cent = centralizer(g)
    comps = []
    for u in all_permutations(n, unsafe=True):
        comps += _framed_components(g, u, ids, lengths, 1, pair_class_key(u, cent))
    res = r.restaurant if hasattr(r, 'restaurant') else r
    out = mx.MixtureMeasure(tuple(mx.merge_components(comps)), \
            _truncation(lengths, n, res.tail_mass), mx.mixture_fingerprint(k, res))
    logger.info("act_cycles %s: %d components over %d tables", str(k), len(out.components), len(ids))
    return out

def act_cycles_literal(cycle_lengths, r, divisor_mode='aut_b', prefactor='centralizer', \
        unsafe=False, max_tables=None):
    r"""The class-sum engine with a prefactor and an automorphism divisor.

    Each class of pairs (g, u) contributes its representative with
    every framing, weighted by `prefactor / divisor`.

    Parameters
    ----------
    cycle_lengths : sequence of int
    r : Restaurant or OccupiedRestaurant
    divisor_mode : str, optional
        `'aut_b'` (automorphisms fixing every B-vertex) or `'full_aut'`.
        Default `'aut_b'` when optional.
    prefactor : str, optional
        One of `prefactors`. Default `'centralizer'` when optional.
    unsafe : bool, optional
    max_tables : int, optional

    Returns
    -------
    m : MixtureMeasure
    """
    if divisor_mode not in divisor_modes:
        raise KeyError("Invalid 'divisor_mode', use any of {:s}".format(str(divisor_modes)))
    if prefactor not in prefactors:
        raise KeyError("Invalid 'prefactor', use any of {:s}".format(str(list(prefactors.keys()))))
    k = _check_lengths(cycle_lengths)
    n = sum(k)
    gd.check_guard('engine', n, unsafe=unsafe)
    ids, lengths = stored_tables(r, max_tables)
    const = prefactors[prefactor](k)
    comps = []
    for cls in enumerate_gamma(k, unsafe=True):
        div = cls.full_aut if divisor_mode == 'full_aut' else cls.b_fixing_aut
        comps += _framed_components(cls.surface.g, cls.surface.u, ids, lengths, \
                Fraction(const, div), cls.key)
    res = r.restaurant if hasattr(r, 'restaurant') else r
    return mx.MixtureMeasure(tuple(mx.merge_components(comps)), \
            _truncation(lengths, n, res.tail_mass), mx.mixture_fingerprint(k, res))

def compare_mixtures(m1, m2):
    r"""Component-by-component comparison of two merged mixtures.

    Returns
    -------
    report : dict
        `equal` (exact equality of all weights), `max_abs` difference and
        `ratios`, the distinct weight ratios `m2 / m1` over common keys.
    """
    w1 = {c.key(): c.weight for c in m1.components}
    w2 = {c.key(): c.weight for c in m2.components}
    keys = set(w1) | set(w2)
    diff = max((abs(w1.get(k, 0) - w2.get(k, 0)) for k in keys), default=Fraction(0))
    ratios = sorted(set(w2[k] / w1[k] for k in keys if k in w1 and k in w2 and w1[k] > 0))
    return {'equal': diff == 0, 'max_abs': float(diff), \
            'ratios': [str(q) for q in ratios], 'keys': len(keys)}

def calibrate(cycle_lengths, r, unsafe=False, max_tables=None):
    r"""Compare every prefactor and divisor choice of the class-sum engine
    with the labeled engine.

    Returns
    -------
    report : dict
        `runs`: one entry per combination with the comparison report;
        `matching`: the combinations reproducing the labeled engine.
    """
    ref = act_cycles(cycle_lengths, r, unsafe=unsafe, max_tables=max_tables)
    runs = []
    for pre in prefactors:
        for div in divisor_modes:
            lit = act_cycles_literal(cycle_lengths, r, div, pre, unsafe, max_tables)
            rep = compare_mixtures(ref, lit)
            rep.update({'prefactor': pre, 'divisor_mode': div})
            runs.append(rep)
    matching = [[x['prefactor'], x['divisor_mode']] for x in runs if x['equal']]
    logger.info("calibration %s: matching %s", str(sorted(cycle_lengths)), str(matching))
    return {'cycle_lengths': sorted(int(c) for c in cycle_lengths), 'runs': runs, \
            'matching': matching}
