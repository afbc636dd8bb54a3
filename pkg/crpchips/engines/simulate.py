"""simulate.py -- Monte Carlo oracle for the engines

    Every draw follows the definition of the polymorphism and shares no
    code with the engines: seat the auxiliary guests uniformly, apply the
    cut-and-glue action, forget the auxiliary guests and record what
    changed. Draws are split into batches seeded from one master seed,
    so the result does not depend on the number of workers.

    Copyright (C) 2026
    crpchips developers

.. moduleauthor:: crpchips developers

"""

import math
import logging
import warnings
from dataclasses import dataclass

import numpy as np
from tqdm import tqdm

from crpchips.algebra.perm import Permutation
from crpchips.algebra.chips import cycles_representative
from crpchips.restaurant.tables import Restaurant, OccupiedRestaurant, place_guests, \
        forget_guests, act
from crpchips.surfaces.framed import ChipData, TableSignature
from crpchips.engines import mixture as mx
from crpchips.engines import center as ct
from crpchips.utils import io
from crpchips.utils import stats as st
from crpchips.utils import guards as gd
from crpchips.utils.sampling import make_rng, batch_layout, batch_seeds, parallel_map, \
        default_threads

__all__ = ["EmpiricalMeasure", "simulate", "simulate_center"]

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class EmpiricalMeasure:
    r"""Recorded draws of a simulation.

    Attributes
    ----------
    exponents : ndarray of int
        Number of tables after minus before, per draw.
    lengths : list of ndarray
        New lengths per draw: the arcs after the labels 1..n (chips)
        followed by the new unlabeled tables.
    removed : list of tuple
        Ids of the tables cut in each draw.
    rho : list of tuple or None
        New order of the labels per draw (chips only).
    fingerprint : str
    """
    exponents: np.ndarray
    lengths: list
    removed: list
    rho: list = None
    fingerprint: str = ''

    @property
    def samples(self):
        return len(self.exponents)

    def masses(self):
        return st.empirical_law(self.exponents)

    def records(self):
        for i in range(self.samples):
            rec = {'rn_exp': int(self.exponents[i]), 'removed': list(self.removed[i]), \
                    'lengths': [io.fmt_real(x) for x in self.lengths[i]]}
            if self.rho is not None:
                rec['rho'] = list(self.rho[i])
            yield rec

    def to_json(self):
        law = self.masses()
        count = np.array([len(x) for x in self.lengths])
        return {'samples': self.samples, 'fingerprint': self.fingerprint, \
                'exponent_law': {str(k): io.fmt_real(v) for k, v in sorted(law.items())}, \
                'mean_new_lengths': io.fmt_real(float(count.mean()) if len(count) else 0.0)}

def _cycles_batch(task):
    k, res, size, seed = task
    rng = make_rng(seed)
    g = cycles_representative(k)
    e = Permutation.identity(g.degree)
    empty = OccupiedRestaurant(res)
    exps, lengths, removed = [], [], []
    for _ in range(size):
        with warnings.catch_warnings():
            warnings.simplefilter('ignore')
            occ = place_guests(empty, g.degree, seed=rng)
        out, exp, rem, added = act(occ, e, g, details=True)
        new = out.restaurant.length_map()
        exps.append(exp)
        lengths.append(np.array([new[t] for t in added]))
        removed.append(tuple(rem))
    return exps, lengths, removed, None

def _chip_batch(task):
    chip, occ, size, seed = task
    rng = make_rng(seed)
    g = chip.permutation()
    e = Permutation.identity(chip.N)
    exps, lengths, removed, rhos = [], [], [], []
    for _ in range(size):
        with warnings.catch_warnings():
            warnings.simplefilter('ignore')
            full = place_guests(occ, chip.N - chip.n, seed=rng)
        out, exp, rem, added = act(full, e, g, details=True)
        out = forget_guests(out, chip.n)
        sig = TableSignature.from_occupied(out, chip.n)
        labeled = set(sig.occupied_ids)
        new = out.restaurant.length_map()
        free = [new[t] for t in added if t not in labeled]
        exps.append(exp)
        lengths.append(np.array(list(sig.arcs) + free))
        removed.append(tuple(rem))
        rhos.append(sig.tau.images)
    return exps, lengths, removed, rhos

def _run_batches(fn, tasks, threads, verbose):
    threads = default_threads() if threads is None else int(threads)
    results = []
    step = max(1, threads)
    with tqdm(total=len(tasks), disable=not verbose, desc='simulate') as bar:
        for a in range(0, len(tasks), step):
            chunk = tasks[a:a + step]
            results += parallel_map(fn, chunk, threads)
            bar.update(len(chunk))
    return results

def _framed_restaurant(res, keep):
    r"""`res` with only the tables in `keep` stored, the others added to the tail."""
    keep = set(keep)
    if keep.issuperset(res.ids):
        return res
    stored = [(t, x) for t, x in zip(res.ids, res.lengths) if t in keep]
    dropped = math.fsum(x for t, x in zip(res.ids, res.lengths) if t not in keep)
    return Restaurant(res.z, tuple(t for t, _ in stored), tuple(x for _, x in stored), \
            res.tail_mass + dropped, res.next_id)

def simulate(source, point, samples, seed=None, threads=None, verbose=False, unsafe=False, \
        max_tables=None):
    r"""Simulate the action of central circles or of a trivial-left chip.

    Auxiliary guests are seated on the tables the engines frame: the
    `max_tables` largest tables for central circles, the labeled tables
    and the `max_tables` largest free tables for a chip. The draws then
    follow the engine mixture normalized by its mass.

    Parameters
    ----------
    source : sequence of int or ChipData
        Cycle lengths k_j, or chip data.
    point : Restaurant, OccupiedRestaurant
        For chip data, the first `chip.n` guests are the labels.
    samples : int
        Number of draws.
    seed : int, optional
        Master seed; batch `i` uses the `i`-th spawned child.
    threads : int, optional
        Default `default_threads()` when optional.
    verbose : bool, optional
        Show a progress bar. Default `False` when optional.
    unsafe : bool, optional
        Lift the engine guard. Default `False` when optional.
    max_tables : int, optional
        Default `framing['max_tables']` of the engines when optional.

    Returns
    -------
    e : EmpiricalMeasure
    """
    max_tables = mx.framing['max_tables'] if max_tables is None else int(max_tables)
    sizes = batch_layout(samples)
    seeds = batch_seeds(seed, len(sizes))
    if isinstance(source, ChipData):
        gd.check_guard('engine', source.N, unsafe=unsafe)
        if not isinstance(point, OccupiedRestaurant) or point.count < source.n:
            raise ValueError("A chip with {:d} labels needs an occupied restaurant with " \
                    "as many guests.".format(source.n))
        occ = forget_guests(point, source.n)
        sig = TableSignature.from_occupied(occ, source.n)
        fp = mx.mixture_fingerprint(source, sig)
        top = sorted(range(len(sig.free)), key=lambda i: -sig.free[i])[:max_tables]
        res = _framed_restaurant(occ.restaurant, \
                list(sig.occupied_ids) + [sig.free_ids[i] for i in top])
        occ = OccupiedRestaurant(res, occ.guests, occ.placement_error)
        tasks = [(source, occ, s, q) for s, q in zip(sizes, seeds)]
        fn = _chip_batch
    else:
        k = sorted(int(c) for c in source)
        gd.check_guard('engine', sum(k), unsafe=unsafe)
        res = point.restaurant if hasattr(point, 'restaurant') else point
        fp = mx.mixture_fingerprint(k, res)
        res = _framed_restaurant(res, res.ids[:max_tables])
        tasks = [(k, res, s, q) for s, q in zip(sizes, seeds)]
        fn = _cycles_batch
    if res.tail_mass > 0.01:
        warnings.warn("Guests are seated on {:d} tables, unframed mass {:.3g}." \
                .format(res.table_count, res.tail_mass))
    logger.info("simulating %d draws in %d batches", samples, len(tasks))
    results = _run_batches(fn, tasks, threads, verbose)
    exps, lengths, removed, rhos = [], [], [], []
    for r in results:
        exps += r[0]
        lengths += r[1]
        removed += r[2]
        if r[3] is not None:
            rhos += r[3]
    return EmpiricalMeasure(np.array(exps, dtype=int), lengths, removed, \
            rhos if isinstance(source, ChipData) else None, fp)

def _center_batch(task):
    k, occ, size, seed, method = task
    rng = make_rng(seed)
    fn = ct.act_center_sample if method == 'framed' else ct.simulate_direct_center
    exps, lengths, removed = [], [], []
    for _ in range(size):
        exp, out, rem, added = fn(k, occ, seed=rng, details=True)
        new = out.restaurant.length_map()
        exps.append(exp)
        lengths.append(np.array([new[t] for t in added]))
        removed.append(tuple(rem))
    return exps, lengths, removed, None

def simulate_center(cycle_lengths, occ, samples, seed=None, method='framed', threads=None, \
        verbose=False):
    r"""Repeat the action of the circles k_j on an occupied restaurant.

    Parameters
    ----------
    method : str, optional
        `'framed'` (`act_center_sample`) or `'direct'`
        (`simulate_direct_center`). Default `'framed'` when optional.

    Returns
    -------
    e : EmpiricalMeasure
        The lengths are those of the new tables.
    """
    if method not in ('framed', 'direct'):
        raise KeyError("Invalid 'method', use any of {:s}".format(str(['framed', 'direct'])))
    k = sorted(int(c) for c in cycle_lengths)
    gd.check_guard('engine', sum(k))
    sizes = batch_layout(samples)
    tasks = [(k, occ, s, q, method) for s, q in zip(sizes, batch_seeds(seed, len(sizes)))]
    results = _run_batches(_center_batch, tasks, threads, verbose)
    exps, lengths, removed = [], [], []
    for r in results:
        exps += r[0]
        lengths += r[1]
        removed += r[2]
    return EmpiricalMeasure(np.array(exps, dtype=int), lengths, removed, None, \
            mx.mixture_fingerprint(k, occ.restaurant))
