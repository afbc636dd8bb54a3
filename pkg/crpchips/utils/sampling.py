"""sampling.py -- Seeded random generators and batch splitting

    This module provides the random-number plumbing shared by every
    sampler: generator construction from integer seeds, the seed
    splitting rule for parallel Monte Carlo, a small process-pool map,
    and uniform sampling on scaled simplices (the spacings of uniform
    points on a circle).

    Splitting rule: a run of `samples` draws with master seed `s` is cut
    into consecutive batches of `batch_size` draws (the last one may be
    shorter). Batch `i` draws from the `i`-th child of
    `numpy.random.SeedSequence(s).spawn(n_batches)`. Because the batch
    layout does not depend on the number of workers and batches are
    reduced in index order, the output is the same for any thread count.

    Copyright (C) 2026
    crpchips developers

.. moduleauthor:: crpchips developers

"""

import os
import logging
import warnings
from concurrent.futures import ProcessPoolExecutor

import numpy as np

__all__ = ["batch_size", "make_rng", "batch_layout", "batch_seeds", "default_threads", \
        "parallel_map", "uniform_simplex", "circle_points"]

logger = logging.getLogger(__name__)

# Draws per Monte Carlo batch.
batch_size = 20000

def make_rng(seed=None):
    r"""Return a `numpy.random.Generator` for `seed`.

    Parameters
    ----------
    seed : int, numpy.random.SeedSequence or numpy.random.Generator, optional
        A generator is returned unchanged. Default `None` (fresh entropy)
        when optional.

    Returns
    -------
    rng : numpy.random.Generator
    """
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)

def batch_layout(samples, size=None):
    r"""Split `samples` draws into consecutive batch sizes.

    Parameters
    ----------
    samples : int
        Total number of draws.
    size : int, optional
        Draws per batch. Default `batch_size` when optional.

    Returns
    -------
    sizes : list of int
    """
    size = batch_size if size is None else int(size)
    if samples < 0 or size < 1:
        raise ValueError("Invalid batch layout: samples = {:d}, size = {:d}.".format(samples, size))
    sizes = [size] * (samples // size)
    if samples % size:
        sizes.append(samples % size)
    return sizes

def batch_seeds(seed, n_batches):
    r"""Spawn one child seed sequence per batch from the master `seed`."""
    return np.random.SeedSequence(seed).spawn(n_batches)

def default_threads():
    r"""Worker count from the `CRPCHIPS_THREADS` environment variable (1 if unset)."""
    value = os.environ.get('CRPCHIPS_THREADS', '1')
    try:
        threads = int(value)
    except ValueError:
        warnings.warn("Ignoring CRPCHIPS_THREADS = {:s}, not an integer.".format(value))
        return 1
    return max(1, threads)

def parallel_map(fn, tasks, threads=None):
    r"""Map `fn` over `tasks`, in a process pool when `threads > 1`.

    Results are returned in task order whatever the scheduling. `fn` and
    the tasks must be picklable when a pool is used.

    Parameters
    ----------
    fn : callable
        A module-level function of one argument.
    tasks : list
        The arguments.
    threads : int, optional
        Worker count. Default `default_threads()` when optional.

    Returns
    -------
    results : list
    """
    threads = default_threads() if threads is None else int(threads)
    tasks = list(tasks)
    if threads <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    logger.debug("mapping %d tasks over %d workers", len(tasks), threads)
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, tasks))

def uniform_simplex(size, m, ell=1.0, rng=None):
    r"""Uniform points on the simplex {x >= 0, sum(x) = ell} in `m` dimensions.

    The coordinates are the spacings of `m - 1` sorted uniform cuts of
    `[0, ell]`, which is the law of the arcs between `m` uniform guests
    on a circle of length `ell`.

    Parameters
    ----------
    size : int
        The number of points.
    m : int
        The dimension.
    ell : float, optional
        The simplex scale. Default 1.0 when optional.
    rng : numpy.random.Generator, optional
        The generator. Default a fresh one when optional.

    Returns
    -------
    X : ndarray
        An array of shape `(size, m)`, each row sums to `ell`.
    """
    rng = make_rng(rng)
    if m < 1:
        raise ValueError("Simplex dimension must be positive, got {:d}.".format(m))
    cuts = np.sort(rng.random((size, m - 1)), axis=1)
    edges = np.hstack([np.zeros((size, 1)), cuts, np.ones((size, 1))])
    return np.diff(edges, axis=1) * ell

def circle_points(m, ell, rng=None):
    r"""`m` independent uniform positions on a circle of length `ell`, sorted."""
    rng = make_rng(rng)
    return np.sort(rng.random(m) * ell)
