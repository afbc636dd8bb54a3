"""stats.py -- Statistics used by the Monte Carlo verification harness

    Two-sample and one-sample Kolmogorov-Smirnov tests with their
    asymptotic critical values, total-variation distances between
    discrete laws, and standard errors of Monte Carlo means.

    Copyright (C) 2026
    crpchips developers

.. moduleauthor:: crpchips developers

"""

import math
import numpy as np
from scipy import stats

__all__ = ["ks_critical", "ks_two_sample", "ks_uniform", "tv_distance", \
        "empirical_law", "mean_se", "within_se"]

def ks_critical(n, m=None, alpha=0.01):
    r"""Asymptotic critical value of the KS statistic.

    For two samples of sizes `n`, `m` the value is
    `c(alpha) * sqrt((n + m) / (n * m))` with
    `c(alpha) = sqrt(-log(alpha / 2) / 2)` (1.628 at `alpha = 0.01`).
    With `m = None` the one-sample value `c(alpha) / sqrt(n)` is returned.

    Parameters
    ----------
    n : int
        First sample size.
    m : int, optional
        Second sample size. One-sample test when optional.
    alpha : float, optional
        Significance level. Default 0.01 when optional.

    Returns
    -------
    d : float
    """
    c = math.sqrt(-math.log(alpha / 2.0) / 2.0)
    if m is None:
        return c / math.sqrt(n)
    return c * math.sqrt((n + m) / (n * m))

def ks_two_sample(x, y, alpha=0.01):
    r"""Two-sample KS test.

    Returns
    -------
    report : dict
        Keys `statistic`, `critical`, `pvalue`, `passed`.
    """
    x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
    res = stats.ks_2samp(x, y)
    crit = ks_critical(len(x), len(y), alpha)
    return {'statistic': float(res.statistic), 'critical': crit, \
            'pvalue': float(res.pvalue), 'passed': bool(res.statistic < crit)}

def ks_uniform(x, lo=0.0, hi=1.0, alpha=0.01):
    r"""One-sample KS test of `x` against the uniform law on `[lo, hi]`."""
    x = np.asarray(x, dtype=float)
    res = stats.kstest(x, 'uniform', args=(lo, hi - lo))
    crit = ks_critical(len(x), None, alpha)
    return {'statistic': float(res.statistic), 'critical': crit, \
            'pvalue': float(res.pvalue), 'passed': bool(res.statistic < crit)}

def empirical_law(values):
    r"""Frequencies of the distinct values in `values` as a dict."""
    keys, counts = np.unique(np.asarray(values), return_counts=True)
    total = counts.sum()
    return {k.item(): c / total for k, c in zip(keys, counts)}

def tv_distance(p, q):
    r"""Total-variation distance between two discrete laws given as dicts.

    Missing keys count as zero mass. The laws need not be normalized;
    the distance is half the L1 distance of the given masses.
    """
    keys = set(p.keys()) | set(q.keys())
    return 0.5 * sum(abs(float(p.get(k, 0.0)) - float(q.get(k, 0.0))) for k in keys)

def mean_se(x):
    r"""Sample mean and its standard error.

    Parameters
    ----------
    x : array_like
        Draws along the first axis.

    Returns
    -------
    mean, se : ndarray
        Both with the shape of one draw.
    """
    x = np.asarray(x)
    n = x.shape[0]
    mean = x.mean(axis=0)
    if n < 2:
        return mean, np.full_like(mean, np.inf, dtype=float)
    return mean, x.std(axis=0, ddof=1) / math.sqrt(n)

def within_se(estimate, se, exact, k=3.0, floor=1e-12):
    r"""True when `|estimate - exact| <= k * se` (with an absolute floor)."""
    return bool(np.all(np.abs(np.asarray(estimate) - np.asarray(exact)) \
            <= k * np.asarray(se) + floor))
