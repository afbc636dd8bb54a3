"""compare.py -- Engine output against Monte Carlo draws

    Copyright (C) 2026
    crpchips developers

.. moduleauthor:: crpchips developers

"""

import logging
import warnings

import numpy as np

from crpchips.engines import mixture as mx
from crpchips.engines.simulate import EmpiricalMeasure
from crpchips.utils import stats as st

__all__ = ["thresholds", "u_grid", "empirical_from_mixture", "exponent_law", "compare_report"]

logger = logging.getLogger(__name__)

# `tv`: largest total-variation distance of the exponent laws;
# `se`: standard errors allowed on Laplace functionals;
# `ks_alpha`: level of the two-sample KS tests.
thresholds = {'tv': 0.01, 'se': 3.0, 'ks_alpha': 0.01}

# Default arguments of the Laplace functionals.
u_grid = tuple(np.linspace(0.5, 5.0, 10).tolist())

def empirical_from_mixture(m, samples, seed=None):
    r"""Draws from the mixture itself, packed as an `EmpiricalMeasure`."""
    d = mx.sample_mixture(m, samples, seed)
    removed = [m.components[i].removed for i in d['component']]
    rho = None
    if any(c.rho is not None for c in m.components):
        rho = [m.components[i].rho.images for i in d['component']]
    return EmpiricalMeasure(d['exponent'], d['lengths'], removed, rho, m.fingerprint)

def exponent_law(m):
    r"""The normalized law of the exponent under a mixture."""
    mass = mx.total_mass(m)[0]
    law = {}
    for c in m.components:
        law[c.rn_exponent] = law.get(c.rn_exponent, 0.0) + float(c.weight) / mass
    return law

def _max_lengths(lengths):
    return np.array([x.max() if len(x) else 0.0 for x in lengths])

def compare_report(m, e, grid=None, limits=None, seed=None):
    r"""Compare a mixture measure with an empirical measure of the same source.

    Parameters
    ----------
    m : MixtureMeasure
    e : EmpiricalMeasure
    grid : sequence of float, optional
        Arguments `s` of the Laplace functionals. Default `u_grid` when optional.
    limits : dict, optional
        Overrides for `thresholds`. Default `thresholds` when optional.
    seed : int, optional
        Seed of the exact draws used for the KS test.

    Returns
    -------
    report : dict
        `tv`, `laplace` (per `s` and exponent: closed form, estimate,
        standard error, z-score), `ks` (largest new length), `mass`,
        `worst` (the exponent groups with the largest z-scores, with the
        indices of their components) and `passed`.
    """
    if m.fingerprint and e.fingerprint and m.fingerprint != e.fingerprint:
        raise ValueError("Fingerprints differ: {:s} vs {:s}.".format(m.fingerprint, e.fingerprint))
    lim = dict(thresholds, **(limits or {}))
    grid = u_grid if grid is None else tuple(float(s) for s in grid)
    if e.samples < 1000:
        warnings.warn("Only {:d} draws, thresholds are rough.".format(e.samples))

    law = exponent_law(m)
    tv = st.tv_distance(law, e.masses())

    laplace, zmax = [], {}
    for s in grid:
        exact = mx.laplace_functional(m, s)
        vals = np.array([np.exp(-s * x).sum() for x in e.lengths])
        for k in sorted(set(exact) | set(e.masses())):
            est, se = st.mean_se(np.where(e.exponents == k, vals, 0.0))
            est, se = float(est), float(se)
            ex = float(exact.get(k, 0.0))
            z = abs(ex - est) / se if se > 0 else (0.0 if abs(ex - est) < 1e-12 else np.inf)
            laplace.append({'s': s, 'rn_exp': int(k), 'exact': ex, 'estimate': est, \
                    'se': se, 'z': float(z)})
            zmax[int(k)] = max(zmax.get(int(k), 0.0), float(z))

    draws = empirical_from_mixture(m, min(e.samples, 100000), seed)
    ks = st.ks_two_sample(_max_lengths(e.lengths), _max_lengths(draws.lengths), lim['ks_alpha'])
    mass = mx.check_normalization(m)
    worst = sorted(zmax.items(), key=lambda kv: -kv[1])[:3]
    worst = [{'rn_exp': k, 'z': z, 'components': [i for i, c in enumerate(m.components) \
            if c.rn_exponent == k]} for k, z in worst]
    passed = tv <= lim['tv'] and all(x['z'] <= lim['se'] for x in laplace) \
            and ks['passed'] and mass['passed']
    logger.info("compare: tv %.3g, worst z %.3g, ks %.3g", tv, \
            worst[0]['z'] if worst else 0.0, ks['statistic'])
    return {'samples': e.samples, 'fingerprint': m.fingerprint, 'tv': tv, \
            'tv_passed': bool(tv <= lim['tv']), 'laplace': laplace, 'ks': ks, 'mass': mass, \
            'worst': worst, 'thresholds': lim, 'passed': bool(passed)}
