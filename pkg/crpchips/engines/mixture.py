"""mixture.py -- Mixture measures: weighted replacement laws with an exponent

    The spreaded image of a point under a polymorphism is represented as
    a finite list of components. A component removes some tables (or
    labeled arcs), replaces them by new ones whose lengths follow a
    convolution of Dirichlet laws, carries the integer exponent of z in
    the Radon-Nikodym factor, and for labeled points the new order rho
    of the labels. The weights sum to one up to `truncation_error`, the
    mass of seatings on tables that were not enumerated.

    Copyright (C) 2026
    crpchips developers

.. moduleauthor:: crpchips developers

"""

import json
import hashlib
import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from crpchips.algebra.perm import Permutation
from crpchips.measures import dirichlet as dr
from crpchips.utils import io
from crpchips.utils.sampling import make_rng

__all__ = ["framing", "MixtureComponent", "MixtureMeasure", "canonical_replacement", \
        "law_fingerprint", "merge_components", "total_mass", "check_normalization", \
        "sample_mixture", "laplace_functional", "mixture_fingerprint"]

logger = logging.getLogger(__name__)

# Only the `max_tables` largest stored tables receive guests in the
# engines; the rest counts as truncation.
framing = {'max_tables': 24}

# Tolerance on the normalization of a mixture.
_mass_tol = 1e-10

@dataclass(frozen=True)
class MixtureComponent:
    r"""One component of a mixture measure.

    Parameters
    ----------
    weight : Fraction
        Nonnegative weight, exact.
    rn_exponent : int
        Exponent of z in the Radon-Nikodym factor.
    removed : tuple of int
        Ids of the replaced tables, sorted.
    replacement : ConvolutionSpec or None
        Law of the new lengths; `None` for the identity transform.
    rho : Permutation, optional
        New order of the labels for labeled points.
    arcs : int, optional
        Number of leading columns holding labeled arcs. Default 0 when optional.
    surface : tuple, optional
        Class key of the generating surface.
    """
    weight: Fraction
    rn_exponent: int
    removed: tuple = ()
    replacement: dr.ConvolutionSpec = None
    rho: Permutation = None
    arcs: int = 0
    surface: tuple = None

    def __post_init__(self):
        object.__setattr__(self, 'weight', Fraction(self.weight))
        object.__setattr__(self, 'removed', tuple(sorted(int(i) for i in self.removed)))
        if self.weight < 0:
            raise ValueError("Negative weight {:s}.".format(str(self.weight)))

    @property
    def dim(self):
        return 0 if self.replacement is None else self.replacement.dim

    def key(self):
        r"""Merge key: surface class, removed tables, law, exponent and rho."""
        rho = None if self.rho is None else self.rho.images
        return (self.surface, self.removed, law_fingerprint(self.replacement), \
                self.rn_exponent, rho, self.arcs)

    def to_json(self):
        obj = {'weight': io.fmt_real(float(self.weight)), \
                'weight_exact': io.encode_rational(self.weight), \
                'rn_exp': self.rn_exponent, 'removed': list(self.removed), \
                'replacement': None if self.replacement is None else self.replacement.to_json(), \
                'arcs': self.arcs}
        if self.rho is not None:
            obj['rho'] = self.rho.to_json()
        if self.surface is not None:
            obj['surface'] = list(self.surface)
        return obj

    @classmethod
    def from_json(cls, obj):
        rep = obj.get('replacement')
        rho = obj.get('rho')
        weight = io.decode_rational(obj['weight_exact']) if 'weight_exact' in obj \
                else Fraction(io.parse_real(obj['weight']))
        return cls(weight, int(obj['rn_exp']), tuple(obj.get('removed', ())), \
                None if rep is None else dr.ConvolutionSpec.from_json(rep), \
                None if rho is None else Permutation.from_json(rho), int(obj.get('arcs', 0)), \
                None if obj.get('surface') is None else tuple(obj['surface']))

@dataclass(frozen=True)
class MixtureMeasure:
    r"""A spreaded image: components, the truncation bound and a source fingerprint."""
    components: tuple
    truncation_error: float = 0.0
    fingerprint: str = ''

    def to_json(self):
        return {'components': [c.to_json() for c in self.components], \
                'truncation_error': io.fmt_real(self.truncation_error), \
                'fingerprint': self.fingerprint}

    @classmethod
    def from_json(cls, obj):
        return cls(tuple(MixtureComponent.from_json(c) for c in obj['components']), \
                io.parse_real(obj.get('truncation_error', 0.0)), obj.get('fingerprint', ''))

def canonical_replacement(spec, arcs=0):
    r"""Reorder the columns after the first `arcs` lexicographically.

    New unlabeled tables are unordered, so two laws that differ by a
    permutation of those columns describe the same replacement.
    """
    if spec is None:
        return None
    rows = [list(c.k) for c in spec.components]
    free = list(range(arcs, spec.dim))
    order = sorted(free, key=lambda j: tuple(r[j] for r in rows), reverse=True)
    perm = list(range(arcs)) + order
    return dr.ConvolutionSpec(tuple(dr.DirichletSpec(tuple(c.k[j] for j in perm), c.ell) \
            for c in spec.components))

def law_fingerprint(spec):
    if spec is None:
        return None
    return tuple((tuple(c.k), c.ell) for c in spec.components)

def merge_components(components):
    r"""Add up the weights of components with equal keys.

    The result is sorted by key, so it does not depend on the input order.
    """
    merged = {}
    for c in components:
        k = c.key()
        if k in merged:
            merged[k] = (merged[k][0] + c.weight, merged[k][1])
        else:
            merged[k] = (c.weight, c)
    out = []
    for k in sorted(merged, key=repr):
        w, c = merged[k]
        out.append(MixtureComponent(w, c.rn_exponent, c.removed, c.replacement, c.rho, \
                c.arcs, c.surface))
    logger.debug("merged %d components into %d", len(components), len(out))
    return out

def total_mass(m):
    r"""Sum of the weights and the truncation bound.

    Returns
    -------
    mass : float
    error : float
    """
    return float(sum((c.weight for c in m.components), Fraction(0))), m.truncation_error

def check_normalization(m, tol=None):
    r"""Check `1 - truncation_error <= mass <= 1` up to `tol`.

    Returns
    -------
    report : dict
        `mass`, `truncation_error`, `passed`.
    """
    tol = _mass_tol if tol is None else tol
    mass, err = total_mass(m)
    passed = (1.0 - err - tol <= mass <= 1.0 + tol)
    return {'mass': mass, 'truncation_error': err, 'passed': bool(passed)}

def sample_mixture(m, size, seed=None):
    r"""Exact draws from a normalized mixture.

    Parameters
    ----------
    m : MixtureMeasure
    size : int
    seed : int or numpy.random.Generator, optional

    Returns
    -------
    draws : dict
        `component` (indices), `exponent` (ints) and `lengths` (a list of
        arrays, the new lengths of each draw).
    """
    rng = make_rng(seed)
    w = np.array([float(c.weight) for c in m.components])
    if w.sum() <= 0:
        raise ValueError("Cannot sample a mixture of zero mass.")
    idx = rng.choice(len(w), size=size, p=w / w.sum())
    lengths = [None] * size
    for i in np.unique(idx):
        at = np.flatnonzero(idx == i)
        rep = m.components[i].replacement
        X = np.zeros((len(at), 0)) if rep is None else dr.sample(rep, len(at), rng)
        for a, x in zip(at, X):
            lengths[a] = x
    exponents = np.array([m.components[i].rn_exponent for i in idx], dtype=int)
    return {'component': idx, 'exponent': exponents, 'lengths': lengths}

def laplace_functional(m, s, normalize=True):
    r"""Closed-form `E[1{exponent = e} sum_j exp(-s L_j)]` for each exponent `e`.

    The sum runs over the new lengths `L_j` of a component.

    Parameters
    ----------
    m : MixtureMeasure
    s : float
    normalize : bool, optional
        Divide by the total mass. Default `True` when optional.

    Returns
    -------
    phi : dict
        Exponent to value.
    """
    mass = total_mass(m)[0] if normalize else 1.0
    out = {}
    for c in m.components:
        val = 0.0
        if c.replacement is not None:
            for j in range(c.dim):
                u = np.zeros(c.dim)
                u[j] = s
                val += dr.laplace(c.replacement, u).real
        out[c.rn_exponent] = out.get(c.rn_exponent, 0.0) + float(c.weight) * val / mass
    return out

def mixture_fingerprint(source, point):
    r"""Hash of the input configuration of an engine or a simulation.

    Parameters
    ----------
    source : sequence of int or ChipData
        Cycle lengths or chip data.
    point : Restaurant, OccupiedRestaurant or TableSignature
    """
    src = source.to_json() if hasattr(source, 'to_json') else sorted(int(k) for k in source)
    if hasattr(point, 'restaurant'):
        point = point.restaurant
    text = json.dumps({'source': src, 'point': io.tolist(point.to_json())}, sort_keys=True)
    return hashlib.sha256(text.encode('utf-8')).hexdigest()[:16]
