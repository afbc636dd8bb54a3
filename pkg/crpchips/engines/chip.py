"""chip.py -- Spreaded image of a labeled point under a trivial-left chip

    Copyright (C) 2026
    crpchips developers

.. moduleauthor:: crpchips developers

"""

import math
import logging
from dataclasses import replace

from crpchips.measures import dirichlet as dr
from crpchips.surfaces.framed import ChipData, TableSignature, enumerate_gamma_framed
from crpchips.engines import mixture as mx

__all__ = ["act_chip", "structure_component"]

logger = logging.getLogger(__name__)

def structure_component(st, point):
    r"""The mixture component of one framed structure.

    Rows are the labeled arcs and the framed unlabeled tables, columns
    the new arcs after each label followed by the new unlabeled tables.
    """
    rows = st.chains_arcs + st.chains_free
    if not rows:
        return mx.MixtureComponent(st.weight, st.exponent, (), None, st.rho, 0)
    m = st.incidence()
    spec = dr.ConvolutionSpec(tuple(dr.DirichletSpec(tuple(int(x) for x in m[r]), \
            st.row_lengths[r]) for r in range(len(rows))))
    n = point.n
    return mx.MixtureComponent(st.weight, st.exponent, point.occupied_ids + st.free_used, \
            mx.canonical_replacement(spec, n), st.rho, n)

def _largest_free(point, max_tables):
    if len(point.free) <= max_tables:
        return point
    order = sorted(range(len(point.free)), key=lambda i: -point.free[i])[:max_tables]
    order.sort()
    dropped = math.fsum(x for i, x in enumerate(point.free) if i not in set(order))
    return replace(point, free=tuple(point.free[i] for i in order), \
            free_ids=tuple(point.free_ids[i] for i in order), tail_mass=point.tail_mass + dropped)

def act_chip(chip, point, unsafe=False, max_tables=None):
    r"""The labeled engine for a chip with trivial left half.

    Parameters
    ----------
    chip : ChipData
    point : TableSignature or OccupiedRestaurant
        An occupied restaurant is read through its first `chip.n` guests.
    unsafe : bool, optional
        Lift the engine guard on N. Default `False` when optional.
    max_tables : int, optional
        Only the largest unlabeled tables are framed, the others count
        as truncation. Default `framing['max_tables']` when optional.

    Returns
    -------
    m : MixtureMeasure
        Components carry rho and `arcs = n`; the first n columns of each
        replacement law are the new arcs after the labels 1..n.
    """
    if not isinstance(chip, ChipData):
        raise TypeError("Expected ChipData, got {:s}.".format(type(chip).__name__))
    if not isinstance(point, TableSignature):
        point = TableSignature.from_occupied(point, chip.n)
    fp = mx.mixture_fingerprint(chip, point)
    framed = _largest_free(point, mx.framing['max_tables'] if max_tables is None else int(max_tables))
    structures = enumerate_gamma_framed(chip, framed, unsafe=unsafe)
    comps = [structure_component(st, framed) for st in structures]
    stored = math.fsum(framed.arcs + framed.free)
    error = max(0.0, 1.0 - stored ** (chip.N - chip.n), \
            framed.tail_mass if chip.N > chip.n else 0.0)
    out = mx.MixtureMeasure(tuple(mx.merge_components(comps)), error, fp)
    logger.info("act_chip N = %d: %d components", chip.N, len(out.components))
    return out
