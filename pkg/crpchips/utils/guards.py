"""guards.py -- Size guards for factorial enumerations

    Most exact computations in this package enumerate a symmetric group
    or a set of surfaces, so their cost grows like n!. This module keeps
    the default limits and the exception raised when a request exceeds
    them. A guard can be lifted per call with `unsafe=True`, in which
    case the expected cost is logged before the work starts.

    Copyright (C) 2026
    crpchips developers

.. moduleauthor:: crpchips developers

"""

import math
import logging

__all__ = ["guards", "GuardError", "expected_cost", "check_guard"]

logger = logging.getLogger(__name__)

# Largest degree allowed for each kind of enumeration.
guards = {'engine': 6, 'brute_force': 8, 'enumeration': 8}

class GuardError(RuntimeError):
    r"""Raised when a requested size exceeds its enumeration guard.

    Parameters
    ----------
    name : str
        The guard key, one of `guards`.
    n : int
        The requested size.
    limit : int
        The active limit.
    """
    def __init__(self, name, n, limit):
        self.name = name
        self.n = n
        self.limit = limit
        self.cost = expected_cost(name, n)
        super().__init__(
            "Guard '{:s}' refuses n = {:d} (limit {:d}); expected cost "
            "about {:.3g} elementary steps, pass unsafe=True or "
            "--unsafe-guard to run anyway.".format(name, n, limit, self.cost))

def expected_cost(name, n):
    r"""A crude estimate of the number of elementary steps for size `n`.

    Engines iterate over S_n and over framings, brute force over S_n
    (or S_n x S_n for equivariance), enumeration over pairs of S_n.
    """
    f = float(math.factorial(n))
    if name == 'engine':
        return f * n ** 2
    elif name == 'enumeration':
        return f * f
    else:
        return f * n

def check_guard(name, n, unsafe=False, limit=None):
    r"""Refuse `n` if it exceeds the guard `name`.

    Parameters
    ----------
    name : str
        One of the keys of `guards`.
    n : int
        The requested size.
    unsafe : bool, optional
        When `True` the guard is only reported, not enforced.
        Default `False` when optional.
    limit : int, optional
        Override for the limit. Default `guards[name]` when optional.

    Returns
    -------
    n : int
        The checked size, unchanged.

    Raises
    ------
    GuardError
        If `n` exceeds the limit and `unsafe` is not set.
    """
    if name not in guards:
        raise KeyError("Invalid 'name', use any of {:s}".format(str(list(guards.keys()))))
    limit = guards[name] if limit is None else limit
    if n > limit:
        if not unsafe:
            raise GuardError(name, n, limit)
        logger.warning("guard '%s' lifted for n = %d, expected cost %.3g",
                name, n, expected_cost(name, n))
    return n
