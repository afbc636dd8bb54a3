"""perm.py -- Finite permutations, the projections S_n -> S_m and Ewens measures

    This module provides the finite symmetric-group layer: permutations
    of explicit degree with a cycle view, the canonical projections
    S_n -> S_m that delete symbols from the cycle expression, the exact
    Ewens measures on S_n and the integer exponents of the finite
    Radon-Nikodym derivatives of the S_n x S_n action.

    Permutations are 1-indexed. The product `p * q` is the composition
    `p o q`, i.e. `(p * q)(i) = p(q(i))`. Every mass is an exact
    `fractions.Fraction`.

    Copyright (C) 2026
    crpchips developers

.. moduleauthor:: crpchips developers

"""

import logging
import itertools
from dataclasses import dataclass
from fractions import Fraction

from crpchips.utils import guards as gd
from crpchips.utils.sampling import make_rng

__all__ = ["Permutation", "decompose_cycles", "project", "project_step", "rising", \
        "ewens_mass", "rn_exponent_finite", "act_finite", "all_permutations", \
        "pushforward_check", "sample_ewens", "cycle_count_distribution", \
        "expected_cycles", "random_permutation"]

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class Permutation:
    r"""A permutation of {1, ..., n} stored by its images.

    Parameters
    ----------
    images : tuple of int
        `images[i - 1]` is the image of `i`. Must be a bijection of
        {1, ..., len(images)}.
    """
    images: tuple

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError("Images {:s} are not a permutation of 1..{:d}." \
                    .format(str(list(images)), len(images)))
        object.__setattr__(self, 'images', images)

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles, n=None):
        r"""Build a permutation from disjoint cycles.

        Parameters
        ----------
        cycles : iterable of sequences of int
            Disjoint cycles; fixed points may be omitted.
        n : int, optional
            The degree. Default the largest symbol when optional.

        Returns
        -------
        p : Permutation
        """
        cycles = [tuple(int(v) for v in c) for c in cycles]
        top = max([max(c) for c in cycles if len(c) > 0] + [0])
        n = top if n is None else int(n)
        if top > n:
            raise ValueError("Symbol {:d} exceeds degree {:d}.".format(top, n))
        images = list(range(1, n + 1))
        seen = set()
        for c in cycles:
            for k, v in enumerate(c):
                if v in seen or v < 1:
                    raise ValueError("Cycles {:s} are not disjoint.".format(str(cycles)))
                seen.add(v)
                images[v - 1] = c[(k + 1) % len(c)]
        return cls(tuple(images))

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, i):
        # finitary: symbols beyond the degree are fixed
        return self.images[i - 1] if i <= len(self.images) else i

    def __mul__(self, other):
        n = max(self.degree, other.degree)
        return Permutation(tuple(self(other(i)) for i in range(1, n + 1)))

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        p = Permutation.identity(self.degree)
        for _ in range(k):
            p = p * self
        return p

    def __str__(self):
        moved = [c for c in self.cycles() if len(c) > 1]
        if not moved:
            return "e"
        return "".join("(" + " ".join(str(v) for v in c) + ")" for c in moved)

    def inverse(self):
        inv = [0] * self.degree
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def extend(self, n):
        r"""The trivial extension to degree `n >= degree` (new symbols fixed)."""
        if n < self.degree:
            raise ValueError("Cannot extend degree {:d} down to {:d}.".format(self.degree, n))
        return Permutation(self.images + tuple(range(self.degree + 1, n + 1)))

    def cycles(self):
        r"""Disjoint cycles, each starting at its least symbol, ordered by it."""
        seen = [False] * (self.degree + 1)
        out = []
        for i in range(1, self.degree + 1):
            if seen[i]:
                continue
            c = [i]
            seen[i] = True
            j = self.images[i - 1]
            while j != i:
                c.append(j)
                seen[j] = True
                j = self.images[j - 1]
            out.append(tuple(c))
        return out

    def count_cycles(self):
        return len(self.cycles())

    def cycle_type(self):
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def support(self):
        r"""The largest moved symbol, 0 for the identity."""
        moved = [i for i, v in enumerate(self.images, start=1) if i != v]
        return max(moved) if moved else 0

    def is_identity(self):
        return self.support() == 0

    def to_json(self):
        return list(self.images)

    @classmethod
    def from_json(cls, obj):
        r"""Read an array of images, or `{"cycles": [...], "degree": n}`."""
        if isinstance(obj, dict):
            return cls.from_cycles(obj["cycles"], obj.get("degree"))
        return cls(tuple(obj))

def decompose_cycles(p):
    r"""Cycle decomposition of `p`, fixed points included.

    Parameters
    ----------
    p : Permutation

    Returns
    -------
    cycles : list of tuple
        Each cycle `(k_1, k_2, ...)` satisfies `p(k_i) = k_{i+1}` cyclically.
    """
    return p.cycles()

def project(p, m):
    r"""The projection S_n -> S_m: delete all symbols `> m` from the cycles of `p`.

    Each `i <= m` is sent to the first symbol `<= m` met when iterating
    `p` from `i`.

    Parameters
    ----------
    p : Permutation
        A permutation of degree `n`.
    m : int
        The target degree, `1 <= m <= n`.

    Returns
    -------
    q : Permutation
        A permutation of degree `m`.
    """
    n = p.degree
    if m < 1 or m > n:
        raise ValueError("Projection degree m = {:d} out of range 1..{:d}.".format(m, n))
    images = []
    for i in range(1, m + 1):
        j = p(i)
        while j > m:
            j = p(j)
        images.append(j)
    return Permutation(tuple(images))

def project_step(p):
    r"""The map form of the projection S_n -> S_{n-1}.

    If `p(n) = n` the symbol is dropped. Otherwise the preimage of `n`
    is rerouted to `p(n)` and everything else is kept.
    """
    n = p.degree
    if n < 1:
        raise ValueError("Cannot project the empty permutation.")
    images = list(p.images[:-1])
    if p(n) != n:
        images[p.inverse()(n) - 1] = p(n)
    return Permutation(tuple(images))

def rising(z, n):
    r"""Rising factorial `z (z + 1) ... (z + n - 1)` as an exact rational."""
    z = Fraction(z)
    r = Fraction(1)
    for i in range(n):
        r *= z + i
    return r

def ewens_mass(p, z):
    r"""Ewens mass `z^[p] / (z (z + 1) ... (z + n - 1))` of `p`.

    Parameters
    ----------
    p : Permutation
    z : Fraction, int or str
        The positive parameter, read exactly (e.g. `Fraction(7, 3)` or '7/3').

    Returns
    -------
    mass : Fraction
    """
    z = Fraction(z)
    if z <= 0:
        raise ValueError("Ewens parameter must be positive, got {:s}.".format(str(z)))
    return z ** p.count_cycles() / rising(z, p.degree)

def _check_degrees(*perms):
    degrees = set(q.degree for q in perms)
    if len(degrees) != 1:
        raise ValueError("Degree mismatch: {:s}.".format(str(sorted(degrees))))
    return degrees.pop()

def act_finite(h1, h2, u):
    r"""The finite-level action `(h1, h2): u -> h1^{-1} u h2`."""
    _check_degrees(h1, h2, u)
    return h1.inverse() * u * h2

def rn_exponent_finite(h1, h2, u):
    r"""Exponent `[h1^{-1} u h2] - [u]` of the finite Radon-Nikodym derivative.

    `P(h1^{-1} u h2) = z^e P(u)` under the Ewens measure with `e` the returned value.
    """
    return act_finite(h1, h2, u).count_cycles() - u.count_cycles()

def all_permutations(n, unsafe=False):
    r"""Iterate over S_n in lexicographic order of images, under the brute-force guard."""
    gd.check_guard('brute_force', n, unsafe=unsafe)
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images)

def random_permutation(n, rng=None):
    r"""A uniform random element of S_n."""
    rng = make_rng(rng)
    return Permutation(tuple(int(v) + 1 for v in rng.permutation(n)))

def pushforward_check(n, z, measure=None, equivariance=None, unsafe=False):
    r"""Exact check that the projection S_n -> S_{n-1} pushes the Ewens measure of degree n forward to degree n - 1.

    Parameters
    ----------
    n : int
        The degree, `n >= 2`.
    z : Fraction, int or str
        The Ewens parameter.
    measure : callable, optional
        Replacement for `ewens_mass(., z)` on S_n, used as a negative
        control. Default `ewens_mass` when optional.
    equivariance : bool, optional
        Also check `project(h1 g h2) = h1 project(g) h2` for all
        `g in S_n` and `h1, h2 in S_{n-1}`. Default `n <= 5` when optional.
    unsafe : bool, optional
        Lift the brute-force guard. Default `False` when optional.

    Returns
    -------
    passed : bool
    report : dict
        Keys `n`, `z`, `offending` (images of every `h` whose fibre mass
        is wrong), `equivariance` (bool or None), `checked`.
    """
    if n < 2:
        raise ValueError("Pushforward check needs n >= 2, got {:d}.".format(n))
    gd.check_guard('brute_force', n, unsafe=unsafe)
    z = Fraction(z)
    measure = (lambda g: ewens_mass(g, z)) if measure is None else measure
    fibres = {}
    for g in all_permutations(n, unsafe=True):
        h = project(g, n - 1)
        fibres[h] = fibres.get(h, Fraction(0)) + Fraction(measure(g))
    offending = [h.to_json() for h in all_permutations(n - 1, unsafe=True) \
            if fibres.get(h, Fraction(0)) != ewens_mass(h, z)]
    equivariance = (n <= 5) if equivariance is None else equivariance
    equi = None
    if equivariance:
        equi = True
        small = list(all_permutations(n - 1, unsafe=True))
        for g in all_permutations(n, unsafe=True):
            pg = project(g, n - 1)
            for h1 in small:
                for h2 in small:
                    if project(h1.extend(n) * g * h2.extend(n), n - 1) != h1 * pg * h2:
                        equi = False
                        break
                if not equi:
                    break
            if not equi:
                break
    passed = (len(offending) == 0) and (equi is not False)
    logger.info("pushforward n=%d z=%s: %d offending, equivariance %s", n, z, len(offending), equi)
    return passed, {'n': n, 'z': {'num': z.numerator, 'den': z.denominator}, \
            'offending': offending, 'equivariance': equi, 'checked': len(fibres)}

def sample_ewens(n, z, seed=None):
    r"""Sample from the Ewens measure by seating guests one by one.

    Guest `i + 1` opens a new cycle with probability `z / (z + i)`,
    otherwise it sits clockwise right after a uniformly chosen earlier
    guest.

    Parameters
    ----------
    n : int
        The degree.
    z : float or Fraction
        The Ewens parameter.
    seed : int or numpy.random.Generator, optional
        Default fresh entropy when optional.

    Returns
    -------
    p : Permutation
    """
    rng = make_rng(seed)
    z = float(z)
    images = []
    for i in range(n):
        if rng.random() < z / (z + i):
            images.append(i + 1)
        else:
            j = int(rng.integers(i))
            images.append(images[j])
            images[j] = i + 1
    return Permutation(tuple(images))

def cycle_count_distribution(n, z):
    r"""Exact law of the cycle count `[g]` under the Ewens measure.

    Returns
    -------
    law : dict
        `c -> |s(n, c)| z^c / (z)_n` with `|s(n, c)|` the unsigned
        Stirling numbers of the first kind.
    """
    z = Fraction(z)
    row = [1]
    for m in range(n):
        nxt = [0] * (len(row) + 1)
        for c, v in enumerate(row):
            nxt[c] += m * v
            nxt[c + 1] += v
        row = nxt
    total = rising(z, n)
    return {c: Fraction(v) * z ** c / total for c, v in enumerate(row) if v != 0}

def expected_cycles(n, z):
    r"""Mean number of cycles under the Ewens measure, `sum_{i < n} z / (z + i)`."""
    z = Fraction(z)
    return sum((z / (z + i) for i in range(n)), Fraction(0))
