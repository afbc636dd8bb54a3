"""dirichlet.py -- Dirichlet distributions on scaled simplices

    This module provides the Dirichlet laws with integer parameters k on the
    simplex {x >= 0, x_1 + ... + x_p = ell}, with density proportional
    to prod x_i^(k_i - 1), and their convolutions. A coordinate with
    k_i = 0 is identically zero, and a law with a single positive k_i
    is the atom at `ell` in that coordinate.

    Laplace transforms E exp(-<u, x>) are available in closed form for
    integer k, as a divided difference of t -> exp(-ell t) at the nodes
    u_i repeated k_i times,

        L(u) = Gamma(K) ell^(1 - K) (-1)^(K - 1) f[u_1^(k_1), ..., u_p^(k_p)],

    with K = sum(k). Well separated nodes use a residue sum, clustered
    nodes the Opitz formula (the corner entry of exp(-ell J) for the
    bidiagonal matrix J of the nodes). The contour integral along a
    vertical line is kept as an independent check.

    Copyright (C) 2026
    crpchips developers

.. moduleauthor:: crpchips developers

"""

import math
import logging
import warnings
from dataclasses import dataclass

import numpy as np
from scipy import integrate, linalg
from scipy.special import gammaln

from crpchips.utils import io
from crpchips.utils import stats as st
from crpchips.utils.sampling import make_rng, uniform_simplex

__all__ = ["tolerances", "DirichletSpec", "ConvolutionSpec", "density", "atoms", "mean", \
        "sample", "laplace", "laplace_mc", "aggregate_check"]

logger = logging.getLogger(__name__)

# `cluster`: relative gap under which nodes are merged into one node of
# higher multiplicity; `opitz`: relative gap under which the residue sum
# is replaced by the matrix exponential; `contour`: quadrature tolerance.
tolerances = {'cluster': 1e-9, 'opitz': 1e-3, 'contour': 1e-11}

@dataclass(frozen=True)
class DirichletSpec:
    r"""The Dirichlet law with parameters `k` scaled to total `ell`.

    Parameters
    ----------
    k : tuple of int
        Nonnegative exponents, at least one positive.
    ell : float
        The positive simplex scale.
    """
    k: tuple
    ell: float

    def __post_init__(self):
        k = tuple(int(v) if float(v).is_integer() else float(v) for v in self.k)
        object.__setattr__(self, 'k', k)
        object.__setattr__(self, 'ell', float(self.ell))
        if any(v < 0 for v in k) or not any(v > 0 for v in k):
            raise ValueError("Exponents must be nonnegative with one positive, got {:s}." \
                    .format(str(list(k))))
        if self.ell <= 0:
            raise ValueError("Simplex scale must be positive, got {:g}.".format(self.ell))

    @property
    def dim(self):
        return len(self.k)

    @property
    def support(self):
        r"""Indices of the coordinates with positive exponent."""
        return tuple(i for i, v in enumerate(self.k) if v > 0)

    def to_json(self):
        return {'k': list(self.k), 'ell': io.fmt_real(self.ell)}

    @classmethod
    def from_json(cls, obj):
        return cls(tuple(obj['k']), io.parse_real(obj['ell']))

@dataclass(frozen=True)
class ConvolutionSpec:
    r"""The convolution of Dirichlet laws of a common dimension."""
    components: tuple

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise ValueError("A convolution needs at least one component.")
        if len(set(c.dim for c in comps)) != 1:
            raise ValueError("Convolved laws must share their dimension.")
        object.__setattr__(self, 'components', comps)

    @property
    def dim(self):
        return self.components[0].dim

    @property
    def ell(self):
        return math.fsum(c.ell for c in self.components)

    def to_json(self):
        return {'convolution': [c.to_json() for c in self.components]}

    @classmethod
    def from_json(cls, obj):
        if 'convolution' not in obj:
            return cls((DirichletSpec.from_json(obj),))
        return cls(tuple(DirichletSpec.from_json(c) for c in obj['convolution']))

def _parts(spec):
    return spec.components if isinstance(spec, ConvolutionSpec) else (spec,)

def density(spec, x):
    r"""Density of the absolutely continuous part of the law `spec` at `x`.

    The density is taken with respect to Lebesgue measure on the face
    spanned by the coordinates with positive exponent (all but the last
    of them as free variables). It is 0 off that face and 0 for a pure
    atom; see `atoms()`.

    Parameters
    ----------
    spec : DirichletSpec
    x : array_like
        A point of dimension `spec.dim`.

    Returns
    -------
    f : float
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (spec.dim,):
        raise ValueError("Point of dimension {:d} for a law of dimension {:d}." \
                .format(x.size, spec.dim))
    supp = spec.support
    if len(supp) == 1:
        return 0.0
    off = [i for i in range(spec.dim) if i not in supp]
    if np.any(x[off] != 0) or np.any(x[list(supp)] <= 0) \
            or abs(x.sum() - spec.ell) > 1e-12 * max(1.0, spec.ell):
        return 0.0
    k = np.array([spec.k[i] for i in supp], dtype=float)
    K = k.sum()
    logf = gammaln(K) - gammaln(k).sum() + (1.0 - K) * math.log(spec.ell) \
            + np.sum((k - 1.0) * np.log(x[list(supp)]))
    return float(math.exp(logf))

def atoms(spec):
    r"""The atomic part as a list of `(point, mass)`; empty for a continuous law.

    A convolution is atomic only when every component is, the atom then
    sits at the sum of the component atoms.
    """
    parts = _parts(spec)
    point = np.zeros(parts[0].dim)
    for c in parts:
        if len(c.support) != 1:
            return []
        point[c.support[0]] += c.ell
    return [(point, 1.0)]

def mean(spec):
    r"""First moments `ell k_i / K`, summed over convolution components."""
    out = np.zeros(_parts(spec)[0].dim)
    for c in _parts(spec):
        k = np.array(c.k, dtype=float)
        out += c.ell * k / k.sum()
    return out

def sample(spec, size=1, seed=None):
    r"""Draws from a Dirichlet law or a convolution of them.

    Gamma variates with shapes `k_i` are renormalized to sum to `ell`;
    zero exponents give exact zeros and a convolution draw is the sum of
    independent component draws.

    Parameters
    ----------
    spec : DirichletSpec or ConvolutionSpec
    size : int, optional
        Number of draws. Default 1 when optional.
    seed : int or numpy.random.Generator, optional

    Returns
    -------
    X : ndarray
        Shape `(size, dim)`.
    """
    rng = make_rng(seed)
    out = np.zeros((size, _parts(spec)[0].dim))
    for c in _parts(spec):
        supp = list(c.support)
        if len(supp) == 1:
            out[:, supp[0]] += c.ell
            continue
        G = rng.standard_gamma(np.array([c.k[i] for i in supp], dtype=float), size=(size, len(supp)))
        out[:, supp] += c.ell * G / G.sum(axis=1, keepdims=True)
    return out

def _merge_nodes(nodes, mult, tol):
    r"""Merge nodes closer than `tol` (relative) into one, adding multiplicities."""
    merged = []
    for z, m in zip(nodes, mult):
        for rec in merged:
            if abs(rec[0] - z) <= tol * max(1.0, abs(z), abs(rec[0])):
                rec[1] += m
                break
        else:
            merged.append([z, m])
    return [complex(z) for z, _ in merged], [m for _, m in merged]

def _min_gap(nodes):
    gap = np.inf
    for i in range(len(nodes)):
        for j in range(i + 1, len(nodes)):
            gap = min(gap, abs(nodes[i] - nodes[j]) / max(1.0, abs(nodes[i]), abs(nodes[j])))
    return gap

def _divdiff_residues(nodes, mult, a):
    r"""f[nodes with multiplicities] for f(t) = exp(-a t), distinct nodes.

    Sum over nodes z_j of the Taylor coefficient of order m_j - 1 of
    f(t) h_j(t) at z_j, where h_j = prod_{i != j} (t - z_i)^(-m_i).
    Derivatives of h_j follow from h' = h s with
    s(t) = -sum_i m_i / (t - z_i).
    """
    total = 0j
    for j, (zj, mj) in enumerate(zip(nodes, mult)):
        others = [(z, m) for i, (z, m) in enumerate(zip(nodes, mult)) if i != j]
        h = [complex(np.prod([(zj - z) ** (-m) for z, m in others])) if others else 1 + 0j]
        # derivatives of s at zj: s^(p) = -sum m (-1)^p p! / (zj - z)^(p+1)
        s = [-sum(m * (-1) ** p * math.factorial(p) / (zj - z) ** (p + 1) for z, m in others) \
                for p in range(mj)]
        for r in range(mj - 1):
            h.append(sum(math.comb(r, q) * h[q] * s[r - q] for q in range(r + 1)))
        # coefficient of order mj - 1 of f h
        coef = 0j
        for r in range(mj):
            fr = (-a) ** (mj - 1 - r) * np.exp(-a * zj)
            coef += fr / math.factorial(mj - 1 - r) * h[r] / math.factorial(r)
        total += coef
    return total

def _divdiff_opitz(nodes, mult, a):
    r"""f[...] as the corner entry of exp(-a J), J bidiagonal with the nodes on the diagonal."""
    diag = [z for z, m in zip(nodes, mult) for _ in range(m)]
    size = len(diag)
    J = np.diag(np.array(diag, dtype=complex)) + np.diag(np.ones(size - 1, dtype=complex), 1)
    return complex(linalg.expm(-a * J)[0, size - 1])

def _laplace_closed(c, u, tol):
    supp = c.support
    if any(not float(c.k[i]).is_integer() for i in supp):
        raise NotImplementedError("Closed-form Laplace transform needs integer exponents, got {:s}." \
                .format(str(list(c.k))))
    nodes, mult = _merge_nodes([u[i] for i in supp], [int(c.k[i]) for i in supp], tol['cluster'])
    K = sum(mult)
    a = c.ell
    if len(nodes) == 1:
        return complex(np.exp(-a * nodes[0]))
    if _min_gap(nodes) < tol['opitz']:
        logger.debug("clustered nodes, using the matrix exponential")
        dd = _divdiff_opitz(nodes, mult, a)
    else:
        dd = _divdiff_residues(nodes, mult, a)
    logc = gammaln(K) + (1 - K) * math.log(a)
    return complex(math.exp(logc) * (-1) ** (K - 1) * dd)

def _laplace_contour(c, u, tol, shift=1.0):
    r"""The vertical-line integral Gamma(K) a^(1-K) / (2 pi i) int e^(a z) prod (z + u_j)^(-k_j) dz.

    Along Re z = `shift` the integral is folded onto y > 0 and computed
    with Fourier-weighted quadrature (QUADPACK QAWF), real and imaginary
    parts separately.
    """
    supp = c.support
    k = np.array([c.k[i] for i in supp], dtype=float)
    uu = np.array([u[i] for i in supp], dtype=complex)
    a = c.ell
    K = k.sum()

    def F(y):
        return np.prod((shift + 1j * y + uu) ** (-k))

    def P(y):
        return F(y) + F(-y)

    def Q(y):
        return F(y) - F(-y)

    kw = dict(weight='cos', wvar=a, epsabs=tol['contour'], limlst=200)
    pr = integrate.quad(lambda y: P(y).real, 0, np.inf, **kw)[0]
    pi = integrate.quad(lambda y: P(y).imag, 0, np.inf, **kw)[0]
    kw['weight'] = 'sin'
    qr = integrate.quad(lambda y: Q(y).real, 0, np.inf, **kw)[0]
    qi = integrate.quad(lambda y: Q(y).imag, 0, np.inf, **kw)[0]
    # e^{iay} = cos + i sin pairs P with cos and Q with sin
    val = (pr + 1j * pi) + 1j * (qr + 1j * qi)
    logc = gammaln(K) + (1.0 - K) * math.log(a) + a * shift
    return complex(math.exp(logc) * val / (2.0 * math.pi))

def laplace(spec, u, mode='closed-form', tol=None):
    r"""The Laplace transform E exp(-<u, x>).

    Parameters
    ----------
    spec : DirichletSpec or ConvolutionSpec
        A convolution transforms to the product of its components.
    u : array_like of complex
        With nonnegative real parts.
    mode : str, optional
        `'closed-form'` or `'contour'`. Default `'closed-form'` when optional.
    tol : dict, optional
        Overrides for `tolerances`. Default `tolerances` when optional.

    Returns
    -------
    L : complex
    """
    tol = dict(tolerances, **(tol or {}))
    u = np.asarray(u, dtype=complex)
    if u.shape != (_parts(spec)[0].dim,):
        raise ValueError("Argument of dimension {:d} for a law of dimension {:d}." \
                .format(u.size, _parts(spec)[0].dim))
    if np.any(u.real < 0):
        raise ValueError("Laplace arguments need nonnegative real parts.")
    if mode == 'closed-form':
        fn = _laplace_closed
    elif mode == 'contour':
        fn = _laplace_contour
    else:
        raise KeyError("Invalid 'mode', use any of {:s}".format(str(['closed-form', 'contour'])))
    out = 1 + 0j
    for c in _parts(spec):
        out *= fn(c, u, tol)
    return out

def laplace_mc(spec, u, draws=100000, seed=None):
    r"""Monte Carlo estimate of the Laplace transform with its standard error.

    Returns
    -------
    estimate : complex
    se : float
        Standard error of the real part (the imaginary part has the same
        order).
    """
    X = sample(spec, draws, seed)
    vals = np.exp(-X @ np.asarray(u, dtype=complex))
    m, se = st.mean_se(vals.real)
    mi, sei = st.mean_se(vals.imag)
    return complex(m, mi), float(max(se, sei))

def aggregate_check(n, grouping, ell=1.0, draws=100000, seed=None, alpha=0.01):
    r"""Two-sample check of the aggregation property.

    Uniform points of the `n`-dimensional simplex (spacings of `n`
    uniform guests on a circle of length `ell`) are summed over
    consecutive blocks of sizes `grouping` and compared marginal by
    marginal with direct draws of the law with parameters `grouping`.

    Parameters
    ----------
    n : int
    grouping : sequence of int
        A composition of `n`.
    ell : float, optional
        Default 1.0 when optional.
    draws : int, optional
        Draws on each side. Default 100000 when optional.
    seed : int, optional
    alpha : float, optional
        Default 0.01 when optional.

    Returns
    -------
    report : dict
        `marginals` (one KS report per block) and `passed`.
    """
    grouping = [int(k) for k in grouping]
    if any(k < 1 for k in grouping) or sum(grouping) != n:
        raise ValueError("{:s} is not a composition of {:d}.".format(str(grouping), n))
    rng = make_rng(seed)
    Y = uniform_simplex(draws, n, ell, rng)
    edges = np.cumsum([0] + grouping)
    X = np.stack([Y[:, edges[i]:edges[i + 1]].sum(axis=1) for i in range(len(grouping))], axis=1)
    Z = sample(DirichletSpec(tuple(grouping), ell), draws, rng)
    marginals = [st.ks_two_sample(X[:, i], Z[:, i], alpha) for i in range(len(grouping))]
    if draws < 1000:
        warnings.warn("Only {:d} draws, KS critical values are rough.".format(draws))
    return {'n': n, 'grouping': grouping, 'ell': ell, 'draws': draws, \
            'marginals': marginals, 'passed': all(m['passed'] for m in marginals)}
