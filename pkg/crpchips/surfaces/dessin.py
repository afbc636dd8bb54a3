"""dessin.py -- DOT export of the dessin of a checker surface

    Removing the edges of colors a and b from a checker surface leaves
    a bipartite graph on the bc- and ca-vertices whose edges are the
    c-sides: white triangle k joins the bc-vertex and the ca-vertex it
    touches. This module writes that graph in the DOT language.

    Copyright (C) 2026
    crpchips developers

.. moduleauthor:: crpchips developers

"""

from crpchips.surfaces.checker import vertices

__all__ = ["dessin_graph", "to_dessin_dot"]

def dessin_graph(s):
    r"""Nodes and edges of the dessin of `s`.

    Returns
    -------
    nodes : list of (str, tuple)
        `('bc', cycle)` (black nodes) then `('ca', cycle)` (white nodes).
    edges : list of (int, int, int)
        `(k, bc index, ca index)` for each c-side `k`.
    """
    vx = vertices(s)
    bc = {k: i for i, c in enumerate(vx['bc']) for k in c}
    ca = {k: i for i, c in enumerate(vx['ca']) for k in c}
    nodes = [('bc', c) for c in vx['bc']] + [('ca', c) for c in vx['ca']]
    edges = [(k, bc[k], ca[k]) for k in sorted(bc)]
    return nodes, edges

def to_dessin_dot(s, name='dessin'):
    r"""The dessin of `s` as DOT text; the output depends only on `s`."""
    nodes, edges = dessin_graph(s)
    lines = ["graph {:s} {{".format(name)]
    counts = {'bc': 0, 'ca': 0}
    ids = []
    for kind, cyc in nodes:
        nid = "{:s}{:d}".format(kind, counts[kind])
        counts[kind] += 1
        ids.append(nid)
        style = 'filled' if kind == 'bc' else 'solid'
        lines.append("  {:s} [label=\"{:s}\", style={:s}];".format(nid, \
                " ".join(str(k) for k in cyc), style))
    nbc = counts['bc']
    for k, b, c in edges:
        lines.append("  {:s} -- {:s} [label=\"{:d}\"];".format(ids[b], ids[nbc + c], k))
    lines.append("}")
    return "\n".join(lines) + "\n"
