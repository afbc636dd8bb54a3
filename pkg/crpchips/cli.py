"""cli.py -- The `crpchips` command line

    Every subcommand is a function of its flags, its input files and
    `--seed`. Output goes to `--out` or to stdout as JSON (validated
    against the shipped schemas), JSON lines for enumerations and DOT
    for dessins.

    Exit codes: 0 success, 1 failed verification, 2 usage or argument
    error, 3 guard refusal.

    Copyright (C) 2026
    crpchips developers

.. moduleauthor:: crpchips developers

"""

import sys
import json
import logging
import argparse

import numpy as np

from crpchips import verify as vf
from crpchips.algebra import perm as pm
from crpchips.algebra import chips as cp
from crpchips.restaurant import tables as tb
from crpchips.surfaces import checker as ck
from crpchips.surfaces.dessin import to_dessin_dot
from crpchips.surfaces.framed import ChipData
from crpchips.measures import dirichlet as dr
from crpchips.engines import cycles as cy
from crpchips.engines.chip import act_chip
from crpchips.engines.center import act_center_sample
from crpchips.engines.simulate import simulate
from crpchips.utils import io
from crpchips.utils.guards import GuardError
from crpchips.utils.sampling import make_rng, default_threads
from crpchips.version import __version__

__all__ = ["build_parser", "execute", "main"]

logger = logging.getLogger(__name__)

def _ints(text):
    text = text.strip()
    if text.startswith('['):
        return [int(v) for v in json.loads(text)]
    return [int(v) for v in text.split(',') if v.strip()]

def _perm(text):
    text = text.strip()
    if text.startswith('{'):
        return pm.Permutation.from_json(json.loads(text))
    return pm.Permutation(tuple(_ints(text)))

def _reals(text):
    text = text.strip()
    if text.startswith('['):
        return [complex(v) for v in json.loads(text)]
    return [complex(v.replace(' ', '')) for v in text.split(',') if v.strip()]

def _emit(args, text):
    if args.out:
        with open(args.out, 'w') as fp:
            fp.write(text)
    else:
        sys.stdout.write(text)

def _emit_json(args, obj, schema=None):
    _emit(args, io.dumps(obj, schema) + '\n')

def _load_restaurant(fname):
    obj = io.loadjson(fname)
    if 'guests' in obj:
        return tb.OccupiedRestaurant.from_json(io.validate(obj, 'occupied'))
    return tb.Restaurant.from_json(io.validate(obj, 'restaurant'))

def _load_occupied(fname):
    r = _load_restaurant(fname)
    return r if isinstance(r, tb.OccupiedRestaurant) else tb.OccupiedRestaurant(r)

def cmd_sample(args):
    rng = make_rng(args.seed)
    r = tb.sample_tables(args.z, method=args.method, max_tables=args.tables, \
            min_tail=args.min_tail, seed=rng)
    if args.guests:
        occ = tb.place_guests(r, args.guests, seed=rng)
        _emit_json(args, occ.to_json(), 'occupied')
    else:
        _emit_json(args, r.to_json(), 'restaurant')
    return 0

def cmd_place(args):
    occ = tb.place_guests(_load_restaurant(args.restaurant), args.count, seed=args.seed)
    _emit_json(args, occ.to_json(), 'occupied')
    return 0

def cmd_project(args):
    p = tb.project_finite(_load_occupied(args.restaurant), args.n)
    _emit_json(args, {'permutation': p.to_json(), 'cycles': [list(c) for c in p.cycles()]}, \
            'projection')
    return 0

def cmd_act(args):
    occ = _load_occupied(args.restaurant)
    out, exp, removed, added = tb.act(occ, _perm(args.left), _perm(args.right), details=True)
    _emit_json(args, {'rn_exp': exp, 'removed': removed, 'added': added, \
            'occupied': out.to_json()}, 'action')
    return 0

def cmd_chip_mul(args):
    f = cp.Chip.from_json(io.loadjson(args.f, 'chip'))
    g = cp.Chip.from_json(io.loadjson(args.g, 'chip'))
    _emit_json(args, cp.multiply(f, g).to_json(), 'chip')
    return 0

def cmd_chip_from_pair(args):
    c = cp.chip_from_pair(_perm(args.g1), _perm(args.g2), args.dst, args.src)
    _emit_json(args, c.to_json(), 'chip')
    return 0

def cmd_enum_gamma(args):
    classes = ck.enumerate_gamma(_ints(args.k), unsafe=args.unsafe_guard)
    if args.out:
        with open(args.out, 'w') as fp:
            io.dump_jsonl(fp, [c.to_json() for c in classes], 'gamma')
    else:
        io.dump_jsonl(sys.stdout, [c.to_json() for c in classes], 'gamma')
    return 0

def cmd_dessin(args):
    if args.surface:
        s = ck.CheckerSurface.from_json(io.loadjson(args.surface, 'surface'))
    else:
        s = ck.from_triple(*[_perm(t) for t in args.triple])
    _emit(args, to_dessin_dot(s))
    return 0

def cmd_laplace(args):
    if args.spec:
        spec = dr.ConvolutionSpec.from_json(io.loadjson(args.spec, 'dirichlet'))
    else:
        spec = dr.DirichletSpec(tuple(_ints(args.k)), args.ell)
    val = dr.laplace(spec, np.array(_reals(args.u), dtype=complex), mode=args.mode)
    _emit_json(args, {'spec': spec.to_json(), 'mode': args.mode, \
            'value': [io.fmt_real(val.real), io.fmt_real(val.imag)]})
    return 0

def cmd_act_cycles(args):
    r = _load_restaurant(args.restaurant)
    k = _ints(args.k)
    if args.engine == 'labeled':
        m = cy.act_cycles(k, r, unsafe=args.unsafe_guard, max_tables=args.max_tables)
    else:
        m = cy.act_cycles_literal(k, r, args.divisor, args.prefactor, \
                unsafe=args.unsafe_guard, max_tables=args.max_tables)
    _emit_json(args, m.to_json(), 'mixture')
    return 0

def _chip_data(args):
    sigma = _perm(args.sigma)
    phi = tuple(_ints(args.phi)) if args.phi else ()
    return ChipData(sigma, phi, tuple(_ints(args.k)) if args.k else ())

def cmd_act_chip(args):
    chip = _chip_data(args)
    m = act_chip(chip, _load_occupied(args.restaurant), unsafe=args.unsafe_guard, \
            max_tables=args.max_tables)
    _emit_json(args, m.to_json(), 'mixture')
    return 0

def cmd_act_center(args):
    occ = _load_occupied(args.restaurant)
    exp, out = act_center_sample(_ints(args.k), occ, seed=args.seed, unsafe=args.unsafe_guard)
    _emit_json(args, {'rn_exp': exp, 'occupied': out.to_json()}, 'action')
    return 0

def cmd_simulate(args):
    if args.sigma:
        source = _chip_data(args)
        point = _load_occupied(args.restaurant)
    else:
        source = _ints(args.k)
        point = _load_restaurant(args.restaurant)
    e = simulate(source, point, args.samples, seed=args.seed, threads=args.threads, \
            verbose=args.verbose, unsafe=args.unsafe_guard, max_tables=args.max_tables)
    if args.jsonl:
        with open(args.jsonl, 'w') as fp:
            io.dump_jsonl(fp, e.records())
    _emit_json(args, e.to_json(), 'empirical')
    return 0

def cmd_verify(args):
    if args.list or not args.suites:
        _emit(args, "\n".join(vf.suites.keys()) + "\n")
        return 0
    opts = {'seed': args.seed, 'threads': args.threads, 'samples': args.samples, \
            'k': _ints(args.k) if args.k else None, 'unsafe': args.unsafe_guard}
    if args.suites == ['all']:
        rep = vf.run_all(**opts)
    else:
        reports = [vf.run_suite(name, **opts) for name in args.suites]
        rep = {'reports': reports, 'passed': all(r['passed'] for r in reports)}
    _emit_json(args, rep, 'report')
    return 0 if rep['passed'] else 1

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--seed', type=int, default=None, help="master seed")
    common.add_argument('--out', default=None, help="output file, stdout when absent")
    common.add_argument('--threads', type=int, default=default_threads(), \
            help="worker processes (CRPCHIPS_THREADS)")
    common.add_argument('--unsafe-guard', action='store_true', \
            help="run beyond the enumeration guards")
    common.add_argument('--verbose', action='store_true')

    parser = argparse.ArgumentParser(prog='crpchips', \
            description="Virtual permutations, chips and polymorphism engines.")
    parser.add_argument('--version', action='version', version=__version__)
    sub = parser.add_subparsers(dest='cmd')
    sub.required = True

    p = sub.add_parser('sample', parents=[common], help="sample a Poisson-Dirichlet restaurant")
    p.add_argument('--z', default='1')
    p.add_argument('--tables', type=int, default=tb.truncation['max_tables'])
    p.add_argument('--min-tail', type=float, default=tb.truncation['min_tail'])
    p.add_argument('--method', choices=['poisson', 'stick-breaking'], default='poisson')
    p.add_argument('--guests', type=int, default=0)
    p.set_defaults(fn=cmd_sample)

    p = sub.add_parser('place', parents=[common], help="seat guests uniformly")
    p.add_argument('--restaurant', required=True)
    p.add_argument('--count', type=int, required=True)
    p.set_defaults(fn=cmd_place)

    p = sub.add_parser('project', parents=[common], help="permutation of the first n guests")
    p.add_argument('--restaurant', required=True)
    p.add_argument('--n', type=int, required=True)
    p.set_defaults(fn=cmd_project)

    p = sub.add_parser('act', parents=[common], help="cut-and-glue action of (left, right)")
    p.add_argument('--restaurant', required=True)
    p.add_argument('--left', required=True)
    p.add_argument('--right', required=True)
    p.set_defaults(fn=cmd_act)

    p = sub.add_parser('chip-mul', parents=[common], help="product of two chips")
    p.add_argument('--f', required=True)
    p.add_argument('--g', required=True)
    p.set_defaults(fn=cmd_chip_mul)

    p = sub.add_parser('chip-from-pair', parents=[common], help="chip of a pair (g1, g2)")
    p.add_argument('--g1', required=True)
    p.add_argument('--g2', required=True)
    p.add_argument('--dst', type=int, required=True)
    p.add_argument('--src', type=int, required=True)
    p.set_defaults(fn=cmd_chip_from_pair)

    p = sub.add_parser('enum-gamma', parents=[common], help="classes of engine surfaces")
    p.add_argument('--k', required=True)
    p.set_defaults(fn=cmd_enum_gamma)

    p = sub.add_parser('dessin', parents=[common], help="DOT dessin of a surface")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument('--surface')
    group.add_argument('--triple', nargs=3)
    p.set_defaults(fn=cmd_dessin)

    p = sub.add_parser('laplace', parents=[common], help="Laplace transform of a Dirichlet law")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument('--spec')
    group.add_argument('--k')
    p.add_argument('--ell', type=float, default=1.0)
    p.add_argument('--u', required=True)
    p.add_argument('--mode', choices=['closed-form', 'contour'], default='closed-form')
    p.set_defaults(fn=cmd_laplace)

    p = sub.add_parser('act-cycles', parents=[common], help="image under central circles")
    p.add_argument('--k', required=True)
    p.add_argument('--restaurant', required=True)
    p.add_argument('--engine', choices=['labeled', 'literal'], default='labeled')
    p.add_argument('--divisor', choices=cy.divisor_modes, default='full_aut')
    p.add_argument('--prefactor', choices=list(cy.prefactors.keys()), default='centralizer')
    p.add_argument('--max-tables', type=int, default=None)
    p.set_defaults(fn=cmd_act_cycles)

    for name, fn, help_ in (('act-chip', cmd_act_chip, "image under a trivial-left chip"), \
            ('simulate', cmd_simulate, "Monte Carlo oracle")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument('--restaurant', required=True)
        p.add_argument('--sigma', required=(name == 'act-chip'))
        p.add_argument('--phi', default=None)
        p.add_argument('--k', default=None)
        p.add_argument('--max-tables', type=int, default=None)
        if name == 'simulate':
            p.add_argument('--samples', type=int, default=100000)
            p.add_argument('--jsonl', default=None, help="also write every draw")
        p.set_defaults(fn=fn)

    p = sub.add_parser('act-center', parents=[common], help="one draw of a central action")
    p.add_argument('--k', required=True)
    p.add_argument('--restaurant', required=True)
    p.set_defaults(fn=cmd_act_center)

    p = sub.add_parser('verify', parents=[common], help="verification suites")
    p.add_argument('suites', nargs='*')
    p.add_argument('--list', action='store_true')
    p.add_argument('--samples', type=int, default=None)
    p.add_argument('--k', default=None)
    p.set_defaults(fn=cmd_verify)
    return parser

def execute(argv=None):
    r"""Run the command line `argv` and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, \
            format="%(levelname)s %(name)s: %(message)s")
    if args.cmd == 'simulate' and not args.sigma and not args.k:
        parser.print_usage(sys.stderr)
        sys.stderr.write("crpchips simulate: one of --k or --sigma is required\n")
        return 2
    try:
        return args.fn(args)
    except GuardError as e:
        sys.stderr.write("crpchips: {:s}\n".format(str(e)))
        return 3
    except (ValueError, KeyError, TypeError, OSError, NotImplementedError) as e:
        sys.stderr.write("crpchips: {:s}\n".format(str(e)))
        return 2

def main():
    sys.exit(execute())
