"""Command line front end.

Verbs: pieri, identity, construct, classify, verify, quad, fock, report.
JSON in, JSON (or CSV for the fock table) out; exit code 0 on success and
2 on malformed input.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import fock_coeffs, inverse_spectral, orbit_topology, sphere_measure
from .coadjoint import param_from_json, param_to_json
from .matrixcore import arrowhead, rank_one_update, spectrum_skew
from .orbit_topology import DescriptorError, SequenceDescriptor
from .weights import pieri_down, pieri_up


class InputError(ValueError):
    pass


def _parse_weight(text):
    try:
        return tuple(int(v) for v in text.split(','))
    except ValueError:
        raise InputError('expected comma-separated integers, got %r' % text)


def _parse_complex_vector(text):
    out = []
    for token in text.split(','):
        token = token.strip().replace('i', 'j')
        try:
            out.append(complex(token))
        except ValueError:
            raise InputError('expected a+bi scalars, got %r' % token)
    return np.array(out, dtype=complex)


def _parse_reals(text):
    try:
        return [float(v) for v in text.split(',')]
    except ValueError:
        raise InputError('expected comma-separated reals, got %r' % text)


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError('cannot read JSON file %s: %s' % (path, exc))


def _emit(payload):
    print(json.dumps(payload, sort_keys=True))


def _cmd_pieri(args):
    lam = _parse_weight(args.lam)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise InputError('weight must be nonincreasing, got %r' % (lam,))
    fn = pieri_up if args.direction == 'up' else pieri_down
    result = sorted(fn(lam, args.m), reverse=True)
    _emit({'result': [list(t) for t in result]})


def _cmd_identity(args):
    X = _parse_reals(args.x)
    Y = _parse_reals(args.y) if args.y else []
    try:
        lhs, rhs = inverse_spectral.sum_identity_sides(X, Y, args.k)
    except ValueError as exc:
        raise InputError(str(exc))
    _emit({'lhs': lhs, 'rhs': rhs, 'gap': abs(lhs - rhs)})


def _cmd_construct(args):
    if args.shape == 'arrowhead':
        mu = _parse_weight(args.mu) if args.mu else ()
        lam = _parse_weight(args.lam)
        try:
            sol = inverse_spectral.build_arrowhead(mu, lam)
        except ValueError as exc:
            raise InputError(str(exc))
        spec = spectrum_skew(arrowhead(mu, np.array(sol.zmods), sol.x))
        residual = float(np.max(np.abs(spec - np.array(lam, dtype=float))))
        _emit({'zmods': list(sol.zmods), 'x': sol.x, 'residual': residual})
        return
    lam = _parse_weight(args.lam)
    beta = _parse_weight(args.beta)
    sign = 1 if args.sign == '+' else -1
    try:
        sol = inverse_spectral.build_rank_one(lam, beta, sign)
    except ValueError as exc:
        raise InputError(str(exc))
    spec = spectrum_skew(rank_one_update(lam, np.array(sol.zmods),
                                         float(sign)))
    residual = float(np.max(np.abs(spec - np.array(beta, dtype=float))))
    _emit({'zmods': list(sol.zmods), 'sign': sol.sign, 'residual': residual})


def _descriptor(path):
    try:
        return SequenceDescriptor.from_json(_load_json(path))
    except DescriptorError as exc:
        raise InputError(str(exc))


def _cmd_classify(args):
    seq = _descriptor(args.seq)
    try:
        limits = orbit_topology.enumerate_limit_orbits(seq, args.bound)
    except (DescriptorError, ValueError) as exc:
        raise InputError(str(exc))
    _emit({'limits': [param_to_json(t) for t in limits]})


def _cmd_verify(args):
    seq = _descriptor(args.seq)
    try:
        target = param_from_json(_load_json(args.target))
    except ValueError as exc:
        raise InputError(str(exc))
    report = orbit_topology.verify_convergence(seq, target, args.tol)
    out = {
        'target': param_to_json(target),
        'is_limit': orbit_topology.is_limit_orbit(seq, target),
        'rep_side': orbit_topology.rep_side_limit(seq, target),
        'converged': report.converged,
        'final_distance': report.distances[-1] if report.distances else None,
    }
    if report.diagnostic:
        out['diagnostic'] = report.diagnostic
    _emit(out)


def _cmd_quad(args):
    z = _parse_complex_vector(args.z)
    series = fock_coeffs.bessel_sphere_target(args.r, z)
    quad = sphere_measure.sphere_integral(
        lambda v: np.exp(-1j * np.real(np.sum(v * np.conj(z) * args.r,
                                              axis=-1))),
        args.n, grid=args.grid)
    out = {'series': series, 'quadrature': float(np.real(quad))}
    if args.mc:
        mean, err = sphere_measure.haar_unitary_integral(
            args.r, z, args.mc, seed=args.seed)
        out['montecarlo'] = [mean.real, mean.imag]
        out['stderr'] = err
    _emit(out)


def _cmd_fock(args):
    z = _parse_complex_vector(args.z)
    rows = ['N,gap']
    for N in (int(v) for v in args.N.split(',')):
        rows.append('%d,%.12g' % (N, fock_coeffs.limit_gap(args.r, z, N)))
    print('\n'.join(rows))


def _cmd_report(args):
    from . import report
    if args.what == 'convergence':
        seq = _descriptor(args.seq)
        try:
            target = param_from_json(_load_json(args.target))
        except ValueError as exc:
            raise InputError(str(exc))
        files = report.convergence_report(seq, target, args.tol, args.out)
    else:
        z = _parse_complex_vector(args.z)
        Ns = [int(v) for v in args.N.split(',')]
        files = report.limit_gap_report(args.r, z, Ns, args.out)
    _emit({'written': files})


def _build_parser():
    parser = argparse.ArgumentParser(
        prog='orbitc',
        description='coadjoint-orbit calculus for U(n) x H_n')
    parser.add_argument('--seed', type=int, default=0,
                        help='seed for randomized subcommands')
    sub = parser.add_subparsers(dest='verb', required=True)

    p = sub.add_parser('pieri', help='Pieri expansion of a dominant weight')
    p.add_argument('--lambda', dest='lam', required=True)
    p.add_argument('--m', type=int, required=True)
    p.add_argument('--direction', choices=['up', 'down'], default='up')
    p.set_defaults(fn=_cmd_pieri)

    p = sub.add_parser('identity', help='both sides of the sum identity')
    p.add_argument('--x', required=True)
    p.add_argument('--y', default='')
    p.add_argument('--k', type=int, required=True)
    p.set_defaults(fn=_cmd_identity)

    p = sub.add_parser('construct', help='inverse spectral constructions')
    p.add_argument('shape', choices=['arrowhead', 'rank-one'])
    p.add_argument('--mu', default='')
    p.add_argument('--lambda', dest='lam', required=True)
    p.add_argument('--beta', default='')
    p.add_argument('--sign', choices=['+', '-'], default='+')
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser('classify', help='enumerate limit orbits of a sequence')
    p.add_argument('--seq', required=True)
    p.add_argument('--bound', type=int, required=True)
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser('verify', help='verify convergence toward a target')
    p.add_argument('--seq', required=True)
    p.add_argument('--target', required=True)
    p.add_argument('--tol', type=float, default=1e-3)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser('quad', help='sphere integral of the Bessel integrand')
    p.add_argument('what', choices=['sphere'])
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--r', type=float, required=True)
    p.add_argument('--z', required=True)
    p.add_argument('--grid', type=int, default=128)
    p.add_argument('--mc', type=int, default=0)
    p.add_argument('--seed', type=int, default=0)
    p.set_defaults(fn=_cmd_quad)

    p = sub.add_parser('fock', help='limit gap table (CSV)')
    p.add_argument('what', choices=['limit-gap'])
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--r', type=float, required=True)
    p.add_argument('--z', required=True)
    p.add_argument('--N', required=True)
    p.set_defaults(fn=_cmd_fock)

    p = sub.add_parser('report', help='CSV plus rendered figures')
    p.add_argument('what', choices=['convergence', 'limit-gap'])
    p.add_argument('--seq')
    p.add_argument('--target')
    p.add_argument('--tol', type=float, default=1e-3)
    p.add_argument('--r', type=float, default=1.0)
    p.add_argument('--z', default='1')
    p.add_argument('--N', default='50,100,200')
    p.add_argument('--out', required=True)
    p.set_defaults(fn=_cmd_report)
    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        args.fn(args)
    except InputError as exc:
        print(json.dumps({'error': str(exc)}))
        return 2
    return 0


if __name__ == '__main__':
    sys.exit(main())
