"""Report rendering: CSV tables with matplotlib figures alongside.

Each report writes a delimited table and a PNG rendering of the same data
into the requested output directory and returns the file paths.
"""
from __future__ import annotations

import csv
import os

import matplotlib

matplotlib.use('Agg')

import matplotlib.pyplot as plt  # noqa: E402

from . import fock_coeffs, orbit_topology  # noqa: E402

__all__ = ['convergence_report', 'limit_gap_report']


def _write_csv(path, header, rows):
    with open(path, 'w', newline='') as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


def convergence_report(seq, target, tol, outdir):
    """Distance-to-target trace over the tail of an orbit sequence.

    Writes convergence.csv (columns k, distance) and convergence.png
    (log-scale distance curve); returns the written paths.
    """
    os.makedirs(outdir, exist_ok=True)
    ks = list(range(seq.tail_start, seq.K + 1))
    rep = orbit_topology.verify_convergence(seq, target, tol, ks=ks)
    rows = list(zip(ks, ['%.12g' % d for d in rep.distances]))
    csv_path = os.path.join(outdir, 'convergence.csv')
    _write_csv(csv_path, ['k', 'distance'], rows)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.semilogy(ks, rep.distances)
    ax.set_xlabel('k')
    ax.set_ylabel('distance to target orbit')
    ax.set_title('converged: %s' % rep.converged)
    png_path = os.path.join(outdir, 'convergence.png')
    fig.savefig(png_path, dpi=120, bbox_inches='tight')
    plt.close(fig)
    return [csv_path, png_path]


def limit_gap_report(r, z, Ns, outdir):
    """Gap between the layer average and its sphere-integral target.

    Writes limit_gap.csv (columns N, gap) and limit_gap.png; returns the
    written paths.
    """
    os.makedirs(outdir, exist_ok=True)
    gaps = [fock_coeffs.limit_gap(r, z, N) for N in Ns]
    rows = [(N, '%.12g' % g) for N, g in zip(Ns, gaps)]
    csv_path = os.path.join(outdir, 'limit_gap.csv')
    _write_csv(csv_path, ['N', 'gap'], rows)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.loglog(Ns, gaps, marker='o')
    ax.set_xlabel('N')
    ax.set_ylabel('gap')
    ax.set_title('layer average vs sphere target, r=%g' % r)
    png_path = os.path.join(outdir, 'limit_gap.png')
    fig.savefig(png_path, dpi=120, bbox_inches='tight')
    plt.close(fig)
    return [csv_path, png_path]
