"""Bounded 1-D minimization used by the Bohr minimizer and the exponent fit."""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

INV_PHI = (math.sqrt(5) - 1) / 2
INV_PHI2 = (3 - math.sqrt(5)) / 2


def golden_section(f: Callable[[float], float], lo: float, hi: float, tol: float):
    """Golden-section search for a minimum of a unimodal `f` on [lo, hi].

    Returns ``(x, fx, evaluations)``. Stops once the bracket is narrower
    than `tol`.
    """
    a, b = min(lo, hi), max(lo, hi)
    h = b - a
    c = a + INV_PHI2 * h
    d = a + INV_PHI * h
    fc, fd = f(c), f(d)
    evals = 2
    while h > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            h = b - a
            c = a + INV_PHI2 * h
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            h = b - a
            d = a + INV_PHI * h
            fd = f(d)
        evals += 1
    if fc < fd:
        return c, fc, evals
    return d, fd, evals


def seeded_minimize(f: Callable[[float], float], lo: float, hi: float, tol: float, n_grid: int = 256):
    """Grid scan followed by golden-section refinement around the best node.

    Returns ``(x, fx, evaluations, at_boundary)``. When the best grid node is
    an endpoint of [lo, hi] that endpoint is returned unrefined and
    `at_boundary` is True.
    """
    xs = np.linspace(lo, hi, n_grid)
    fs = np.array([f(x) for x in xs])
    k = int(np.argmin(fs))
    if k == 0 or k == n_grid - 1:
        return float(xs[k]), float(fs[k]), n_grid, True
    x, fx, evals = golden_section(f, xs[k - 1], xs[k + 1], tol)
    # golden section never samples the bracket ends; keep the grid node if it is still better
    if fs[k] < fx:
        x, fx = float(xs[k]), float(fs[k])
    return x, fx, n_grid + evals, False
