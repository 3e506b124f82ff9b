"""Numba kernels for L1 coordinate descent on a dense Gram matrix.

All kernels work on the standardized scale: columns of the design are
centered and scaled to unit variance, the response is centered, and the
Gram matrix ``G = X'X / N`` therefore has a unit diagonal for live columns.
Constant columns are encoded as all-zero standardized columns, which makes
their Gram row identically zero; the sweeps skip them and their
coefficients stay pinned at zero.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def _soft(z, g):
    if z > g:
        return z - g
    if z < -g:
        return z + g
    return 0.0


@njit(cache=True)
def _sweep(G, grad, beta, lam, active_only):
    """One coordinate sweep, updating ``beta`` and ``grad`` in place.

    ``grad`` must hold ``c - G @ beta`` on entry and is kept consistent.
    Returns the largest absolute coefficient change of the sweep.
    """
    n_feat = beta.shape[0]
    maxd = 0.0
    for j in range(n_feat):
        if G[j, j] == 0.0:
            continue
        bj = beta[j]
        if active_only and bj == 0.0:
            continue
        bnew = _soft(grad[j] + bj, lam)
        if bnew != bj:
            d = bnew - bj
            row = G[j]
            for i in range(n_feat):
                grad[i] -= row[i] * d
            beta[j] = bnew
            ad = abs(d)
            if ad > maxd:
                maxd = ad
    return maxd


@njit(cache=True)
def solve(G, grad, beta, lam, tol, max_cycles):
    """Coordinate descent to stationarity at a single penalty value.

    Alternates full sweeps (which certify convergence and let new
    coordinates enter) with sweeps over the current active set. Returns
    ``(cycles_used, converged)``; every sweep counts as one cycle.
    """
    cycles = 0
    while cycles < max_cycles:
        maxd = _sweep(G, grad, beta, lam, False)
        cycles += 1
        if maxd < tol:
            return cycles, True
        while cycles < max_cycles:
            maxd = _sweep(G, grad, beta, lam, True)
            cycles += 1
            if maxd < tol:
                break
    return cycles, False


@njit(cache=True)
def solve_path(G, c, lambdas, tol, max_cycles):
    """Warm-started solutions along a decreasing penalty grid.

    Returns ``(B, cycles, converged)`` where ``B[l]`` is the standardized
    coefficient vector at ``lambdas[l]``.
    """
    n_lam = lambdas.shape[0]
    n_feat = c.shape[0]
    B = np.zeros((n_lam, n_feat))
    cycles = np.zeros(n_lam, np.int64)
    conv = np.zeros(n_lam, np.bool_)
    beta = np.zeros(n_feat)
    grad = c.copy()
    for l in range(n_lam):
        cy, ok = solve(G, grad, beta, lambdas[l], tol, max_cycles)
        cycles[l] = cy
        conv[l] = ok
        B[l] = beta
    return B, cycles, conv


@njit(cache=True)
def solve_traced(G, c, grad, beta, lam, tol, max_cycles, y2m):
    """Full-sweep coordinate descent recording the objective per cycle.

    ``y2m`` is the mean of the squared centered response, so the recorded
    value is exactly ``RSS/(2N) + lam * ||beta||_1`` on the standardized
    scale. Slower than :func:`solve`; intended for diagnostics and tests.
    """
    trace = np.empty(max_cycles)
    cycles = 0
    converged = False
    while cycles < max_cycles:
        maxd = _sweep(G, grad, beta, lam, False)
        obj = 0.5 * y2m
        for j in range(beta.shape[0]):
            obj -= 0.5 * beta[j] * (c[j] + grad[j])
            obj += lam * abs(beta[j])
        trace[cycles] = obj
        cycles += 1
        if maxd < tol:
            converged = True
            break
    return cycles, converged, trace[:cycles].copy()
