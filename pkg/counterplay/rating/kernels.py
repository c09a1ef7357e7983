"""Compiled per-match update steps.

Training runs millions of tiny updates, so every model's match step is a
numba function over plain arrays. The single-match functions in `elo`, `rcc`
and `melo` call the same steps as the whole-epoch loops here, so feeding
matches one at a time or as a batch gives identical states.

Ids are not range-checked inside the kernels; callers validate them first.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit

from counterplay.rating.elo import ELO_SCALE, LOGISTIC_SCALE


# --- ELO ---
@njit(cache=True)
def elo_step(ratings, i, j, outcome, k):
    expected = 1.0 / (1.0 + 10.0 ** ((ratings[j] - ratings[i]) / ELO_SCALE))
    residual = outcome - expected
    delta = k * residual
    ratings[i] += delta
    ratings[j] -= delta
    return residual


@njit(cache=True)
def elo_observe_all(ratings, first, second, outcome, k):
    for t in range(first.shape[0]):
        elo_step(ratings, first[t], second[t], outcome[t], k)


# --- ELO-RCC ---
@njit(cache=True)
def sample_row(row, u):
    """Inverse-CDF draw from `row` for a uniform `u` in [0, 1)."""
    total = 0.0
    for c in range(row.shape[0]):
        total += row[c]
    # Scale by the row total so rounding in the sum never leaves u past the end.
    target = u * total
    acc = 0.0
    for c in range(row.shape[0]):
        acc += row[c]
        if acc > target:
            return c
    return row.shape[0] - 1


@njit(cache=True)
def rcc_distances(table, residuals):
    """L1 distance from every player's residual row to every counter-table row, (N, M)."""
    n, m = residuals.shape
    out = np.empty((n, m))
    for p in range(n):
        for c in range(m):
            d = 0.0
            for k in range(m):
                d += abs(table[c, k] - residuals[p, k])
            out[p, c] = d
    return out


@njit(cache=True)
def _move_residual(table, residuals, distances, p, c, target, eta_t):
    old = residuals[p, c]
    new = old + eta_t * (target - old)
    residuals[p, c] = new
    # Only column c of player p's distances changes.
    for a in range(table.shape[0]):
        t = table[a, c]
        distances[p, a] += abs(t - new) - abs(t - old)


@njit(cache=True)
def _refine(distances, dists, p, eta_c):
    m = dists.shape[1]
    target = 0
    for c in range(1, m):
        if distances[p, c] < distances[p, target]:
            target = c
    for c in range(m):
        dists[p, c] *= 1.0 - eta_c
    dists[p, target] += eta_c


@njit(cache=True)
def rcc_step(ratings, table, residuals, dists, distances, i, j, outcome, u_i, u_j, eta_r, eta_t, eta_c):
    """The four Elo-RCC steps for one match. Returns the residual win value."""
    # Step 1: Elo. The expected score is computed once and reused below.
    w_res = elo_step(ratings, i, j, outcome, eta_r)

    # Step 2: counter table.
    c_i = sample_row(dists[i], u_i)
    c_j = sample_row(dists[j], u_j)
    if c_i == c_j:
        table[c_i, c_i] = 0.0
    else:
        old = table[c_i, c_j]
        new = old + eta_t * (w_res - old)
        table[c_i, c_j] = new
        table[c_j, c_i] = -new
        for q in range(distances.shape[0]):
            e = residuals[q, c_j]
            distances[q, c_i] += abs(new - e) - abs(old - e)
            e = residuals[q, c_i]
            distances[q, c_j] += abs(new + e) - abs(old + e)

    # Step 3: expected residuals.
    _move_residual(table, residuals, distances, i, c_j, w_res, eta_t)
    _move_residual(table, residuals, distances, j, c_i, -w_res, eta_t)

    # Step 4: category refinement.
    _refine(distances, dists, i, eta_c)
    _refine(distances, dists, j, eta_c)
    return w_res


@njit(cache=True)
def rcc_observe_all(ratings, table, residuals, dists, distances, first, second, outcome, uniforms, eta_r, eta_t, eta_c):
    for t in range(first.shape[0]):
        rcc_step(
            ratings, table, residuals, dists, distances,
            first[t], second[t], outcome[t], uniforms[t, 0], uniforms[t, 1],
            eta_r, eta_t, eta_c,
        )


# --- MELO2 ---
@njit(cache=True)
def melo_step(ratings, cyc, i, j, outcome, k, k_c):
    """One gradient step on the match log-likelihood. Returns the error."""
    x = LOGISTIC_SCALE * (ratings[i] - ratings[j]) + (cyc[i, 0] * cyc[j, 1] - cyc[i, 1] * cyc[j, 0])
    if x >= 0:
        p = 1.0 / (1.0 + math.exp(-x))
    else:
        z = math.exp(x)
        p = z / (1.0 + z)
    delta = outcome - p
    ratings[i] += k * delta
    ratings[j] -= k * delta
    # Ω c = (c[1], -c[0]); both steps read the pre-update vectors.
    ci0, ci1 = cyc[i, 0], cyc[i, 1]
    cj0, cj1 = cyc[j, 0], cyc[j, 1]
    step = k_c * delta
    cyc[i, 0] += step * cj1
    cyc[i, 1] -= step * cj0
    cyc[j, 0] -= step * ci1
    cyc[j, 1] += step * ci0
    return delta


@njit(cache=True)
def melo_observe_all(ratings, cyc, first, second, outcome, k, k_c):
    for t in range(first.shape[0]):
        melo_step(ratings, cyc, first[t], second[t], outcome[t], k, k_c)
