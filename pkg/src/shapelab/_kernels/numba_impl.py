"""Numba-jitted implementations of the hot kernels.

Serial @njit loops (no parallel reductions) so results and their floating
point rounding stay deterministic and identical to the numpy backend.
"""
from __future__ import annotations

import numpy as np
from numba import njit

BACKEND_NAME = "numba"


@njit(cache=True)
def p1_local_matrices(coords):
    nt = coords.shape[0]
    areas = np.empty(nt)
    grads = np.empty((nt, 3, 2))
    kloc = np.empty((nt, 3, 3))
    for t in range(nt):
        e1x = coords[t, 1, 0] - coords[t, 0, 0]
        e1y = coords[t, 1, 1] - coords[t, 0, 1]
        e2x = coords[t, 2, 0] - coords[t, 0, 0]
        e2y = coords[t, 2, 1] - coords[t, 0, 1]
        det = e1x * e2y - e1y * e2x
        areas[t] = 0.5 * det
        inv = 1.0 / det
        g1x, g1y = e2y * inv, -e2x * inv
        g2x, g2y = -e1y * inv, e1x * inv
        grads[t, 1, 0], grads[t, 1, 1] = g1x, g1y
        grads[t, 2, 0], grads[t, 2, 1] = g2x, g2y
        grads[t, 0, 0], grads[t, 0, 1] = -(g1x + g2x), -(g1y + g2y)
        for i in range(3):
            for j in range(3):
                kloc[t, i, j] = (
                    grads[t, i, 0] * grads[t, j, 0]
                    + grads[t, i, 1] * grads[t, j, 1]
                ) * areas[t]
    return areas, grads, kloc


@njit(cache=True)
def grad_of(grads, uvals):
    nt = grads.shape[0]
    out = np.empty((nt, 2))
    for t in range(nt):
        gx = 0.0
        gy = 0.0
        for i in range(3):
            gx += grads[t, i, 0] * uvals[t, i]
            gy += grads[t, i, 1] * uvals[t, i]
        out[t, 0] = gx
        out[t, 1] = gy
    return out


@njit(cache=True)
def idw_blend(dists, nbr_disp, dmin, collar):
    n, k = dists.shape
    out = np.empty((n, 2))
    for i in range(n):
        wsum = 0.0
        ax = 0.0
        ay = 0.0
        for j in range(k):
            w = 1.0 / (dists[i, j] * dists[i, j] + 1e-30)
            wsum += w
            ax += w * nbr_disp[i, j, 0]
            ay += w * nbr_disp[i, j, 1]
        s = 1.0 - dmin[i] / collar
        if s < 0.0:
            s = 0.0
        elif s > 1.0:
            s = 1.0
        ramp = s * s * (3.0 - 2.0 * s)
        out[i, 0] = ax / wsum * ramp
        out[i, 1] = ay / wsum * ramp
    return out


@njit(cache=True)
def _find(parent, i):
    root = i
    while parent[root] != root:
        root = parent[root]
    while parent[i] != root:
        nxt = parent[i]
        parent[i] = root
        i = nxt
    return root


@njit(cache=True)
def component_count(signs, neighbors):
    nt = signs.shape[0]
    parent = np.arange(nt)
    for t in range(nt):
        if signs[t] == 0:
            continue
        for e in range(3):
            nb = neighbors[t, e]
            if nb >= 0 and signs[nb] == signs[t]:
                ra = _find(parent, t)
                rb = _find(parent, nb)
                if ra != rb:
                    if ra < rb:
                        parent[rb] = ra
                    else:
                        parent[ra] = rb
    count = 0
    for t in range(nt):
        if signs[t] != 0 and _find(parent, t) == t:
            count += 1
    return count
