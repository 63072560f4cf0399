"""Vectorized numpy implementations of the hot kernels.

Reference backend: every function here must match the numba versions in
``numba_impl`` bit-for-bit on the shared test set (see tests/test_kernels.py).
"""
from __future__ import annotations

import numpy as np
from scipy import sparse
from scipy.sparse.csgraph import connected_components

BACKEND_NAME = "numpy"


def p1_local_matrices(coords: np.ndarray):
    """Per-triangle P1 data from unwrapped coordinates ``coords`` (nt, 3, 2).

    Returns ``(areas, grads, kloc)`` where ``grads[t, i]`` is the gradient of
    the i-th nodal basis function on triangle t and ``kloc`` the 3x3 local
    stiffness block ``area * grads @ grads.T``.
    """
    p0 = coords[:, 0, :]
    e1 = coords[:, 1, :] - p0
    e2 = coords[:, 2, :] - p0
    det = e1[:, 0] * e2[:, 1] - e1[:, 1] * e2[:, 0]
    areas = 0.5 * det
    inv = 1.0 / det
    # gradients of barycentric coordinates
    g1 = np.stack([e2[:, 1] * inv, -e2[:, 0] * inv], axis=1)
    g2 = np.stack([-e1[:, 1] * inv, e1[:, 0] * inv], axis=1)
    g0 = -(g1 + g2)
    grads = np.stack([g0, g1, g2], axis=1)
    kloc = np.einsum("tid,tjd->tij", grads, grads) * areas[:, None, None]
    return areas, grads, kloc


def grad_of(grads: np.ndarray, uvals: np.ndarray) -> np.ndarray:
    """Constant gradient per triangle of the nodal field with values ``uvals`` (nt, 3)."""
    return np.einsum("tid,ti->td", grads, uvals)


def idw_blend(dists: np.ndarray, nbr_disp: np.ndarray, dmin: np.ndarray,
              collar: float) -> np.ndarray:
    """Inverse-distance blend of neighbor displacements with a collar cutoff.

    ``dists`` (n, k) distances to the k nearest boundary vertices,
    ``nbr_disp`` (n, k, 2) their displacements, ``dmin`` (n,) distance to the
    nearest boundary vertex. Weights ~ 1/d^2; the result ramps smoothly to
    zero at depth ``collar``.
    """
    w = 1.0 / (dists * dists + 1e-30)
    out = (w[:, :, None] * nbr_disp).sum(axis=1) / w.sum(axis=1)[:, None]
    s = np.clip(1.0 - dmin / collar, 0.0, 1.0)
    ramp = s * s * (3.0 - 2.0 * s)
    return out * ramp[:, None]


def component_count(signs: np.ndarray, neighbors: np.ndarray) -> int:
    """Number of edge-connected components of same-sign triangles.

    ``signs`` (nt,) in {-1, 0, +1}; 0 triangles separate regions.
    ``neighbors`` (nt, 3) triangle adjacency, -1 for boundary edges.
    """
    nt = signs.shape[0]
    tri = np.repeat(np.arange(nt), 3)
    nbr = neighbors.reshape(-1)
    ok = (nbr >= 0) & (signs[tri] != 0) & (signs[tri] == signs[np.maximum(nbr, 0)])
    rows, cols = tri[ok], nbr[ok]
    graph = sparse.coo_matrix(
        (np.ones(rows.size, dtype=np.int8), (rows, cols)), shape=(nt, nt)
    )
    ncomp, labels = connected_components(graph, directed=False)
    # drop components made of sign-0 triangles (each is its own singleton)
    return ncomp - int(np.count_nonzero(signs == 0))
