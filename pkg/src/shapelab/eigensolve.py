"""Generalized eigensolver for the Neumann pencil K u = mu M u.

Targets the smallest eigenvalues above the constant kernel via ARPACK
shift-invert with a deterministic start vector, then detects the multiplicity
cluster of the first nontrivial eigenvalue and returns an M-orthonormal basis
for it.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import sparse
from scipy.sparse.linalg import ArpackNoConvergence, eigsh, splu

from .assembly import assemble_mass, assemble_stiffness
from .errors import AmbiguousCluster, IndefiniteMass, NoConvergence
from .geometry import TriMesh


@dataclass
class EigenCluster:
    """Eigenvalue mu2, its detected multiplicity, and an M-orthonormal basis."""

    mu2: float
    multiplicity: int
    basis: np.ndarray          # (n, m)
    eigenvalues: np.ndarray    # (m,) the clustered eigenvalues, ascending
    residual_norms: np.ndarray
    cluster_gap: float
    solver_tol: float = 1e-9


def _start_vector(M: sparse.spmatrix, n: int) -> np.ndarray:
    """Deterministic, translation-invariant start vector M-orthogonal to constants."""
    idx = np.arange(n)
    v = np.sin(0.7 * idx) + 0.3 * np.cos(1.3 * idx)
    ones = np.ones(n)
    Mones = M @ ones
    v -= (v @ Mones) / (ones @ Mones) * ones
    return v / np.linalg.norm(v)


def smallest_nonzero_eigenpairs(K: sparse.spmatrix, M: sparse.spmatrix,
                                count: int, tol: float = 1e-9):
    """The `count` smallest eigenvalues above the constant mode, ascending.

    Returns a list of (mu, u) with u M-normalized and M-orthogonal to
    constants. Raises NoConvergence if the ARPACK residual target is missed
    and IndefiniteMass if M is not positive definite.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    n = K.shape[0]
    if count + 2 >= n:
        raise ValueError(f"mesh too small for {count} eigenpairs (n={n})")

    if (M.diagonal() <= 0.0).any():
        raise IndefiniteMass("mass matrix has non-positive diagonal entries")

    v0 = _start_vector(M, n)
    mu_scale = float(v0 @ (K @ v0)) / float(v0 @ (M @ v0))
    sigma = -1e-2 * max(mu_scale, 1e-12)
    try:
        vals, vecs = eigsh(K, k=count + 1, M=M, sigma=sigma, which="LM",
                           v0=v0, tol=tol * 1e-2, maxiter=50 * (count + 1) * 20)
    except ArpackNoConvergence as exc:
        raise NoConvergence(getattr(exc, "maxiter", -1), str(exc)) from exc

    order = np.argsort(vals)
    vals, vecs = vals[order], vecs[:, order]
    if vals[0] > 1e-6 * max(vals[1], 1.0):
        raise NoConvergence(-1, "constant kernel mode not found; disconnected mesh?")
    vals, vecs = vals[1:], vecs[:, 1:]

    # exact deflation of constants + M-orthonormalization
    ones = np.ones(n)
    Mones = M @ ones
    denom = ones @ Mones
    vecs = vecs - np.outer(ones, (Mones @ vecs) / denom)
    gram = vecs.T @ (M @ vecs)
    L = np.linalg.cholesky(gram)
    vecs = np.linalg.solve(L, vecs.T).T

    lu_m = splu(M.tocsc())
    pairs = []
    for i in range(count):
        u = vecs[:, i]
        mu = float(u @ (K @ u))
        r = K @ u - mu * (M @ u)
        rel = np.linalg.norm(r) / max(np.linalg.norm(K @ u), 1e-300)
        if rel > tol:
            raise NoConvergence(-1, f"pair {i}: relative residual {rel:.2e} > {tol:.1e}")
        res_minv = float(np.sqrt(abs(r @ lu_m.solve(r))))
        pairs.append((mu, u, res_minv))
    pairs.sort(key=lambda p: p[0])
    return [(mu, u) for mu, u, _ in pairs], np.array([p[2] for p in pairs])


def detect_cluster(eigs, M: sparse.spmatrix, rtol: float = 1e-3,
                   residuals: np.ndarray | None = None,
                   solver_tol: float = 1e-9) -> EigenCluster:
    """Group the leading eigenvalues within relative width rtol of mu2.

    Requires at least one eigenvalue beyond the candidate group so the
    cluster gap can be certified; raises AmbiguousCluster when the gap is
    smaller than twice the solver tolerance.
    """
    mus = np.array([mu for mu, _ in eigs])
    mu2 = mus[0]
    if mu2 <= 0.0:
        raise ValueError("leading eigenvalue not positive; bad deflation")
    m = int(np.searchsorted(mus, mu2 * (1.0 + rtol), side="right"))
    if m >= len(mus):
        raise ValueError(
            f"all {len(mus)} computed eigenvalues fall in one cluster; "
            "request more with smallest_nonzero_eigenpairs(count >= m + 1)"
        )
    gap = mus[m] - mus[m - 1]
    if gap < 2.0 * solver_tol * mu2:
        raise AmbiguousCluster(
            f"gap {gap:.3e} after candidate cluster of size {m} is below "
            f"2 x solver tolerance; refine the mesh to certify multiplicity"
        )
    basis = np.stack([eigs[i][1] for i in range(m)], axis=1)
    gram = basis.T @ (M @ basis)
    L = np.linalg.cholesky(gram)
    basis = np.linalg.solve(L, basis.T).T
    res = residuals[:m] if residuals is not None else np.zeros(m)
    return EigenCluster(
        mu2=float(mu2),
        multiplicity=m,
        basis=basis,
        eigenvalues=mus[:m],
        residual_norms=res,
        cluster_gap=float(gap),
        solver_tol=solver_tol,
    )


def compute_cluster(mesh: TriMesh, count: int = 6, tol: float = 1e-9,
                    rtol: float = 1e-2, lumped_mass: bool = False):
    """Assemble, solve, and cluster a mesh in one call.

    Returns (K, M, eigs, cluster).
    """
    K = assemble_stiffness(mesh)
    M = assemble_mass(mesh, lumped=lumped_mass)
    eigs, residuals = smallest_nonzero_eigenpairs(K, M, count, tol)
    cluster = detect_cluster(eigs, M, rtol=rtol, residuals=residuals,
                             solver_tol=tol)
    return K, M, eigs, cluster
