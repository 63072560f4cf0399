"""P1 finite-element assembly and boundary quadrature.

Stiffness K and consistent (or lumped) mass M realize the discrete Rayleigh
quotient u'Ku / u'Mu. All quadrature is exact for P1 products; boundary
integrals use the midpoint rule edge by edge.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import sparse

from . import _kernels
from .errors import ComponentNotFound, SingularTriangle
from .geometry import TriMesh

# consistent mass pattern: area/12 * [[2,1,1],[1,2,1],[1,1,2]]
_MASS_PATTERN = (np.full((3, 3), 1.0) + np.eye(3)) / 12.0


def _check_areas(mesh: TriMesh) -> None:
    scale2 = mesh.areas.sum()
    if np.min(mesh.areas) < 1e-14 * scale2:
        raise SingularTriangle(
            f"triangle area {np.min(mesh.areas):.3e} below degeneracy threshold"
        )


def _coo_indices(mesh: TriMesh):
    t = mesh.triangles
    rows = np.repeat(t, 3, axis=1).reshape(-1)        # i index varies slower
    cols = np.tile(t, (1, 3)).reshape(-1)
    return rows, cols


def assemble_stiffness(mesh: TriMesh) -> sparse.csr_matrix:
    """Stiffness matrix K_ij = int grad phi_i . grad phi_j.

    Symmetric by construction (local blocks are symmetric and duplicate
    summation is order-stable), PSD with kernel spanned by constants.
    """
    _check_areas(mesh)
    _, _, kloc = _kernels.p1_local_matrices(mesh.tri_coords)
    rows, cols = _coo_indices(mesh)
    n = mesh.n_vertices
    K = sparse.coo_matrix((kloc.reshape(-1), (rows, cols)), shape=(n, n))
    return K.tocsr()


def assemble_mass(mesh: TriMesh, lumped: bool = False) -> sparse.csr_matrix:
    """Mass matrix; consistent by default, diagonal row-sum lumping on request."""
    _check_areas(mesh)
    n = mesh.n_vertices
    if lumped:
        data = np.repeat(mesh.areas / 3.0, 3)
        idx = mesh.triangles.reshape(-1)
        M = sparse.coo_matrix((data, (idx, idx)), shape=(n, n))
        return M.tocsr()
    mloc = mesh.areas[:, None, None] * _MASS_PATTERN[None, :, :]
    rows, cols = _coo_indices(mesh)
    M = sparse.coo_matrix((mloc.reshape(-1), (rows, cols)), shape=(n, n))
    return M.tocsr()


# ---------------------------------------------------------------------------
# boundary traces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundaryTrace:
    """Scalar data on the boundary: per edge ("edge") or per loop vertex ("vertex").

    Vertex traces are ordered like the concatenated boundary loops and are
    integrated with the midpoint (trapezoid) rule; edge traces are piecewise
    constant.
    """

    values: np.ndarray
    kind: str  # "edge" | "vertex"

    def __post_init__(self):
        if self.kind not in ("edge", "vertex"):
            raise ValueError(f"kind must be 'edge' or 'vertex', got {self.kind!r}")
        object.__setattr__(self, "values",
                           np.ascontiguousarray(self.values, dtype=np.float64))

    def edge_values(self, mesh: TriMesh) -> np.ndarray:
        """Midpoint value per boundary edge."""
        if self.kind == "edge":
            if self.values.shape[0] != mesh.boundary_edges.shape[0]:
                raise ValueError("edge trace does not cover the boundary")
            return self.values
        out = []
        off = 0
        for loop in mesh.boundary_loops:
            v = self.values[off:off + len(loop)]
            out.append(0.5 * (v + np.roll(v, -1)))
            off += len(loop)
        if off != self.values.shape[0]:
            raise ValueError("vertex trace does not cover the boundary")
        return np.concatenate(out)


def vertex_trace_from_function(mesh: TriMesh, f) -> BoundaryTrace:
    """Sample f(points (n,2)) at the boundary loop vertices."""
    pts = mesh.vertices[mesh.boundary_vertex_ids]
    return BoundaryTrace(np.asarray(f(pts), dtype=float), "vertex")


def boundary_integrate(mesh: TriMesh, trace: BoundaryTrace,
                       component: int | None = None) -> float:
    """int_boundary trace dsigma, over all components or a single one."""
    vals = trace.edge_values(mesh)
    lens = mesh.boundary_edge_lengths
    if component is None:
        return float(vals @ lens)
    if component not in mesh.component_ids():
        raise ComponentNotFound(f"no boundary component {component}")
    sel = mesh.boundary_edge_component == component
    return float(vals[sel] @ lens[sel])


# ---------------------------------------------------------------------------
# gradients and their boundary restriction
# ---------------------------------------------------------------------------

def tri_gradients(mesh: TriMesh, u: np.ndarray) -> np.ndarray:
    """Constant P1 gradient per triangle of the nodal field u."""
    return _kernels.grad_of(mesh.basis_grads, np.ascontiguousarray(u[mesh.triangles]))


def vertex_gradients(mesh: TriMesh, u: np.ndarray) -> np.ndarray:
    """Area-weighted one-ring average of triangle gradients at each vertex."""
    g = tri_gradients(mesh, u)
    acc = np.zeros((mesh.n_vertices, 2))
    wsum = np.zeros(mesh.n_vertices)
    w = np.repeat(mesh.areas, 3)
    idx = mesh.triangles.reshape(-1)
    np.add.at(acc, idx, np.repeat(g, 3, axis=0) * w[:, None])
    np.add.at(wsum, idx, w)
    return acc / wsum[:, None]


def boundary_gradients(mesh: TriMesh, u: np.ndarray,
                       method: str = "adjacent") -> np.ndarray:
    """Gradient of u on each boundary edge.

    "adjacent" takes the constant gradient of the unique adjacent triangle
    (the default everywhere); "ring" averages one-ring recovered vertex
    gradients at the edge endpoints, which trades locality for accuracy.
    """
    if method == "adjacent":
        g = tri_gradients(mesh, u)
        return g[mesh.boundary_edge_tri]
    if method == "ring":
        gv = vertex_gradients(mesh, u)
        e = mesh.boundary_edges
        return 0.5 * (gv[e[:, 0]] + gv[e[:, 1]])
    raise ValueError(f"unknown boundary gradient method {method!r}")


def boundary_values(mesh: TriMesh, u: np.ndarray) -> np.ndarray:
    """Midpoint value of the nodal field u on each boundary edge."""
    e = mesh.boundary_edges
    return 0.5 * (u[e[:, 0]] + u[e[:, 1]])


def rayleigh_quotient(K: sparse.spmatrix, M: sparse.spmatrix,
                      u: np.ndarray) -> float:
    return float(u @ (K @ u)) / float(u @ (M @ u))
