"""Domain specifications and triangle mesh generation.

Domains come in three analytic flavors: star-shaped planar regions given by a
Fourier boundary radius, flat cylinders R x S^1_L bounded by two periodic
height graphs, and axis-aligned rectangles (structured meshes for closed-form
eigenvalue checks). Meshing is deterministic: identical spec + h give a
bit-identical mesh.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from scipy.spatial import Delaunay, cKDTree

from . import _kernels
from .errors import (
    ComponentNotFound,
    DegenerateStrip,
    MeshQualityFailure,
    NonPositiveRadius,
)

_DENSE = 8192  # samples for boundary quadrature / invariant checks


# ---------------------------------------------------------------------------
# domain specs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PlanarDomainSpec:
    """Star-shaped planar domain rho(theta) = rho0 * (1 + sum a_m cos + b_m sin)."""

    rho0: float = 1.0
    cos_coeffs: tuple = ()
    sin_coeffs: tuple = ()

    @property
    def max_mode(self) -> int:
        return max(len(self.cos_coeffs), len(self.sin_coeffs))

    def radius(self, theta):
        theta = np.asarray(theta, dtype=float)
        r = np.ones_like(theta)
        for m, a in enumerate(self.cos_coeffs, start=1):
            r = r + a * np.cos(m * theta)
        for m, b in enumerate(self.sin_coeffs, start=1):
            r = r + b * np.sin(m * theta)
        return self.rho0 * r

    def radius_prime(self, theta):
        theta = np.asarray(theta, dtype=float)
        r = np.zeros_like(theta)
        for m, a in enumerate(self.cos_coeffs, start=1):
            r = r - a * m * np.sin(m * theta)
        for m, b in enumerate(self.sin_coeffs, start=1):
            r = r + b * m * np.cos(m * theta)
        return self.rho0 * r

    def validate(self) -> None:
        theta = np.linspace(0.0, 2.0 * np.pi, _DENSE, endpoint=False)
        rho = self.radius(theta)
        if np.min(rho) <= 0.0:
            raise NonPositiveRadius(
                f"rho(theta) <= 0 at theta={theta[np.argmin(rho)]:.6f}"
            )

    def area(self) -> float:
        """Analytic area (1/2) int rho^2 dtheta, exact for trig polynomials."""
        theta = np.linspace(0.0, 2.0 * np.pi, _DENSE, endpoint=False)
        rho = self.radius(theta)
        return 0.5 * float(np.mean(rho * rho)) * 2.0 * np.pi

    def perimeter(self) -> float:
        theta = np.linspace(0.0, 2.0 * np.pi, _DENSE, endpoint=False)
        ds = np.hypot(self.radius(theta), self.radius_prime(theta))
        return float(np.mean(ds)) * 2.0 * np.pi

    def scaled(self, factor: float) -> "PlanarDomainSpec":
        return PlanarDomainSpec(self.rho0 * factor, self.cos_coeffs, self.sin_coeffs)


@dataclass(frozen=True)
class HeightSeries:
    """L-periodic scalar function c0 + sum a_m cos(2 pi m x / L) + b_m sin(...)."""

    const: float = 0.0
    cos_coeffs: tuple = ()
    sin_coeffs: tuple = ()

    def __call__(self, x, L):
        x = np.asarray(x, dtype=float)
        w = 2.0 * np.pi / L
        v = np.full_like(x, self.const)
        for m, a in enumerate(self.cos_coeffs, start=1):
            v = v + a * np.cos(m * w * x)
        for m, b in enumerate(self.sin_coeffs, start=1):
            v = v + b * np.sin(m * w * x)
        return v

    def shifted(self, delta: float) -> "HeightSeries":
        return HeightSeries(self.const + delta, self.cos_coeffs, self.sin_coeffs)


@dataclass(frozen=True)
class CylinderDomainSpec:
    """Flat-cylinder domain {(t, x): g_minus(x) < t < g_plus(x)}, x in S^1_L."""

    L: float
    g_plus: HeightSeries
    g_minus: HeightSeries

    @staticmethod
    def straight(r: float, L: float) -> "CylinderDomainSpec":
        """The straight cylinder of half-length r: g = +/- r."""
        return CylinderDomainSpec(L, HeightSeries(r), HeightSeries(-r))

    @property
    def is_straight(self) -> bool:
        return not (self.g_plus.cos_coeffs or self.g_plus.sin_coeffs
                    or self.g_minus.cos_coeffs or self.g_minus.sin_coeffs)

    def validate(self) -> None:
        x = np.linspace(0.0, self.L, _DENSE, endpoint=False)
        gap = self.g_plus(x, self.L) - self.g_minus(x, self.L)
        if np.min(gap) <= 0.0:
            raise DegenerateStrip(
                f"g_plus - g_minus <= 0 at x={x[np.argmin(gap)]:.6f}"
            )

    def area(self) -> float:
        """int_0^L (g_plus - g_minus) dx; only the constant terms survive."""
        return self.L * (self.g_plus.const - self.g_minus.const)


@dataclass(frozen=True)
class RectangleDomainSpec:
    """Axis-aligned rectangle (0, width) x (0, height)."""

    width: float = 1.0
    height: float = 1.0

    def area(self) -> float:
        return self.width * self.height


# ---------------------------------------------------------------------------
# mesh container
# ---------------------------------------------------------------------------

class TriMesh:
    """Immutable triangulation with boundary structure.

    vertices : (nv, 2) float64, chart coordinates. On periodic meshes column 1
        is the S^1 coordinate stored near [0, L); ``tri_wrap`` holds per-corner
        period offsets so each triangle unwraps to a contiguous patch.
    triangles : (nt, 3) int32, positively oriented.
    boundary_loops : ordered vertex-index loops, one per boundary component,
        oriented with the domain on the left (outward normal = right of edge).
    """

    def __init__(self, vertices, triangles, boundary_loops, h,
                 periodic=False, period=0.0, tri_wrap=None):
        self.vertices = np.ascontiguousarray(vertices, dtype=np.float64)
        self.triangles = np.ascontiguousarray(triangles, dtype=np.int32)
        self.boundary_loops = [np.asarray(l, dtype=np.int32) for l in boundary_loops]
        self.h = float(h)
        self.periodic = bool(periodic)
        self.period = float(period)
        if tri_wrap is None:
            self.tri_wrap = None
        else:
            self.tri_wrap = np.ascontiguousarray(tri_wrap, dtype=np.int8)
        for arr in (self.vertices, self.triangles, self.tri_wrap):
            if arr is not None:
                arr.setflags(write=False)

    # -- geometry -------------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return self.vertices.shape[0]

    @property
    def n_triangles(self) -> int:
        return self.triangles.shape[0]

    @cached_property
    def tri_coords(self) -> np.ndarray:
        """(nt, 3, 2) per-triangle corner coordinates, period-unwrapped."""
        coords = self.vertices[self.triangles]
        if self.periodic and self.tri_wrap is not None:
            coords = coords.copy()
            coords[:, :, 1] += self.tri_wrap * self.period
        return np.ascontiguousarray(coords)

    @cached_property
    def _p1(self):
        return _kernels.p1_local_matrices(self.tri_coords)

    @property
    def areas(self) -> np.ndarray:
        return self._p1[0]

    @property
    def basis_grads(self) -> np.ndarray:
        return self._p1[1]

    def min_angle(self) -> float:
        """Smallest interior angle over all triangles, degrees."""
        c = self.tri_coords
        ang = np.empty((self.n_triangles, 3))
        for i in range(3):
            a = c[:, (i + 1) % 3] - c[:, i]
            b = c[:, (i + 2) % 3] - c[:, i]
            cosv = (a * b).sum(axis=1) / (
                np.linalg.norm(a, axis=1) * np.linalg.norm(b, axis=1)
            )
            ang[:, i] = np.degrees(np.arccos(np.clip(cosv, -1.0, 1.0)))
        return float(ang.min())

    # -- boundary structure ----------------------------------------------

    @cached_property
    def boundary_edges(self) -> np.ndarray:
        """(nbe, 2) vertex pairs in loop order, all components concatenated."""
        pairs = []
        for loop in self.boundary_loops:
            pairs.append(np.stack([loop, np.roll(loop, -1)], axis=1))
        return np.concatenate(pairs, axis=0).astype(np.int32)

    @cached_property
    def boundary_edge_component(self) -> np.ndarray:
        comp = []
        for k, loop in enumerate(self.boundary_loops):
            comp.append(np.full(len(loop), k, dtype=np.int32))
        return np.concatenate(comp)

    def _edge_vector(self, a, b):
        """Displacement a -> b, unwrapped across the period if needed."""
        d = self.vertices[b] - self.vertices[a]
        if self.periodic:
            d[..., 1] -= self.period * np.round(d[..., 1] / self.period)
        return d

    @cached_property
    def boundary_edge_lengths(self) -> np.ndarray:
        e = self.boundary_edges
        d = self._edge_vector(e[:, 0], e[:, 1])
        return np.linalg.norm(d, axis=1)

    @cached_property
    def boundary_edge_midpoints(self) -> np.ndarray:
        e = self.boundary_edges
        d = self._edge_vector(e[:, 0], e[:, 1])
        return self.vertices[e[:, 0]] + 0.5 * d

    @cached_property
    def _edge_to_tri(self) -> dict:
        """Map sorted vertex pair -> list of adjacent triangle indices."""
        out: dict = {}
        tris = self.triangles
        for t in range(tris.shape[0]):
            for i in range(3):
                key = (int(tris[t, i]), int(tris[t, (i + 1) % 3]))
                key = (min(key), max(key))
                out.setdefault(key, []).append(t)
        return out

    @cached_property
    def boundary_edge_tri(self) -> np.ndarray:
        """Index of the unique triangle adjacent to each boundary edge."""
        e2t = self._edge_to_tri
        out = np.empty(self.boundary_edges.shape[0], dtype=np.int32)
        for i, (a, b) in enumerate(self.boundary_edges):
            adj = e2t[(min(int(a), int(b)), max(int(a), int(b)))]
            if len(adj) != 1:
                raise MeshQualityFailure(
                    f"boundary edge ({a},{b}) adjacent to {len(adj)} triangles"
                )
            out[i] = adj[0]
        return out

    @cached_property
    def boundary_edge_normals(self) -> np.ndarray:
        """Outward unit normal per boundary edge (points away from the mesh)."""
        e = self.boundary_edges
        d = self._edge_vector(e[:, 0], e[:, 1])
        n = np.stack([d[:, 1], -d[:, 0]], axis=1)
        n /= np.linalg.norm(n, axis=1)[:, None]
        # orient away from the adjacent triangle centroid
        cent = self.tri_coords[self.boundary_edge_tri].mean(axis=1)
        mid = self.boundary_edge_midpoints
        to_cent = cent - mid
        if self.periodic:
            to_cent[:, 1] -= self.period * np.round(to_cent[:, 1] / self.period)
        flip = (n * to_cent).sum(axis=1) > 0.0
        n[flip] *= -1.0
        return n

    @cached_property
    def boundary_vertex_ids(self) -> np.ndarray:
        return np.concatenate(self.boundary_loops)

    @cached_property
    def boundary_vertex_component(self) -> np.ndarray:
        comp = []
        for k, loop in enumerate(self.boundary_loops):
            comp.append(np.full(len(loop), k, dtype=np.int32))
        return np.concatenate(comp)

    @cached_property
    def boundary_vertex_weights(self) -> np.ndarray:
        """Half the summed length of the two edges meeting at each loop vertex."""
        out = []
        lens = self.boundary_edge_lengths
        off = 0
        for loop in self.boundary_loops:
            ell = lens[off:off + len(loop)]
            out.append(0.5 * (ell + np.roll(ell, 1)))
            off += len(loop)
        return np.concatenate(out)

    @cached_property
    def boundary_vertex_normals(self) -> np.ndarray:
        """Unit outward normal per loop vertex (length-weighted edge average)."""
        out = []
        norms = self.boundary_edge_normals
        lens = self.boundary_edge_lengths
        off = 0
        for loop in self.boundary_loops:
            n_e = norms[off:off + len(loop)]
            l_e = lens[off:off + len(loop)]
            v = n_e * l_e[:, None] + np.roll(n_e * l_e[:, None], 1, axis=0)
            v /= np.linalg.norm(v, axis=1)[:, None]
            out.append(v)
            off += len(loop)
        return np.concatenate(out, axis=0)

    @cached_property
    def tri_neighbors(self) -> np.ndarray:
        """(nt, 3) adjacent triangle across each edge, -1 on the boundary."""
        out = np.full((self.n_triangles, 3), -1, dtype=np.int32)
        e2t = self._edge_to_tri
        tris = self.triangles
        for t in range(self.n_triangles):
            for i in range(3):
                a, b = int(tris[t, i]), int(tris[t, (i + 1) % 3])
                adj = e2t[(min(a, b), max(a, b))]
                for other in adj:
                    if other != t:
                        out[t, i] = other
        out.setflags(write=False)
        return out

    @cached_property
    def vertex_tri_adjacency(self):
        """CSR-style (offsets, tri_ids): triangles incident to each vertex."""
        counts = np.zeros(self.n_vertices, dtype=np.int64)
        flat = self.triangles.reshape(-1)
        np.add.at(counts, flat, 1)
        offsets = np.concatenate([[0], np.cumsum(counts)])
        order = np.argsort(flat, kind="stable")
        tri_ids = (order // 3).astype(np.int32)
        return offsets, tri_ids

    def component_ids(self):
        return list(range(len(self.boundary_loops)))

    def check(self) -> None:
        """Raise if basic mesh invariants are violated."""
        if np.min(self.areas) <= 0.0:
            raise MeshQualityFailure("non-positive triangle area")
        _ = self.boundary_edge_tri  # raises when an edge has 2 triangles
        dots = (self.boundary_edge_normals
                * (self.tri_coords[self.boundary_edge_tri].mean(axis=1)
                   - self.boundary_edge_midpoints)).sum(axis=1)
        if self.periodic:
            pass  # midpoint/centroid wrap handled inside boundary_edge_normals
        if np.max(dots) >= 0.0 and not self.periodic:
            raise MeshQualityFailure("inward-pointing boundary normal")


def mesh_volume(mesh: TriMesh) -> float:
    """Sum of signed triangle areas."""
    return float(mesh.areas.sum())


def boundary_measure(mesh: TriMesh, component: int | None = None) -> float:
    """Total boundary length, or the length of one component."""
    if component is None:
        return float(mesh.boundary_edge_lengths.sum())
    if component not in mesh.component_ids():
        raise ComponentNotFound(f"no boundary component {component}")
    sel = mesh.boundary_edge_component == component
    return float(mesh.boundary_edge_lengths[sel].sum())


# ---------------------------------------------------------------------------
# mesh builders
# ---------------------------------------------------------------------------

def _arclength_samples(spec: PlanarDomainSpec, n: int) -> np.ndarray:
    """n boundary angles equally spaced in arclength."""
    theta = np.linspace(0.0, 2.0 * np.pi, _DENSE + 1)
    ds = np.hypot(spec.radius(theta), spec.radius_prime(theta))
    s = np.concatenate([[0.0], np.cumsum(0.5 * (ds[1:] + ds[:-1]) * np.diff(theta))])
    targets = np.linspace(0.0, s[-1], n, endpoint=False)
    return np.interp(targets, s, theta)


def _hex_lattice(bbox, spacing):
    """Deterministic hexagonal point lattice covering bbox."""
    (xmin, xmax), (ymin, ymax) = bbox
    dy = spacing * np.sqrt(3.0) / 2.0
    rows = int(np.ceil((ymax - ymin) / dy)) + 1
    cols = int(np.ceil((xmax - xmin) / spacing)) + 2
    pts = []
    for j in range(rows):
        y = ymin + j * dy
        x0 = xmin + (spacing / 2.0 if j % 2 else 0.0)
        xs = x0 + spacing * np.arange(cols)
        pts.append(np.stack([xs, np.full(cols, y)], axis=1))
    return np.concatenate(pts, axis=0)


def _extract_single_loop(triangles, n_boundary):
    """Boundary edges of `triangles` must form one loop over vertices 0..n_boundary-1."""
    count: dict = {}
    for tri in triangles:
        for i in range(3):
            a, b = int(tri[i]), int(tri[(i + 1) % 3])
            key = (min(a, b), max(a, b))
            count[key] = count.get(key, 0) + 1
    succ = {}
    n_bnd_edges = 0
    for tri in triangles:
        for i in range(3):
            a, b = int(tri[i]), int(tri[(i + 1) % 3])
            if count[(min(a, b), max(a, b))] == 1:
                succ[a] = b  # CCW triangle => domain on the left of a->b
                n_bnd_edges += 1
    if n_bnd_edges != n_boundary or set(succ) != set(range(n_boundary)):
        raise MeshQualityFailure(
            f"boundary is not a single loop over the {n_boundary} curve samples "
            f"({n_bnd_edges} boundary edges)"
        )
    loop = [0]
    while True:
        nxt = succ[loop[-1]]
        if nxt == 0:
            break
        loop.append(nxt)
    if len(loop) != n_boundary:
        raise MeshQualityFailure("boundary loop does not close over all samples")
    return np.asarray(loop, dtype=np.int32)


def _smooth_interior(vertices, triangles, n_fixed, rounds=4, relax=0.7):
    """Laplacian smoothing of interior vertices; reverts a round on fold-over."""
    verts = vertices.copy()
    nv = verts.shape[0]
    pairs = np.concatenate([triangles[:, [0, 1]], triangles[:, [1, 2]],
                            triangles[:, [2, 0]]], axis=0)
    pairs = np.concatenate([pairs, pairs[:, ::-1]], axis=0)
    deg = np.zeros(nv)
    np.add.at(deg, pairs[:, 0], 1.0)
    for _ in range(rounds):
        acc = np.zeros_like(verts)
        np.add.at(acc, pairs[:, 0], verts[pairs[:, 1]])
        target = acc / deg[:, None]
        prev = verts.copy()
        verts[n_fixed:] += relax * (target[n_fixed:] - verts[n_fixed:])
        areas, _, _ = _kernels.p1_local_matrices(verts[triangles])
        if np.min(areas) <= 0.0:
            verts = prev
            break
    return verts


def build_planar_mesh(spec: PlanarDomainSpec, h: float) -> TriMesh:
    """Mesh a star-shaped planar domain at target edge length h.

    Boundary vertices sit exactly on the analytic curve at near-uniform
    arclength spacing (~0.75 h, which keeps the polygon area error within the
    documented bounds); the interior is a clipped hexagonal lattice,
    triangulated by Delaunay and relaxed by a few smoothing rounds.
    """
    spec.validate()
    theta_min = np.linspace(0.0, 2.0 * np.pi, _DENSE, endpoint=False)
    rho_min = float(np.min(spec.radius(theta_min)))
    if h <= 0.0 or h > rho_min / 4.0:
        raise ValueError(f"h must lie in (0, rho_min/4]; got {h}")

    n_b = max(24, int(np.ceil(spec.perimeter() / (0.75 * h))))
    theta = _arclength_samples(spec, n_b)
    rho = spec.radius(theta)
    boundary = np.stack([rho * np.cos(theta), rho * np.sin(theta)], axis=1)

    lattice = _hex_lattice(((boundary[:, 0].min(), boundary[:, 0].max()),
                            (boundary[:, 1].min(), boundary[:, 1].max())), h)
    r = np.linalg.norm(lattice, axis=1)
    ang = np.arctan2(lattice[:, 1], lattice[:, 0])
    rho_l = spec.radius(ang)
    slope = spec.radius_prime(ang) / rho_l
    clearance = (rho_l - r) / np.sqrt(1.0 + slope * slope)
    interior = lattice[clearance > 0.7 * h]

    pts = np.concatenate([boundary, interior], axis=0)
    tri = Delaunay(pts)
    cent = pts[tri.simplices].mean(axis=1)
    c_ang = np.arctan2(cent[:, 1], cent[:, 0])
    keep = np.linalg.norm(cent, axis=1) < spec.radius(c_ang)
    triangles = tri.simplices[keep].astype(np.int32)

    # enforce positive orientation
    areas, _, _ = _kernels.p1_local_matrices(pts[triangles].astype(float))
    flip = areas < 0.0
    triangles[flip] = triangles[flip][:, ::-1]

    loop = _extract_single_loop(triangles, n_b)
    pts = _smooth_interior(pts, triangles, n_b)

    mesh = TriMesh(pts, triangles, [loop], h)
    mesh.check()
    if mesh.min_angle() < 20.0:
        raise MeshQualityFailure(
            f"min angle {mesh.min_angle():.2f} deg below 20 deg at h={h}"
        )
    return mesh


def build_rectangle_mesh(spec: RectangleDomainSpec, h: float) -> TriMesh:
    """Structured union-jack mesh of a rectangle at target edge length h."""
    nx = max(2, int(np.ceil(spec.width / h)))
    ny = max(2, int(np.ceil(spec.height / h)))
    xs = np.linspace(0.0, spec.width, nx + 1)
    ys = np.linspace(0.0, spec.height, ny + 1)
    X, Y = np.meshgrid(xs, ys, indexing="ij")
    verts = np.stack([X.reshape(-1), Y.reshape(-1)], axis=1)

    def vid(i, j):
        return i * (ny + 1) + j

    tris = []
    for i in range(nx):
        for j in range(ny):
            v00, v10 = vid(i, j), vid(i + 1, j)
            v01, v11 = vid(i, j + 1), vid(i + 1, j + 1)
            if (i + j) % 2 == 0:
                tris.append([v00, v10, v11])
                tris.append([v00, v11, v01])
            else:
                tris.append([v00, v10, v01])
                tris.append([v10, v11, v01])
    loop = (
        [vid(i, 0) for i in range(nx)]
        + [vid(nx, j) for j in range(ny)]
        + [vid(i, ny) for i in range(nx, 0, -1)]
        + [vid(0, j) for j in range(ny, 0, -1)]
    )
    mesh = TriMesh(verts, np.asarray(tris, dtype=np.int32),
                   [np.asarray(loop, dtype=np.int32)], h)
    mesh.check()
    return mesh


def build_cylinder_mesh(spec: CylinderDomainSpec, h: float) -> TriMesh:
    """Structured periodic mesh of a flat-cylinder domain.

    Columns of vertices at nx equally spaced S^1 positions (vertex-identified
    across the seam x = 0 == L), each column subdivided linearly between
    g_minus and g_plus. Exactly two boundary loops: the two height graphs.
    """
    spec.validate()
    if h <= 0.0 or h > spec.L / 16.0:
        raise ValueError(f"h must lie in (0, L/16]; got {h}")
    nx = int(np.ceil(spec.L / h))
    nx += nx % 2  # even column count keeps the alternating diagonals periodic
    x = spec.L * np.arange(nx) / nx
    gp = spec.g_plus(x, spec.L)
    gm = spec.g_minus(x, spec.L)
    ny = max(4, int(np.ceil(np.max(gp - gm) / h)))

    # vertex (i, j) -> index i*(ny+1)+j, coordinates (t, x)
    frac = np.arange(ny + 1) / ny
    T = gm[:, None] + (gp - gm)[:, None] * frac[None, :]
    X = np.repeat(x, ny + 1).reshape(nx, ny + 1)
    verts = np.stack([T.reshape(-1), X.reshape(-1)], axis=1)

    def vid(i, j):
        return (i % nx) * (ny + 1) + j

    tris, wrap = [], []
    for i in range(nx):
        w_next = 1 if i == nx - 1 else 0  # column i+1 wraps past the seam
        for j in range(ny):
            v00, v10 = vid(i, j), vid(i + 1, j)
            v01, v11 = vid(i, j + 1), vid(i + 1, j + 1)
            if (i + j) % 2 == 0:
                tris.append([v00, v11, v10])
                wrap.append([0, w_next, w_next])
                tris.append([v00, v01, v11])
                wrap.append([0, 0, w_next])
            else:
                tris.append([v00, v01, v10])
                wrap.append([0, 0, w_next])
                tris.append([v01, v11, v10])
                wrap.append([0, w_next, w_next])
    # domain-on-the-left loop orientation: g_plus graph in +x, g_minus in -x
    top = [vid(i, ny) for i in range(nx)]
    bottom = [vid(i, 0) for i in range(nx - 1, -1, -1)]
    mesh = TriMesh(
        verts,
        np.asarray(tris, dtype=np.int32),
        [np.asarray(top, dtype=np.int32), np.asarray(bottom, dtype=np.int32)],
        h,
        periodic=True,
        period=spec.L,
        tri_wrap=np.asarray(wrap, dtype=np.int8),
    )
    mesh.check()
    return mesh


def nearest_boundary_distance(mesh: TriMesh, points: np.ndarray) -> np.ndarray:
    """Distance from each point to the nearest boundary vertex.

    On periodic meshes the boundary cloud is replicated at +/- one period so
    seam proximity is measured correctly.
    """
    bpts = mesh.vertices[mesh.boundary_vertex_ids]
    if mesh.periodic:
        shift = np.array([0.0, mesh.period])
        bpts = np.concatenate([bpts, bpts + shift, bpts - shift], axis=0)
    tree = cKDTree(bpts)
    d, _ = tree.query(points)
    return d
