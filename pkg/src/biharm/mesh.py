"""Conforming triangle meshes and newest-vertex bisection.

Every triangle is stored as ``(a, b, c)`` with positive orientation and its
refinement edge between local vertices 0 and 1; ``c`` is the newest vertex.
Local edge ``k`` joins local vertices ``k`` and ``k + 1 (mod 3)``, so local
edge 0 is always the refinement edge.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

LOCAL_EDGES = np.array([[0, 1], [1, 2], [2, 0]])


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class Mesh:
    """Immutable conforming triangulation.

    Only ``vertices``, ``triangles`` and ``level`` are primary data; the edge
    incidence is derived once at construction.

    Attributes
    ----------
    vertices : (nv, 2) float array
    triangles : (nt, 3) int array, refinement edge between columns 0 and 1
    level : (nt,) int array, number of bisections since the initial mesh
    edges : (ne, 2) int array, sorted vertex pairs
    tri_edges : (nt, 3) int array, global edge of each local edge
    edge_tris : (ne, 2) int array, ``(T+, T-)`` with ``T- = -1`` on the boundary
    boundary : (ne,) bool array
    normals : (ne, 2) float array, unit normal pointing out of ``T+``
    """

    vertices: np.ndarray
    triangles: np.ndarray
    level: np.ndarray
    edges: np.ndarray = field(init=False)
    tri_edges: np.ndarray = field(init=False)
    edge_tris: np.ndarray = field(init=False)
    boundary: np.ndarray = field(init=False)
    normals: np.ndarray = field(init=False)

    def __post_init__(self) -> None:
        verts = np.asarray(self.vertices, dtype=float)
        tris = np.asarray(self.triangles, dtype=np.int64)
        level = np.asarray(self.level, dtype=np.int64)
        object.__setattr__(self, "vertices", _readonly(verts))
        object.__setattr__(self, "triangles", _readonly(tris))
        object.__setattr__(self, "level", _readonly(level))

        nt = len(tris)
        pairs = np.sort(tris[:, LOCAL_EDGES].reshape(-1, 2), axis=1)
        edges, inverse, counts = np.unique(
            pairs, axis=0, return_inverse=True, return_counts=True
        )
        inverse = inverse.reshape(-1)
        if np.any(counts > 2):
            raise ValueError("non-manifold mesh: an edge has more than two triangles")
        tri_edges = inverse.reshape(nt, 3)

        # First occurrence in triangle order is T+ (smaller triangle index).
        owner = np.repeat(np.arange(nt), 3)
        order = np.lexsort((owner, inverse))
        sorted_edges = inverse[order]
        sorted_owner = owner[order]
        first = np.ones(len(order), dtype=bool)
        first[1:] = sorted_edges[1:] != sorted_edges[:-1]
        edge_tris = np.full((len(edges), 2), -1, dtype=np.int64)
        edge_tris[sorted_edges[first], 0] = sorted_owner[first]
        edge_tris[sorted_edges[~first], 1] = sorted_owner[~first]

        boundary = edge_tris[:, 1] < 0

        # Outward normal of T+ along each edge.
        normals = np.empty((len(edges), 2))
        tri_local = np.empty(len(edges), dtype=np.int64)
        plus = edge_tris[:, 0]
        for k in range(3):
            hit = tri_edges[plus, k] == np.arange(len(edges))
            tri_local[hit] = k
        a = verts[tris[plus, LOCAL_EDGES[tri_local, 0]]]
        b = verts[tris[plus, LOCAL_EDGES[tri_local, 1]]]
        d = b - a
        # Counter-clockwise triangles: the outward normal is the tangent turned clockwise.
        normals[:, 0] = d[:, 1]
        normals[:, 1] = -d[:, 0]
        normals /= np.linalg.norm(normals, axis=1)[:, None]

        object.__setattr__(self, "edges", _readonly(edges.astype(np.int64)))
        object.__setattr__(self, "tri_edges", _readonly(tri_edges))
        object.__setattr__(self, "edge_tris", _readonly(edge_tris))
        object.__setattr__(self, "boundary", _readonly(boundary))
        object.__setattr__(self, "normals", _readonly(normals))

    # -- sizes -------------------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_triangles(self) -> int:
        return len(self.triangles)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    # -- geometry ----------------------------------------------------------

    def corners(self) -> np.ndarray:
        """Vertex coordinates per triangle, shape ``(nt, 3, 2)``."""
        return self.vertices[self.triangles]

    def signed_areas(self) -> np.ndarray:
        p = self.corners()
        e1 = p[:, 1] - p[:, 0]
        e2 = p[:, 2] - p[:, 0]
        return 0.5 * (e1[:, 0] * e2[:, 1] - e1[:, 1] * e2[:, 0])

    def areas(self) -> np.ndarray:
        return np.abs(self.signed_areas())

    def edge_lengths(self) -> np.ndarray:
        d = self.vertices[self.edges[:, 1]] - self.vertices[self.edges[:, 0]]
        return np.hypot(d[:, 0], d[:, 1])

    def diameters(self) -> np.ndarray:
        """Triangle diameters, i.e. longest edge lengths."""
        return self.edge_lengths()[self.tri_edges].max(axis=1)

    def inradii(self) -> np.ndarray:
        perimeter = self.edge_lengths()[self.tri_edges].sum(axis=1)
        return 2.0 * self.areas() / perimeter

    def centroids(self) -> np.ndarray:
        return self.corners().mean(axis=1)

    def h_max(self) -> float:
        return float(self.diameters().max())

    def shape_ratios(self) -> np.ndarray:
        return self.diameters() / self.inradii()

    def boundary_vertices(self) -> np.ndarray:
        """Indices of vertices on the domain boundary."""
        return np.unique(self.edges[self.boundary].ravel())

    # -- output ------------------------------------------------------------

    def dump(self, path: str | Path) -> None:
        """Write ``v x y`` and ``t i j k`` lines for external viewers."""
        lines = [f"v {x!r} {y!r}" for x, y in self.vertices]
        lines += [f"t {i} {j} {k}" for i, j, k in self.triangles]
        Path(path).write_text("\n".join(lines) + "\n")


def _right_triangles(vertices: np.ndarray, quads: list[tuple[int, int, int, int]],
                     diagonals: list[int]) -> np.ndarray:
    """Split counter-clockwise quads ``(p0, p1, p2, p3)`` along a diagonal.

    ``diagonals[q] == 0`` splits along p0-p2, otherwise along p1-p3.  The
    diagonal is the hypotenuse and becomes the refinement edge of both halves.
    """
    tris = []
    for (p0, p1, p2, p3), diag in zip(quads, diagonals):
        if diag == 0:
            tris.append((p0, p2, p3))
            tris.append((p2, p0, p1))
        else:
            tris.append((p1, p3, p0))
            tris.append((p3, p1, p2))
    return np.array(tris, dtype=np.int64)


def generate_square_mesh(n: int) -> Mesh:
    """Uniform ``n x n`` triangulation of the unit square with parallel diagonals."""
    if n < 1:
        raise ValueError("n must be >= 1")
    xs = np.linspace(0.0, 1.0, n + 1)
    X, Y = np.meshgrid(xs, xs, indexing="xy")
    vertices = np.column_stack([X.ravel(), Y.ravel()])

    def vid(i: int, j: int) -> int:
        return j * (n + 1) + i

    quads = [
        (vid(i, j), vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1))
        for j in range(n)
        for i in range(n)
    ]
    tris = _right_triangles(vertices, quads, [0] * len(quads))
    return Mesh(vertices, tris, np.zeros(len(tris), dtype=np.int64))


def generate_lshape_mesh() -> Mesh:
    """Coarsest mesh of (-1, 1)^2 minus [0, 1] x [-1, 0]: three squares, six triangles.

    All three diagonals meet at the reentrant corner, which keeps the mesh
    symmetric about the line ``y = -x``.
    """
    vertices = np.array(
        [
            [-1.0, -1.0],
            [0.0, -1.0],
            [-1.0, 0.0],
            [0.0, 0.0],
            [1.0, 0.0],
            [-1.0, 1.0],
            [0.0, 1.0],
            [1.0, 1.0],
        ]
    )
    quads = [(0, 1, 3, 2), (2, 3, 6, 5), (3, 4, 7, 6)]
    tris = _right_triangles(vertices, quads, [0, 1, 0])
    return Mesh(vertices, tris, np.zeros(len(tris), dtype=np.int64))


def refinement_closure(mesh: Mesh, marked: np.ndarray) -> np.ndarray:
    """Edges to bisect so that every marked triangle is refined conformingly."""
    edge_marked = np.zeros(mesh.n_edges, dtype=bool)
    edge_marked[mesh.tri_edges[marked, 0]] = True
    while True:
        touched = edge_marked[mesh.tri_edges].any(axis=1)
        need = touched & ~edge_marked[mesh.tri_edges[:, 0]]
        if not need.any():
            return edge_marked
        edge_marked[mesh.tri_edges[need, 0]] = True


def refine(mesh: Mesh, marked) -> Mesh:
    """Newest-vertex bisection of the marked triangles plus conforming closure.

    Each triangle is bisected once, twice or three times (into 2, 3 or 4
    children) depending on how many of its edges the closure marks.  The
    returned mesh keeps all old vertices in place; new midpoints are appended.
    """
    marked = np.unique(np.asarray(list(marked) if not isinstance(marked, np.ndarray)
                                  else marked, dtype=np.int64))
    if marked.size == 0:
        return mesh
    if marked.min() < 0 or marked.max() >= mesh.n_triangles:
        raise IndexError("marked triangle index out of range")

    return _bisect(mesh, refinement_closure(mesh, marked))


def _bisect(mesh: Mesh, edge_marked: np.ndarray) -> Mesh:
    """Bisect every triangle across its marked edges (closure already applied)."""
    mid = np.full(mesh.n_edges, -1, dtype=np.int64)
    new_edges = np.flatnonzero(edge_marked)
    mid[new_edges] = mesh.n_vertices + np.arange(len(new_edges))
    midpoints = mesh.vertices[mesh.edges[new_edges]].mean(axis=1)
    vertices = np.vstack([mesh.vertices, midpoints])

    T = mesh.triangles
    E = mesh.tri_edges
    lev = mesh.level
    v0, v1, v2 = T[:, 0], T[:, 1], T[:, 2]
    m0, m1, m2 = mid[E[:, 0]], mid[E[:, 1]], mid[E[:, 2]]

    keep = ~edge_marked[E[:, 0]]
    bis = ~keep
    b1 = bis & edge_marked[E[:, 1]]
    b2 = bis & edge_marked[E[:, 2]]

    # Children are grouped per parent so triangle order follows parent order.
    # Child A = (v2, v0, m0) (refinement edge = parent edge 2), child B =
    # (v1, v2, m0) (refinement edge = parent edge 1).
    slots = np.full((mesh.n_triangles, 4, 3), -1, dtype=np.int64)
    slot_level = np.zeros((mesh.n_triangles, 4), dtype=np.int64)
    slots[keep, 0] = T[keep]
    slot_level[keep, 0] = lev[keep]

    a_only = bis & ~b2
    slots[a_only, 0] = np.column_stack([v2, v0, m0])[a_only]
    slot_level[a_only, 0] = lev[a_only] + 1
    slots[b2, 0] = np.column_stack([m0, v2, m2])[b2]
    slots[b2, 1] = np.column_stack([v0, m0, m2])[b2]
    slot_level[b2, 0:2] = (lev[b2] + 2)[:, None]

    b_only = bis & ~b1
    slots[b_only, 2] = np.column_stack([v1, v2, m0])[b_only]
    slot_level[b_only, 2] = lev[b_only] + 1
    slots[b1, 2] = np.column_stack([m0, v1, m1])[b1]
    slots[b1, 3] = np.column_stack([v2, m0, m1])[b1]
    slot_level[b1, 2:4] = (lev[b1] + 2)[:, None]

    used = slots[:, :, 0] >= 0
    triangles = slots[used]
    level = slot_level[used]
    return Mesh(vertices, triangles, level)


def uniform_refine(mesh: Mesh) -> Mesh:
    """Split every triangle into four by two generations of bisection."""
    return _bisect(mesh, np.ones(mesh.n_edges, dtype=bool))
