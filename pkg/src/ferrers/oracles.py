"""Brute-force and determinant checks, independent of the bijections.

Nothing here imports the rook, Hamiltonian or spanning-tree conversion
code: these routines search the Ferrers graph directly or evaluate the
matrix-tree determinant, so they can be used to check those modules.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from .diagram import FerrersDiagram, Square, Vertex, col, edges, row, vertices
from .errors import RejectedInput, ResourceLimit
from .hamiltonian import HamiltonianPath, canonical

DEFAULT_TREE_CAP = 10**6

Matrix = List[List[int]]


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination.

    Every intermediate division is exact, so entries stay integers.
    """
    a = [list(r) for r in matrix]
    size = len(a)
    if any(len(r) != size for r in a):
        raise RejectedInput("determinant needs a square matrix")
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[-1][-1]


def laplacian(
    verts: Sequence[Vertex], weighted_edges: Sequence[Tuple[Vertex, Vertex, int]]
) -> Matrix:
    """Weighted Laplacian (degree minus adjacency) in the order of ``verts``."""
    pos = {v: i for i, v in enumerate(verts)}
    size = len(verts)
    lap = [[0] * size for _ in range(size)]
    for u, v, w in weighted_edges:
        i, j = pos[u], pos[v]
        lap[i][i] += w
        lap[j][j] += w
        lap[i][j] -= w
        lap[j][i] -= w
    return lap


def reduced_laplacian(
    d: FerrersDiagram,
    weights: Optional[Tuple[Sequence[int], Sequence[int]]] = None,
    squares: Optional[Sequence[Square]] = None,
) -> Matrix:
    """Laplacian of the Ferrers graph with the row-1 vertex deleted.

    ``weights`` is ``(x, y)``; edge ``(a, b)`` then carries ``x[a-1] * y[b-1]``.
    ``squares`` restricts the graph to a subset of the diagram's edges.
    """
    if squares is None:
        squares = edges(d)
    if weights is None:
        wedges = [(row(a), col(b), 1) for a, b in squares]
    else:
        x, y = weights
        wedges = [(row(a), col(b), x[a - 1] * y[b - 1]) for a, b in squares]
    verts = vertices(d)
    lap = laplacian(verts, wedges)
    drop = verts.index(row(1))
    return [r[:drop] + r[drop + 1:] for i, r in enumerate(lap) if i != drop]


def kirchhoff_count(d: FerrersDiagram) -> int:
    """Number of spanning trees via the matrix-tree theorem."""
    return bareiss_determinant(reduced_laplacian(d))


def weighted_kirchhoff(d: FerrersDiagram, w) -> int:
    """Sum over spanning trees of the product of edge weights ``x_a * y_b``."""
    x, y = tuple(w.x), tuple(w.y)
    if len(x) != d.m or len(y) != d.n:
        raise RejectedInput(f"weights must have lengths {d.m} and {d.n}, got {len(x)} and {len(y)}")
    return bareiss_determinant(reduced_laplacian(d, (x, y)))


def _adjacency(d: FerrersDiagram) -> Dict[Vertex, List[Vertex]]:
    adj: Dict[Vertex, List[Vertex]] = {v: [] for v in vertices(d)}
    for a, b in edges(d):
        adj[row(a)].append(col(b))
        adj[col(b)].append(row(a))
    return adj


def enumerate_hamiltonian_paths(d: FerrersDiagram) -> List[HamiltonianPath]:
    """All Hamiltonian paths of the Ferrers graph by depth-first search.

    Each undirected path is reported once, oriented from its row end when
    it has exactly one (see :func:`ferrers.hamiltonian.canonical`).
    """
    adj = _adjacency(d)
    total = len(adj)
    found = set()
    trail: List[Vertex] = []
    on_trail = set()

    def extend(v):
        trail.append(v)
        on_trail.add(v)
        if len(trail) == total:
            found.add(canonical(trail))
        else:
            for u in adj[v]:
                if u not in on_trail:
                    extend(u)
        trail.pop()
        on_trail.discard(v)

    for start in adj:
        extend(start)

    def key(p):
        return [(0 if v.is_row else 1, v.index) for v in p.vertices]

    return sorted(found, key=key)


def enumerate_spanning_trees(d: FerrersDiagram, cap: int = DEFAULT_TREE_CAP) -> List[Tuple[Square, ...]]:
    """Every spanning tree as a sorted edge tuple, in lexicographic order.

    Edges are decided in row-major order: include when no cycle forms,
    exclude only when the remaining edges can still connect the graph.
    Raises :class:`ResourceLimit` once more than ``cap`` trees are found.
    """
    sq = edges(d)
    verts = vertices(d)
    need = len(verts) - 1
    out: List[Tuple[Square, ...]] = []

    def find(parent, v):
        while parent[v] != v:
            v = parent[v]
        return v

    def connected(chosen, rest):
        parent = {v: v for v in verts}
        comps = len(verts)
        for a, b in list(chosen) + list(rest):
            ra, rb = find(parent, row(a)), find(parent, col(b))
            if ra != rb:
                parent[ra] = rb
                comps -= 1
        return comps == 1

    def creates_cycle(chosen, e):
        parent = {v: v for v in verts}
        for a, b in chosen:
            parent[find(parent, row(a))] = find(parent, col(b))
        return find(parent, row(e[0])) == find(parent, col(e[1]))

    def search(i, chosen):
        if len(chosen) == need:
            out.append(tuple(chosen))
            if len(out) > cap:
                raise ResourceLimit(f"more than {cap} spanning trees for shape {d}")
            return
        if i == len(sq) or len(chosen) + len(sq) - i < need:
            return
        e = sq[i]
        if not creates_cycle(chosen, e):
            chosen.append(e)
            search(i + 1, chosen)
            chosen.pop()
        if connected(chosen, sq[i + 1:]):
            search(i + 1, chosen)

    if connected([], sq):
        search(0, [])
    return sorted(out)
