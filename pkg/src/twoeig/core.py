"""Signed matrices, signed graphs, and switching equivalence.

Everything in this module is exact: entries live in {-1, 0, +1} (stored as
int8) and all products are taken in 64-bit integers, so orthogonality is an
integer identity, never a numerical judgement.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

import numpy as np

__all__ = [
    "SignedMatrix",
    "SignedGraph",
    "Graph",
    "OrthogonalityCertificate",
    "ground",
    "star",
    "is_orthogonal",
    "resign",
    "switching_canonical",
    "switching_equivalent",
    "count_switching_classes",
    "enumerate_switching_classes",
    "is_regular",
    "disjoint_union",
]

MAX_ENUM_EDGES = 20


def _as_trit_array(data) -> np.ndarray:
    arr = np.asarray(data)
    if arr.ndim != 2:
        raise ValueError(f"matrix must be 2-dimensional, got shape {arr.shape}")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError(f"matrix must be at least 1x1, got shape {arr.shape}")
    if not np.isin(arr, (-1, 0, 1)).all():
        raise ValueError("entries must be -1, 0 or +1")
    out = arr.astype(np.int8)
    out.setflags(write=False)
    return out


def _trit_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact a @ b for matrices with entries in {-1, 0, 1}.

    Every partial sum is an integer no larger than the inner dimension,
    far inside the range where float64 arithmetic is exact, so the BLAS
    product equals the integer product while avoiding the much slower
    int64 matmul path at large orders.
    """
    prod = a.astype(np.float64) @ b.astype(np.float64)
    return np.rint(prod).astype(np.int64)


class SignedMatrix:
    """Dense rectangular matrix over {-1, 0, +1}."""

    __slots__ = ("data",)

    def __init__(self, data):
        self.data = _as_trit_array(data)

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def wide(self) -> np.ndarray:
        """Entries as a fresh int64 array, for exact products."""
        return self.data.astype(np.int64)

    def transpose(self) -> "SignedMatrix":
        return SignedMatrix(self.data.T)

    @classmethod
    def identity(cls, n: int) -> "SignedMatrix":
        return cls(np.eye(n, dtype=np.int8))

    def __eq__(self, other):
        if not isinstance(other, SignedMatrix):
            return NotImplemented
        return self.data.shape == other.data.shape and np.array_equal(self.data, other.data)

    def __hash__(self):
        return hash((self.data.shape, self.data.tobytes()))

    def __repr__(self):
        return f"SignedMatrix({self.data.tolist()!r})"


@dataclass(frozen=True)
class OrthogonalityCertificate:
    """Witness that C C^t = C^t C = alpha I holds exactly."""

    alpha: int

    def __post_init__(self):
        if self.alpha < 1:
            raise ValueError("alpha must be a positive integer")


class Graph:
    """Simple labeled graph: no loops, no multi-edges, vertices 0..n-1."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen = set()
        for e in edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range [0, {n})")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge ({key[0]}, {key[1]})")
            seen.add(key)
        self.n = n
        self.edges = frozenset(seen)

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def neighbors(self) -> list[list[int]]:
        """Adjacency lists, each sorted ascending."""
        nbr: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbr[u].append(v)
            nbr[v].append(u)
        for lst in nbr:
            lst.sort()
        return nbr

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int8)
        for u, v in self.edges:
            a[u, v] = 1
            a[v, u] = 1
        return a

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        nbr = self.neighbors()
        seen = [False] * self.n
        comps = []
        for root in range(self.n):
            if seen[root]:
                continue
            seen[root] = True
            comp = [root]
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for v in nbr[u]:
                    if not seen[v]:
                        seen[v] = True
                        comp.append(v)
                        queue.append(v)
            comps.append(sorted(comp))
        return comps

    def bipartition(self) -> tuple[list[int], list[int]] | None:
        """A 2-coloring (X, Y) of the vertices, or None if an odd cycle exists.

        Components are colored independently; each component's larger color
        class goes to whichever side is currently smaller, so equal-size
        bipartitions are found whenever the component structure allows it.
        """
        nbr = self.neighbors()
        color = [-1] * self.n
        sides: tuple[list[int], list[int]] = ([], [])
        for root in range(self.n):
            if color[root] != -1:
                continue
            color[root] = 0
            part: tuple[list[int], list[int]] = ([root], [])
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for v in nbr[u]:
                    if color[v] == -1:
                        color[v] = 1 - color[u]
                        part[color[v]].append(v)
                        queue.append(v)
                    elif color[v] == color[u]:
                        return None
            big, small = (part[0], part[1]) if len(part[0]) >= len(part[1]) else (part[1], part[0])
            if len(sides[0]) <= len(sides[1]):
                sides[0].extend(big)
                sides[1].extend(small)
            else:
                sides[0].extend(small)
                sides[1].extend(big)
        return sorted(sides[0]), sorted(sides[1])

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, itertools.combinations(range(n), 2))

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> "Graph":
        return cls(a + b, ((i, a + j) for i in range(a) for j in range(b)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("cycle needs at least 3 vertices")
        return cls(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, ((i, i + 1) for i in range(n - 1)))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph({self.n}, {self.sorted_edges()!r})"


def disjoint_union(*graphs: Graph) -> Graph:
    """Disjoint union, relabeling each graph's vertices after the previous one."""
    n = 0
    edges = []
    for g in graphs:
        edges.extend((u + n, v + n) for u, v in g.edges)
        n += g.n
    return Graph(n, edges)


class SignedGraph:
    """Symmetric zero-diagonal signed matrix viewed as a graph plus signature."""

    __slots__ = ("matrix",)

    def __init__(self, matrix):
        sm = matrix if isinstance(matrix, SignedMatrix) else SignedMatrix(matrix)
        if not sm.is_square:
            raise ValueError("adjacency matrix must be square")
        if not np.array_equal(sm.data, sm.data.T):
            raise ValueError("adjacency matrix must be symmetric")
        if np.any(np.diagonal(sm.data) != 0):
            raise ValueError("diagonal entries must all be 0")
        self.matrix = sm

    @property
    def n(self) -> int:
        return self.matrix.rows

    def edge_signs(self) -> dict[tuple[int, int], int]:
        """Map (u, v) with u < v to the edge sign."""
        a = self.matrix.data
        iu, iv = np.nonzero(np.triu(a, 1))
        return {(int(u), int(v)): int(a[u, v]) for u, v in zip(iu, iv)}

    @classmethod
    def from_edges(cls, n: int, signed_edges) -> "SignedGraph":
        """Build from (u, v, sign) triples; sign must be +1 or -1."""
        a = np.zeros((n, n), dtype=np.int8)
        for u, v, s in signed_edges:
            if s not in (1, -1):
                raise ValueError(f"edge ({u}, {v}) has sign {s}, expected +1 or -1")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range [0, {n})")
            if a[u, v] != 0:
                raise ValueError(f"duplicate edge ({u}, {v})")
            a[u, v] = s
            a[v, u] = s
        return cls(a)

    @classmethod
    def all_positive(cls, g: Graph) -> "SignedGraph":
        return cls(g.adjacency())

    def __eq__(self, other):
        if not isinstance(other, SignedGraph):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"SignedGraph({self.matrix.data.tolist()!r})"


def ground(sg: SignedGraph) -> Graph:
    """The underlying unsigned graph (entrywise absolute value)."""
    a = sg.matrix.data
    iu, iv = np.nonzero(np.triu(a, 1))
    return Graph(sg.n, zip(iu.tolist(), iv.tolist()))


def star(c: SignedMatrix) -> SignedGraph:
    """The 2n-vertex bipartite signed graph with block adjacency [[O, C], [C^t, O]]."""
    if not c.is_square:
        raise ValueError(f"star operator needs a square matrix, got {c.rows}x{c.cols}")
    n = c.rows
    a = np.zeros((2 * n, 2 * n), dtype=np.int8)
    a[:n, n:] = c.data
    a[n:, :n] = c.data.T
    return SignedGraph(a)


def is_orthogonal(c: SignedMatrix) -> OrthogonalityCertificate | None:
    """Certificate with CC^t = C^tC = alpha I, checked in exact integer arithmetic."""
    if not c.is_square:
        raise ValueError(f"orthogonality is defined for square matrices, got {c.rows}x{c.cols}")
    n = c.rows
    gram = _trit_product(c.data, c.data.T)
    alpha = int(gram[0, 0])
    if alpha < 1:
        return None
    target = alpha * np.eye(n, dtype=np.int64)
    if not np.array_equal(gram, target):
        return None
    # a symmetric matrix has C^tC = CC^t, so the second product is redundant
    if not np.array_equal(c.data, c.data.T) and not np.array_equal(
        _trit_product(c.data.T, c.data), target
    ):
        return None
    return OrthogonalityCertificate(alpha)


def resign(sg: SignedGraph, v: int) -> SignedGraph:
    """Negate all edge signs at vertex v (the diagonal stays 0)."""
    if not (0 <= v < sg.n):
        raise ValueError(f"vertex {v} out of range [0, {sg.n})")
    a = sg.matrix.data.copy()
    a[v, :] *= -1
    a[:, v] *= -1
    return SignedGraph(a)


def _bfs_forest(g: Graph) -> list[tuple[int, int]]:
    """BFS spanning-forest edges (parent, child) in discovery order.

    Each component is rooted at its lowest-index vertex and neighbors are
    visited in increasing index order, so the forest is canonical.
    """
    nbr = g.neighbors()
    seen = [False] * g.n
    order: list[tuple[int, int]] = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in nbr[u]:
                if not seen[v]:
                    seen[v] = True
                    order.append((u, v))
                    queue.append(v)
    return order


def switching_canonical(sg: SignedGraph) -> SignedGraph:
    """Deterministic representative of the switching class.

    Resigns so that every edge of the canonical BFS spanning forest gets sign
    +1; the residual signs on the co-forest edges depend only on the class.
    """
    g = ground(sg)
    a = sg.matrix.data
    d = np.ones(g.n, dtype=np.int8)
    for u, v in _bfs_forest(g):
        d[v] = d[u] * a[u, v]
    return SignedGraph(d[:, None] * a * d[None, :])


def switching_equivalent(a: SignedGraph, b: SignedGraph) -> bool:
    """True iff the two signed graphs are related by a sequence of resignings."""
    if a.n != b.n:
        raise ValueError(f"ground mismatch: {a.n} vs {b.n} vertices")
    return switching_canonical(a) == switching_canonical(b)


def count_switching_classes(g: Graph) -> int:
    """2^(m - n + c): the number of distinct signed graphs on g."""
    return 2 ** (g.m - g.n + len(g.components()))


def enumerate_switching_classes(g: Graph) -> list[SignedGraph]:
    """Brute force over all 2^m signatures, grouped by canonical form.

    Returns one representative (the canonical form) per switching class, in a
    deterministic order. This is the oracle against the 2^(m-n+c) formula, so
    it deliberately walks every signature instead of using the formula.
    """
    if g.m > MAX_ENUM_EDGES:
        raise ValueError(f"too many edges for enumeration: {g.m} > {MAX_ENUM_EDGES}")
    edges = g.sorted_edges()
    index = {e: i for i, e in enumerate(edges)}
    forest = [(u, v, index[(u, v) if u < v else (v, u)]) for u, v in _bfs_forest(g)]
    classes: dict[tuple[int, ...], None] = {}
    d = [1] * g.n
    for signs in itertools.product((1, -1), repeat=g.m):
        for u, v, i in forest:
            d[v] = d[u] * signs[i]
        key = tuple(d[u] * d[v] * signs[i] for i, (u, v) in enumerate(edges))
        classes.setdefault(key, None)
    reps = []
    for key in sorted(classes):
        reps.append(SignedGraph.from_edges(g.n, ((u, v, s) for (u, v), s in zip(edges, key))))
    return reps


def is_regular(g: Graph) -> int | None:
    """The common vertex degree, or None if degrees differ."""
    degrees = g.degrees()
    if not degrees:
        return None
    first = degrees[0]
    return first if all(d == first for d in degrees) else None
