"""Directed acyclic graphs and their derived structure.

Vertices are the integers ``1..d``.  A :class:`Dag` validates its edge set on
construction and precomputes a well-ordering (a topological order, smallest
label first among ties) and the reachability matrix.  Input labelings do not
have to respect the edge directions; the well-ordering is stored alongside
and no relabeling is ever performed.
"""

from __future__ import annotations

import heapq
from collections import deque
from itertools import combinations
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    CycleError,
    DimensionMismatch,
    DuplicateEdgeError,
    VertexOutOfRange,
)

Edge = tuple[int, int]


def _check_vertex(v: int, d: int) -> None:
    if not isinstance(v, (int, np.integer)) or isinstance(v, bool):
        raise VertexOutOfRange(f"vertex labels must be integers, got {v!r}")
    if not 1 <= v <= d:
        raise VertexOutOfRange(f"vertex {v} outside 1..{d}")


class UndirectedGraph:
    """Simple undirected graph on vertices ``1..d``.

    Edges are stored canonically as pairs ``(u, v)`` with ``u < v``; the
    adjacency relation is symmetric and irreflexive.
    """

    __slots__ = ("_d", "_edges", "_adj")

    def __init__(self, d: int, edges: Iterable[Edge]):
        if d < 1:
            raise VertexOutOfRange(f"vertex count must be positive, got {d}")
        self._d = int(d)
        adj: dict[int, set[int]] = {v: set() for v in range(1, d + 1)}
        canon: set[Edge] = set()
        for u, v in edges:
            _check_vertex(u, d)
            _check_vertex(v, d)
            if u == v:
                raise VertexOutOfRange(f"self-loop at vertex {u}")
            canon.add((min(u, v), max(u, v)))
            adj[u].add(v)
            adj[v].add(u)
        self._edges = frozenset(canon)
        self._adj = {v: frozenset(nb) for v, nb in adj.items()}

    @property
    def d(self) -> int:
        return self._d

    @property
    def edges(self) -> frozenset[Edge]:
        return self._edges

    def neighbors(self, v: int) -> frozenset[int]:
        _check_vertex(v, self._d)
        return self._adj[v]

    def adjacent(self, u: int, v: int) -> bool:
        _check_vertex(u, self._d)
        _check_vertex(v, self._d)
        return v in self._adj[u]

    def separated(self, a: Iterable[int], b: Iterable[int], s: Iterable[int] = ()) -> bool:
        """True iff every path from ``a`` to ``b`` intersects ``s``."""
        A, B, S = set(a), set(b), set(s)
        for v in A | B | S:
            _check_vertex(v, self._d)
        seen = set(A)
        stack = [v for v in A if v not in S]
        while stack:
            v = stack.pop()
            if v in B:
                return False
            for w in self._adj[v]:
                if w in B:
                    return False
                if w not in seen and w not in S:
                    seen.add(w)
                    stack.append(w)
        return True

    def __eq__(self, other) -> bool:
        if not isinstance(other, UndirectedGraph):
            return NotImplemented
        return self._d == other._d and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._d, self._edges))

    def __repr__(self) -> str:
        return f"UndirectedGraph(d={self._d}, edges={sorted(self._edges)})"


class Dag:
    """Directed acyclic graph on vertices ``1..d``.

    Parameters
    ----------
    d : int
        Number of vertices.
    edges : iterable of (int, int)
        Directed edges ``(u, v)`` meaning ``u -> v``.
    names : sequence of str, optional
        External display names, one per vertex.  Purely cosmetic; all
        algorithms operate on the integer labels.

    Raises
    ------
    VertexOutOfRange, DuplicateEdgeError, CycleError
    """

    __slots__ = ("_d", "_edges", "_parents", "_children", "_well_order", "_reach", "_names")

    def __init__(self, d: int, edges: Iterable[Edge] = (), names: Optional[Sequence[str]] = None):
        if not isinstance(d, (int, np.integer)) or isinstance(d, bool) or d < 1:
            raise VertexOutOfRange(f"vertex count must be a positive integer, got {d!r}")
        self._d = int(d)
        parents: dict[int, set[int]] = {v: set() for v in range(1, d + 1)}
        children: dict[int, set[int]] = {v: set() for v in range(1, d + 1)}
        seen: set[Edge] = set()
        for u, v in edges:
            _check_vertex(u, d)
            _check_vertex(v, d)
            if u == v:
                raise CycleError(f"self-loop at vertex {u}")
            if (u, v) in seen:
                raise DuplicateEdgeError(f"edge ({u}, {v}) given twice")
            seen.add((u, v))
            parents[v].add(u)
            children[u].add(v)
        self._edges = frozenset(seen)
        self._parents = {v: frozenset(p) for v, p in parents.items()}
        self._children = {v: frozenset(c) for v, c in children.items()}
        self._well_order = self._topological_order()
        self._reach = self._reachability()
        if names is not None:
            names = tuple(str(s) for s in names)
            if len(names) != self._d:
                raise DimensionMismatch(f"got {len(names)} names for {self._d} vertices")
        self._names = names

    def _topological_order(self) -> tuple[int, ...]:
        indeg = {v: len(self._parents[v]) for v in range(1, self._d + 1)}
        heap = [v for v, k in indeg.items() if k == 0]
        heapq.heapify(heap)
        order = []
        while heap:
            v = heapq.heappop(heap)
            order.append(v)
            for w in self._children[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    heapq.heappush(heap, w)
        if len(order) < self._d:
            stuck = sorted(v for v, k in indeg.items() if k > 0)
            raise CycleError(f"edges contain a directed cycle among vertices {stuck}")
        return tuple(order)

    def _reachability(self) -> np.ndarray:
        # reach[v-1, u-1] is True iff u == v or a directed path u ~> v exists.
        reach = np.zeros((self._d, self._d), dtype=bool)
        for v in self._well_order:
            row = reach[v - 1]
            row[v - 1] = True
            for u in self._parents[v]:
                np.logical_or(row, reach[u - 1], out=row)
        reach.flags.writeable = False
        return reach

    # --- basic accessors -------------------------------------------------

    @property
    def d(self) -> int:
        return self._d

    @property
    def edges(self) -> frozenset[Edge]:
        return self._edges

    @property
    def well_order(self) -> tuple[int, ...]:
        return self._well_order

    @property
    def reach(self) -> np.ndarray:
        """Read-only boolean reachability matrix, ``reach[v-1, u-1]``."""
        return self._reach

    @property
    def names(self) -> Optional[tuple[str, ...]]:
        return self._names

    def parents(self, v: int) -> frozenset[int]:
        _check_vertex(v, self._d)
        return self._parents[v]

    def children(self, v: int) -> frozenset[int]:
        _check_vertex(v, self._d)
        return self._children[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._edges

    def adjacent(self, u: int, v: int) -> bool:
        return (u, v) in self._edges or (v, u) in self._edges

    # --- derived vertex sets ---------------------------------------------

    def ancestors(self, v: int) -> frozenset[int]:
        """Strict ancestors of ``v`` (vertices with a directed path to it)."""
        _check_vertex(v, self._d)
        out: set[int] = set()
        stack = list(self._parents[v])
        while stack:
            u = stack.pop()
            if u not in out:
                out.add(u)
                stack.extend(self._parents[u])
        return frozenset(out)

    def descendants(self, v: int) -> frozenset[int]:
        """Strict descendants of ``v``."""
        _check_vertex(v, self._d)
        out: set[int] = set()
        stack = list(self._children[v])
        while stack:
            u = stack.pop()
            if u not in out:
                out.add(u)
                stack.extend(self._children[u])
        return frozenset(out)

    def ancestral_closure(self, vertices: Iterable[int]) -> frozenset[int]:
        """Smallest ancestral set containing ``vertices``.

        The result contains the given vertices and all of their ancestors,
        so it is closed under taking parents.
        """
        out: set[int] = set()
        stack = []
        for v in vertices:
            _check_vertex(v, self._d)
            if v not in out:
                out.add(v)
                stack.append(v)
        while stack:
            v = stack.pop()
            for u in self._parents[v]:
                if u not in out:
                    out.add(u)
                    stack.append(u)
        return frozenset(out)

    # --- derived graphs ---------------------------------------------------

    def skeleton(self) -> UndirectedGraph:
        """Undirected version of the graph (directions dropped)."""
        return UndirectedGraph(self._d, self._edges)

    def moral_graph(self) -> UndirectedGraph:
        """Skeleton plus an edge between every two parents of a common child."""
        edges = set(self._edges)
        for v in range(1, self._d + 1):
            for u, w in combinations(self._parents[v], 2):
                edges.add((u, w))
        return UndirectedGraph(self._d, edges)

    def unshielded_colliders(self) -> frozenset[tuple[int, int, int]]:
        """All triples ``(u, w, v)`` with ``u -> w <- v``, ``u`` and ``v``
        non-adjacent, canonically ordered so that ``u < v``."""
        out: set[tuple[int, int, int]] = set()
        for w in range(1, self._d + 1):
            for u, v in combinations(sorted(self._parents[w]), 2):
                if not self.adjacent(u, v):
                    out.add((u, w, v))
        return frozenset(out)

    def is_polytree(self) -> bool:
        """True iff the skeleton is a forest (at most one path between any
        two vertices)."""
        seen: set[int] = set()
        components = 0
        for start in range(1, self._d + 1):
            if start in seen:
                continue
            components += 1
            seen.add(start)
            queue = deque([start])
            while queue:
                v = queue.popleft()
                for w in self._parents[v] | self._children[v]:
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
        return len(self._edges) == self._d - components

    # --- dunder ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Dag):
            return NotImplemented
        return self._d == other._d and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._d, self._edges))

    def __repr__(self) -> str:
        return f"Dag(d={self._d}, edges={sorted(self._edges)})"


def markov_equivalent(g1: Dag, g2: Dag) -> bool:
    """Whether two DAGs induce the same separation independence model.

    Equivalent iff they share the skeleton and the unshielded colliders.
    """
    if g1.d != g2.d:
        raise DimensionMismatch(f"vertex counts differ: {g1.d} vs {g2.d}")
    return (
        g1.skeleton() == g2.skeleton()
        and g1.unshielded_colliders() == g2.unshielded_colliders()
    )
