"""Graphical separation queries on DAGs.

Two equivalent criteria are implemented independently:

* :func:`d_separated` walks the graph over (vertex, entry-direction) states,
  applying the path-blocking rules directly: a path is blocked by ``S`` when
  some non-collider on it lies in ``S`` or some collider on it lies outside
  the ancestral closure of ``S``.
* :func:`m_separated` restricts the DAG to the ancestral closure of the
  query, moralizes, and tests plain undirected separation there.

The two must agree on every query; the test suite exercises this
equivalence exhaustively on random graphs.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from math import comb
from typing import Iterable

from .errors import NonDisjointQuery, SizeLimitExceeded, VertexOutOfRange
from .graph import Dag


class IndependenceStatement:
    """One conditional-independence statement ``A _|_ B | S``.

    Equality and hashing are symmetric in ``A`` and ``B``.
    """

    __slots__ = ("a", "b", "given", "holds")

    def __init__(self, a: Iterable[int], b: Iterable[int], given: Iterable[int], holds: bool):
        self.a = frozenset(a)
        self.b = frozenset(b)
        self.given = frozenset(given)
        self.holds = bool(holds)

    def _key(self):
        return (frozenset((self.a, self.b)), self.given, self.holds)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IndependenceStatement):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        fmt = lambda s: "{" + ",".join(map(str, sorted(s))) + "}"
        rel = "_|_" if self.holds else "~|~"
        return f"{fmt(self.a)} {rel} {fmt(self.b)} | {fmt(self.given)}"


def _query_sets(g: Dag, a, b, s) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    A, B, S = frozenset(a), frozenset(b), frozenset(s)
    for v in A | B | S:
        if not 1 <= v <= g.d:
            raise VertexOutOfRange(f"vertex {v} outside 1..{g.d}")
    if not A or not B:
        raise NonDisjointQuery("both query sides must be nonempty")
    if A & B or A & S or B & S:
        raise NonDisjointQuery("query sets must be pairwise disjoint")
    return A, B, S


def d_separated(g: Dag, a: Iterable[int], b: Iterable[int], s: Iterable[int] = ()) -> bool:
    """Whether ``S`` blocks every path between the vertex sets ``a`` and ``b``.

    Traverses states ``(vertex, entered_against_arrow)`` where the flag
    records whether the edge used to reach the vertex points into it.  A
    traversal may pass straight through, or turn, exactly when the vertex's
    role on the implied path (collider / non-collider) permits it.
    """
    A, B, S = _query_sets(g, a, b, s)
    an_s = g.ancestral_closure(S) if S else frozenset()

    # state flag: True = the edge we arrived on points into the vertex
    queue: deque[tuple[int, bool]] = deque()
    for x in A:
        for w in g.children(x):
            queue.append((w, True))
        for w in g.parents(x):
            queue.append((w, False))
    visited: set[tuple[int, bool]] = set()
    while queue:
        state = queue.popleft()
        if state in visited:
            continue
        visited.add(state)
        v, into = state
        if v in B:
            return False
        # continue to a child: v acts as a non-collider
        if v not in S:
            for w in g.children(v):
                if (w, True) not in visited:
                    queue.append((w, True))
        # continue to a parent: v is a collider iff we entered along an arrow
        allowed = (v in an_s) if into else (v not in S)
        if allowed:
            for w in g.parents(v):
                if (w, False) not in visited:
                    queue.append((w, False))
    return True


def m_separated(g: Dag, a: Iterable[int], b: Iterable[int], s: Iterable[int] = ()) -> bool:
    """Separation via moralization of the ancestral closure of the query.

    Computes the smallest ancestral set containing ``a``, ``b`` and ``s``,
    restricts the DAG to it, moralizes, and tests whether ``s`` separates
    ``a`` from ``b`` in the resulting undirected graph.
    """
    A, B, S = _query_sets(g, a, b, s)
    anc = g.ancestral_closure(A | B | S)
    sub = Dag(g.d, [e for e in g.edges if e[0] in anc and e[1] in anc])
    return sub.moral_graph().separated(A, B, S)


def markov_statements(g: Dag, kind: str) -> list[IndependenceStatement]:
    """The per-vertex independence statements of a Markov property.

    ``kind="ordered"``: each vertex against its predecessors under the
    stored well-ordering, given its parents.  ``kind="local"``: each vertex
    against its non-descendants, given its parents.  Statements whose
    right-hand side would be empty are omitted.
    """
    if kind not in ("ordered", "local"):
        raise ValueError(f"kind must be 'ordered' or 'local', got {kind!r}")
    out: list[IndependenceStatement] = []
    position = {v: i for i, v in enumerate(g.well_order)}
    for v in range(1, g.d + 1):
        pa = g.parents(v)
        if kind == "ordered":
            rest = {u for u in range(1, g.d + 1) if position[u] < position[v]} - pa
        else:
            rest = set(range(1, g.d + 1)) - {v} - g.descendants(v) - pa
        if rest:
            out.append(IndependenceStatement({v}, rest, pa, True))
    return out


def enumerate_independences(
    g: Dag, max_cond: int, max_triples: int = 10**6
) -> list[IndependenceStatement]:
    """Every singleton separation statement with conditioning sets up to
    ``max_cond`` vertices.

    Enumerates all triples ``({a}, {b}, S)`` with ``a < b``, ``S`` disjoint
    from ``{a, b}`` and ``|S| <= max_cond``, each carrying its
    :func:`d_separated` verdict.  Output is canonically sorted.
    """
    if max_cond < 0:
        raise ValueError("max_cond must be nonnegative")
    d = g.d
    kmax = min(max_cond, d - 2)
    total = comb(d, 2) * sum(comb(d - 2, k) for k in range(kmax + 1)) if d >= 2 else 0
    if total > max_triples:
        raise SizeLimitExceeded(f"{total} triples exceed the cap of {max_triples}")
    out: list[IndependenceStatement] = []
    for x, y in combinations(range(1, d + 1), 2):
        rest = [v for v in range(1, d + 1) if v != x and v != y]
        for k in range(kmax + 1):
            for s in combinations(rest, k):
                out.append(
                    IndependenceStatement({x}, {y}, s, d_separated(g, {x}, {y}, s))
                )
    out.sort(key=lambda st: (min(st.a), min(st.b), len(st.given), sorted(st.given)))
    return out
