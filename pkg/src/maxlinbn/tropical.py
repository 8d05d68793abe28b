"""Matrix algebra over the max-times semiring ``([0, inf), max, *)``.

The additive identity is 0 ("no path"), the multiplicative identity is 1.
``max_times_product`` is matrix multiplication over this semiring and
``closure`` iterates it to turn an edge-weight matrix into the induced
best-path-weight matrix.  ``brute_force_coefficients`` recomputes the same
matrix by exhaustive path enumeration and exists as an independent oracle
for the closure.

Matrix convention: row index is the target vertex, column index the source,
so ``M[v-1, u-1]`` carries the weight attached to ``u -> v``.

Equality of path weights is never exact in floating point (products of the
same weights associate differently), so every tie or equality decision in
this package goes through :func:`values_close` with a single relative
tolerance ``DEFAULT_RTOL``.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import (
    CycleError,
    DimensionMismatch,
    InvalidWeightMatrix,
    NotAPath,
    SizeLimitExceeded,
)
from .graph import Dag

#: Relative tolerance governing all equality comparisons between path weights.
DEFAULT_RTOL = 1e-9


def values_close(x: float, y: float, rtol: float = DEFAULT_RTOL) -> bool:
    """Relative closeness: ``|x - y| <= rtol * max(|x|, |y|)``."""
    return abs(x - y) <= rtol * max(abs(x), abs(y))


def matrices_close(f: np.ndarray, g: np.ndarray, rtol: float = DEFAULT_RTOL) -> bool:
    """Entrywise :func:`values_close`; shapes must match exactly."""
    f = np.asarray(f, dtype=float)
    g = np.asarray(g, dtype=float)
    if f.shape != g.shape:
        return False
    return bool(np.all(np.abs(f - g) <= rtol * np.maximum(np.abs(f), np.abs(g))))


def _as_matrix(m, name: str) -> np.ndarray:
    a = np.asarray(m, dtype=float)
    if a.ndim != 2:
        raise DimensionMismatch(f"{name} must be a 2-d matrix, got shape {a.shape}")
    if np.any(a < 0) or np.any(np.isnan(a)):
        raise InvalidWeightMatrix(f"{name} has negative or NaN entries")
    return a


def max_times_product(f, g) -> np.ndarray:
    """Max-times matrix product ``(F (x) G)[v, u] = max_k F[v, k] * G[k, u]``.

    Parameters
    ----------
    f, g : array_like
        Nonnegative matrices with ``f.shape[1] == g.shape[0]``.
    """
    F = _as_matrix(f, "left factor")
    G = _as_matrix(g, "right factor")
    if F.shape[1] != G.shape[0]:
        raise DimensionMismatch(
            f"inner dimensions differ: {F.shape} (x) {G.shape}"
        )
    out = np.empty((F.shape[0], G.shape[1]))
    for v in range(F.shape[0]):
        np.max(F[v][:, None] * G, axis=0, out=out[v])
    return out


def validate_weight_matrix(c: np.ndarray) -> np.ndarray:
    """Check the edge-weight matrix invariants and return the validated array.

    Requires a square nonnegative matrix with unit diagonal whose positive
    off-diagonal pattern is acyclic.
    """
    C = _as_matrix(c, "weight matrix")
    d = C.shape[0]
    if C.shape[0] != C.shape[1]:
        raise DimensionMismatch(f"weight matrix must be square, got {C.shape}")
    if not np.all(np.diag(C) == 1.0):
        raise InvalidWeightMatrix("diagonal entries must all equal 1")
    edges = [(u + 1, v + 1) for v, u in zip(*np.nonzero(C)) if u != v]
    try:
        Dag(d, edges)
    except CycleError as exc:
        raise InvalidWeightMatrix(f"positive pattern is cyclic: {exc}") from exc
    return C


def closure(c) -> np.ndarray:
    """Best-path-weight matrix of an edge-weight matrix.

    Computes ``max(C^(x)0, ..., C^(x)(d-1)) = C^(x)(d-1)`` by repeated
    max-times squaring (the unit diagonal makes the powers monotone, so
    overshooting the exponent is harmless).  Entry ``[v-1, u-1]`` of the
    result is the maximal product of edge weights over directed paths from
    ``u`` to ``v``, 1 on the diagonal, 0 where no path exists.
    """
    C = validate_weight_matrix(c)
    d = C.shape[0]
    B = C.copy()
    k = 1
    while k < d - 1:
        B = max_times_product(B, B)
        k *= 2
    return B


def path_weight(c, path: Sequence[int]) -> float:
    """Product of edge weights along a directed path.

    ``path`` is a vertex sequence ``[k0, k1, ...]``; every consecutive pair
    must be an edge of the DAG underlying ``c`` (positive off-diagonal
    entry).  A length-0 path has weight 1.
    """
    C = _as_matrix(c, "weight matrix")
    d = C.shape[0]
    verts = list(path)
    if not verts:
        raise NotAPath("a path contains at least one vertex")
    for v in verts:
        if not 1 <= v <= d:
            raise NotAPath(f"vertex {v} outside 1..{d}")
    if len(set(verts)) != len(verts):
        raise NotAPath(f"repeated vertex in {verts}")
    w = 1.0
    for u, v in zip(verts, verts[1:]):
        cvu = C[v - 1, u - 1]
        if cvu <= 0.0:
            raise NotAPath(f"({u}, {v}) is not an edge")
        w *= cvu
    return w


def brute_force_coefficients(g: Dag, c, max_paths: int = 10**6) -> np.ndarray:
    """Oracle for :func:`closure` by exhaustive path enumeration.

    Enumerates every directed path of ``g`` and takes, per ordered vertex
    pair, the maximal path weight.  Intended for small graphs only; raises
    :class:`SizeLimitExceeded` after ``max_paths`` enumerated paths.
    """
    C = _as_matrix(c, "weight matrix")
    if C.shape != (g.d, g.d):
        raise DimensionMismatch(f"matrix shape {C.shape} does not match d={g.d}")
    B = np.eye(g.d)
    count = 0
    for u in range(1, g.d + 1):
        stack = [(u, 1.0)]
        while stack:
            v, w = stack.pop()
            for t in g.children(v):
                wt = w * C[t - 1, v - 1]
                count += 1
                if count > max_paths:
                    raise SizeLimitExceeded(f"more than {max_paths} paths")
                if wt > B[t - 1, u - 1]:
                    B[t - 1, u - 1] = wt
                stack.append((t, wt))
    return B
