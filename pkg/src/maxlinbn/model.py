"""Recursive max-linear structural equation models on DAGs.

A model assigns every edge ``u -> v`` a positive weight ``c_vu``; the value
at a vertex is the maximum of its weighted parent values and its own noise,
``X_v = max(max_u c_vu * X_u, Z_v)``.  Eliminating the recursion expresses
each ``X_v`` as a max-linear combination of the noise variables with the
coefficient matrix ``B = closure(C)``: ``X = B (x) Z`` rowwise.

The distribution of ``X`` determines ``B`` but not the DAG: several DAGs
and weight choices induce the same ``B``.  :func:`minimal_dag` recovers the
unique edge-minimal representative, :func:`admissible_weights` describes
all weights a given compatible DAG may carry, and :func:`marginal_rows`
gives the coefficient rows of a sub-vector of the model.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from .errors import (
    DimensionMismatch,
    ExtraneousWeight,
    IncompatibleDag,
    InvalidCoefficientMatrix,
    MissingEdgeWeight,
    NonPositiveWeight,
    VertexOutOfRange,
)
from .graph import Dag, Edge
from .tropical import DEFAULT_RTOL, closure, values_close


class WeightKind(enum.Enum):
    """How a coefficient matrix constrains one edge weight."""

    FIXED = "fixed"
    OPEN_INTERVAL = "open_interval"


@dataclass(frozen=True)
class NoiseSpec:
    """Noise distribution for sampling: family, parameters, and seed.

    Both families are continuous with support ``(0, inf)``.  ``frechet``
    has CDF ``exp(-x**-alpha)``; ``lognormal`` is ``exp(Normal(mu, sigma))``.
    """

    family: str
    params: tuple[float, ...]
    seed: int

    def __post_init__(self):
        if self.family == "frechet":
            (alpha,) = self.params
            if not alpha > 0:
                raise NonPositiveWeight(f"frechet shape must be positive, got {alpha}")
        elif self.family == "lognormal":
            _, sigma = self.params
            if not sigma > 0:
                raise NonPositiveWeight(f"lognormal sigma must be positive, got {sigma}")
        else:
            raise ValueError(f"unknown noise family {self.family!r}")

    @classmethod
    def frechet(cls, alpha: float, seed: int) -> "NoiseSpec":
        return cls("frechet", (float(alpha),), int(seed))

    @classmethod
    def lognormal(cls, mu: float, sigma: float, seed: int) -> "NoiseSpec":
        return cls("lognormal", (float(mu), float(sigma)), int(seed))

    def _draw(self, rng: np.random.Generator, size: int) -> np.ndarray:
        if self.family == "frechet":
            (alpha,) = self.params
            u = rng.random(size)
            # rng.random() can return exactly 0; nudge into the open interval
            u[u == 0.0] = np.nextafter(0.0, 1.0)
            return (-np.log(u)) ** (-1.0 / alpha)
        mu, sigma = self.params
        return rng.lognormal(mu, sigma, size)


def assemble_weight_matrix(g: Dag, weights: Mapping[Edge, float]) -> np.ndarray:
    """Edge-weight matrix with unit diagonal from a per-edge weight mapping.

    Every edge of ``g`` must carry a strictly positive weight and no weight
    may refer to a non-edge.
    """
    extra = set(weights) - g.edges
    if extra:
        raise ExtraneousWeight(f"weights given for non-edges {sorted(extra)}")
    missing = g.edges - set(weights)
    if missing:
        raise MissingEdgeWeight(f"edges without weights: {sorted(missing)}")
    C = np.eye(g.d)
    for (u, v), w in weights.items():
        w = float(w)
        if not w > 0:
            raise NonPositiveWeight(f"weight for edge ({u}, {v}) must be > 0, got {w}")
        C[v - 1, u - 1] = w
    return C


class MaxLinearModel:
    """A DAG together with positive edge weights and the derived coefficients.

    Parameters
    ----------
    graph : Dag
    weights : mapping (u, v) -> float
        Strictly positive weight for every edge of ``graph``.

    Attributes
    ----------
    C : ndarray
        Edge-weight matrix, unit diagonal, ``C[v-1, u-1] = c_vu``.
    B : ndarray
        Max-times closure of ``C`` (read-only, cached).
    """

    __slots__ = ("graph", "C", "B")

    def __init__(self, graph: Dag, weights: Mapping[Edge, float]):
        self.graph = graph
        self.C = assemble_weight_matrix(graph, weights)
        self.B = closure(self.C)
        self.C.flags.writeable = False
        self.B.flags.writeable = False

    @property
    def d(self) -> int:
        return self.graph.d

    def edge_weights(self) -> dict[Edge, float]:
        return {(u, v): float(self.C[v - 1, u - 1]) for u, v in sorted(self.graph.edges)}

    def sample(self, n: int, noise: NoiseSpec) -> np.ndarray:
        """Draw ``n`` observations as rows of an ``(n, d)`` matrix.

        Observation ``nu`` uses the dedicated random substream seeded by
        ``(noise.seed, nu)``, so the output is reproducible and independent
        of any batching or parallel schedule.
        """
        if n < 1:
            raise ValueError(f"need n >= 1 observations, got {n}")
        z = noise_matrix(noise, n, self.d)
        return propagate(self.B, z)

    def __repr__(self) -> str:
        return f"MaxLinearModel({self.graph!r}, {self.edge_weights()!r})"


def noise_matrix(noise: NoiseSpec, n: int, d: int) -> np.ndarray:
    """The ``(n, d)`` noise draw underlying :meth:`MaxLinearModel.sample`."""
    base = noise.seed % 2**64
    z = np.empty((n, d))
    for nu in range(n):
        rng = np.random.default_rng((base, nu))
        z[nu] = noise._draw(rng, d)
    return z


def propagate(b: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Push noise rows through the coefficient matrix: per row,
    ``x[v] = max_u b[v, u] * z[u]``.

    This is the deterministic half of sampling, split out so tests can feed
    degenerate noise (for example all ones) directly.
    """
    B = np.asarray(b, dtype=float)
    Z = np.atleast_2d(np.asarray(z, dtype=float))
    if Z.shape[1] != B.shape[1]:
        raise DimensionMismatch(f"noise width {Z.shape[1]} vs matrix {B.shape}")
    return np.max(Z[:, None, :] * B[None, :, :], axis=2)


def _validate_coefficients(b) -> tuple[np.ndarray, np.ndarray]:
    B = np.asarray(b, dtype=float)
    if B.ndim != 2 or B.shape[0] != B.shape[1]:
        raise DimensionMismatch(f"coefficient matrix must be square, got {B.shape}")
    if np.any(B < 0) or np.any(np.isnan(B)):
        raise InvalidCoefficientMatrix("negative or NaN entries")
    if not np.all(np.diag(B) == 1.0):
        raise InvalidCoefficientMatrix("diagonal entries must all equal 1")
    R = B > 0
    if np.any(R & R.T & ~np.eye(B.shape[0], dtype=bool)):
        raise InvalidCoefficientMatrix("sign pattern is not antisymmetric")
    if np.any(((R.astype(np.int64) @ R.astype(np.int64)) > 0) & ~R):
        raise InvalidCoefficientMatrix("sign pattern is not transitively closed")
    return B, R


def minimal_dag(b, rtol: float = DEFAULT_RTOL) -> tuple[Dag, dict[Edge, float]]:
    """Edge-minimal DAG and weights reproducing a coefficient matrix.

    An edge ``u -> v`` survives exactly when its coefficient beats every
    two-step composition: ``b_vu > max_k b_vk * b_ku`` over ``k`` distinct
    from ``u`` and ``v``.  A composition matching ``b_vu`` within ``rtol``
    means an alternative best-weight path exists, so the edge is dropped.
    Weights of kept edges are pinned to the coefficients themselves.
    """
    B, R = _validate_coefficients(b)
    d = B.shape[0]
    edges: dict[Edge, float] = {}
    for v in range(d):
        for u in range(d):
            if u == v or not R[v, u]:
                continue
            through = B[v, :] * B[:, u]
            through[u] = through[v] = 0.0
            best = float(through.max())
            bvu = float(B[v, u])
            if best < bvu and not values_close(best, bvu, rtol):
                edges[(u + 1, v + 1)] = bvu
    g = Dag(d, edges.keys())
    if not np.array_equal(g.reach, R):
        raise InvalidCoefficientMatrix(
            "entry values are inconsistent with the sign pattern"
        )
    return g, edges


def admissible_weights(
    b, g: Dag, rtol: float = DEFAULT_RTOL
) -> dict[Edge, tuple[WeightKind, float]]:
    """Constraints on each edge weight of ``g`` for it to carry the model
    with coefficient matrix ``b``.

    Edges of the minimal DAG are pinned (``FIXED``) to their coefficient;
    any additional edge of ``g`` may take any value in the open interval
    ``(0, b_vu)`` (``OPEN_INTERVAL`` with that upper bound).  ``g`` must
    contain the minimal DAG and induce the same reachability.
    """
    B, R = _validate_coefficients(b)
    if g.d != B.shape[0]:
        raise DimensionMismatch(f"matrix {B.shape} vs d={g.d}")
    if not np.array_equal(g.reach, R):
        raise IncompatibleDag("reachability differs from the coefficient sign pattern")
    minimal, _ = minimal_dag(B, rtol)
    missing = minimal.edges - g.edges
    if missing:
        raise IncompatibleDag(f"required minimal edges absent: {sorted(missing)}")
    out: dict[Edge, tuple[WeightKind, float]] = {}
    for u, v in sorted(g.edges):
        bound = float(B[v - 1, u - 1])
        kind = WeightKind.FIXED if (u, v) in minimal.edges else WeightKind.OPEN_INTERVAL
        out[(u, v)] = (kind, bound)
    return out


def marginal_rows(b, vertices: Iterable[int]) -> np.ndarray:
    """Rows of the coefficient matrix for a subset of vertices, ascending.

    Two models whose marginal rows agree on a subset induce the same joint
    distribution of that sub-vector (under the same noise law): the kept
    rows are exactly the max-linear representation of those coordinates.
    """
    B = np.asarray(b, dtype=float)
    subset = sorted(set(vertices))
    if not subset:
        raise VertexOutOfRange("vertex subset must be nonempty")
    for v in subset:
        if not 1 <= v <= B.shape[0]:
            raise VertexOutOfRange(f"vertex {v} outside 1..{B.shape[0]}")
    return B[[v - 1 for v in subset], :]
