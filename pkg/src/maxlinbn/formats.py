"""Stable on-disk formats: DAG JSON, matrix JSON, and sample CSV.

DAG JSON::

    {"d": 4,
     "edges": [{"from": 1, "to": 2, "weight": 0.5}, ...],
     "names": ["rain", ...]}          # optional

``weight`` entries are optional for graph-only queries.  Matrices are
written as row-major arrays of numbers.  Samples are CSV with header
``x1,...,xd`` and one observation per row.  Floats are always written with
17 significant digits so that values survive a write/read cycle exactly -
the estimation code depends on recurring ratios staying bit-identical.
"""

from __future__ import annotations

import csv
import json
from typing import Optional, TextIO

import numpy as np

from .errors import MaxLinError, MissingEdgeWeight
from .graph import Dag, Edge


def fmt17(x: float) -> str:
    """A float with 17 significant digits (exact double round trip)."""
    return format(float(x), ".17g")


def dag_to_dict(g: Dag, weights: Optional[dict[Edge, float]] = None) -> dict:
    edges = []
    for u, v in sorted(g.edges):
        entry: dict = {"from": u, "to": v}
        if weights is not None:
            entry["weight"] = weights[(u, v)]
        edges.append(entry)
    out: dict = {"d": g.d, "edges": edges}
    if g.names is not None:
        out["names"] = list(g.names)
    return out


def dag_from_dict(obj: dict) -> tuple[Dag, Optional[dict[Edge, float]]]:
    """Parse DAG JSON; returns the graph and the weights if every edge has one."""
    try:
        d = obj["d"]
        raw = obj["edges"]
    except (KeyError, TypeError) as exc:
        raise MaxLinError(f"DAG JSON needs 'd' and 'edges' fields: {exc}") from exc
    edges = []
    weights: dict[Edge, float] = {}
    weighted = 0
    for entry in raw:
        try:
            e = (int(entry["from"]), int(entry["to"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise MaxLinError(f"malformed edge entry {entry!r}: {exc}") from exc
        edges.append(e)
        if "weight" in entry:
            weights[e] = float(entry["weight"])
            weighted += 1
    g = Dag(d, edges, names=obj.get("names"))
    if weighted == 0:
        return g, None
    if weighted < len(edges):
        raise MissingEdgeWeight("either all edges carry weights or none do")
    return g, weights


def load_dag(path: str) -> tuple[Dag, Optional[dict[Edge, float]]]:
    with open(path) as fh:
        return dag_from_dict(json.load(fh))


def save_dag(path: str, g: Dag, weights: Optional[dict[Edge, float]] = None) -> None:
    with open(path, "w") as fh:
        json.dump(dag_to_dict(g, weights), fh, indent=2)
        fh.write("\n")


def matrix_to_rows(m: np.ndarray) -> list[list[float]]:
    return [[float(x) for x in row] for row in np.asarray(m, dtype=float)]


def write_samples(path_or_file, x: np.ndarray) -> None:
    a = np.asarray(x, dtype=float)
    close = False
    if isinstance(path_or_file, str):
        fh: TextIO = open(path_or_file, "w", newline="")
        close = True
    else:
        fh = path_or_file
    try:
        writer = csv.writer(fh)
        writer.writerow([f"x{j}" for j in range(1, a.shape[1] + 1)])
        for row in a:
            writer.writerow([fmt17(v) for v in row])
    finally:
        if close:
            fh.close()


def read_samples(path: str) -> np.ndarray:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None:
            raise MaxLinError(f"{path}: empty sample file")
        rows = [[float(v) for v in row] for row in reader if row]
    if not rows:
        raise MaxLinError(f"{path}: no observations")
    return np.asarray(rows, dtype=float)


def format_table(m: np.ndarray, sig: int = 6) -> str:
    """Aligned human-readable table with ``sig`` significant digits."""
    a = np.asarray(m, dtype=float)
    cells = [[format(v, f".{sig}g") for v in row] for row in a]
    widths = [max(len(cells[i][j]) for i in range(len(cells))) for j in range(a.shape[1])]
    return "\n".join(
        "  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells
    )
