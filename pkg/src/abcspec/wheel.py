"""Regularly weighted wheel graphs and their weighted adjacency matrices.

Vertex 0 is the hub, vertices 1..n the tire. Parallel edges (the n = 2 digon)
are stored separately and only summed when the adjacency matrix is built.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import UnsupportedOrder
from .matrices import AbcParams, N2Variant, headpoint


class WheelKind(enum.Enum):
    WHEEL = "wheel"
    TRIANGLE = "triangle"  # n = 2 tilde: C_3 with one tire edge of weight a
    DIGON = "digon"  # n = 2 doubled: multigraph with two (1, 2) edges
    STAR = "star"  # a = 0: zero-weight tire edges dropped


@dataclass(frozen=True)
class WeightedWheel:
    n: int
    vertex_weights: tuple[float, ...]
    edges: tuple[tuple[int, int, float], ...]
    tire_edge_weight: float
    spoke_weight: float
    kind: WheelKind

    @property
    def vertex_count(self) -> int:
        return self.n + 1


def build_wheel(p: AbcParams) -> WeightedWheel:
    if p.n < 2:
        raise UnsupportedOrder("a wheel needs at least two tire vertices")
    n = p.n
    weights = (headpoint(n, p.c),) + (p.c,) * n
    edges = [(0, j, p.b) for j in range(1, n + 1)]
    if p.a == 0:
        kind = WheelKind.STAR
    elif n == 2:
        if p.variant is N2Variant.DOUBLED:
            kind = WheelKind.DIGON
            edges += [(1, 2, p.a), (1, 2, p.a)]
        else:
            kind = WheelKind.TRIANGLE
            edges.append((1, 2, p.a))
    else:
        kind = WheelKind.WHEEL
        edges += [(j, j % n + 1, p.a) for j in range(1, n + 1)]
    return WeightedWheel(n, weights, tuple(edges), p.a, p.b, kind)


def wheel_adjacency(w: WeightedWheel) -> np.ndarray:
    """Weighted adjacency matrix; vertex weights on the diagonal, parallel edges summed."""
    m = np.zeros((w.vertex_count, w.vertex_count), dtype=float)
    m[np.diag_indices_from(m)] = w.vertex_weights
    for u, v, wt in w.edges:
        m[u, v] += wt
        if u != v:
            m[v, u] = m[u, v]
    return m


def to_dot(w: WeightedWheel, name: str = "W") -> str:
    lines = [f"graph {name} {{", f'  label="{w.kind.value} n={w.n}";']
    for i, wt in enumerate(w.vertex_weights):
        lines.append(f'  {i} [label="{i} ({wt:.17g})"];')
    for u, v, wt in w.edges:
        style = ", style=dashed" if u == 0 else ""
        lines.append(f'  {u} -- {v} [label="{wt:.17g}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_dict(w: WeightedWheel) -> dict:
    return {
        "kind": w.kind.value,
        "vertices": [{"id": i, "weight": wt} for i, wt in enumerate(w.vertex_weights)],
        "edges": [{"u": u, "v": v, "weight": wt} for u, v, wt in w.edges],
    }
