"""Baseline node-importance measures and ranking machinery.

Degree, closeness, betweenness, eigenvector and local dimension, each
returned as a ScoreVector that knows which end of the scale means "most
influential". All operations are pure functions of the immutable graph.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .graph import DistanceField, Graph, all_distance_fields, connected_components


class SortDirection(Enum):
    DESCENDING = "descending"
    ASCENDING = "ascending"


class Measure(Enum):
    DC = "dc"
    CC = "cc"
    BC = "bc"
    EC = "ec"
    LD = "ld"
    FLD = "fld"

    @property
    def direction(self) -> SortDirection:
        # Local dimension is the one measure where smaller means more
        # influential; everything else ranks by descending score.
        if self is Measure.LD:
            return SortDirection.ASCENDING
        return SortDirection.DESCENDING


class PowerIterationError(RuntimeError):
    """Power iteration failed to converge within the iteration cap."""


@dataclass(frozen=True)
class ScoreVector:
    """Per-node scores for one measure.

    ``undefined[i]`` flags nodes where the measure has no principled value
    (for example closeness of an isolated node); their ``scores`` entry is
    a sentinel and must not be interpreted.
    """

    measure: Measure
    scores: np.ndarray
    undefined: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "scores", np.asarray(self.scores, dtype=np.float64))
        object.__setattr__(self, "undefined", np.asarray(self.undefined, dtype=bool))
        if self.scores.shape != self.undefined.shape:
            raise ValueError("scores and undefined mask must have the same length")
        defined = self.scores[~self.undefined]
        if defined.size and not np.all(np.isfinite(defined)):
            raise ValueError("defined scores must be finite")

    @property
    def direction(self) -> SortDirection:
        return self.measure.direction


@dataclass(frozen=True)
class RankingList:
    """Total order over node labels, most influential first.

    Defined nodes come first, sorted by score in the measure's direction
    with ties broken by ascending label; undefined nodes follow, ordered by
    label, so the order stays total for rank-correlation work.
    """

    measure: Measure
    labels: tuple[str, ...]
    scores: tuple[float, ...]
    undefined: tuple[bool, ...]

    def top(self, k: int) -> tuple[str, ...]:
        return self.labels[:k]


def label_sort_key(label: str):
    """Ascending label order, comparing numerically when both sides are integers."""
    body = label[1:] if label[:1] == "-" else label
    if body.isdigit():
        return (0, int(label), label)
    return (1, 0, label)


def rank_nodes(sv: ScoreVector, labels: tuple[str, ...]) -> RankingList:
    """Deterministic ranking of all nodes from a score vector."""
    if len(labels) != len(sv.scores):
        raise ValueError("label count does not match score count")
    defined = [i for i in range(len(labels)) if not sv.undefined[i]]
    missing = [i for i in range(len(labels)) if sv.undefined[i]]
    defined.sort(key=lambda i: label_sort_key(labels[i]))
    defined.sort(key=lambda i: sv.scores[i], reverse=sv.direction is SortDirection.DESCENDING)
    missing.sort(key=lambda i: label_sort_key(labels[i]))
    order = defined + missing
    return RankingList(
        measure=sv.measure,
        labels=tuple(labels[i] for i in order),
        scores=tuple(float(sv.scores[i]) for i in order),
        undefined=tuple(bool(sv.undefined[i]) for i in order),
    )


def ols_slope(x, y) -> float:
    """Least-squares slope of y on x, centered form, no weighting."""
    n = len(x)
    if n < 2 or len(y) != n:
        raise ValueError("need at least two aligned points")
    x_bar = sum(x) / n
    y_bar = sum(y) / n
    num = sum((a - x_bar) * (b - y_bar) for a, b in zip(x, y))
    den = sum((a - x_bar) ** 2 for a in x)
    return num / den


def degree_centrality(g: Graph) -> ScoreVector:
    """Neighbor count per node."""
    scores = np.array([len(ns) for ns in g.adjacency], dtype=np.float64)
    return ScoreVector(Measure.DC, scores, np.zeros(g.node_count, dtype=bool))


def closeness_centrality(g: Graph, dfields: tuple[DistanceField, ...] | None = None) -> ScoreVector:
    """Reciprocal of the summed hop distances to every other node.

    The sum runs over the node's own component only; nodes in singleton
    components have no distance sum at all and are flagged undefined.
    """
    if dfields is None:
        dfields = all_distance_fields(g)
    scores = np.zeros(g.node_count, dtype=np.float64)
    undefined = np.zeros(g.node_count, dtype=bool)
    for i, df in enumerate(dfields):
        total = sum(r * c for r, c in enumerate(df.shell_counts))
        if total == 0:
            undefined[i] = True
        else:
            scores[i] = 1.0 / total
    return ScoreVector(Measure.CC, scores, undefined)


def shortest_path_counts(g: Graph) -> tuple[list[int], int]:
    """Raw shortest-path counts behind the betweenness ratio.

    Returns ``(numerators, denominator)`` where ``numerators[i]`` is the
    number of shortest paths over all ordered pairs (s, t), s != t != i,
    that pass through ``i`` as an interior node, and ``denominator`` is the
    total number of shortest paths over all ordered pairs in the same
    component. Both are exact integers.

    Per source, a BFS records path counts ``sigma`` into each node; a
    reverse sweep then counts, for every node v, the shortest paths that
    start at v and end strictly farther from the source:

        downstream[v] = sum over successors u of (1 + downstream[u])

    Every shortest path through v decomposes as (source -> v) x (v ->
    target), so v's contribution for this source is sigma[v] *
    downstream[v], and downstream[source] is the source's share of the
    denominator.
    """
    n = g.node_count
    numerators = [0] * n
    denominator = 0
    for s in range(n):
        dist = [-1] * n
        sigma = [0] * n
        dist[s] = 0
        sigma[s] = 1
        order: list[int] = []
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            for u in g.adjacency[v]:
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    queue.append(u)
                if dist[u] == dist[v] + 1:
                    sigma[u] += sigma[v]
        downstream = [0] * n
        for v in reversed(order):
            acc = 0
            for u in g.adjacency[v]:
                if dist[u] == dist[v] + 1:
                    acc += 1 + downstream[u]
            downstream[v] = acc
        denominator += downstream[s]
        for v in order:
            if v != s:
                numerators[v] += sigma[v] * downstream[v]
    return numerators, denominator


def betweenness_centrality(g: Graph) -> ScoreVector:
    """Share of all shortest paths that pass through each node.

    The denominator is one global constant (total shortest-path count over
    ordered pairs), not the per-pair normalization of the textbook
    variant; the ranking is unaffected by the constant but the raw values
    differ.
    """
    numerators, denominator = shortest_path_counts(g)
    if denominator == 0:
        scores = np.zeros(g.node_count, dtype=np.float64)
    else:
        scores = np.array([num / denominator for num in numerators], dtype=np.float64)
    return ScoreVector(Measure.BC, scores, np.zeros(g.node_count, dtype=bool))


def eigenvector_centrality(
    g: Graph, *, tol: float = 1e-12, max_iter: int = 10_000
) -> tuple[ScoreVector, float]:
    """Principal eigenvector of the adjacency matrix, on the largest component.

    Power iteration from the uniform vector, renormalized to unit length
    each step; iterating on A + I keeps bipartite components from
    oscillating without changing the eigenvectors. Nodes outside the
    largest component are flagged undefined. Also returns the dominant
    eigenvalue estimate for diagnostics.
    """
    scores = np.zeros(g.node_count, dtype=np.float64)
    undefined = np.ones(g.node_count, dtype=bool)
    if g.edge_count == 0:
        return ScoreVector(Measure.EC, scores, undefined), float("nan")
    comp = connected_components(g)
    # size ties broken by smallest member label, so the choice depends on
    # the labeled graph only, not on input order
    smallest_label = {}
    for i in range(g.node_count):
        cid = comp.component_id[i]
        key = label_sort_key(g.node_labels[i])
        if cid not in smallest_label or key < smallest_label[cid]:
            smallest_label[cid] = key
    largest = min(
        range(len(comp.component_sizes)),
        key=lambda c: (-comp.component_sizes[c], smallest_label[c]),
    )
    members = np.array(
        [i for i in range(g.node_count) if comp.component_id[i] == largest], dtype=np.int64
    )
    pos = {int(v): k for k, v in enumerate(members)}
    m = len(members)
    adj = np.zeros((m, m), dtype=np.float64)
    for v in members:
        for u in g.adjacency[int(v)]:
            adj[pos[int(v)], pos[u]] = 1.0
    x = np.full(m, 1.0 / math.sqrt(m))
    converged = False
    for _ in range(max_iter):
        y = adj @ x + x
        y /= np.linalg.norm(y)
        if np.max(np.abs(y - x)) < tol:
            x = y
            converged = True
            break
        x = y
    eigenvalue = float(x @ (adj @ x))
    if not converged:
        residual = float(np.linalg.norm(adj @ x - eigenvalue * x))
        raise PowerIterationError(
            f"no convergence within {max_iter} iterations (residual {residual:.3e})"
        )
    scores[members] = x
    undefined[members] = False
    return ScoreVector(Measure.EC, scores, undefined), eigenvalue


def local_dimension(g: Graph, dfields: tuple[DistanceField, ...] | None = None) -> ScoreVector:
    """Growth exponent of the ball around each node.

    For radii r = 1..d_max, fit ln(nodes within r) against ln(r); the slope
    is the node's local dimension. Nodes seeing fewer than two radii have
    no regression and are flagged undefined.
    """
    if dfields is None:
        dfields = all_distance_fields(g)
    scores = np.zeros(g.node_count, dtype=np.float64)
    undefined = np.zeros(g.node_count, dtype=bool)
    for i, df in enumerate(dfields):
        if df.d_max < 2:
            undefined[i] = True
            continue
        cumulative = df.cumulative_counts()
        xs = [math.log(r) for r in range(1, df.d_max + 1)]
        ys = [math.log(cumulative[r]) for r in range(1, df.d_max + 1)]
        scores[i] = ols_slope(xs, ys)
    return ScoreVector(Measure.LD, scores, undefined)
