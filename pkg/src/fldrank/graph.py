"""Undirected simple graphs: edge-list ingestion, BFS distance fields, components.

Graphs are immutable once built. Internal node IDs are dense integers
0..node_count-1; external labels are arbitrary strings and are never assumed
to be contiguous numbers.
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable

UNREACHABLE = -1


class EdgeListError(ValueError):
    """Malformed edge-list input. Carries the offending 1-based line number."""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph in adjacency-list form.

    ``adjacency[i]`` is the sorted tuple of neighbors of node ``i``.
    Symmetry and the absence of self-loops and duplicate edges are
    guaranteed by the constructors, so every measure downstream can assume
    a 0/1 adjacency structure.
    """

    node_count: int
    node_labels: tuple[str, ...]
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, edges: Iterable[tuple[str, str]], nodes: Iterable[str] = ()) -> Graph:
        """Build from labeled edges, with optional extra (isolated) labels.

        Internal IDs follow first appearance: the ``nodes`` argument is
        interned first, then edge endpoints in input order. Duplicate edges
        collapse to one; self-loops are dropped.
        """
        ids: dict[str, int] = {}

        def intern(label: str) -> int:
            if label not in ids:
                ids[label] = len(ids)
            return ids[label]

        for label in nodes:
            intern(label)
        pairs: set[tuple[int, int]] = set()
        for a, b in edges:
            i, j = intern(a), intern(b)
            if i == j:
                continue
            pairs.add((i, j) if i < j else (j, i))
        adj: list[list[int]] = [[] for _ in range(len(ids))]
        for i, j in pairs:
            adj[i].append(j)
            adj[j].append(i)
        labels = tuple(sorted(ids, key=ids.__getitem__))
        return cls(len(ids), labels, tuple(tuple(sorted(ns)) for ns in adj))

    @cached_property
    def label_to_id(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.node_labels)}

    @property
    def edge_count(self) -> int:
        return sum(len(ns) for ns in self.adjacency) // 2

    def degree(self, node: int) -> int:
        return len(self.adjacency[node])


@dataclass(frozen=True)
class DistanceField:
    """Single-source BFS result.

    ``dist[j]`` is the hop distance from ``source`` to ``j``, or UNREACHABLE
    when ``j`` lies in another component. ``d_max`` is the eccentricity of
    the source within its component and ``shell_counts[r]`` the number of
    nodes at distance exactly ``r`` (``shell_counts[0] == 1``).
    """

    source: int
    dist: tuple[int, ...]
    d_max: int
    shell_counts: tuple[int, ...]

    def cumulative_counts(self) -> tuple[int, ...]:
        """Nodes within distance r of the source (self included), r = 0..d_max."""
        out: list[int] = []
        total = 0
        for c in self.shell_counts:
            total += c
            out.append(total)
        return tuple(out)


@dataclass(frozen=True)
class ComponentMap:
    """Partition of the node set into connected components."""

    component_id: tuple[int, ...]
    component_sizes: tuple[int, ...]


def parse_edge_list(text: str | bytes) -> Graph:
    """Parse one edge per line as two whitespace-separated labels.

    Blank lines and lines starting with '#' or '%' are ignored; both LF and
    CRLF line endings are accepted. Duplicate edges collapse silently.
    Self-loops are dropped and reported through a single warning carrying
    the dropped count; the looped label still becomes a node.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    mentions: list[str] = []
    edges: list[tuple[str, str]] = []
    self_loops = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(("#", "%")):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListError(f"expected 2 labels, got {len(tokens)}: {raw!r}", lineno)
        a, b = tokens
        mentions.append(a)
        mentions.append(b)
        if a == b:
            self_loops += 1
        else:
            edges.append((a, b))
    if self_loops:
        warnings.warn(f"dropped {self_loops} self-loop(s)", stacklevel=2)
    return Graph.build(edges, nodes=mentions)


def load_edge_list(path: str | Path) -> Graph:
    """Read an edge-list file (UTF-8) and build the graph."""
    return parse_edge_list(Path(path).read_bytes())


def bfs_distances(g: Graph, source: int) -> DistanceField:
    """Exact hop distances from ``source`` by breadth-first search.

    Pure function of (g, source); callers may run one BFS per source in
    parallel.
    """
    if not 0 <= source < g.node_count:
        raise ValueError(f"source {source} out of range for {g.node_count} nodes")
    dist = [UNREACHABLE] * g.node_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if dist[u] == UNREACHABLE:
                dist[u] = dist[v] + 1
                queue.append(u)
    d_max = max(d for d in dist if d != UNREACHABLE)
    shells = [0] * (d_max + 1)
    for d in dist:
        if d != UNREACHABLE:
            shells[d] += 1
    return DistanceField(source, tuple(dist), d_max, tuple(shells))


def all_distance_fields(g: Graph) -> tuple[DistanceField, ...]:
    """One BFS per node, indexed by source ID."""
    return tuple(bfs_distances(g, s) for s in range(g.node_count))


def connected_components(g: Graph) -> ComponentMap:
    """Label components by BFS; IDs follow the smallest node in each component."""
    comp = [-1] * g.node_count
    sizes: list[int] = []
    for s in range(g.node_count):
        if comp[s] >= 0:
            continue
        cid = len(sizes)
        comp[s] = cid
        size = 1
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adjacency[v]:
                if comp[u] < 0:
                    comp[u] = cid
                    size += 1
                    queue.append(u)
        sizes.append(size)
    return ComponentMap(tuple(comp), tuple(sizes))


def diameter(g: Graph, dfields: tuple[DistanceField, ...] | None = None) -> int:
    """Largest finite eccentricity over all nodes; 0 for an empty graph."""
    if g.node_count == 0:
        return 0
    if dfields is None:
        dfields = all_distance_fields(g)
    return max(df.d_max for df in dfields)
