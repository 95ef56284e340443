"""Shared fixtures, small graph builders, and independent test oracles.

The oracles here deliberately take the dumbest correct route (explicit path
enumeration, quadratic pair counting, the textbook regression formula) so
they stay independent of the production algorithms they check.
"""

from __future__ import annotations

import numpy as np
import pytest

from fldrank import UNREACHABLE, Graph, bfs_distances
from fldrank.datasets import load_karate, load_kite


@pytest.fixture(scope="session")
def kite() -> Graph:
    return load_kite()


@pytest.fixture(scope="session")
def karate() -> Graph:
    return load_karate()


def cycle_graph(n: int) -> Graph:
    return Graph.build([(str(i), str((i + 1) % n)) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.build([(str(i), str(i + 1)) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return Graph.build([("c", f"l{i}") for i in range(leaves)])


def complete_graph(n: int) -> Graph:
    return Graph.build([(str(i), str(j)) for i in range(n) for j in range(i + 1, n)])


def random_graph(rng: np.random.Generator, n: int, p: float) -> Graph:
    """Erdos-Renyi style graph with labels '0'..'n-1'; may be disconnected."""
    edges = [
        (str(i), str(j))
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return Graph.build(edges, nodes=[str(i) for i in range(n)])


def relabeled(g: Graph, mapping: dict[str, str], rng: np.random.Generator) -> Graph:
    """Same structure under new labels, with shuffled input order.

    Shuffling both the edge order and the endpoint orientation exercises
    the internal-ID assignment, which scores must not depend on.
    """
    edges = []
    for v in range(g.node_count):
        for u in g.adjacency[v]:
            if v < u:
                a, b = mapping[g.node_labels[v]], mapping[g.node_labels[u]]
                edges.append((a, b) if rng.random() < 0.5 else (b, a))
    rng.shuffle(edges)
    labels = [mapping[l] for l in g.node_labels]
    rng.shuffle(labels)
    return Graph.build(edges, nodes=labels)


def scores_by_label(g: Graph, sv) -> dict[str, float | None]:
    """Label-keyed view of a score vector; undefined nodes map to None."""
    return {
        label: (None if sv.undefined[i] else float(sv.scores[i]))
        for i, label in enumerate(g.node_labels)
    }


def brute_force_path_counts(g: Graph) -> tuple[list[int], int]:
    """Shortest-path counting by explicit enumeration of every path.

    Returns per-node interior-path counts over ordered pairs plus the total
    path count, both exact integers. Exponential; intended for tiny graphs.
    """
    n = g.node_count
    fields = [bfs_distances(g, s) for s in range(n)]
    numerators = [0] * n
    denominator = 0
    for s in range(n):
        dist = fields[s].dist
        for t in range(n):
            if t == s or dist[t] == UNREACHABLE:
                continue
            paths: list[list[int]] = []

            def extend(v: int, path: list[int]) -> None:
                if v == t:
                    paths.append(list(path))
                    return
                for u in g.adjacency[v]:
                    if (
                        dist[u] == dist[v] + 1
                        and fields[u].dist[t] == dist[t] - dist[u]
                    ):
                        path.append(u)
                        extend(u, path)
                        path.pop()

            extend(s, [s])
            denominator += len(paths)
            for path in paths:
                for v in path[1:-1]:
                    numerators[v] += 1
    return numerators, denominator


def closed_form_slope(x, y) -> float:
    """Regression slope in the uncentered algebraic form."""
    n = len(x)
    sx = sum(x)
    sy = sum(y)
    sxy = sum(a * b for a, b in zip(x, y))
    sxx = sum(a * a for a in x)
    return (n * sxy - sx * sy) / (n * sxx - sx * sx)


def brute_force_tau(w, v) -> tuple[int, int]:
    """Concordant/discordant counts by quadratic pair enumeration."""
    w = [float(x) for x in w]
    v = [float(x) for x in v]
    n = len(w)
    n_c = n_d = 0
    for i in range(n):
        for j in range(i + 1, n):
            sign = ((w[i] > w[j]) - (w[i] < w[j])) * ((v[i] > v[j]) - (v[i] < v[j]))
            if sign > 0:
                n_c += 1
            elif sign < 0:
                n_d += 1
    return n_c, n_d


def coupled_infected_sets(
    g: Graph,
    seeds,
    lam_lo: float,
    lam_hi: float,
    steps: int,
    rng: np.random.Generator,
):
    """Run two infection chains sharing one uniform per (step, contact).

    Independent reference dynamics for the monotonicity-in-lambda property:
    with shared randomness, the low-rate infected set must stay inside the
    high-rate one at every step.
    """
    lo = set(seeds)
    hi = set(seeds)
    draws: dict[tuple[int, int, int], float] = {}

    def shared(t: int, v: int, u: int) -> float:
        key = (t, v, u)
        if key not in draws:
            draws[key] = float(rng.random())
        return draws[key]

    history = [(set(lo), set(hi))]
    for t in range(steps):
        new_lo = {
            u
            for v in sorted(lo)
            for u in g.adjacency[v]
            if u not in lo and shared(t, v, u) < lam_lo
        }
        new_hi = {
            u
            for v in sorted(hi)
            for u in g.adjacency[v]
            if u not in hi and shared(t, v, u) < lam_hi
        }
        lo |= new_lo
        hi |= new_hi
        history.append((set(lo), set(hi)))
    return history
