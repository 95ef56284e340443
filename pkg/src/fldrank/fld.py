"""Fuzzy local dimension: distance-weighted node counting and its growth slope.

Plain local dimension counts every node inside a radius with weight one.
Here each node at hop distance d inside a box of size eps contributes a
Gaussian weight exp(-d^2/eps^2) instead, so near nodes count almost fully
and the rim barely counts. Averaging those weights over the nodes inside
the box gives a fuzzy node count in (0, 1]; the slope of its log against
the log of the radius is the node's fuzzy local dimension. A node whose
fuzzy count shrinks as the box grows ends up with a negative slope, which
marks it as peripheral.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .centrality import Measure, ScoreVector, ols_slope
from .graph import DistanceField, Graph, all_distance_fields


def membership(d: float, eps: float) -> float:
    """Gaussian weight exp(-d^2/eps^2) for hop distance d in a box of size eps.

    Equals 1 exactly when d = 0, decreases strictly in d, and increases
    strictly in eps for d > 0. Unreachable nodes have no membership; the
    caller must restrict to the center's component.
    """
    if d < 0:
        raise ValueError("hop distance must be non-negative (filter unreachable nodes first)")
    if eps <= 0:
        raise ValueError("box size must be positive")
    return math.exp(-(d * d) / (eps * eps))


@dataclass(frozen=True)
class MembershipParams:
    """Membership configuration.

    By default the box size tracks the current radius. ``fixed_eps`` pins
    it to one value instead, for experimentation only.
    """

    fixed_eps: float | None = None

    def __post_init__(self):
        if self.fixed_eps is not None and self.fixed_eps <= 0:
            raise ValueError("fixed_eps must be positive")


@dataclass(frozen=True)
class FuzzyCountSeries:
    """Fuzzy and real node counts around one center, per radius 1..d_max."""

    center: int
    radii: tuple[int, ...]
    counts: tuple[float, ...]
    real_counts: tuple[int, ...]


def fuzzy_count(
    dfield: DistanceField, r: int, *, eps: float | None = None
) -> tuple[float, int]:
    """Average membership over the nodes within hop distance r of the center.

    The center itself (distance 0, weight 1) is included in both the sum
    and the divisor. Returns ``(fuzzy count, real count)``. The box size
    defaults to the radius. Weights are accumulated shell by shell so the
    result is bit-identical under any node relabeling.
    """
    if not 1 <= r <= dfield.d_max:
        raise ValueError(f"radius {r} outside 1..{dfield.d_max}")
    box = float(r) if eps is None else eps
    total = 0.0
    count = 0
    for shell_r in range(r + 1):
        shell = dfield.shell_counts[shell_r]
        total += shell * membership(shell_r, box)
        count += shell
    return total / count, count


def fuzzy_count_series(
    dfield: DistanceField, params: MembershipParams | None = None
) -> FuzzyCountSeries:
    """Fuzzy counts for every radius the center can see (1..d_max)."""
    params = params or MembershipParams()
    radii = tuple(range(1, dfield.d_max + 1))
    counts: list[float] = []
    reals: list[int] = []
    for r in radii:
        c, real = fuzzy_count(dfield, r, eps=params.fixed_eps)
        counts.append(c)
        reals.append(real)
    return FuzzyCountSeries(dfield.source, radii, tuple(counts), tuple(reals))


def fuzzy_local_dimension(
    g: Graph,
    dfields: tuple[DistanceField, ...] | None = None,
    params: MembershipParams | None = None,
) -> ScoreVector:
    """Fuzzy local dimension of every node; larger means more influential.

    Per node, the slope of ln(fuzzy count) against ln(radius) over radii
    1..d_max. Negative slopes are valid scores marking peripheral nodes.
    Nodes seeing fewer than two radii cannot be fitted; they are flagged
    undefined and carry sentinel score 0, which keeps rankings total.
    """
    if dfields is None:
        dfields = all_distance_fields(g)
    params = params or MembershipParams()
    scores = np.zeros(g.node_count, dtype=np.float64)
    undefined = np.zeros(g.node_count, dtype=bool)
    for i, df in enumerate(dfields):
        if df.d_max < 2:
            undefined[i] = True
            continue
        series = fuzzy_count_series(df, params)
        xs = [math.log(r) for r in series.radii]
        ys = [math.log(c) for c in series.counts]
        scores[i] = ols_slope(xs, ys)
    return ScoreVector(Measure.FLD, scores, undefined)
