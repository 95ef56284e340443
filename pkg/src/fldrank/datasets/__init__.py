"""Bundled benchmark networks.

kite: the 10-person acquaintance network (18 edges) whose hub, node 7, sees
six direct neighbors and a three-node tail through node 8. karate: the
34-node, 78-edge karate-club friendship network.
"""

from __future__ import annotations

from pathlib import Path

from ..graph import Graph, load_edge_list

_HERE = Path(__file__).parent


def kite_path() -> Path:
    return _HERE / "kite.edges"


def karate_path() -> Path:
    return _HERE / "karate.edges"


def load_kite() -> Graph:
    return load_edge_list(kite_path())


def load_karate() -> Graph:
    return load_edge_list(karate_path())
