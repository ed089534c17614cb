"""Cographs, discriminating cotrees and caterpillar orderings."""

from __future__ import annotations

from dataclasses import dataclass

from .exceptions import InputError
from .graph import _co_components_of, _components_of
from .modular import PRIME, build_mdt

__all__ = [
    "CONNECTED",
    "DISCONNECTED",
    "Cotree",
    "CatOrdering",
    "is_cograph",
    "build_cotree",
    "caterpillar_ordering",
    "is_cherry_vertex",
]

CONNECTED = "connected"
DISCONNECTED = "disconnected"


@dataclass(frozen=True)
class Cotree:
    """Discriminating cotree of a cograph on ``n`` vertices.

    Node ``v < n`` is the leaf for graph vertex ``v``; inner nodes are
    numbered from ``n`` and labeled 0 (disjoint union) or 1 (join).
    ``parent[root]`` is ``-1``.
    """

    n: int
    root: int
    labels: tuple
    children: tuple
    parent: tuple

    def is_leaf(self, node):
        return node < self.n

    def inner_nodes(self):
        return range(self.n, len(self.labels))

    def to_network(self):
        """The cotree as a ``(Network, labeling)`` pair."""
        from .network import Network

        edges = [(u, c) for u in self.inner_nodes() for c in self.children[u]]
        net = Network(edges, root=self.root, nodes=range(len(self.labels)))
        return net, dict(enumerate(self.labels))


@dataclass(frozen=True)
class CatOrdering:
    """Vertex sequence ``x_1..x_n`` of a caterpillar-explainable cograph.

    With mode ``CONNECTED``, ``x_i x_j`` (``i < j``) is an edge iff ``i`` is
    odd (1-based). With ``DISCONNECTED``, iff ``i`` is even. The last two
    entries form the cherry.
    """

    sequence: tuple
    mode: str

    def edge_expected(self, i, j):
        """Edge rule for 0-based positions ``i < j``."""
        odd = i % 2 == 0
        return odd if self.mode == CONNECTED else not odd


def is_cograph(g):
    """True iff ``g`` has no induced P4.

    Same top-down split as the modular decomposition, stopping at the first
    node whose graph and complement are both connected.
    """
    stack = [(range(g.n), g._adj)]
    while stack:
        S, adj = stack.pop()
        if len(S) < 2:
            continue
        parts = _components_of(adj, S)
        if len(parts) > 1:
            stack.extend((p, adj) for p in parts)
            continue
        parts = _co_components_of(adj, S)
        if len(parts) == 1:
            return False
        for p in parts:
            if len(p) > 1:
                keep = set(p)
                stack.append((p, {u: adj[u] & keep for u in p}))
    return True


def _cotree_from_mdt(t):
    labels = [t.label(x) for x in range(t.node_count())]
    if PRIME in labels:
        return None
    return Cotree(
        n=t.n,
        root=t.root,
        labels=tuple(labels),
        children=tuple(t.children(x) for x in range(t.node_count())),
        parent=tuple(-1 if t.parent(x) is None else t.parent(x) for x in range(t.node_count())),
    )


def build_cotree(g):
    """Discriminating cotree of ``g``, or ``None`` if ``g`` is not a cograph.

    Examples
    --------
    >>> from catprime.graph import disjoint_union, complete_graph
    >>> t = build_cotree(disjoint_union(complete_graph(2), complete_graph(2)))
    >>> t.labels[t.root], [t.labels[c] for c in t.children[t.root]]
    (0, [1, 1])
    """
    if g.n == 0:
        return None
    return _cotree_from_mdt(build_mdt(g))


def _ordering_from_cotree(t):
    if t.n == 1:
        return CatOrdering((0,), CONNECTED)
    seq = []
    node = t.root
    while True:
        kids = t.children[node]
        if len(kids) != 2:
            return None
        leaves = [c for c in kids if c < t.n]
        inner = [c for c in kids if c >= t.n]
        if len(leaves) == 2:
            seq.extend(sorted(leaves))
            break
        if len(leaves) != 1:
            return None
        seq.append(leaves[0])
        node = inner[0]
    mode = CONNECTED if t.labels[t.root] == 1 else DISCONNECTED
    return CatOrdering(tuple(seq), mode)


def caterpillar_ordering(g):
    """Ordering certifying that ``g`` is explained by a discriminating caterpillar.

    Returns ``None`` when ``g`` is not a cograph, or when its cotree has an
    inner vertex with more than two children or with two inner children.

    Examples
    --------
    >>> from catprime.graph import path_graph
    >>> caterpillar_ordering(path_graph(3))
    CatOrdering(sequence=(1, 0, 2), mode='connected')
    """
    t = build_cotree(g)
    if t is None:
        return None
    return _ordering_from_cotree(t)


def is_cherry_vertex(o, v):
    """True iff ``v`` is one of the last two entries of ``o`` (``n >= 2``)."""
    if v not in o.sequence:
        raise InputError(f"vertex {v} is not in the ordering")
    return len(o.sequence) >= 2 and v in o.sequence[-2:]

