"""Simple undirected graphs on the vertex set ``0..n-1``.

A :class:`Graph` is immutable. Every operation here is a pure function of
its arguments. Vertex sets in return values are sorted, and lists of vertex
sets are ordered by their smallest member.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .exceptions import InputError, NotApplicable

__all__ = [
    "Graph",
    "GammaGraph",
    "UNION",
    "JOIN",
    "complement",
    "induced_subgraph",
    "connected_components",
    "co_components",
    "diameter",
    "find_induced_p4",
    "is_module",
    "gamma_graph",
    "parse_graph",
    "format_graph",
    "read_graph",
    "write_graph",
    "edge_mask",
    "graph_from_mask",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "disjoint_union",
    "join",
]

UNION = "union"
JOIN = "join"


class Graph:
    """An immutable simple undirected graph with vertices ``0..n-1``.

    Parameters
    ----------
    n : int
        Number of vertices.
    edges : iterable of pairs, optional
        Edges ``(u, v)``. Self-loops, duplicates and out-of-range ids are
        rejected with :class:`InputError`.

    Examples
    --------
    >>> g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    >>> g.m, g.neighbors(1)
    (3, (0, 2))
    """

    __slots__ = ("_adj", "_m")

    def __init__(self, n, edges=()):
        if not isinstance(n, int) or n < 0:
            raise InputError(f"vertex count must be a nonnegative integer, got {n!r}")
        adj = [set() for _ in range(n)]
        m = 0
        for e in edges:
            u, v = e
            if not (isinstance(u, int) and isinstance(v, int)):
                raise InputError(f"vertex ids must be integers: {e!r}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge {u} {v} has an id outside 0..{n - 1}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise InputError(f"duplicate edge {min(u, v)} {max(u, v)}")
            adj[u].add(v)
            adj[v].add(u)
            m += 1
        self._adj = tuple(frozenset(s) for s in adj)
        self._m = m

    @classmethod
    def _from_sets(cls, adj):
        # Trusted constructor: adj must already be symmetric and loop-free.
        g = cls.__new__(cls)
        g._adj = tuple(frozenset(s) for s in adj)
        g._m = sum(len(s) for s in g._adj) // 2
        return g

    @property
    def n(self):
        return len(self._adj)

    @property
    def m(self):
        return self._m

    def vertices(self):
        return range(len(self._adj))

    def neighbors(self, v):
        """Sorted tuple of the neighbors of ``v``."""
        return tuple(sorted(self._adj[v]))

    def adj(self, v):
        """Neighbor set of ``v`` as a frozenset."""
        return self._adj[v]

    def degree(self, v):
        return len(self._adj[v])

    def has_edge(self, u, v):
        return v in self._adj[u]

    def edges(self):
        """All edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(len(self._adj)) for v in sorted(self._adj[u]) if u < v]

    def __eq__(self, other):
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self):
        return hash(self._adj)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class GammaGraph:
    """Auxiliary graph on the components of ``G - v`` (or of its complement).

    Attributes
    ----------
    components : tuple of tuple of int
        Components of whichever of ``G - v`` and its complement is
        disconnected, ordered by smallest vertex.
    edges : tuple of (int, int)
        Index pairs ``(i, j)``, ``i < j``, such that the two components
        together with ``v`` induce a P4.
    mode : str
        ``UNION`` if ``G - v`` itself is disconnected, otherwise ``JOIN``.
    """

    v: int
    components: tuple
    edges: tuple
    mode: str


def _check_vertices(g, vs):
    n = g.n
    for x in vs:
        if not isinstance(x, int) or not 0 <= x < n:
            raise InputError(f"unknown vertex {x!r}")


def _sorted_parts(parts):
    out = [sorted(p) for p in parts]
    out.sort(key=lambda p: p[0])
    return out


def _components_of(adj, vertices):
    """Connected components of the subgraph induced by ``vertices``.

    ``adj[u]`` may mention vertices outside ``vertices``; they are ignored.
    Runs in time linear in the size of the induced subgraph.
    """
    remaining = set(vertices)
    comps = []
    while remaining:
        s = remaining.pop()
        comp = [s]
        frontier = [s]
        while frontier:
            # Passing an iterator makes CPython scan the neighbors rather than
            # ``remaining``, whose hash table never shrinks as it empties.
            new = remaining.intersection(iter(adj[frontier.pop()]))
            if new:
                remaining -= new
                comp.extend(new)
                frontier.extend(new)
        comps.append(comp)
    return comps


def _co_components_of(adj, vertices):
    """Connected components of the complement of the induced subgraph.

    Never builds the complement: each scan of the unvisited set either
    removes a vertex or is paid for by an edge, so the cost stays linear in
    the size of the induced subgraph.
    """
    remaining = set(vertices)
    comps = []
    while remaining:
        s = remaining.pop()
        comp = [s]
        frontier = [s]
        while frontier and remaining:
            nb = adj[frontier.pop()]
            non = remaining.difference(nb)
            if non:
                remaining.intersection_update(nb)
                comp.extend(non)
                frontier.extend(non)
        comps.append(comp)
    return comps


def complement(g):
    """Return the complement of ``g``."""
    everything = frozenset(range(g.n))
    return Graph._from_sets([everything - a - {v} for v, a in enumerate(g._adj)])


def induced_subgraph(g, w):
    """Subgraph induced by the vertex set ``w``.

    Parameters
    ----------
    g : Graph
    w : iterable of int

    Returns
    -------
    sub : Graph
        The induced subgraph. Vertex ``i`` of ``sub`` is the ``i``-th
        smallest member of ``w``.
    old_to_new : dict
        Map from original ids to ids in ``sub``.
    """
    ws = sorted(set(w))
    _check_vertices(g, ws)
    old_to_new = {x: i for i, x in enumerate(ws)}
    adj = g._adj
    sets = [[old_to_new[y] for y in adj[x] if y in old_to_new] for x in ws]
    return Graph._from_sets(sets), old_to_new


def connected_components(g):
    """Connected components as sorted lists, ordered by smallest member."""
    return _sorted_parts(_components_of(g._adj, range(g.n)))


def co_components(g):
    """Connected components of the complement of ``g``, in the same format."""
    return _sorted_parts(_co_components_of(g._adj, range(g.n)))


def diameter(g):
    """Largest distance between two vertices; ``math.inf`` if disconnected."""
    n = g.n
    best = 0
    for s in range(n):
        dist = {s: 0}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g._adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if len(dist) < n:
            return math.inf
        best = max(best, max(dist.values()))
    return best


def _p4_by_middle_edge(g):
    # Scan candidate middle edges (b, c); a P4 a-b-c-d exists on (b, c)
    # iff some private neighbor of b misses some private neighbor of c.
    adj = g._adj
    for b, c in g.edges():
        nb, nc = adj[b], adj[c]
        only_b = nb - nc - {c}
        if not only_b:
            continue
        only_c = nc - nb - {b}
        if not only_c:
            continue
        for a in sorted(only_b):
            missed = only_c - adj[a]
            if missed:
                d = min(missed)
                return (a, b, c, d) if a < d else (d, c, b, a)
    return None


def _p4_from_mdt(g, mdt):
    primes = mdt.prime_nodes()
    if not primes:
        return None
    reps = [mdt.min_vertex(c) for c in mdt.children(primes[0])]
    q, old_to_new = induced_subgraph(g, reps)
    p4 = _p4_by_middle_edge(q)
    new_to_old = sorted(old_to_new)
    return tuple(new_to_old[x] for x in p4)


def find_induced_p4(g):
    """Locate an induced path on four vertices.

    Returns
    -------
    tuple of int or None
        ``(a, b, c, d)`` whose only edges are ``ab``, ``bc`` and ``cd``, with
        ``a < d``; ``None`` exactly when ``g`` is a cograph.

    Notes
    -----
    The search runs on the quotient of the first prime node of the modular
    decomposition, whose representatives induce a primitive graph. Any
    connected graph with connected complement on four or more vertices
    contains a P4, so the middle-edge scan there always succeeds.
    """
    if g.n < 4:
        return None
    from .modular import build_mdt

    return _p4_from_mdt(g, build_mdt(g))


def is_module(g, m):
    """True if every member of ``m`` has the same neighbors outside ``m``."""
    ms = set(m)
    if not ms:
        raise InputError("a module must be nonempty")
    _check_vertices(g, ms)
    it = iter(ms)
    ref = g._adj[next(it)] - ms
    return all(g._adj[x] - ms == ref for x in it)


def gamma_graph(g, v):
    """Build the auxiliary graph on the components around vertex ``v``.

    Raises
    ------
    NotApplicable
        If neither ``G - v`` nor its complement is disconnected.
    """
    _check_vertices(g, [v])
    rest = set(range(g.n))
    rest.discard(v)
    comps = _components_of(g._adj, rest)
    mode = UNION
    if len(comps) < 2:
        comps = _co_components_of(g._adj, rest)
        mode = JOIN
        if len(comps) < 2:
            raise NotApplicable(f"both G-{v} and its complement are connected")
    comps = _sorted_parts(comps)
    edges = []
    for i, j in combinations(range(len(comps)), 2):
        sub, _ = induced_subgraph(g, comps[i] + comps[j] + [v])
        if find_induced_p4(sub) is not None:
            edges.append((i, j))
    return GammaGraph(v, tuple(tuple(c) for c in comps), tuple(edges), mode)


# ---------------------------------------------------------------- text format


def parse_graph(text):
    """Parse the ``n m`` / ``u v`` edge-list format.

    ``#`` starts a comment that runs to the end of the line.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise InputError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            rows.append((lineno, int(fields[0]), int(fields[1])))
        except ValueError:
            raise InputError(f"line {lineno}: expected two integers, got {line!r}") from None
    if not rows:
        raise InputError("missing header line 'n m'")
    _, n, m = rows[0]
    if n < 0 or m < 0:
        raise InputError("header values must be nonnegative")
    body = rows[1:]
    if len(body) != m:
        raise InputError(f"header announces {m} edges, found {len(body)}")
    for lineno, u, v in body:
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"line {lineno}: vertex id outside 0..{n - 1}")
    try:
        return Graph(n, [(u, v) for _, u, v in body])
    except InputError as exc:
        raise InputError(f"invalid edge list: {exc}") from None


def format_graph(g):
    """Serialize ``g``; edges are written as ``u v`` with ``u < v``, sorted."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_graph(path):
    with open(path, encoding="ascii") as fh:
        return parse_graph(fh.read())


def write_graph(g, path):
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_graph(g))


# ------------------------------------------------------- masks and builders


def _pairs(n):
    return list(combinations(range(n), 2))


def edge_mask(g):
    """Encode ``g`` as an integer: bit ``k`` is the ``k``-th pair in lexicographic order."""
    mask = 0
    for k, (u, v) in enumerate(_pairs(g.n)):
        if v in g._adj[u]:
            mask |= 1 << k
    return mask


def graph_from_mask(n, mask):
    """Inverse of :func:`edge_mask`."""
    return Graph(n, [p for k, p in enumerate(_pairs(n)) if mask >> k & 1])


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + ([(0, n - 1)] if n > 2 else []))


def complete_graph(n):
    return Graph(n, _pairs(n))


def disjoint_union(*graphs):
    """Disjoint union; vertices of later graphs are shifted past earlier ones."""
    edges, off = [], 0
    for h in graphs:
        edges.extend((u + off, v + off) for u, v in h.edges())
        off += h.n
    return Graph(off, edges)


def join(*graphs):
    """Join: disjoint union plus all edges between different operands."""
    base = disjoint_union(*graphs)
    edges = base.edges()
    offsets, off = [], 0
    for h in graphs:
        offsets.append((off, off + h.n))
        off += h.n
    for (a0, a1), (b0, b1) in combinations(offsets, 2):
        edges.extend((u, v) for u in range(a0, a1) for v in range(b0, b1))
    return Graph(off, edges)
