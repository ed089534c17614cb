"""Modular decomposition: strong modules, the decomposition tree, quotients.

The decomposition is computed top-down. A node whose graph is disconnected
(or whose complement is) splits into its components (co-components). A
prime node splits into its maximal strong modules, found by partition
refinement around a minimum-degree vertex ``v``. The refinement gives the
maximal modules avoiding ``v``. A forcing digraph on those parts then
separates the children that do not contain ``v`` from the pieces of the
child that does.
"""

from __future__ import annotations

from collections import deque

from .exceptions import InputError
from .graph import Graph, _co_components_of, _components_of, _sorted_parts, induced_subgraph

__all__ = [
    "PARALLEL",
    "SERIES",
    "PRIME",
    "LEAF",
    "ModularDecompositionTree",
    "build_mdt",
    "max_modular_partition",
    "quotient",
    "prime_nodes",
]

PARALLEL = 0
SERIES = 1
PRIME = "prime"
LEAF = "⊙"


class ModularDecompositionTree:
    """Rooted tree of strong modules.

    Leaf nodes are the graph vertices themselves (node ``v`` is the
    singleton ``{v}``); inner nodes are numbered from ``n`` upward. Children
    are ordered by their smallest vertex.
    """

    def __init__(self, n, root, labels, children, parent, minv):
        self.n = n
        self.root = root
        self._labels = labels
        self._children = children
        self._parent = parent
        self._minv = minv

    def label(self, node):
        return self._labels[node]

    def children(self, node):
        return self._children[node]

    def parent(self, node):
        """Parent node, or ``None`` for the root."""
        p = self._parent[node]
        return None if p < 0 else p

    def is_leaf(self, node):
        return node < self.n

    def min_vertex(self, node):
        return self._minv[node]

    def node_count(self):
        return len(self._labels)

    def preorder(self):
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(self._children[node]))

    def vertices(self, node):
        """Sorted vertex list of the module at ``node``."""
        out, stack = [], [node]
        while stack:
            x = stack.pop()
            if x < self.n:
                out.append(x)
            else:
                stack.extend(self._children[x])
        out.sort()
        return out

    def depth(self, node):
        d = 0
        while self._parent[node] >= 0:
            node = self._parent[node]
            d += 1
        return d

    def node_key(self, node):
        """Stable address ``(smallest vertex, depth)`` of a node."""
        return (self._minv[node], self.depth(node))

    def prime_nodes(self):
        return [x for x in self.preorder() if self._labels[x] == PRIME]

    def strong_modules(self):
        """Map from node to its module as a frozenset."""
        return {x: frozenset(self.vertices(x)) for x in self.preorder()}

    def __repr__(self):
        return f"ModularDecompositionTree(n={self.n}, nodes={self.node_count()})"


def _modules_avoiding(S, adj, v):
    """Partition of ``S - {v}`` into the maximal modules not containing ``v``.

    Refinement keeps the invariant that every vertex outside a part is
    uniform on it. When a part splits, only the smaller piece is scanned to
    restore the invariant across the split, which gives O(m log n) overall.
    """
    parts = [set(S)]
    parts[0].discard(v)
    part_of = dict.fromkeys(parts[0], 0)
    pending = deque()

    def refine(pivot, skip):
        touched = {}
        for w in pivot:
            p = part_of.get(w)
            if p is not None and p != skip:
                touched.setdefault(p, []).append(w)
        for p, hit in touched.items():
            big = parts[p]
            if len(hit) == len(big):
                continue
            hit_set = set(hit)
            big -= hit_set
            new = len(parts)
            parts.append(hit_set)
            for w in hit:
                part_of[w] = new
            pending.append(list(hit_set if len(hit_set) <= len(big) else big))

    refine(adj[v], None)
    while pending:
        small = pending.popleft()
        small_set = set(small)
        for y in small:
            refine(adj[y], part_of[y])
        crossing = {}
        for y in small:
            for w in adj[y]:
                if w != v and w not in small_set:
                    crossing.setdefault(w, []).append(y)
        for w, hit in crossing.items():
            refine(hit, part_of[w])
    return parts, part_of


def _unique_source_scc(out):
    """Members of the unique source component of a digraph, or ``[]``."""
    k = len(out)
    index = [-1] * k
    low = [0] * k
    comp = [-1] * k
    on_stack = [False] * k
    stack, counter, ncomp = [], 0, 0
    for start in range(k):
        if index[start] >= 0:
            continue
        work = [(start, iter(out[start]))]
        index[start] = low[start] = counter
        counter += 1
        stack.append(start)
        on_stack[start] = True
        while work:
            node, it = work[-1]
            advanced = False
            for nxt in it:
                if index[nxt] < 0:
                    index[nxt] = low[nxt] = counter
                    counter += 1
                    stack.append(nxt)
                    on_stack[nxt] = True
                    work.append((nxt, iter(out[nxt])))
                    advanced = True
                    break
                if on_stack[nxt]:
                    low[node] = min(low[node], index[nxt])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == index[node]:
                while True:
                    x = stack.pop()
                    on_stack[x] = False
                    comp[x] = ncomp
                    if x == node:
                        break
                ncomp += 1
    has_in = [False] * ncomp
    for i in range(k):
        for j in out[i]:
            if comp[i] != comp[j]:
                has_in[comp[j]] = True
    sources = [c for c in range(ncomp) if not has_in[c]]
    if len(sources) != 1:
        return []
    return [i for i in range(k) if comp[i] == sources[0]]


def _prime_children(S, adj):
    v = min(S, key=lambda u: (len(adj[u]), u))
    parts, part_of = _modules_avoiding(S, adj, v)
    adj_v = adj[v]
    out = [set() for _ in parts]
    for i, part in enumerate(parts):
        x = next(iter(part))
        for d in adj[x] ^ adj_v:
            if d != x and d != v:
                j = part_of[d]
                if j != i:
                    out[i].add(j)
    # Parts whose forcing closure is everything are exactly the children
    # that avoid v; everything else belongs to the child containing v.
    outside = _unique_source_scc(out)
    if not outside:
        raise AssertionError("prime node without children avoiding the pivot")
    keep = set(outside)
    inside = [v]
    for i, part in enumerate(parts):
        if i not in keep:
            inside.extend(part)
    return [list(parts[i]) for i in outside] + [inside]


def build_mdt(g):
    """Compute the modular decomposition tree of ``g``.

    Parameters
    ----------
    g : Graph
        A graph with at least one vertex.

    Returns
    -------
    ModularDecompositionTree
        Inner labels are ``PARALLEL`` (0), ``SERIES`` (1) or ``PRIME``;
        leaves carry ``LEAF``.

    Notes
    -----
    Each node costs time linear in the size of its induced subgraph (plus a
    logarithmic factor at prime nodes), so the total is bounded by the sum
    of module sizes along the tree.
    """
    n = g.n
    if n == 0:
        raise InputError("modular decomposition needs at least one vertex")
    labels = [LEAF] * n
    children = [()] * n
    parent = [-1] * n
    minv = list(range(n))
    root = None
    stack = [(range(n), g._adj, -1)]
    while stack:
        S, adj, par = stack.pop()
        if len(S) == 1:
            node = S[0]
            parent[node] = par
            if par >= 0:
                children[par].append(node)
            else:
                root = node
            continue
        node = len(labels)
        labels.append(None)
        children.append([])
        parent.append(par)
        minv.append(min(S))
        if par >= 0:
            children[par].append(node)
        else:
            root = node
        parts = _components_of(adj, S)
        if len(parts) > 1:
            labels[node] = PARALLEL
            # Components are closed under adjacency, so the map is reusable.
            for part in parts:
                stack.append((part, adj, node))
            continue
        parts = _co_components_of(adj, S)
        if len(parts) > 1:
            labels[node] = SERIES
        else:
            labels[node] = PRIME
            parts = _prime_children(S, adj)
        for part in parts:
            if len(part) == 1:
                stack.append((part, None, node))
            else:
                keep = set(part)
                stack.append((part, {u: adj[u] & keep for u in part}, node))
    for node in range(n, len(labels)):
        children[node] = tuple(sorted(children[node], key=minv.__getitem__))
    return ModularDecompositionTree(n, root, labels, children, parent, minv)


def prime_nodes(t):
    """Prime nodes of ``t`` in preorder."""
    return t.prime_nodes()


def max_modular_partition(g):
    """Vertex sets of the root's children: the maximal strong modules of ``g``."""
    if g.n < 2:
        raise InputError("the maximal modular partition needs at least two vertices")
    t = build_mdt(g)
    return [t.vertices(c) for c in t.children(t.root)]


def quotient(g, partition):
    """Quotient graph: vertex ``i`` stands for ``partition[i]``.

    Raises
    ------
    InputError
        If the parts overlap, miss a vertex, or are not all modules.
    """
    from .graph import is_module

    parts = [sorted(set(p)) for p in partition]
    seen = set()
    for p in parts:
        if not p:
            raise InputError("empty part in partition")
        if seen.intersection(p):
            raise InputError("parts overlap")
        seen.update(p)
    if seen != set(range(g.n)):
        raise InputError("partition does not cover the vertex set")
    for p in parts:
        if not is_module(g, p):
            raise InputError(f"part {p} is not a module")
    reps = [p[0] for p in parts]
    edges = [(i, j) for i in range(len(reps)) for j in range(i + 1, len(reps)) if g.has_edge(reps[i], reps[j])]
    return Graph(len(reps), edges)


def _quotient_at(g, t, node):
    """Quotient of the module at ``node`` by its children, plus representatives."""
    reps = [t.min_vertex(c) for c in t.children(node)]
    q, _ = induced_subgraph(g, reps)
    return q, reps


def _sorted_modules(t):
    return _sorted_parts(t.vertices(x) for x in t.preorder())
