"""Labeled level-1 networks.

A :class:`Network` is a rooted DAG whose leaves are named by their own
integer ids. A labeling is a plain ``dict`` from vertex to ``0``, ``1`` or
:data:`LEAF`. Outdegree-1 hybrids never occur as a least common ancestor,
so their label does not affect the explained graph. Construction gives
hybrids the label ``HYBRID_DEFAULT``.

Transformations (contraction, weak-cycle removal, leaf deletion) never
mutate their input; they return a new ``(Network, labeling)`` pair.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

import networkx as nx

from .exceptions import InputError
from .graph import Graph
from .modular import LEAF, PRIME

__all__ = [
    "LEAF",
    "HYBRID_DEFAULT",
    "WEAK",
    "STRONG",
    "Network",
    "CycleDescriptor",
    "ValidationReport",
    "validate",
    "lca",
    "evaluate",
    "explained_edges",
    "contract_quasi_discriminating",
    "remove_weak_cycles",
    "delete_leaf",
    "cycles",
    "is_elementary",
    "networks_isomorphic",
    "least_resolved",
    "relabel_leaves",
    "parse_network",
    "format_network",
    "read_network",
    "write_network",
    "to_dot",
]

HYBRID_DEFAULT = 0
WEAK = "weak"
STRONG = "strong"


class Network:
    """Rooted directed acyclic graph with named leaves.

    Parameters
    ----------
    edges : iterable of (int, int)
        Directed edges ``(parent, child)``.
    root : int, optional
        The root. Defaults to the unique vertex of indegree 0; left as
        ``None`` when there is no unique such vertex, which
        :func:`validate` reports.
    nodes : iterable of int, optional
        Vertex set. Defaults to the edge endpoints plus ``root``.
    leaves : iterable of int, optional
        Leaf set ``X``. Defaults to the vertices of outdegree 0.

    Raises
    ------
    InputError
        On non-integer ids, duplicate edges or endpoints missing from
        ``nodes``.
    """

    __slots__ = ("_children", "_parents", "root", "leaves")

    def __init__(self, edges=(), root=None, nodes=None, leaves=None):
        edges = [tuple(e) for e in edges]
        if nodes is None:
            node_set = {x for e in edges for x in e}
            if root is not None:
                node_set.add(root)
        else:
            node_set = set(nodes)
        for x in node_set:
            if not isinstance(x, int):
                raise InputError(f"vertex ids must be integers, got {x!r}")
        children = {x: [] for x in node_set}
        parents = {x: [] for x in node_set}
        seen = set()
        for u, v in edges:
            if u not in node_set or v not in node_set:
                raise InputError(f"edge ({u}, {v}) has an endpoint that is not a vertex")
            if (u, v) in seen:
                raise InputError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            children[u].append(v)
            parents[v].append(u)
        self._children = {x: tuple(sorted(c)) for x, c in children.items()}
        self._parents = {x: tuple(sorted(p)) for x, p in parents.items()}
        if root is None:
            sources = [x for x in node_set if not parents[x]]
            root = sources[0] if len(sources) == 1 else None
        elif root not in node_set:
            raise InputError(f"root {root} is not a vertex")
        self.root = root
        if leaves is None:
            leaves = [x for x in node_set if not children[x]]
        leaves = frozenset(leaves)
        if not leaves <= node_set:
            raise InputError("declared leaves must be vertices")
        self.leaves = leaves

    def nodes(self):
        return sorted(self._children)

    def edges(self):
        return [(u, c) for u in sorted(self._children) for c in self._children[u]]

    def children(self, u):
        return self._children[u]

    def parents(self, u):
        return self._parents[u]

    def indegree(self, u):
        return len(self._parents[u])

    def outdegree(self, u):
        return len(self._children[u])

    def is_leaf(self, u):
        return u in self.leaves

    def is_hybrid(self, u):
        return len(self._parents[u]) == 2

    def hybrids(self):
        return [x for x in sorted(self._parents) if len(self._parents[x]) >= 2]

    def inner_nodes(self):
        return [x for x in sorted(self._children) if x not in self.leaves]

    def __contains__(self, u):
        return u in self._children

    def __len__(self):
        return len(self._children)

    def __repr__(self):
        return f"Network(|V|={len(self)}, |X|={len(self.leaves)}, hybrids={len(self.hybrids())})"

    def topological_order(self):
        """Vertices with every parent before its children; ``None`` if cyclic."""
        indeg = {x: len(p) for x, p in self._parents.items()}
        ready = sorted(x for x, d in indeg.items() if d == 0)
        heapq.heapify(ready)
        order = []
        while ready:
            x = heapq.heappop(ready)
            order.append(x)
            for c in self._children[x]:
                indeg[c] -= 1
                if indeg[c] == 0:
                    heapq.heappush(ready, c)
        return order if len(order) == len(indeg) else None


@dataclass(frozen=True)
class CycleDescriptor:
    """A cycle: two directed paths from ``root`` to ``hybrid``.

    ``side1`` and ``side2`` include both endpoints. ``side1`` is the side
    whose first step has the smaller vertex id.
    """

    root: int
    hybrid: int
    side1: tuple
    side2: tuple
    strength: str

    @property
    def vertices(self):
        return frozenset(self.side1) | frozenset(self.side2)

    @property
    def length(self):
        return len(self.side1) + len(self.side2) - 2


def _strength(a, b):
    return WEAK if a == 0 or b == 0 or (a == 1 and b == 1) else STRONG


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of :func:`validate`.

    ``violations`` lists violated clauses as strings prefixed ``N1:``,
    ``N2:``, ``N3:``, ``acyclic:``, ``level-1:`` or ``label-domain:``.
    The structural flags are only meaningful when ``valid`` is true.
    """

    violations: tuple
    hybrids: int = 0
    cycles: int = 0
    weak_cycles: int = 0
    quasi_discriminating: bool = False
    discriminating: bool = False
    weak: bool = False
    strong: bool = False
    elementary: bool = False
    notes: tuple = field(default=())

    @property
    def valid(self):
        return not self.violations

    def lines(self):
        out = ["valid" if self.valid else "invalid"]
        out.extend(f"violation {v}" for v in self.violations)
        if self.valid:
            out.append(f"hybrids {self.hybrids}")
            out.append(f"cycles {self.cycles} (weak {self.weak_cycles})")
            for name in ("quasi_discriminating", "discriminating", "weak", "strong", "elementary"):
                out.append(f"{name.replace('_', '-')} {'yes' if getattr(self, name) else 'no'}")
        return out


# --------------------------------------------------------------- cycle search


def _walk_cycles(hybrids, parents_of, indeg):
    """Cycle descriptors from parent lookups; one per hybrid."""
    out = []
    for h in hybrids:
        p1, p2 = sorted(parents_of(h))[:2]
        chain1 = [p1]
        while indeg(chain1[-1]) == 1:
            chain1.append(next(iter(parents_of(chain1[-1]))))
        pos1 = {x: i for i, x in enumerate(chain1)}
        chain2 = [p2]
        while chain2[-1] not in pos1:
            if indeg(chain2[-1]) != 1:
                raise InputError(f"hybrid {h} does not close a level-1 cycle")
            chain2.append(next(iter(parents_of(chain2[-1]))))
        rho = chain2[-1]
        side1 = tuple(reversed(chain1[: pos1[rho] + 1])) + (h,)
        side2 = tuple(reversed(chain2)) + (h,)
        if side2[1] < side1[1]:
            side1, side2 = side2, side1
        out.append(CycleDescriptor(rho, h, side1, side2, _strength(len(side1) - 2, len(side2) - 2)))
    return out


def cycles(net):
    """Cycles of a valid level-1 network, ordered by hybrid id.

    Examples
    --------
    A triangle ``r -> a -> h``, ``r -> h`` is a weak cycle.

    >>> net = Network([(9, 8), (9, 7), (8, 7), (8, 0), (7, 1)])
    >>> [c.strength for c in cycles(net)]
    ['weak']
    """
    return _walk_cycles(
        net.hybrids(),
        net.parents,
        net.indegree,
    )


# ----------------------------------------------------------------- validation


def _blocks(net):
    und = nx.Graph()
    und.add_nodes_from(net.nodes())
    und.add_edges_from(net.edges())
    return [b for b in nx.biconnected_components(und) if len(b) > 2]


def validate(net, t):
    """Check (N0)-(N3), level-1 and the label domain; report label properties.

    Parameters
    ----------
    net : Network
    t : dict
        Labeling; inner vertices map to 0 or 1, leaves to ``LEAF``.

    Returns
    -------
    ValidationReport
    """
    bad = []
    nodes = net.nodes()
    order = net.topological_order()
    if order is None:
        bad.append("acyclic: the edge relation contains a directed cycle")
    sources = [x for x in nodes if net.indegree(x) == 0]
    if len(nodes) == 1:
        x = nodes[0]
        if x not in net.leaves:
            bad.append(f"N2: the single vertex {x} is not declared a leaf")
    else:
        if len(sources) != 1:
            bad.append(f"N1: expected one vertex of indegree 0, found {len(sources)} ({sources[:5]})")
        elif net.outdegree(sources[0]) < 2:
            bad.append(f"N1: root {sources[0]} has outdegree {net.outdegree(sources[0])}")
        elif net.root != sources[0]:
            bad.append(f"N1: declared root {net.root} is not the vertex of indegree 0")
        for x in nodes:
            is_sink = net.outdegree(x) == 0
            if x in net.leaves:
                if not is_sink or net.indegree(x) != 1:
                    bad.append(
                        f"N2: leaf {x} has indegree {net.indegree(x)} and outdegree {net.outdegree(x)}"
                    )
            elif is_sink:
                bad.append(f"N2: vertex {x} has outdegree 0 but is not a leaf")
            elif net.indegree(x) == 0:
                pass
            elif not (
                (net.indegree(x) == 1 and net.outdegree(x) >= 2)
                or (net.indegree(x) == 2 and net.outdegree(x) >= 1)
            ):
                bad.append(f"N3: vertex {x} has indegree {net.indegree(x)} and outdegree {net.outdegree(x)}")
    if order is not None and len(nodes) > 1:
        for block in _blocks(net):
            inside = [x for x in block if sum(p in block for p in net.parents(x)) >= 2]
            if len(inside) > 1:
                bad.append(f"level-1: biconnected component with hybrids {sorted(inside)}")
    for x in nodes:
        lab = t.get(x)
        if x in net.leaves:
            if lab != LEAF:
                bad.append(f"label-domain: leaf {x} has label {lab!r}")
        elif lab not in (0, 1):
            bad.append(f"label-domain: inner vertex {x} has label {lab!r}")
    if bad:
        return ValidationReport(violations=tuple(bad))

    cyc = cycles(net)
    nweak = sum(c.strength == WEAK for c in cyc)
    inner_edges = [(u, v) for u, v in net.edges() if u not in net.leaves and v not in net.leaves]
    qd = all(t[u] != t[v] for u, v in inner_edges if net.indegree(v) < 2)
    disc = all(t[u] != t[v] for u, v in inner_edges)
    return ValidationReport(
        violations=(),
        hybrids=len(net.hybrids()),
        cycles=len(cyc),
        weak_cycles=nweak,
        quasi_discriminating=qd,
        discriminating=disc,
        weak=nweak == len(cyc),
        strong=nweak == 0,
        elementary=is_elementary(net),
    )


def is_elementary(net):
    """True iff ``net`` is one cycle through the root of length ``|X|+1``
    and every other cycle vertex carries exactly one leaf."""
    cyc = cycles(net)
    if len(cyc) != 1:
        return False
    c = cyc[0]
    k = len(net.leaves)
    on_cycle = c.vertices
    if c.root != net.root or len(on_cycle) != k + 1 or net.outdegree(c.root) != 2:
        return False
    if len(net) != 2 * k + 1:
        return False
    for x in on_cycle - {c.root}:
        off = [y for y in net.children(x) if y not in on_cycle]
        if len(off) != 1 or off[0] not in net.leaves:
            return False
    return True


# -------------------------------------------------------------- lca, evaluate


def _check_leaf(net, x):
    if x not in net.leaves:
        raise InputError(f"{x!r} is not a leaf")


def lca(net, a, b):
    """The unique minimal common ancestor of leaves ``a`` and ``b``."""
    _check_leaf(net, a)
    _check_leaf(net, b)

    def ancestors(x):
        seen, stack = {x}, [x]
        while stack:
            for p in net.parents(stack.pop()):
                if p not in seen:
                    seen.add(p)
                    stack.append(p)
        return seen

    common = ancestors(a) & ancestors(b)
    rank = {x: i for i, x in enumerate(net.topological_order())}
    return max(common, key=rank.__getitem__)


def _leaf_sets(net, order, index):
    below = {}
    for u in reversed(order):
        if u in net.leaves:
            below[u] = 1 << index[u]
        else:
            acc = 0
            for c in net.children(u):
                acc |= below[c]
            below[u] = acc
    return below


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _adjacency_masks(net, t):
    leaves = sorted(net.leaves)
    index = {x: i for i, x in enumerate(leaves)}
    order = net.topological_order()
    below = _leaf_sets(net, order, index)
    adj = [0] * len(leaves)
    for u in order:
        if u in net.leaves or t[u] != 1:
            continue
        # Pairs whose lca is u: both below u, not both below one child.
        kids = net.children(u)
        groups = {}
        for i in _bits(below[u]):
            bit = 1 << i
            key = tuple(c for c in kids if below[c] & bit)
            groups.setdefault(key, []).append(i)
        for key, members in groups.items():
            mask = below[u]
            for c in key:
                mask &= ~below[c]
            for i in members:
                adj[i] |= mask
    return leaves, adj


def evaluate(net, t):
    """The graph explained by ``(net, t)``.

    Leaves ``x`` and ``y`` are adjacent iff ``t[lca(x, y)] == 1``. Vertex
    ``i`` of the result is the ``i``-th smallest leaf id, so leaves named
    ``0..n-1`` map to themselves.
    """
    leaves, adj = _adjacency_masks(net, t)
    return Graph._from_sets([[j for j in _bits(mask) if j != i] for i, mask in enumerate(adj)])


def explained_edges(net, t):
    """Explained edges as a set of leaf-id pairs ``(x, y)`` with ``x < y``."""
    leaves, adj = _adjacency_masks(net, t)
    return {(leaves[i], leaves[j]) for i, mask in enumerate(adj) for j in _bits(mask) if i < j}


# --------------------------------------------------------- editable multigraph


class _Editable:
    """Mutable copy used by the transformations.

    ``ch[u]`` and ``pa[u]`` map neighbors to edge multiplicities, so
    contractions may create parallel edges that :meth:`tidy` removes.
    """

    def __init__(self, net, t):
        self.ch = {u: dict.fromkeys(net.children(u), 1) for u in net.nodes()}
        self.pa = {u: dict.fromkeys(net.parents(u), 1) for u in net.nodes()}
        self.t = {u: t[u] for u in net.nodes()}
        self.leaves = set(net.leaves)
        self.root = net.root
        self.next_id = max(net.nodes()) + 1

    def new_node(self, label):
        x = self.next_id
        self.next_id += 1
        self.ch[x] = {}
        self.pa[x] = {}
        self.t[x] = label
        return x

    def add_edge(self, u, v, k=1):
        self.ch[u][v] = self.ch[u].get(v, 0) + k
        self.pa[v][u] = self.pa[v].get(u, 0) + k

    def remove_edge(self, u, v):
        k = self.ch[u].pop(v)
        del self.pa[v][u]
        return k

    def remove_node(self, x):
        for c in self.ch[x]:
            del self.pa[c][x]
        for p in self.pa[x]:
            del self.ch[p][x]
        del self.ch[x], self.pa[x], self.t[x]
        self.leaves.discard(x)

    def contract(self, u, v, label):
        """Merge child ``v`` into ``u``; the merged vertex keeps id ``u``."""
        self.remove_edge(u, v)
        for c, k in list(self.ch[v].items()):
            self.remove_edge(v, c)
            self.add_edge(u, c, k)
        for p, k in list(self.pa[v].items()):
            self.remove_edge(p, v)
            self.add_edge(p, u, k)
        self.remove_node(v)
        self.t[u] = label

    def tidy(self, seeds):
        """Apply suppression, pruning, root removal and deduplication to a fixpoint.

        Returns the set of vertices whose neighborhood changed.
        """
        heap = sorted(set(seeds))
        touched = set(heap)
        while heap:
            x = heapq.heappop(heap)
            if x not in self.ch:
                continue
            for c, k in list(self.ch[x].items()):
                if k > 1:
                    self.ch[x][c] = self.pa[c][x] = 1
                    heapq.heappush(heap, c)
                    touched.add(c)
            for p, k in list(self.pa[x].items()):
                if k > 1:
                    self.ch[p][x] = self.pa[x][p] = 1
                    heapq.heappush(heap, p)
                    touched.add(p)
            if x in self.leaves:
                continue
            indeg, outdeg = len(self.pa[x]), len(self.ch[x])
            if outdeg == 0:
                nbrs = list(self.pa[x])
                self.remove_node(x)
            elif outdeg == 1 and indeg == 1:
                (p,), (c,) = self.pa[x], self.ch[x]
                self.remove_node(x)
                self.add_edge(p, c)
                nbrs = [p, c]
            elif outdeg == 1 and indeg == 0:
                (c,) = self.ch[x]
                self.remove_node(x)
                self.root = c
                nbrs = [c]
            else:
                continue
            for y in nbrs:
                heapq.heappush(heap, y)
            touched.update(nbrs)
        return touched

    def hybrids(self):
        return sorted(x for x, p in self.pa.items() if len(p) >= 2)

    def cycles(self):
        return _walk_cycles(self.hybrids(), lambda x: list(self.pa[x]), lambda x: len(self.pa[x]))

    def freeze(self):
        edges = [(u, c) for u, cs in self.ch.items() for c in cs]
        net = Network(edges, root=self.root, nodes=self.ch.keys(), leaves=self.leaves)
        return net, dict(self.t)


# ------------------------------------------------------------- transformations


def _qd_eligible(e, u, v):
    return (
        u in e.ch
        and v in e.ch[u]
        and u not in e.leaves
        and v not in e.leaves
        and len(e.pa[v]) == 1
        and e.t[u] == e.t[v]
    )


def _contract_qd(e):
    heap = sorted((u, v) for u in e.ch for v in e.ch[u])
    while heap:
        u, v = heapq.heappop(heap)
        if not _qd_eligible(e, u, v):
            continue
        e.contract(u, v, e.t[u])
        touched = e.tidy([u, *e.ch[u], *e.pa[u]])
        touched.add(u)
        for x in touched:
            if x in e.ch:
                for c in e.ch[x]:
                    heapq.heappush(heap, (x, c))
                for p in e.pa[x]:
                    heapq.heappush(heap, (p, x))


def contract_quasi_discriminating(net, t):
    """Contract inner edges ``(u, v)`` with equal labels and ``v`` not a hybrid.

    Repeats until no such edge remains. The result is quasi-discriminating
    and explains the same graph.

    Examples
    --------
    A tree whose inner vertices are all labeled 1 collapses to a star.

    >>> net = Network([(10, 11), (10, 0), (11, 1), (11, 2)])
    >>> out, lab = contract_quasi_discriminating(net, {10: 1, 11: 1, 0: LEAF, 1: LEAF, 2: LEAF})
    >>> out.children(out.root)
    (0, 1, 2)
    """
    e = _Editable(net, t)
    _contract_qd(e)
    return e.freeze()


def remove_weak_cycles(net, t):
    """Replace every weak cycle by a tree, keeping the explained graph.

    A cycle containing the edge ``(rho, eta)`` loses that edge. A cycle whose
    two sides each have a single interior vertex ``u``, ``v`` is rewired
    through two new vertices. If ``t[u] != t[v]``, the side vertex whose
    label matches ``rho`` is first merged into ``rho``, which turns the cycle
    into the first case. Only the weak cycles are touched, so the number of
    cycles drops by exactly the number of weak cycles.
    """
    e = _Editable(net, t)
    while True:
        weak = [c for c in e.cycles() if c.strength == WEAK]
        if not weak:
            break
        c = weak[0]
        rho, eta = c.root, c.hybrid
        if len(c.side1) == 2 or len(c.side2) == 2:
            e.remove_edge(rho, eta)
            e.tidy([rho, eta])
            continue
        u, v = c.side1[1], c.side2[1]
        if e.t[u] != e.t[v]:
            w = u if e.t[u] == e.t[rho] else v
            e.contract(rho, w, e.t[rho])
            e.tidy([rho])
            continue
        for a, b in ((rho, u), (rho, v), (u, eta), (v, eta)):
            e.remove_edge(a, b)
        top = e.new_node(e.t[u])
        w0 = e.new_node(e.t[rho])
        for a, b in ((rho, top), (top, eta), (top, w0), (w0, u), (w0, v)):
            e.add_edge(a, b)
        e.tidy([rho, u, v, eta, top, w0])
    return e.freeze()


def delete_leaf(net, t, x):
    """Remove leaf ``x`` and restore a valid level-1 network on the rest.

    Raises
    ------
    InputError
        If ``x`` is not a leaf or is the only leaf.
    """
    _check_leaf(net, x)
    if len(net.leaves) < 2:
        raise InputError("cannot delete the last leaf")
    e = _Editable(net, t)
    parents = list(e.pa[x])
    e.remove_node(x)
    e.tidy(parents)
    return e.freeze()


def least_resolved(net, t):
    """Contract everything that can be contracted without changing the graph.

    After :func:`contract_quasi_discriminating`, each outdegree-1 hybrid is
    merged with its child when that child is not a leaf. The merged vertex
    takes the child's label, since the hybrid's own label was free.
    """
    e = _Editable(net, t)
    _contract_qd(e)
    for h in e.hybrids():
        if h in e.ch and len(e.ch[h]) == 1:
            (v,) = e.ch[h]
            if v not in e.leaves and len(e.pa[v]) == 1:
                e.contract(h, v, e.t[v])
                e.tidy([h])
    return e.freeze()


def relabel_leaves(net, t, mapping):
    """Rename vertices by ``mapping`` (missing ids keep their name)."""
    f = lambda x: mapping.get(x, x)  # noqa: E731
    renamed = Network(
        [(f(u), f(v)) for u, v in net.edges()],
        root=f(net.root),
        nodes=[f(x) for x in net.nodes()],
        leaves=[f(x) for x in net.leaves],
    )
    return renamed, {f(x): lab for x, lab in t.items()}


# ---------------------------------------------------------------- isomorphism


def _canonical_ids(net, t, table):
    """Intern a canonical form for every vertex, children before parents."""
    leaves = net.leaves
    cyc = cycles(net)
    rooted_at = {}
    interior = set()
    for c in cyc:
        rooted_at.setdefault(c.root, []).append(c)
        interior.update(c.side1[1:-1])
        interior.update(c.side2[1:-1])
    cycle_edges = set()
    for c in cyc:
        for side in (c.side1, c.side2):
            cycle_edges.update(zip(side, side[1:]))

    def intern(form):
        return table.setdefault(form, len(table))

    canon, pendant = {}, {}
    for u in reversed(net.topological_order()):
        if u in leaves:
            canon[u] = intern(("leaf", u))
            continue
        items = [canon[c] for c in net.children(u) if (u, c) not in cycle_edges]
        for c in rooted_at.get(u, ()):
            sides = []
            for side in (c.side1, c.side2):
                sides.append(tuple(pendant[w] for w in side[1:-1]))
            sides.sort()
            items.append(intern(("cycle", tuple(sides), canon[c.hybrid])))
        items = tuple(sorted(items))
        label = t[u]
        if net.indegree(u) == 2 and net.outdegree(u) == 1:
            label = "*"
        pendant[u] = intern(("side", label, items))
        canon[u] = intern(("node", label, items))
    return canon


def networks_isomorphic(n1, t1, n2, t2):
    """True iff the labeled networks agree up to renaming inner vertices.

    Leaves are fixed pointwise; outdegree-1 hybrids match regardless of
    their label. Exact for level-1 networks.

    Raises
    ------
    InputError
        If the leaf sets differ.
    """
    if n1.leaves != n2.leaves:
        raise InputError("networks are on different leaf sets")
    table = {}
    c1 = _canonical_ids(n1, t1, table)
    c2 = _canonical_ids(n2, t2, table)
    return c1[n1.root] == c2[n2.root]


# ----------------------------------------------------------------- text format

_LABEL_TOKENS = {"0": 0, "1": 1, "P": PRIME, "-": LEAF}
_TOKEN_OF = {0: "0", 1: "1", PRIME: "P", LEAF: "-"}


def format_network(net, t, name="N"):
    """Serialize to the line-based network format."""
    lines = [f"network {name}", "leaves: " + " ".join(str(x) for x in sorted(net.leaves))]
    for x in net.nodes():
        lines.append(f"node {x} {_TOKEN_OF.get(t.get(x), '?')}")
    for u, v in net.edges():
        lines.append(f"edge {u} {v}")
    lines.append(f"root {net.root}")
    return "\n".join(lines) + "\n"


def parse_network(text):
    """Parse the network format.

    Returns
    -------
    name : str
    net : Network
    t : dict
    """
    name = None
    leaves = None
    labels, edges, roots = {}, [], []

    def ints(tokens, lineno):
        try:
            return [int(x) for x in tokens]
        except ValueError:
            raise InputError(f"line {lineno}: vertex ids must be integers") from None

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        fields = rest.split()
        if head == "network":
            if name is not None:
                raise InputError(f"line {lineno}: second 'network' header")
            name = rest.strip() or "N"
        elif head == "leaves:":
            if leaves is not None:
                raise InputError(f"line {lineno}: second 'leaves:' line")
            leaves = ints(fields, lineno)
        elif head == "node":
            if len(fields) != 2 or fields[1] not in _LABEL_TOKENS:
                raise InputError(f"line {lineno}: expected 'node <id> <0|1|P|->'")
            (x,) = ints(fields[:1], lineno)
            if x in labels:
                raise InputError(f"line {lineno}: node {x} declared twice")
            labels[x] = _LABEL_TOKENS[fields[1]]
        elif head == "edge":
            if len(fields) != 2:
                raise InputError(f"line {lineno}: expected 'edge <u> <v>'")
            edges.append(tuple(ints(fields, lineno)))
        elif head == "root":
            if len(fields) != 1:
                raise InputError(f"line {lineno}: expected 'root <id>'")
            roots.extend(ints(fields, lineno))
        else:
            raise InputError(f"line {lineno}: unknown directive {head!r}")
    if name is None:
        raise InputError("missing 'network <name>' header")
    if leaves is None:
        raise InputError("missing 'leaves:' line")
    if len(roots) != 1:
        raise InputError(f"expected exactly one 'root' line, found {len(roots)}")
    for x in leaves:
        if x not in labels:
            raise InputError(f"leaf {x} has no 'node' line")
    net = Network(edges, root=roots[0], nodes=labels.keys(), leaves=leaves)
    return name, net, labels


def read_network(path):
    with open(path, encoding="utf-8") as fh:
        return parse_network(fh.read())


def write_network(net, t, path, name="N"):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_network(net, t, name))


def to_dot(net, t, name="N"):
    """Graphviz rendering: hybrids as double boxes, label-1 vertices filled."""
    lines = [f'digraph "{name}" {{', "  node [shape=circle, label=\"\", width=0.25];"]
    for x in net.nodes():
        if x in net.leaves:
            lines.append(f'  {x} [shape=plaintext, label="{x}"];')
            continue
        attrs = []
        if net.indegree(x) >= 2:
            attrs.append("shape=box, peripheries=2")
        if t.get(x) == 1:
            attrs.append("style=filled, fillcolor=black")
        elif t.get(x) == PRIME:
            attrs.append('label="P"')
        lines.append(f"  {x} [{', '.join(attrs)}];" if attrs else f"  {x};")
    for u, v in net.edges():
        lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
