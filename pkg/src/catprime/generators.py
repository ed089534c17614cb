"""Seeded random graphs and networks for tests and benchmarks."""

from __future__ import annotations

import math
import random

from .exceptions import InputError
from .graph import Graph, _pairs
from .modular import LEAF
from .network import Network, evaluate

__all__ = [
    "gnp",
    "random_cograph",
    "perturbed_cograph",
    "random_level1_network",
    "random_elementary_network",
    "random_pvr_network",
    "random_generators",
]


def _rng(seed):
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def gnp(n, p, seed=None):
    """Erdős–Rényi graph G(n, p) by geometric edge skipping."""
    if n < 0 or not 0 <= p <= 1:
        raise InputError("gnp needs n >= 0 and 0 <= p <= 1")
    rng = _rng(seed)
    if p == 1:
        return Graph(n, _pairs(n))
    edges = []
    if p > 0:
        lp = math.log1p(-p)
        v, w = 1, -1
        while v < n:
            w += 1 + int(math.log1p(-rng.random()) / lp)
            while w >= v and v < n:
                w -= v
                v += 1
            if v < n:
                edges.append((w, v))
    return Graph(n, edges)


def _cograph_adjacency(n, rng, max_parts):
    """Adjacency sets of a random sparse cograph on ``n`` shuffled vertices.

    Union nodes turn 45-55% of their vertices into isolated leaves and split
    the rest into 1..``max_parts`` blocks. Join nodes attach one vertex to
    the remaining block. The vertices below the join nodes of one level then
    add up to about half of those of the level above, so ``m`` stays close
    to ``n`` (root a union node) or ``2n`` (root a join node) at every size.
    """
    root_join = rng.random() < 0.5
    perm = list(range(n))
    rng.shuffle(perm)
    adj = [set() for _ in range(n)]
    stack = [(0, n, root_join)]
    while stack:
        lo, hi, is_join = stack.pop()
        k = hi - lo
        if k == 1:
            continue
        if is_join:
            cuts = [lo + 1]
        else:
            # Shed a random fraction of singletons; the rest forms a few blocks.
            singles = min(k - 1, max(1, int(k * rng.uniform(0.45, 0.55))))
            rest = k - singles
            parts = min(rest, rng.randint(1, max_parts))
            cuts = [lo + i for i in range(1, singles + 1)]
            if parts > 1:
                cuts += sorted(rng.sample(range(lo + singles + 1, hi), parts - 1))
        bounds = [lo, *cuts, hi]
        blocks = [(bounds[i], bounds[i + 1]) for i in range(len(bounds) - 1)]
        if is_join:
            for i, (a, b) in enumerate(blocks):
                for c, d in blocks[i + 1 :]:
                    for x in range(a, b):
                        px = perm[x]
                        for y in range(c, d):
                            adj[px].add(perm[y])
                            adj[perm[y]].add(px)
        stack.extend((a, b, not is_join) for a, b in blocks)
    return adj


def random_cograph(n, seed=None, max_parts=4):
    """Random sparse cograph built from a random discriminating cotree.

    ``max_parts`` bounds the number of non-singleton blocks below a union
    node.
    """
    if n < 1 or max_parts < 2:
        raise InputError("random_cograph needs n >= 1 and max_parts >= 2")
    return Graph._from_sets(_cograph_adjacency(n, _rng(seed), max_parts))


def perturbed_cograph(n, flips=5, seed=None, max_parts=4):
    """Random cograph with ``flips`` distinct vertex pairs toggled."""
    if n < 2 or flips < 0 or flips > n * (n - 1) // 2:
        raise InputError("perturbed_cograph needs n >= 2 and 0 <= flips <= n(n-1)/2")
    rng = _rng(seed)
    adj = _cograph_adjacency(n, rng, max_parts)
    done = set()
    while len(done) < flips:
        u, v = sorted(rng.sample(range(n), 2))
        if (u, v) in done:
            continue
        done.add((u, v))
        if v in adj[u]:
            adj[u].discard(v)
            adj[v].discard(u)
        else:
            adj[u].add(v)
            adj[v].add(u)
    return Graph._from_sets(adj)


class _Builder:
    def __init__(self, nleaves, rng):
        self.rng = rng
        self.next_id = nleaves
        self.edges = []
        self.children = {}

    def node(self):
        x = self.next_id
        self.next_id += 1
        self.children[x] = []
        return x

    def edge(self, u, v):
        self.edges.append((u, v))
        self.children.setdefault(u, []).append(v)

    def attach(self, u, sub):
        """Hang subnetwork root ``sub`` below ``u``, or merge it into ``u``."""
        if sub in self.children and self.rng.random() < 0.3:
            for c in self.children.pop(sub):
                self.edges.remove((sub, c))
                self.edge(u, c)
            return
        self.edge(u, sub)

    def tree(self, leaves):
        if len(leaves) == 1:
            return leaves[0]
        root = self.node()
        k = min(len(leaves), self.rng.randint(2, 4))
        for group in _split(leaves, k, self.rng):
            self.attach(root, self.tree(group))
        return root


def _split(items, k, rng, minimum=None):
    """Shuffle ``items`` and cut them into ``k`` nonempty groups."""
    items = list(items)
    rng.shuffle(items)
    minimum = minimum or [1] * k
    spare = len(items) - sum(minimum)
    extra = [0] * k
    for _ in range(spare):
        extra[rng.randrange(k)] += 1
    out, pos = [], 0
    for i in range(k):
        size = minimum[i] + extra[i]
        out.append(items[pos : pos + size])
        pos += size
    return out


def _cycle_shape(budget, strength, rng):
    """Interior vertex counts ``(a, b)`` of the two sides, using at most ``budget - 1`` pendants."""
    room = budget - 1
    strong_ok = room >= 3
    if strength == "strong" or (strength is None and strong_ok and rng.random() < 0.6):
        if not strong_ok:
            raise InputError("not enough leaves for a strong cycle")
        a = rng.randint(1, room - 2)
        b = rng.randint(max(1, 3 - a), room - a)
        return a, b
    if room >= 2 and rng.random() < 0.3:
        return 1, 1
    a = rng.randint(1, min(room, 4))
    return (a, 0) if rng.random() < 0.5 else (0, a)


def _cyclic(b, leaves, k, strength):
    """Subnetwork on ``leaves`` with ``k`` cycles; returns its root."""
    rng = b.rng
    if k == 0:
        return b.tree(leaves)
    per = 4 if strength == "strong" else 2
    sa, sb = _cycle_shape(len(leaves) - per * (k - 1), strength, rng)
    root_extra = 1 if len(leaves) - per * (k - 1) > 1 + sa + sb and rng.random() < 0.4 else 0
    ngroups = 1 + sa + sb + root_extra
    # Spread the remaining cycles over the groups and reserve their leaves.
    share = [0] * ngroups
    for _ in range(k - 1):
        share[rng.randrange(ngroups)] += 1
    groups = _split(leaves, ngroups, rng, [max(1, per * s) for s in share])
    subs = [_cyclic(b, g, s, strength) for g, s in zip(groups, share)]
    rho, eta = b.node(), b.node()
    b.attach(eta, subs[0])
    pos = 1
    for length in (sa, sb):
        prev = rho
        for _ in range(length):
            x = b.node()
            b.edge(prev, x)
            b.attach(x, subs[pos])
            pos += 1
            prev = x
        b.edge(prev, eta)
    if root_extra:
        b.attach(rho, subs[pos])
    return rho


def random_level1_network(leaves, cycles=0, seed=None, strength=None):
    """Random valid level-1 network with ``cycles`` cycles and random 0/1 labels.

    Parameters
    ----------
    leaves : int
        Number of leaves, named ``0..leaves-1``.
    cycles : int
        Number of cycles.
    seed : int or random.Random, optional
    strength : {None, "weak", "strong"}
        Force every cycle to be weak or strong; mixed when ``None``.

    Returns
    -------
    (Network, dict)
    """
    per = 4 if strength == "strong" else 2
    if leaves < 2 or cycles < 0 or leaves < per * cycles:
        raise InputError(f"cannot fit {cycles} cycles on {leaves} leaves")
    if strength not in (None, "weak", "strong"):
        raise InputError(f"unknown cycle strength {strength!r}")
    rng = _rng(seed)
    b = _Builder(leaves, rng)
    root = _cyclic(b, list(range(leaves)), cycles, strength)
    net = Network(b.edges, root=root)
    labels = {x: (LEAF if x in net.leaves else rng.randint(0, 1)) for x in net.nodes()}
    return net, labels


def random_elementary_network(k, seed=None, well_proportioned=True):
    """Strong quasi-discriminating elementary network on leaves ``0..k-1``.

    The hybrid leaf and the side split are random. Labels alternate down
    both sides, starting opposite to the root.
    """
    rng = _rng(seed)
    if well_proportioned:
        options = [(a, k - 1 - a) for a in range(1, k - 1) if min(a, k - 1 - a) >= 2 or {a, k - 1 - a} & {1} and max(a, k - 1 - a) >= 4]
    else:
        options = [(a, k - 1 - a) for a in range(1, k - 1) if a + (k - 1 - a) >= 3]
    if k < 4 or not options:
        raise InputError(f"no suitable elementary network on {k} leaves")
    a, bsize = rng.choice(options)
    order = list(range(k))
    rng.shuffle(order)
    edges, labels = [], {x: LEAF for x in range(k)}
    rho, eta = k, k + 1
    labels[rho] = rng.randint(0, 1)
    labels[eta] = 0
    edges.append((eta, order[0]))
    nxt, pos = k + 2, 1
    for length in (a, bsize):
        prev, lab = rho, 1 - labels[rho]
        for _ in range(length):
            x = nxt
            nxt += 1
            labels[x] = lab
            lab = 1 - lab
            edges.append((prev, x))
            edges.append((x, order[pos]))
            pos += 1
            prev = x
        edges.append((prev, eta))
    return Network(edges, root=rho), labels


def random_pvr_network(seed=None, primes=(1, 3), max_leaves=30):
    """Network whose prime nodes are well-proportioned elementary pieces.

    Pieces and series/parallel nodes are nested at random. Returns
    ``(net, labels, graph)`` where ``graph`` is the explained graph with
    shuffled vertex ids (the network keeps the unshuffled ids).
    """
    rng = _rng(seed)
    want = rng.randint(*primes)
    nleaves = [0]
    edges, labels = [], {}
    counter = [0]

    def fresh(lab):
        counter[0] += 1
        x = ("i", counter[0])
        labels[x] = lab
        return x

    def leaf():
        x = ("l", nleaves[0])
        nleaves[0] += 1
        labels[x] = LEAF
        return x

    def grow(budget_primes, parent_label):
        # Returns the root of a subnetwork that is a child module of a prime node.
        if budget_primes == 0 and (nleaves[0] > max_leaves or rng.random() < 0.6):
            return leaf()
        if budget_primes > 0 and rng.random() < 0.7:
            k = rng.randint(5, 7)
            piece, t = random_elementary_network(k, rng)
            share = [0] * k
            for _ in range(budget_primes - 1):
                share[rng.randrange(k)] += 1
            name = {}
            for x in piece.nodes():
                if x in piece.leaves:
                    name[x] = grow(share[x], None)
                else:
                    name[x] = fresh(t[x])
            edges.extend((name[u], name[v]) for u, v in piece.edges())
            return name[piece.root]
        lab = rng.randint(0, 1)
        if lab == parent_label:
            lab = 1 - lab
        node = fresh(lab)
        k = rng.randint(2, 3)
        share = [0] * k
        for _ in range(budget_primes):
            share[rng.randrange(k)] += 1
        for s in share:
            edges.append((node, grow(s, lab)))
        return node

    root = grow(want, None)
    ids = {}
    for x in sorted(labels, key=lambda x: (x[0] != "l", x[1])):
        ids[x] = len(ids)
    net = Network([(ids[u], ids[v]) for u, v in edges], root=ids[root], nodes=range(len(ids)))
    t = {ids[x]: lab for x, lab in labels.items()}
    g = evaluate(net, t)
    perm = list(range(g.n))
    rng.shuffle(perm)
    shuffled = Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
    return net, t, shuffled


_KINDS = {
    "gnp": gnp,
    "random_cograph": random_cograph,
    "perturbed_cograph": perturbed_cograph,
    "random_level1_network": random_level1_network,
}


def random_generators(kind, params, seed):
    """Dispatch to a generator by name with keyword ``params`` and ``seed``."""
    try:
        fn = _KINDS[kind]
    except KeyError:
        raise InputError(f"unknown generator {kind!r}; expected one of {sorted(_KINDS)}") from None
    try:
        return fn(**params, seed=seed)
    except TypeError as exc:
        raise InputError(f"bad parameters for {kind}: {exc}") from None
