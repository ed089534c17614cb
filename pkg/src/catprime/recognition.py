"""Recognizers for pseudo-cographs, polar-cats and cat-prime graphs.

Each recognizer returns a :class:`RecognitionOutcome`. A positive verdict
carries a certificate and a labeled network that explains the input graph.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace

from .cograph import _cotree_from_mdt, _ordering_from_cotree, build_cotree, is_cograph
from .exceptions import InputError
from .graph import (
    JOIN,
    UNION,
    _co_components_of,
    _components_of,
    _p4_from_mdt,
    _sorted_parts,
    induced_subgraph,
)
from .modular import _quotient_at, build_mdt
from .network import (
    HYBRID_DEFAULT,
    LEAF,
    STRONG,
    Network,
    contract_quasi_discriminating,
    cycles,
)
from .network import least_resolved as _least_resolved

__all__ = [
    "MEMBER",
    "NON_MEMBER",
    "PseudoWitness",
    "PolarCatWitness",
    "RecognitionOutcome",
    "recognize_cograph",
    "recognize_pseudo_cograph",
    "build_pseudo_network",
    "recognize_polar_cat",
    "explain_level1",
    "count_strong_cycles_vs_prime_modules",
    "is_well_proportioned",
]

MEMBER = "MEMBER"
NON_MEMBER = "NON_MEMBER"


@dataclass(frozen=True)
class PseudoWitness:
    """Certificate ``(v, V1, V2, mode)`` for a pseudo-cograph.

    ``V1`` and ``V2`` are sorted tuples meeting exactly in ``v``. Each
    induces a cograph. Removing ``v`` leaves the disjoint union (``UNION``)
    or the join (``JOIN``) of the two sides. Graphs on at most two vertices
    get ``trivially_small=True``, ``v=None`` and no mode.
    """

    v: int | None
    v1: tuple
    v2: tuple
    mode: str | None
    trivially_small: bool = False


@dataclass(frozen=True)
class PolarCatWitness:
    """Pseudo-cograph witness plus caterpillar orderings of both sides.

    ``y`` orders ``V1`` and ``z`` orders ``V2``; both end with ``v``.
    """

    pseudo: PseudoWitness
    y: object
    z: object

    @property
    def v(self):
        return self.pseudo.v

    @property
    def v1(self):
        return self.pseudo.v1

    @property
    def v2(self):
        return self.pseudo.v2

    @property
    def mode(self):
        return self.pseudo.mode


@dataclass(frozen=True)
class RecognitionOutcome:
    """Verdict with optional certificate and explaining network.

    For a failed :func:`explain_level1`, ``module`` lists the vertices of a
    prime module whose quotient is not a polar-cat.
    """

    verdict: str
    certificate: object = None
    network: tuple | None = None
    reason: str = ""
    module: tuple | None = None

    @property
    def member(self):
        return self.verdict == MEMBER


def _no(reason, **kw):
    return RecognitionOutcome(NON_MEMBER, reason=reason, **kw)


def _split_around(g, v):
    """Components of whichever of ``G - v`` and its complement is disconnected."""
    rest = set(range(g.n))
    rest.discard(v)
    parts = _components_of(g._adj, rest)
    if len(parts) > 1:
        return _sorted_parts(parts), UNION
    parts = _co_components_of(g._adj, rest)
    if len(parts) > 1:
        return _sorted_parts(parts), JOIN
    return None, None


def _is_cograph_on(g, vertices):
    sub, _ = induced_subgraph(g, vertices)
    return is_cograph(sub)


def recognize_cograph(g):
    """Cograph test; the certificate is the discriminating cotree."""
    t = build_cotree(g) if g.n else None
    if g.n == 0:
        return RecognitionOutcome(MEMBER, reason="empty graph")
    if t is None:
        return _no("contains an induced P4")
    return RecognitionOutcome(MEMBER, certificate=t, network=t.to_network())


def recognize_pseudo_cograph(g):
    """Decide whether ``g`` is a pseudo-cograph.

    Graphs on at most two vertices are accepted outright. A cograph is
    split at vertex 0 into the component (or co-component) of ``G - 0``
    holding the smallest vertex and the rest. Otherwise one induced P4 is
    located; each of its vertices is tried as the shared vertex ``v``, with
    the component holding two P4 vertices on one side.

    Examples
    --------
    >>> from catprime.graph import path_graph, cycle_graph
    >>> recognize_pseudo_cograph(path_graph(4)).verdict
    'MEMBER'
    >>> recognize_pseudo_cograph(cycle_graph(5)).verdict
    'NON_MEMBER'
    """
    n = g.n
    if n <= 2:
        everything = tuple(range(n))
        w = PseudoWitness(0 if n else None, everything, everything, None, trivially_small=True)
        net = build_cotree(g).to_network() if n else None
        return RecognitionOutcome(MEMBER, certificate=w, network=net)
    mdt = build_mdt(g)
    p4 = _p4_from_mdt(g, mdt)
    if p4 is None:
        parts, mode = _split_around(g, 0)
        first = set(parts[0])
        w = PseudoWitness(
            0,
            tuple(sorted(first | {0})),
            tuple(x for x in range(n) if x not in first),
            mode,
        )
        return RecognitionOutcome(MEMBER, certificate=w, network=_cotree_from_mdt(mdt).to_network())
    p4set = set(p4)
    for v in sorted(p4):
        parts, mode = _split_around(g, v)
        if parts is None:
            continue
        heavy = next(set(p) for p in parts if len(p4set.intersection(p)) >= 2)
        side1 = sorted(heavy | {v})
        side2 = [x for x in range(n) if x not in heavy]
        if _is_cograph_on(g, side1) and _is_cograph_on(g, side2):
            w = PseudoWitness(v, tuple(side1), tuple(side2), mode)
            return RecognitionOutcome(MEMBER, certificate=w, network=_network_from_witness(g, w))
    return _no(f"no vertex of the induced P4 {p4} splits the graph into two cographs")


def _check_witness(g, w):
    n = g.n
    if w.trivially_small:
        if n > 2:
            raise InputError("F1: a trivially small witness needs at most two vertices")
        return
    s1, s2 = set(w.v1), set(w.v2)
    if s1 | s2 != set(range(n)) or s1 & s2 != {w.v}:
        raise InputError("F1: the sides must cover V and meet exactly in v")
    if len(s1) < 2 or len(s2) < 2:
        raise InputError("F1: each side needs at least two vertices")
    if not (_is_cograph_on(g, s1) and _is_cograph_on(g, s2)):
        raise InputError("F2: both sides must induce cographs")
    a, b = s1 - {w.v}, s2 - {w.v}
    if len(a) > len(b):
        a, b = b, a
    adj = g._adj
    if w.mode == UNION:
        ok = all(adj[x].isdisjoint(b) for x in a)
    elif w.mode == JOIN:
        ok = all(b <= adj[x] for x in a)
    else:
        raise InputError(f"F3: unknown mode {w.mode!r}")
    if not ok:
        raise InputError(f"F3: G - v is not the {w.mode} of the two sides")


def _cotree_pieces(g, vertices, next_id):
    """Cotree of ``G[vertices]`` with leaves renamed to original ids.

    Returns ``(edges, labels, root, parent_of, next_id)``.
    """
    sub, _ = induced_subgraph(g, vertices)
    back = sorted(vertices)
    t = build_cotree(sub)
    name = {}
    for x in range(len(t.labels)):
        if x < sub.n:
            name[x] = back[x]
        else:
            name[x] = next_id
            next_id += 1
    edges, labels, parent_of = [], {}, {}
    for u in t.inner_nodes():
        labels[name[u]] = t.labels[u]
        for c in t.children[u]:
            edges.append((name[u], name[c]))
            parent_of[name[c]] = name[u]
    return edges, labels, name[t.root], parent_of, next_id


def build_pseudo_network(g, w):
    """Labeled level-1 network with one cycle explaining a pseudo-cograph.

    The cotrees of both sides hang below a new root labeled 1 for ``JOIN``
    and 0 for ``UNION``. Both copies of the edge into ``v`` are subdivided,
    and the two new vertices are merged into one hybrid above ``v``. Cographs are
    answered with their cotree instead.

    Raises
    ------
    InputError
        If ``w`` violates F1, F2 or F3; the message names the clause.
    """
    _check_witness(g, w)
    if w.trivially_small or is_cograph(g):
        if g.n == 0:
            raise InputError("the empty graph has no explaining network")
        return build_cotree(g).to_network()
    return _network_from_witness(g, w)


def _network_from_witness(g, w):
    v = w.v
    next_id = g.n
    e1, l1, r1, par1, next_id = _cotree_pieces(g, w.v1, next_id)
    e2, l2, r2, par2, next_id = _cotree_pieces(g, w.v2, next_id)
    rho, eta = next_id, next_id + 1
    edges = [e for e in e1 if e[1] != v] + [e for e in e2 if e[1] != v]
    edges += [(rho, r1), (rho, r2), (par1[v], eta), (par2[v], eta), (eta, v)]
    labels = {x: LEAF for x in range(g.n)}
    labels.update(l1)
    labels.update(l2)
    labels[rho] = 1 if w.mode == JOIN else 0
    labels[eta] = HYBRID_DEFAULT
    return Network(edges, root=rho, nodes=range(eta + 1)), labels


def _side_ordering(g, side, v):
    sub, old_to_new = induced_subgraph(g, side)
    t = build_cotree(sub)
    if t is None:
        return None
    o = _ordering_from_cotree(t)
    if o is None:
        return None
    back = sorted(side)
    seq = [back[x] for x in o.sequence]
    if v not in seq[-2:]:
        return None
    if seq[-1] != v:
        seq[-2], seq[-1] = seq[-1], seq[-2]
    return replace(o, sequence=tuple(seq)), t.labels[t.root] if sub.n > 1 else None


def recognize_polar_cat(g, rng=None):
    """Decide whether ``g`` is a polar-cat.

    A polar-cat is a pseudo-cograph ``(v, G1, G2)`` where the sides are
    both connected and ``G - v`` is their disjoint union, or both
    disconnected and ``G - v`` is their join. Both sides must also be
    explained by caterpillars with ``v`` in the cherry. On success the
    network is the strong quasi-discriminating elementary network built
    from the witness.

    Parameters
    ----------
    g : Graph
    rng : random.Random, optional
        If given, the P4 vertices are tried in random order and the two
        sides are randomly swapped. Otherwise ``V1`` is the side with the
        smaller vertex besides ``v``.
    """
    if g.n < 4:
        return _no("fewer than four vertices")
    mdt = build_mdt(g)
    p4 = _p4_from_mdt(g, mdt)
    if p4 is None:
        return _no("cographs are not polar-cats")
    order = sorted(p4)
    if rng is not None:
        rng.shuffle(order)
    for v in order:
        parts, mode = _split_around(g, v)
        if parts is None or len(parts) != 2:
            continue
        side1, side2 = sorted(parts[0] + [v]), sorted(parts[1] + [v])
        if rng is not None and rng.random() < 0.5:
            side1, side2 = side2, side1
        y = _side_ordering(g, side1, v)
        z = _side_ordering(g, side2, v)
        if y is None or z is None:
            continue
        # Root label 1 means connected; polarizing wants it opposite to G - v.
        wanted = 1 if mode == UNION else 0
        if y[1] != wanted or z[1] != wanted:
            continue
        pw = PseudoWitness(v, tuple(side1), tuple(side2), mode)
        return RecognitionOutcome(
            MEMBER,
            certificate=PolarCatWitness(pw, y[0], z[0]),
            network=_network_from_witness(g, pw),
        )
    return _no(f"no vertex of the induced P4 {p4} gives a polarizing caterpillar split")


def is_well_proportioned(w):
    """True iff both sides have at least 3 vertices, or the sizes are 2 and at least 5."""
    a, b = sorted((len(w.v1), len(w.v2)))
    return a >= 3 or (a == 2 and b >= 5)


def _translate(w, f):
    pw = w.pseudo
    pw = PseudoWitness(f(pw.v), tuple(f(x) for x in pw.v1), tuple(f(x) for x in pw.v2), pw.mode)
    return PolarCatWitness(
        pw,
        replace(w.y, sequence=tuple(f(x) for x in w.y.sequence)),
        replace(w.z, sequence=tuple(f(x) for x in w.z.sequence)),
    )


def explain_level1(g, least_resolved=False, seed=None):
    """Decide cat-prime membership and build an explaining level-1 network.

    Every prime node of the modular decomposition must have a polar-cat
    quotient. Each prime node is then replaced by the elementary network of
    its quotient. The root of that network becomes the prime node, and its
    leaves become the node's children. Other nodes keep their series or
    parallel label. Equal-label edges are contracted at the end.

    Parameters
    ----------
    g : Graph
        Graph with at least one vertex.
    least_resolved : bool
        Also contract hybrid-out edges (see :func:`network.least_resolved`).
    seed : int, optional
        Randomizes P4 vertex order and side orientation in every prime
        quotient. The network is unchanged up to isomorphism whenever all
        quotients are well-proportioned.

    Returns
    -------
    RecognitionOutcome
        On success ``certificate`` is a list of ``(module, witness)`` pairs,
        one per prime node in preorder. Witness vertices are the smallest
        vertices of the child modules they stand for.
    """
    if g.n == 0:
        raise InputError("explain needs at least one vertex")
    mdt = build_mdt(g)
    rng = random.Random(seed) if seed is not None else None
    pieces, certificate = {}, []
    for p in mdt.prime_nodes():
        q, reps = _quotient_at(g, mdt, p)
        out = recognize_polar_cat(q, rng=rng)
        module = tuple(mdt.vertices(p))
        if not out.member:
            return _no(
                f"quotient of prime module {list(module)} is not a polar-cat ({out.reason})",
                module=module,
            )
        pieces[p] = out.network
        certificate.append((module, _translate(out.certificate, reps.__getitem__)))

    edges, labels = [], {}
    next_id = mdt.node_count()
    for node in range(mdt.node_count()):
        if mdt.is_leaf(node):
            labels[node] = LEAF
        elif node not in pieces:
            labels[node] = mdt.label(node)
            edges.extend((node, c) for c in mdt.children(node))
        else:
            piece, t_piece = pieces[node]
            kids = mdt.children(node)
            name = {}
            for x in piece.nodes():
                if x == piece.root:
                    name[x] = node
                elif x in piece.leaves:
                    name[x] = kids[x]
                else:
                    name[x] = next_id
                    next_id += 1
                if x not in piece.leaves:
                    labels[name[x]] = t_piece[x]
            edges.extend((name[a], name[b]) for a, b in piece.edges())
    net = Network(edges, root=mdt.root, nodes=range(next_id))
    net, labels = contract_quasi_discriminating(net, labels)
    if least_resolved:
        net, labels = _least_resolved(net, labels)
    return RecognitionOutcome(MEMBER, certificate=certificate, network=(net, labels))


def count_strong_cycles_vs_prime_modules(g):
    """``(prime modules, strong cycles in the explaining network)``; equal for cat-prime graphs.

    Raises
    ------
    InputError
        If ``g`` is not cat-prime.
    """
    out = explain_level1(g)
    if not out.member:
        raise InputError(out.reason)
    net, _ = out.network
    return len(out.certificate), sum(c.strength == STRONG for c in cycles(net))
