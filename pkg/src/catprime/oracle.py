"""Brute-force oracles and the exhaustive census.

Nothing here calls the recognition module's search code. The pseudo-cograph
oracle checks (F1)-(F3) with bitmasks over every shared vertex and every
split of the remaining vertices. The polar-cat oracle enumerates all strong
quasi-discriminating elementary networks and evaluates them. The census
runs the fast recognizers against these oracles on every graph of a given
order.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations

from .cograph import is_cograph
from .exceptions import InputError
from .generators import random_generators
from .graph import Graph, _pairs, edge_mask, graph_from_mask
from .modular import build_mdt
from .network import LEAF, STRONG, Network, cycles, evaluate, validate
from .recognition import explain_level1, recognize_polar_cat, recognize_pseudo_cograph

__all__ = [
    "CLASSES",
    "Mismatch",
    "CensusStats",
    "brute_cograph",
    "brute_pseudo_cograph",
    "pseudo_cograph_witnesses",
    "brute_polar_cat",
    "brute_cat_prime",
    "brute_is_primitive",
    "enumerate_labeled_graphs",
    "random_generators",
    "run_census",
]

CLASSES = ("cograph", "pseudo", "polar_cat", "cat_prime")

PSEUDO_LIMIT = 12
POLAR_LIMIT = 8
ENUM_LIMIT = 7


def _masks(g):
    out = [0] * g.n
    for u, v in g.edges():
        out[u] |= 1 << v
        out[v] |= 1 << u
    return out


def _members(bits):
    out, i = [], 0
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return out


def _p4_free(adj, bits):
    """No 4 vertices of ``bits`` induce a path (3 edges, degrees 1,1,2,2)."""
    vs = _members(bits)
    if len(vs) < 4:
        return True
    for quad in combinations(vs, 4):
        q = 0
        for x in quad:
            q |= 1 << x
        degs = sorted(bin(adj[x] & q).count("1") for x in quad)
        if degs == [1, 1, 2, 2]:
            return False
    return True


def brute_cograph(g):
    """Cograph test by scanning every 4-vertex subset."""
    return _p4_free(_masks(g), (1 << g.n) - 1)


def _f3_mode(adj, a, b):
    """``"union"``/``"join"`` if all or none of the ``a``-``b`` pairs are edges."""
    none = all_ = True
    bb = b
    for x in _members(a):
        hit = adj[x] & bb
        if hit:
            none = False
        if hit != bb:
            all_ = False
        if not none and not all_:
            return None
    return "union" if none else "join"


def pseudo_cograph_witnesses(g):
    """All ``(v, V1, V2, mode)`` satisfying (F1)-(F3) literally.

    Each unordered split appears once, with ``V1`` holding the smallest
    vertex other than ``v``. Graphs on at most two vertices are
    pseudo-cographs without a witness, so the list is empty for them.
    """
    n = g.n
    if n > PSEUDO_LIMIT:
        raise InputError(f"pseudo-cograph oracle is limited to n <= {PSEUDO_LIMIT}")
    if n <= 2:
        return []
    adj = _masks(g)
    full = (1 << n) - 1
    out = []
    for v in range(n):
        rest = full & ~(1 << v)
        pivot = min(_members(rest))
        others = rest & ~(1 << pivot)
        # a always holds the pivot, so each unordered split is seen once.
        sub = others
        while True:
            a = (1 << pivot) | (others & ~sub)
            b = rest & ~a
            if b:
                mode = _f3_mode(adj, a, b)
                if mode and _p4_free(adj, a | 1 << v) and _p4_free(adj, b | 1 << v):
                    out.append((v, tuple(_members(a | 1 << v)), tuple(_members(b | 1 << v)), mode))
            if sub == 0:
                break
            sub = (sub - 1) & others
    return out


def brute_pseudo_cograph(g):
    """Pseudo-cograph test from the raw definition (n <= 12)."""
    return g.n <= 2 or bool(pseudo_cograph_witnesses(g))


def _elementary_edge_sets(n):
    """Yield ``(edges, labels)`` for every strong QD elementary network on ``0..n-1``."""
    rho, eta = n, n + 1
    for v in range(n):
        rest = [x for x in range(n) if x != v]
        for seq in permutations(rest):
            for cut in range(1, n - 1):
                left, right = seq[:cut], seq[cut:]
                if len(left) == 1 and len(right) == 1:
                    continue
                # Both orientations give the same network; keep one.
                if left[0] > right[0]:
                    continue
                for root_label in (0, 1):
                    edges = [(eta, v)]
                    labels = {x: LEAF for x in range(n)}
                    labels[rho], labels[eta] = root_label, 0
                    nxt = n + 2
                    for side in (left, right):
                        prev, lab = rho, 1 - root_label
                        for leaf in side:
                            labels[nxt] = lab
                            edges += [(prev, nxt), (nxt, leaf)]
                            prev, lab, nxt = nxt, 1 - lab, nxt + 1
                        edges.append((prev, eta))
                    yield edges, labels


@lru_cache(maxsize=None)
def _polar_cat_masks(n):
    out = set()
    for edges, labels in _elementary_edge_sets(n):
        out.add(edge_mask(evaluate(Network(edges, root=n), labels)))
    return frozenset(out)


def brute_polar_cat(g):
    """True iff some strong quasi-discriminating elementary network explains ``g`` (n <= 8).

    The set of explained edge masks is computed once per order and cached.
    """
    if g.n > POLAR_LIMIT:
        raise InputError(f"polar-cat oracle is limited to n <= {POLAR_LIMIT}")
    if g.n < 4:
        return False
    return edge_mask(g) in _polar_cat_masks(g.n)


def brute_cat_prime(g):
    """Every prime quotient of the modular decomposition passes :func:`brute_polar_cat`."""
    if g.n == 0:
        return True
    t = build_mdt(g)
    for p in t.prime_nodes():
        reps = [t.min_vertex(c) for c in t.children(p)]
        if len(reps) > POLAR_LIMIT:
            raise InputError(f"prime quotient on {len(reps)} vertices exceeds the oracle limit")
        edges = [(i, j) for i, j in _pairs(len(reps)) if g.has_edge(reps[i], reps[j])]
        if not brute_polar_cat(Graph(len(reps), edges)):
            return False
    return True


def brute_is_primitive(g):
    """True iff every module has 0, 1 or ``n`` vertices, checked over all subsets."""
    n = g.n
    adj = _masks(g)
    full = (1 << n) - 1
    for m in range(1, full):
        if m & (m - 1) == 0:
            continue
        outside = full & ~m
        seen = None
        ok = True
        for x in _members(m):
            nb = adj[x] & outside
            if seen is None:
                seen = nb
            elif nb != seen:
                ok = False
                break
        if ok:
            return False
    return True


def enumerate_labeled_graphs(n):
    """All ``2**(n*(n-1)/2)`` graphs on ``0..n-1`` in edge-mask order."""
    if not 0 <= n <= ENUM_LIMIT:
        raise InputError(f"enumeration is limited to 0 <= n <= {ENUM_LIMIT}")
    for mask in range(1 << (n * (n - 1) // 2)):
        yield graph_from_mask(n, mask)


@dataclass(frozen=True)
class Mismatch:
    mask: int
    cls: str
    fast: str
    oracle: str


def _verdict(b):
    return "MEMBER" if b else "NON_MEMBER"


@dataclass
class CensusStats:
    """Per-order census result.

    ``counts`` maps each class to its number of members. ``failures`` holds
    round-trip and structural check failures as text. ``members`` maps each
    class to the set of member edge masks when the census ran with
    ``record=True``.
    """

    n: int
    graphs: int = 0
    counts: dict = field(default_factory=lambda: dict.fromkeys(CLASSES, 0))
    mismatches: list = field(default_factory=list)
    failures: list = field(default_factory=list)
    members: dict | None = None

    def merge(self, other):
        self.graphs += other.graphs
        for k, v in other.counts.items():
            self.counts[k] += v
        self.mismatches.extend(other.mismatches)
        self.failures.extend(other.failures)
        if other.members is not None:
            if self.members is None:
                self.members = {k: set() for k in CLASSES}
            for k, v in other.members.items():
                self.members[k] |= v
        return self

    def report_lines(self):
        """One line per mismatch in the census report format."""
        return [
            f"n={self.n} mask={m.mask:#x} class={m.cls} fast={m.fast} oracle={m.oracle}"
            for m in self.mismatches
        ]

    def summary(self):
        counts = " ".join(f"{k}={self.counts[k]}" for k in CLASSES)
        return (
            f"n={self.n} graphs={self.graphs} {counts} "
            f"mismatches={len(self.mismatches)} failures={len(self.failures)}"
        )


def _check_network(g, outcome, tag, mask, failures):
    net, t = outcome.network
    rep = validate(net, t)
    if not rep.valid:
        failures.append(f"n={g.n} mask={mask:#x} check={tag}-validate {'; '.join(rep.violations)}")
    elif evaluate(net, t) != g:
        failures.append(f"n={g.n} mask={mask:#x} check={tag}-evaluate")
    return net


def _census_chunk(n, masks, checks, record=False):
    stats = CensusStats(n, members={k: set() for k in CLASSES} if record else None)
    for mask in masks:
        g = graph_from_mask(n, mask)
        stats.graphs += 1
        pseudo = recognize_pseudo_cograph(g)
        polar = recognize_polar_cat(g)
        cat = explain_level1(g)
        fast = {
            "cograph": is_cograph(g),
            "pseudo": pseudo.member,
            "polar_cat": polar.member,
            "cat_prime": cat.member,
        }
        oracle = {
            "cograph": brute_cograph(g),
            "pseudo": brute_pseudo_cograph(g),
            "polar_cat": brute_polar_cat(g),
            "cat_prime": brute_cat_prime(g),
        }
        for cls in CLASSES:
            stats.counts[cls] += fast[cls]
            if record and fast[cls]:
                stats.members[cls].add(mask)
            if fast[cls] != oracle[cls]:
                stats.mismatches.append(Mismatch(mask, cls, _verdict(fast[cls]), _verdict(oracle[cls])))
        if not checks:
            continue
        for tag, out in (("pseudo", pseudo), ("polar_cat", polar), ("cat_prime", cat)):
            if out.member and out.network is not None:
                _check_network(g, out, tag, mask, stats.failures)
        if cat.member:
            net, _ = cat.network
            primes = len(build_mdt(g).prime_nodes())
            strong = sum(c.strength == STRONG for c in cycles(net))
            if primes != strong:
                stats.failures.append(
                    f"n={n} mask={mask:#x} check=prime-vs-strong primes={primes} strong={strong}"
                )
        if polar.member and not (brute_is_primitive(g) and _connected(g)):
            stats.failures.append(f"n={n} mask={mask:#x} check=polar-cat-primitive-connected")
    return stats


def _connected(g):
    adj = _masks(g)
    seen, frontier = 1, 1
    while frontier:
        nxt = 0
        for x in _members(frontier):
            nxt |= adj[x]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


def _workers(workers):
    if workers is None:
        workers = int(os.environ.get("CATPRIME_WORKERS", "1") or 1)
    return max(1, workers)


def run_census(n, sample=None, seed=0, workers=None, checks=True, record=False):
    """Compare fast recognizers with the oracles on graphs of order ``n``.

    Parameters
    ----------
    n : int
        Order, 1..6 for an exhaustive run; 7 requires ``sample``.
    sample : int, optional
        Test this many distinct random edge masks instead of all of them.
    seed : int
        Seed for sampling.
    workers : int, optional
        Process count; defaults to ``$CATPRIME_WORKERS`` or 1.
    checks : bool
        Also validate and re-evaluate every emitted network, compare prime
        modules with strong cycles, and check that polar-cats are primitive
        and connected.
    record : bool
        Keep the member edge masks of every class in ``members``.
    """
    if n < 1 or n > ENUM_LIMIT:
        raise InputError(f"census order must be between 1 and {ENUM_LIMIT}")
    total = 1 << (n * (n - 1) // 2)
    if sample is None:
        if n > 6:
            raise InputError("orders above 6 need --sample")
        masks = range(total)
    else:
        masks = sorted(random.Random(seed).sample(range(total), min(sample, total)))
    workers = _workers(workers)
    if workers == 1:
        return _census_chunk(n, masks, checks, record)
    masks = list(masks)
    chunks = [masks[i::workers] for i in range(workers)]
    stats = CensusStats(n)
    with ProcessPoolExecutor(workers) as pool:
        for part in pool.map(_census_chunk, [n] * workers, chunks, [checks] * workers, [record] * workers):
            stats.merge(part)
    stats.mismatches.sort(key=lambda m: (m.mask, m.cls))
    stats.failures.sort()
    return stats
