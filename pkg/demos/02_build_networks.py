"""Build level-1 networks that explain a graph and inspect them.

Run with ``python demos/02_build_networks.py``. A DOT file is written to the
current directory; render it with ``dot -Tpng pvr.dot -o pvr.png``.
"""

from catprime import (
    Graph,
    cycles,
    evaluate,
    explain_level1,
    format_network,
    least_resolved,
    networks_isomorphic,
    path_graph,
    to_dot,
    validate,
)
from catprime.generators import random_pvr_network


def substitute(outer, blocks):
    """Replace vertex i of ``outer`` by ``blocks[i]``."""
    offsets, edges, n = [], [], 0
    for b in blocks:
        offsets.append(n)
        edges += [(u + n, v + n) for u, v in b.edges()]
        n += b.n
    for i, j in outer.edges():
        edges += [(offsets[i] + a, offsets[j] + b) for a in range(blocks[i].n) for b in range(blocks[j].n)]
    return Graph(n, edges)


# %% P4 is explained by a single cycle of length five: one leaf below each
# non-root cycle vertex.
net, t = explain_level1(path_graph(4)).network
print(format_network(net, t, "P4"))
for line in validate(net, t).lines():
    print("  ", line)

# %% Put P4s into the two end vertices of a P4. The result has three prime
# modules, and the network gets one strong cycle per prime module.
g = substitute(path_graph(4), [path_graph(4), Graph(1), Graph(1), path_graph(4)])
out = explain_level1(g)
net, t = out.network
print(f"\n{g.n} vertices, {g.m} edges")
for module, witness in out.certificate:
    print(f"  prime module {module}: split at {witness.v}, sides {witness.v1} / {witness.v2}")
print("  cycles:", [(c.root, c.hybrid, c.strength) for c in cycles(net)])
print("  evaluates back to the input:", evaluate(net, t) == g)

# %% Different random choices inside the recognizer give different raw
# networks. P4 quotients have sides of sizes 3 and 2, so even the
# least-resolved networks can differ.
a = least_resolved(*explain_level1(g, seed=1).network)
b = least_resolved(*explain_level1(g, seed=2).network)
print("  least-resolved isomorphic (P4 quotients):", networks_isomorphic(*a, *b))

# %% When every prime quotient is well-proportioned (sides of at least three
# vertices each, or two and at least five), the least-resolved network is
# unique up to renaming inner vertices.
_, _, h = random_pvr_network(seed=7)
a = explain_level1(h, least_resolved=True, seed=1).network
b = explain_level1(h, least_resolved=True, seed=2).network
print(f"  random pvr graph on {h.n} vertices, isomorphic: {networks_isomorphic(*a, *b)}")

with open("pvr.dot", "w") as fh:
    fh.write(to_dot(net, t, "pvr"))
print("  wrote pvr.dot")
