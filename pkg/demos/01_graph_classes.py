"""Walk through the nested graph classes on small hand-made graphs.

Run with ``python demos/01_graph_classes.py``.
"""

from catprime import (
    Graph,
    build_mdt,
    complement,
    cycle_graph,
    disjoint_union,
    explain_level1,
    path_graph,
    recognize_cograph,
    recognize_polar_cat,
    recognize_pseudo_cograph,
)


def verdicts(g):
    rows = [
        ("cograph", recognize_cograph(g).verdict),
        ("pseudo-cograph", recognize_pseudo_cograph(g).verdict),
        ("polar-cat", recognize_polar_cat(g).verdict),
        ("cat-prime", explain_level1(g).verdict),
    ]
    return "  ".join(f"{name}={v}" for name, v in rows)


# %% A cograph has no induced path on four vertices. Its cotree is the
# modular decomposition: only series (1) and parallel (0) nodes.
k22 = disjoint_union(Graph(2, [(0, 1)]), Graph(2, [(0, 1)]))
print("K2 + K2     ", verdicts(k22))
t = build_mdt(k22)
print("  MDT labels:", [t.label(x) for x in t.preorder()])

# %% P4 is the smallest graph that is not a cograph. It splits at any vertex
# into two cographs that share that vertex, so it is a pseudo-cograph.
p4 = path_graph(4)
print("P4          ", verdicts(p4))
w = recognize_pseudo_cograph(p4).certificate
print(f"  witness: v={w.v} V1={w.v1} V2={w.v2} mode={w.mode}")

# %% P5 still splits, but only at its middle vertex.
print("P5          ", verdicts(path_graph(5)))
print("  split vertex:", recognize_pseudo_cograph(path_graph(5)).certificate.v)

# %% Two disjoint P4s: no single split vertex exists, yet each component is
# a prime module with a polar-cat quotient, so the graph is cat-prime.
print("P4 + P4     ", verdicts(disjoint_union(p4, p4)))

# %% C5 and its complement are primitive and fail every class above cograph.
print("C5          ", verdicts(cycle_graph(5)))
print("co-C5       ", verdicts(complement(cycle_graph(5))))

# %% P6 is primitive but not a polar-cat, hence not cat-prime.
out = explain_level1(path_graph(6))
print("P6          ", verdicts(path_graph(6)))
print("  offending module:", out.module)
