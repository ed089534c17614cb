"""Recognition of graphs explained by labeled level-1 networks.

The classes handled are cographs, pseudo-cographs, polar-cats and cat-prime
graphs. A graph is cat-prime exactly when some labeled level-1 network
explains it through the labels of lowest common ancestors.
:func:`explain_level1` decides membership and builds such a network.
"""

from .cograph import (
    CONNECTED,
    DISCONNECTED,
    CatOrdering,
    Cotree,
    build_cotree,
    caterpillar_ordering,
    is_cherry_vertex,
    is_cograph,
)
from .exceptions import CatPrimeError, InputError, NotApplicable
from .graph import (
    JOIN,
    UNION,
    GammaGraph,
    Graph,
    co_components,
    complement,
    complete_graph,
    connected_components,
    cycle_graph,
    diameter,
    disjoint_union,
    edge_mask,
    find_induced_p4,
    format_graph,
    gamma_graph,
    graph_from_mask,
    induced_subgraph,
    is_module,
    join,
    parse_graph,
    path_graph,
    read_graph,
    write_graph,
)
from .modular import (
    LEAF,
    PARALLEL,
    PRIME,
    SERIES,
    ModularDecompositionTree,
    build_mdt,
    max_modular_partition,
    prime_nodes,
    quotient,
)
from .network import (
    HYBRID_DEFAULT,
    STRONG,
    WEAK,
    CycleDescriptor,
    Network,
    ValidationReport,
    contract_quasi_discriminating,
    cycles,
    delete_leaf,
    evaluate,
    explained_edges,
    format_network,
    is_elementary,
    lca,
    least_resolved,
    networks_isomorphic,
    parse_network,
    read_network,
    relabel_leaves,
    remove_weak_cycles,
    to_dot,
    validate,
    write_network,
)
from .recognition import (
    MEMBER,
    NON_MEMBER,
    PolarCatWitness,
    PseudoWitness,
    RecognitionOutcome,
    build_pseudo_network,
    count_strong_cycles_vs_prime_modules,
    explain_level1,
    is_well_proportioned,
    recognize_cograph,
    recognize_polar_cat,
    recognize_pseudo_cograph,
)

__version__ = "0.1.0"
