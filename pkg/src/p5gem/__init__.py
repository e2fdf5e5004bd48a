"""Vertex-critical (P5, gem)-free graphs: enumeration and certifying colouring."""

from ._accel import JIT_ENABLED
from .certifier import Certificate, certify, load_catalogs, verify_certificate
from .coloring import Coloring, chi_c5_expansion, chromatic_number, k_colorable
from .criticality import CriticalityReport, has_proper_k_clique, is_vertex_critical, similar_cliques_prune
from .enumeration import Catalog, enumerate_critical, enumerate_tuples, verify_list
from .formats import RunReport, g6_decode, g6_encode, read_catalog, write_catalog
from .graph import (
    Graph,
    GraphError,
    automorphisms,
    canonical_form,
    clique_number,
    find_induced,
    find_nontrivial_module,
    induced_subgraph,
)
from .special import (
    ExpansionSpec,
    HStarSpec,
    base_graph,
    clique_expansion,
    is_p5_gem_free,
    pattern,
    realize_hstar,
    sample_hstar,
)

__version__ = "0.1.0"
