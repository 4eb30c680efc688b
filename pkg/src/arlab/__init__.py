"""Exact computation and verification toolkit for generalized anti-Ramsey
decomposition thresholds f(n,G|F), piercing numbers g(n,G|F), the
anti-Ramsey numbers Ar/Lr, small Turan numbers, and the graph-packing /
blocker machinery behind their bounds."""

from .graphs import (Graph, GraphSpecError, are_isomorphic, canonical_code,
                     chi_family, chi_family_info, chromatic_number,
                     complete_bipartite, complete_graph, complete_multipartite,
                     contains_subgraph, cycle_graph, enumerate_graphs,
                     from_graph6, girth, independence_number, invariants_of,
                     matching_graph, mu, parse_graph, path_graph, star_graph,
                     to_graph6, turan_graph)
from .families import (EdgeCountSequence, FamilyExprError, GraphFamily,
                       complement_family, is_legal, is_s_good, member,
                       parse_family, sparsest_well_spaced)
from .colorings import (EdgeColoring, PatternParams, build_pattern,
                        classes_of_edges, classes_on,
                        embed_forest_rainbow_in_lex, find_canonical_clique,
                        find_clean_multipartite, find_min_order_rainbow,
                        mono_clique_plus_rainbow, pattern,
                        rainbow_cycle_plus_mono, rainbow_graph_plus_mono,
                        rainbow_matching_plus_mono)
from .packing import (OverlapReport, PackingWitness, be_exception_pairs,
                      be_packable, enumerate_minimal, is_anti_packer,
                      is_blocker, is_minimal_anti_packer, is_minimal_blocker,
                      min_overlap, pack)
from .search import (Budget, ConstructionReport, CopyWitness, SearchResult,
                     ar_exact, enumerate_copies, ex_exact, f_exact, g_exact,
                     holds_f_witness, lr_exact, naive_max_colors, pierces_all,
                     verify_construction, verify_result)

__version__ = "0.1.0"
