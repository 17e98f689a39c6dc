"""Symmetry analysis of lexicographic graph products.

Stable pair colourings, a brute-force automorphism oracle, wreath-condition
analysis, and symbolic (free) wreath-product expressions for small graphs.
"""

from .graphs import (Graph, PairClass, TwinPartition, classify_pair, complement,
                     connected_components, complete_graph, cycle_graph,
                     disjoint_union, empty_graph, lex_product, path_graph,
                     star_graph, twin_partition)
from .formats import decode_graph6, encode_graph6, parse_graph, write_graph
from .wl import (PairColouring, RefinementTrace, TriangleProfile,
                 initial_colouring, refine_step, stable_colouring,
                 distinguished, strongly_distinguished, triangle_counts,
                 table1_closed_form, profile_distinguish)
from .groups import (PermGroup, automorphisms, aut_order, orbits, orbitals,
                     is_isomorphic, is_vertex_transitive, wreath_order)
from .analysis import (AnalysisReport, ConditionReport, SeparationReport,
                       analyze_product, sabidussi_conditions,
                       verify_wl_separation, check_first_iteration_consequences)
from .decompose import (DecompositionReport, twin_quotient,
                        complement_twin_quotient, component_decomposition,
                        qut_disjoint_union, analyze_vt_product, qut_expression)
from .expressions import (SPlus, S, QutLeaf, AutLeaf, FreeWreath, Wreath,
                          FreeProd, Indeterminate, serialize, simplify,
                          classical_order, quantum_to_classical)

__all__ = [name for name in dir() if not name.startswith("_")]
