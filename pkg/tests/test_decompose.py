"""Twin and component decompositions and symbolic symmetry pathways."""

import pytest
from hypothesis import given, settings

from conftest import graphs
from lexsym import (complement, complete_graph, cycle_graph, disjoint_union,
                    empty_graph, lex_product, path_graph, serialize,
                    twin_partition)
from lexsym.decompose import (analyze_vt_product, complement_twin_quotient,
                              component_decomposition, qut_disjoint_union,
                              qut_expression, twin_quotient)
from lexsym.expressions import Indeterminate, SPlus
from lexsym.graphs import GraphError


def copies(g, k):
    union, _ = disjoint_union([g] * k)
    return union


class TestTwinQuotient:
    def test_cycle4(self):
        rep = twin_quotient(cycle_graph(4))
        assert rep.kind == "twin_quotient"
        assert rep.quotient == complete_graph(2)
        assert rep.alpha_or_beta == 2

    def test_empty_graph(self):
        rep = twin_quotient(empty_graph(4))
        assert rep.quotient == complete_graph(1)
        assert rep.alpha_or_beta == 4

    def test_non_uniform_classes(self):
        assert twin_quotient(path_graph(3)).kind == "none"

    def test_twin_free_graph_is_its_own_quotient(self):
        rep = twin_quotient(path_graph(4))
        assert rep.alpha_or_beta == 1
        assert rep.quotient == path_graph(4)

    @settings(max_examples=40, deadline=None)
    @given(graphs(min_n=1, max_n=6))
    def test_quotient_is_twin_free_when_nontrivial(self, g):
        rep = twin_quotient(g)
        if rep.kind == "twin_quotient":
            assert not twin_partition(rep.quotient).has_twins

    def test_product_reconstruction(self):
        # the defining identity, checked on an explicit product
        g = lex_product(cycle_graph(5), empty_graph(2))
        rep = twin_quotient(g)
        assert rep.quotient == cycle_graph(5)
        assert rep.alpha_or_beta == 2


class TestComplementTwinQuotient:
    def test_three_matchings(self):
        g = copies(complete_graph(2), 3)
        rep = complement_twin_quotient(g)
        assert rep.kind == "complement_twin_quotient"
        assert rep.quotient == empty_graph(3)
        assert rep.alpha_or_beta == 2
        assert lex_product(rep.quotient, complete_graph(2)) == g

    def test_complete_graph(self):
        rep = complement_twin_quotient(complete_graph(6))
        assert rep.quotient == complete_graph(1)
        assert rep.alpha_or_beta == 6

    def test_none_when_complement_classes_uneven(self):
        # the complement is P3, whose twin classes have sizes 2 and 1
        assert complement_twin_quotient(complement(path_graph(3))).kind == "none"


class TestComponentDecomposition:
    def test_matching(self):
        rep = component_decomposition(copies(complete_graph(2), 2))
        assert rep.kind == "components"
        assert rep.alpha_or_beta == 2
        assert rep.inner_factor == complete_graph(2)
        assert rep.pairwise_isomorphic is True

    def test_mixed_components(self):
        g, _ = disjoint_union([complete_graph(2), cycle_graph(3)])
        rep = component_decomposition(g)
        assert rep.pairwise_isomorphic is False

    def test_bound_exceeded_reports_unknown(self):
        g = copies(path_graph(5), 2)
        rep = component_decomposition(g, max_degree=4)
        assert rep.pairwise_isomorphic is None


class TestDisjointUnionRule:
    def test_three_triangles(self):
        expr = qut_disjoint_union(copies(complete_graph(3), 3))
        assert serialize(expr) == "FreeWreath(S+(3),S+(3))"

    def test_isolated_vertex_dropped(self):
        g, _ = disjoint_union([complete_graph(1), complete_graph(3)])
        assert qut_disjoint_union(g) == SPlus(3)

    def test_two_classes_free_product(self):
        g, _ = disjoint_union([cycle_graph(6), complete_graph(3), complete_graph(3)])
        s = serialize(qut_disjoint_union(g))
        assert s.startswith("FreeProd(Qut(#")
        assert s.endswith("FreeWreath(S+(3),S+(2)))")

    def test_connected_graph_rejected(self):
        with pytest.raises(GraphError):
            qut_disjoint_union(cycle_graph(5))

    def test_oracle_bound_gives_indeterminate(self):
        g = copies(path_graph(15), 2)
        expr = qut_disjoint_union(g)
        assert isinstance(expr, Indeterminate)
        assert "oracle bound" in expr.reason


class TestVtProductPathway:
    def test_rejected_when_conditions_hold(self):
        with pytest.raises(GraphError):
            analyze_vt_product(cycle_graph(4), complete_graph(2))

    def test_mode_one(self):
        expr = analyze_vt_product(empty_graph(2), empty_graph(2))
        assert expr == SPlus(4)

    def test_mode_two_via_complements(self):
        # K2[K2] is K4, so the full quantum symmetric group appears
        expr = analyze_vt_product(complete_graph(2), complete_graph(2))
        assert expr == SPlus(4)

    def test_non_transitive_factor_rejected(self):
        with pytest.raises(GraphError):
            analyze_vt_product(path_graph(3), empty_graph(2))

    def test_bound_gives_indeterminate(self):
        expr = analyze_vt_product(empty_graph(2), empty_graph(2), max_degree=1)
        assert isinstance(expr, Indeterminate)


class TestQutExpression:
    def test_single_vertex(self):
        assert qut_expression(complete_graph(1)) == SPlus(1)

    def test_complete_graph(self):
        assert qut_expression(complete_graph(5)) == SPlus(5)

    def test_edgeless_graph(self):
        assert qut_expression(empty_graph(4)) == SPlus(4)

    def test_cycle4_is_wreath(self):
        assert serialize(qut_expression(cycle_graph(4))) == "FreeWreath(S+(2),S+(2))"

    def test_twin_pathway(self):
        g = lex_product(cycle_graph(5), empty_graph(2))
        s = serialize(qut_expression(g))
        assert s.startswith("FreeWreath(S+(2),Qut(#")

    def test_no_pathway(self):
        expr = qut_expression(cycle_graph(5))
        assert isinstance(expr, Indeterminate)
        assert expr.reason == "no certified pathway applies"
