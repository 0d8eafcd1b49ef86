"""Structural invariants checked across the whole verification grid."""

from commspec.catalog import FamilySpec, build
from commspec.graphs import build_commuting_graph, connected_components
from commspec.groups import (
    Recognition,
    center,
    centralizer,
    centralizer_count,
    max_noncommuting_set,
    quotient_by_center,
    recognize_small,
)
from commspec.spectra import (
    clique_union_spectrum,
    exact_determinant,
    monic_linear,
    spectra_agree,
)


def _is_subgroup(group, members):
    member_set = set(members)
    if 0 not in member_set:
        return False
    return all(
        group.mul(a, b) in member_set for a in member_set for b in member_set
    )


def test_centralizer_subgroup_invariants(grid):
    # exhaustive over every element of every grid group
    for name, _, group in grid:
        z = center(group)
        central = set(z.members)
        assert 0 in central, name
        for x in range(group.order):
            c = centralizer(group, x)
            members = set(c.members)
            assert central <= members, name
            assert x in members, name
            assert group.order % c.size == 0, name  # Lagrange
            assert (c.size == group.order) == (x in central), name


def test_center_and_centralizers_are_subgroups(grid):
    for name, _, group in grid:
        assert _is_subgroup(group, center(group).members), name
        for x in range(group.order):
            assert _is_subgroup(group, centralizer(group, x).members), (name, x)


def test_quotient_order_identity(grid):
    for name, _, group in grid:
        quotient = quotient_by_center(group)
        assert quotient.group.order * center(group).size == group.order, name
        for x in range(group.order):
            assert x in quotient.cosets[quotient.coset_of[x]], name


def test_centralizer_count_is_one_exactly_for_abelian(grid):
    for k in (1, 2, 5, 8):
        assert centralizer_count(build(FamilySpec.cyclic(k))) == 1
    for name, _, group in grid:
        assert centralizer_count(group) > 1, name


def test_vertex_count_identity(grid_reports):
    for name, _, group, report in grid_reports:
        assert report.vertex_count == group.order - report.center_size, name


def test_degree_equals_centralizer_size_identity(grid):
    for name, _, group in grid:
        graph = build_commuting_graph(group)
        z = center(group).size
        for pos, element in enumerate(graph.vertices):
            assert graph.degree(pos) == centralizer(group, element).size - z - 1, name


def test_components_are_cliques_matching_centralizers(grid_reports):
    for name, _, group, report in grid_reports:
        assert report.all_cliques, name
        z = center(group).size
        distinct = {
            centralizer(group, x).members
            for x in range(group.order)
            if len(centralizer(group, x).members) < group.order
        }
        expected = sorted((len(m) - z for m in distinct), reverse=True)
        assert list(report.component_sizes) == expected, name


def test_clique_union_closed_form_matches_char_poly_route(grid_reports):
    for name, _, _, report in grid_reports:
        closed_form = clique_union_spectrum(report.component_sizes)
        assert spectra_agree(closed_form, report.spectrum), name


def test_char_poly_coefficients(grid_reports):
    for name, _, _, report in grid_reports:
        poly = report.analysis.char_poly
        n = report.vertex_count
        assert poly.degree == n, name
        assert poly.coefficient(n - 1) == 0, name
        assert poly.coefficient(n - 2) == -report.graph.edge_count, name


def test_spectrum_moments(grid_reports):
    for name, _, group, report in grid_reports:
        spectrum = report.spectrum
        assert spectrum.complete, name
        assert spectrum.multiplicity_sum() == report.vertex_count, name
        assert spectrum.moment(1) == 0, name
        assert spectrum.moment(2) == 2 * report.graph.edge_count, name


def test_deflation_reconstructs_char_poly(grid_reports):
    for name, _, _, report in grid_reports:
        product = report.analysis.remainder
        for value, mult in report.spectrum.pairs:
            for _ in range(mult):
                product = product * monic_linear(value)
        assert product.coeffs == report.analysis.char_poly.coeffs, name


def test_char_poly_evaluation_matches_determinant_on_small_groups(grid_reports):
    for name, _, group, report in grid_reports:
        if group.order > 36:
            continue
        matrix = report.graph.to_matrix()
        n = len(matrix)
        for t in (-2, -1, 0, 1, 2):
            shifted = [
                [(t if i == j else 0) - matrix[i][j] for j in range(n)]
                for i in range(n)
            ]
            assert report.analysis.char_poly.evaluate(t) == exact_determinant(
                shifted
            ), (name, t)


def test_quotient_recognition_on_known_groups():
    q8 = build(FamilySpec.dicyclic(2))
    assert recognize_small(quotient_by_center(q8).group) == Recognition("zpzp", 2)
    q12 = build(FamilySpec.dicyclic(3))
    assert recognize_small(quotient_by_center(q12).group) == Recognition("dihedral", 3)
    for n in range(1, 7):
        u = build(FamilySpec.u6n(n))
        assert recognize_small(quotient_by_center(u).group) == Recognition(
            "dihedral", 3
        ), n


def test_every_grid_group_gets_a_quotient_prediction(grid_reports):
    for name, _, _, report in grid_reports:
        assert report.recognition.kind in ("zpzp", "dihedral"), name
        sources = [c.prediction.source for c in report.checks]
        assert sources[0] in ("zpzp-quotient", "dihedral-quotient"), name


def test_prediction_multiplicities_sum_to_vertex_count(grid_reports):
    for name, _, _, report in grid_reports:
        for check in report.checks:
            assert (
                check.prediction.spectrum.multiplicity_sum() == report.vertex_count
            ), name


def test_noncommuting_witness_size_pins_centralizer_count(grid):
    # a largest pairwise non-commuting set of size 3 forces 4 centralizers,
    # size 4 forces 5
    for name, _, group in grid:
        r = len(max_noncommuting_set(group))
        count = centralizer_count(group)
        if r == 3:
            assert count == 4, name
        if r == 4:
            assert count == 5, name


def test_component_count_equals_quotient_prediction_shape(grid_reports):
    # p + 1 cliques for the square quotient, m + 1 for the dihedral quotient
    for name, _, group, report in grid_reports:
        parts = len(connected_components(report.graph))
        assert parts == report.recognition.param + 1, name
