import itertools

import pytest

from commspec.catalog import FamilySpec, build
from commspec.errors import (
    AbelianGroupError,
    NotPrimeError,
    ParameterOutOfRange,
    UnsupportedFamilyError,
)
from commspec.predictions import (
    predict_dihedral_quotient,
    predict_family,
    predict_zpzp,
    report_json_dict,
    verify_centralizer_corollaries,
    verify_group,
)
from commspec.spectra import spectra_agree


def test_predict_zpzp_values():
    assert predict_zpzp(2, 2).spectrum.pairs == ((1, 3), (-1, 3))
    assert predict_zpzp(3, 3).spectrum.pairs == ((5, 4), (-1, 20))


def test_predict_zpzp_degenerate_center():
    # p = 2, z = 1: the -1 exponent evaluates to zero and is dropped
    assert predict_zpzp(2, 1).spectrum.pairs == ((0, 3),)


def test_predict_zpzp_validation():
    with pytest.raises(NotPrimeError):
        predict_zpzp(4, 1)
    with pytest.raises(ParameterOutOfRange):
        predict_zpzp(2, 0)


@pytest.mark.parametrize("z", range(1, 11))
def test_dihedral_quotient_m2_equals_square_shape(z):
    assert (
        predict_dihedral_quotient(2, z).spectrum.pairs
        == predict_zpzp(2, z).spectrum.pairs
    )


def test_predict_dihedral_quotient_values():
    assert predict_dihedral_quotient(3, 1).spectrum.pairs == ((1, 1), (0, 3), (-1, 1))
    assert predict_dihedral_quotient(6, 2).spectrum.pairs == ((9, 1), (1, 6), (-1, 15))


def test_predict_dihedral_quotient_validation():
    with pytest.raises(ParameterOutOfRange):
        predict_dihedral_quotient(1, 1)
    with pytest.raises(ParameterOutOfRange):
        predict_dihedral_quotient(3, 0)


def test_predict_family_metacyclic_odd():
    pred = predict_family(FamilySpec.metacyclic(3, 2))
    assert pred.source == "metacyclic-odd"
    assert pred.spectrum.pairs == ((3, 1), (1, 3), (-1, 6))


def test_predict_family_metacyclic_even():
    pred = predict_family(FamilySpec.metacyclic(4, 2))
    assert pred.source == "metacyclic-even"
    assert pred.spectrum.pairs == ((3, 3), (-1, 9))


def test_predict_family_dicyclic_merges_at_m2():
    pred = predict_family(FamilySpec.dicyclic(2))
    assert pred.spectrum.pairs == ((1, 3), (-1, 3))


def test_predict_family_u6n():
    assert predict_family(FamilySpec.u6n(1)).spectrum.pairs == ((1, 1), (0, 3), (-1, 1))
    assert predict_family(FamilySpec.u6n(2)).spectrum.pairs == ((3, 1), (1, 3), (-1, 6))


def test_predict_family_dihedral_parity():
    assert predict_family(FamilySpec.dihedral(5)).spectrum.pairs == (
        (3, 1),
        (0, 5),
        (-1, 3),
    )
    assert predict_family(FamilySpec.dihedral(6)).spectrum.pairs == (
        (3, 1),
        (1, 3),
        (-1, 6),
    )


def test_predict_family_unsupported():
    with pytest.raises(UnsupportedFamilyError):
        predict_family(FamilySpec.heis(3))
    with pytest.raises(UnsupportedFamilyError):
        predict_family(FamilySpec.dihedral(2))


def test_verify_group_heis3(heis3):
    report = verify_group(heis3, "Heis(3)", FamilySpec.heis(3))
    assert report.integral
    assert report.centralizer_count == 5
    sources = [c.prediction.source for c in report.checks]
    assert sources == ["zpzp-quotient"]
    assert report.all_match()
    assert report.spectrum.pairs == ((5, 4), (-1, 20))


def test_verify_group_q12_matches_two_routes():
    q12 = build(FamilySpec.dicyclic(3))
    report = verify_group(q12, "Q12", FamilySpec.dicyclic(3))
    assert report.spectrum.pairs == ((3, 1), (1, 3), (-1, 6))
    sources = {c.prediction.source for c in report.checks}
    assert sources == {"dihedral-quotient", "dicyclic"}
    assert report.all_match()
    params = {c.prediction.source: c.prediction.params for c in report.checks}
    assert params["dihedral-quotient"] == (3, 2)


def test_verify_group_d8_z3_product():
    spec = FamilySpec.product(FamilySpec.dihedral(4), FamilySpec.cyclic(3))
    report = verify_group(build(spec), "D8xZ3", spec)
    assert report.center_size == 6
    assert report.spectrum.pairs == ((5, 3), (-1, 15))
    assert report.all_match()


def test_verify_group_rejects_abelian():
    with pytest.raises(AbelianGroupError):
        verify_group(build(FamilySpec.cyclic(4)), "Z4")


def test_verify_group_outside_the_predicted_shapes():
    # alternating group on 4 letters: the central quotient is neither the
    # square shape nor dihedral, so no prediction applies, yet the
    # commuting graph (one triangle, four disjoint edges) is integral
    from commspec.groups import from_cayley_table

    perms = [
        p
        for p in itertools.permutations(range(4))
        if sum(1 for i, j in itertools.combinations(range(4), 2) if p[i] > p[j]) % 2
        == 0
    ]
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(p[q[x]] for x in range(4))] for q in perms] for p in perms
    ]
    a4 = from_cayley_table(table)
    report = verify_group(a4, "A4")
    assert report.recognition.kind == "other"
    assert report.checks == ()
    assert report.all_match()
    assert report.component_sizes == (3, 2, 2, 2, 2)
    assert report.integral
    assert report.spectrum.pairs == ((2, 1), (1, 4), (-1, 6))


def test_corollaries_d8(d8):
    checks = {c.label: c for c in verify_centralizer_corollaries(d8)}
    assert checks["four-centralizer"].hypothesis_held
    assert checks["four-centralizer"].conclusion_verified
    assert checks["p-plus-two-centralizer"].hypothesis_held  # p = 2, count = 4
    assert checks["p-plus-two-centralizer"].conclusion_verified
    assert not checks["five-centralizer"].hypothesis_held
    assert checks["max-noncommuting-bound"].hypothesis_held  # r = 3
    assert checks["max-noncommuting-bound"].conclusion_verified


def test_corollaries_d12(d12):
    checks = {c.label: c for c in verify_centralizer_corollaries(d12)}
    assert not checks["four-centralizer"].hypothesis_held
    assert checks["five-centralizer"].hypothesis_held
    assert checks["five-centralizer"].conclusion_verified
    assert checks["max-noncommuting-bound"].hypothesis_held  # r = 4
    assert checks["max-noncommuting-bound"].conclusion_verified


def test_corollaries_heis3(heis3):
    checks = {c.label: c for c in verify_centralizer_corollaries(heis3)}
    assert checks["p-plus-two-centralizer"].hypothesis_held  # p = 3, count = 5
    assert checks["p-plus-two-centralizer"].conclusion_verified
    assert checks["five-centralizer"].hypothesis_held
    assert checks["five-centralizer"].conclusion_verified


def test_corollaries_reject_abelian():
    with pytest.raises(AbelianGroupError):
        verify_centralizer_corollaries(build(FamilySpec.cyclic(6)))


def test_report_json_shape(q8):
    report = verify_group(q8, "Q8", FamilySpec.dicyclic(2))
    payload = report_json_dict(report)
    assert list(payload) == [
        "group",
        "order",
        "center_size",
        "centralizer_count",
        "vertices",
        "component_sizes",
        "spectrum",
        "integral",
        "predictions",
        "graph",
    ]
    assert payload["group"] == "Q8"
    assert payload["order"] == 8
    assert payload["center_size"] == 2
    assert payload["centralizer_count"] == 4
    assert payload["vertices"] == 6
    assert payload["component_sizes"] == [2, 2, 2]
    assert payload["spectrum"] == [
        {"value": 1, "multiplicity": 3},
        {"value": -1, "multiplicity": 3},
    ]
    assert payload["integral"] is True
    assert all(p["verdict"] == "match" for p in payload["predictions"])
    without_graph = report_json_dict(report, include_graph=False)
    assert "graph" not in without_graph


def test_prediction_spectrum_accounts_for_all_vertices(q8):
    report = verify_group(q8, "Q8", FamilySpec.dicyclic(2))
    for check in report.checks:
        assert check.prediction.spectrum.multiplicity_sum() == report.vertex_count


def test_family_and_quotient_routes_agree_when_both_apply(grid_reports):
    for name, spec, group, report in grid_reports:
        sources = {c.prediction.source: c.prediction for c in report.checks}
        if len(sources) < 2:
            continue
        specs = list(sources.values())
        assert spectra_agree(specs[0].spectrum, specs[1].spectrum), name
