import json

import pytest  # pyright: ignore

import semigrouplib
from semigrouplib import reports


# analyze ------------------------------------------------------------------------------


def test_analyze_planar_semigroup_with_every_element_ulrich():
    # when
    report = reports.analyze([(11, 2), (31, 6)])

    # then
    assert report.almost_gorenstein
    assert not report.gorenstein
    assert report.nearly_gorenstein
    assert report.planar.ulrich_elements.kind.value == "AllOfOmega"
    assert report.notes["ulrich"] == ["criterion holds for every interior element"]


def test_analyze_three_dimensional_semigroup():
    # when
    report = reports.analyze([(5, 3, 1), (1, 5, 2), (8, 3, 5)])

    # then
    assert report.bottom is None
    assert not report.nearly_gorenstein
    assert len(report.hilbert_basis) == 16
    assert report.planar is None
    assert report.almost_gorenstein is None
    assert "bottom" in report.notes
    assert "trace" in report.notes


def test_analyze_regular_semigroup():
    # when
    report = reports.analyze([(1, 0), (0, 1)])

    # then
    assert report.gorenstein
    assert report.slim.slim


def test_analyze_notes_a_semigroup_that_is_not_slim():
    # when
    report = reports.analyze([(11, 13, 0), (3, 4, 0), (0, 0, 1)])

    # then
    assert not report.slim.slim
    assert "4/5" in report.notes["slim"][0]


def test_analyze_raises_on_invalid_rays():
    with pytest.raises(semigrouplib.InvalidRays):
        reports.analyze([(4, 6), (1, 1)])


def test_analyze_records_timing_only_when_asked():
    assert reports.analyze([(5, 2), (2, 5)]).timing_ms is None
    assert reports.analyze([(5, 2), (2, 5)], timing=True).timing_ms >= 0


def test_add_note_rejects_unknown_channel():
    report = reports.analyze([(1, 0), (0, 1)])
    with pytest.raises(ValueError):
        report.add_note("gossip", "hello")


# to_document --------------------------------------------------------------------------


def test_to_document_is_plain_json():
    # given
    report = reports.analyze([(11, 13), (3, 4)])

    # when
    doc = reports.to_document(report)

    # then
    assert json.loads(json.dumps(doc)) == doc
    assert doc["bottom"] == [4, 5]
    assert doc["planar"]["h_star_1"] == [[5, 6], [10, 12]]
    assert doc["planar"]["h_star_1_count"] == 2
    assert doc["planar"]["ulrich_elements"] == {"kind": "FiniteSet", "elements": [[5, 6]]}
    assert doc["almost_gorenstein"] is True
    assert "timing_ms" not in doc


def test_to_document_writes_rationals_as_strings():
    doc = reports.to_document(reports.analyze([(11, 13, 0), (3, 4, 0), (0, 0, 1)]))
    assert doc["slim_witness"] == [4, 5, 0]
    assert doc["slim_witness_sum"] == "4/5"


def test_to_document_is_deterministic():
    first = json.dumps(reports.to_document(reports.analyze([(5, 2), (2, 5)])))
    second = json.dumps(reports.to_document(reports.analyze([(5, 2), (2, 5)])))
    assert first == second


# render_text --------------------------------------------------------------------------


def test_render_text_mentions_every_interior_element():
    text = reports.render_text(reports.analyze([(11, 2), (31, 6)]))
    assert "every interior element" in text
    assert "almost Gorenstein:   yes" in text


def test_render_text_of_three_dimensional_report():
    text = reports.render_text(reports.analyze([(5, 3, 1), (1, 5, 2), (8, 3, 5)]))
    assert "bottom element:      (none)" in text
    assert "H_1^*" not in text


# validate_document --------------------------------------------------------------------


def test_validate_document_accepts_round_trip():
    # given
    doc = reports.to_document(reports.analyze([(11, 13), (3, 4)], timing=True))

    # when
    reparsed = json.loads(json.dumps(doc))

    # then
    assert reports.validate_document(reparsed) == []


def test_validate_document_flags_a_tampered_field():
    # given
    doc = reports.to_document(reports.analyze([(5, 2), (2, 5)]))
    doc["gorenstein"] = True

    # when
    problems = reports.validate_document(doc)

    # then
    assert len(problems) == 1
    assert "gorenstein" in problems[0]


def test_validate_document_raises_without_rays():
    with pytest.raises(semigrouplib.MalformedDocument):
        reports.validate_document({"rayz": []})


def test_rays_from_document_rejects_non_integers():
    with pytest.raises(semigrouplib.MalformedDocument):
        reports.rays_from_document({"rays": [[1.5, 0], [0, 1]]})
