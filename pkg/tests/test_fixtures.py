# tests/test_fixtures.py

import json
from fractions import Fraction

import pytest

from singularities.fixtures import DEFAULT_CORPUS, find_reference, fixtures_run, load_fixtures
from singularities.poly import parse_polynomial


def test_default_corpus_agrees():
    summary = fixtures_run(DEFAULT_CORPUS)
    assert len(summary.results) == 8
    assert summary.ok
    assert summary.failed == []


def test_negative_fixtures_expect_hypothesis_tags():
    fixtures = {fx.name: fx for fx in load_fixtures(DEFAULT_CORPUS)}
    assert fixtures["no pole for any twist"].expected["error"].value == "isolated-initial-part"
    assert fixtures["degenerate edge"].expected["newton_nondegenerate"].value is False


def test_wrong_expected_value_is_a_field_diff(tmp_path):
    data = json.loads(DEFAULT_CORPUS.read_text())
    f2 = next(raw for raw in data if raw["name"] == "f2")
    f2["expected"] = {"d": {"value": 20, "provenance": "PUBLISHED"}}
    path = tmp_path / "f2.json"
    path.write_text(json.dumps([f2]))

    summary = fixtures_run(path)

    assert not summary.ok
    (result,) = summary.failed
    (diff,) = result.diffs
    assert (diff.field, diff.expected, diff.actual, diff.provenance) == ("d", 20, 21, "PUBLISHED")


@pytest.mark.parametrize("text", ["{}", "[", '[{"name": "x", "f": "x", "weights": [1], '
                                               '"expected": {"mu": {"value": 0, "provenance": "GUESSED"}}}]'])
def test_malformed_files_are_rejected(tmp_path, text):
    path = tmp_path / "bad.json"
    path.write_text(text)
    with pytest.raises(ValueError):
        load_fixtures(path)


class TestFindReference:
    def test_stored_twisted_bfunction(self):
        f = parse_polynomial("y^2-x^3", ["x", "y"])
        reference = find_reference(f, (2, 3), (0, 1))
        assert reference is not None
        assert reference.multiplicity(Fraction(-11, 6)) == 1
        assert "PUBLISHED" in reference.provenance

    def test_no_reference_for_other_twists(self, tmp_path):
        f = parse_polynomial("y^2-x^3", ["x", "y"])
        assert find_reference(f, (2, 3), (3, 0)) is None
        assert find_reference(f, (2, 3), (0, 1), path=tmp_path / "missing.json") is None


def test_corrupted_spectrum_is_reported(tmp_path):
    data = json.loads(DEFAULT_CORPUS.read_text())
    cusp = next(raw for raw in data if raw["name"] == "cusp")
    cusp["expected"]["spectrum"] = {"value": ["5/6", "7/5"], "provenance": "DERIVED"}
    path = tmp_path / "spectrum.json"
    path.write_text(json.dumps([cusp]))

    (result,) = fixtures_run(path).failed

    assert [diff.field for diff in result.diffs] == ["spectrum"]
    assert result.diffs[0].expected == ["5/6", "7/5"]
    assert result.diffs[0].actual == ["5/6", "7/6"]
