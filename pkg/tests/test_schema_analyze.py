import json
import math
import pathlib

import pytest

from ludigroup.catalog import get_game, list_games
from ludigroup.catalog.analyze import AnalysisReport, analyze, solvable_fraction_of
from ludigroup.catalog.pairs import build_isomorphic_pair
from ludigroup.catalog.schema import dumps, game_definition, loads, validate_definition
from ludigroup.errors import InvalidSpecError

GOLDEN_DIR = pathlib.Path(__file__).parent / "golden"


def test_definitions_validate_and_roundtrip():
    for gid in ("linear5", "even", "taquin3", "hex_crystallo", "lock"):
        space = get_game(gid)
        text = dumps(space)
        validate_definition(json.loads(text))
        rebuilt = loads(text)
        assert rebuilt.name == space.name
        assert list(rebuilt.moves) == list(space.moves)
        for label in space.moves:
            assert rebuilt.moves[label].table == space.moves[label].table


def test_custom_slot_definition_import():
    definition = {
        "name": "toy_swap",
        "family": "custom",
        "start": "AB",
        "generators": [{"label": "s", "inverse": "s", "slot_table": [1, 0], "guards": []}],
    }
    validate_definition(definition)
    space = loads(json.dumps(definition))
    assert space.to_text(space.moves["s"].apply(space.start)) == "BA"


def test_bad_definition_rejected():
    with pytest.raises(InvalidSpecError):
        validate_definition({"name": "x"})
    with pytest.raises(InvalidSpecError):
        loads(json.dumps({
            "name": "mystery",
            "family": "custom",
            "start": "AB",
            "generators": [{"label": "f", "inverse": "f", "slot_table": None, "rule": "native:?"}],
        }))


def test_tampered_catalog_definition_rejected():
    data = json.loads(dumps(get_game("linear5")))
    data["generators"][0]["slot_table"] = [2, 1, 0, 3, 4]  # not the adjacent swap
    with pytest.raises(InvalidSpecError):
        loads(json.dumps(data))


def test_solvable_fraction_formula():
    assert solvable_fraction_of([2520, 2520], 5040) == 0.5
    assert solvable_fraction_of([36, 36, 36, 36], 144) == 0.25
    assert solvable_fraction_of([120], 120) == 1.0


def test_analyze_even_game():
    report = analyze(get_game("even"))
    assert report.configuration_count == 5040
    assert report.group_order == 2520
    assert report.orbit_count == 2
    assert report.orbit_sizes == [2520, 2520]
    assert report.solvable_fraction == 0.5
    assert report.notable["orbit_count_via_index"] == 2


def test_analyze_rubik_marks_orbits_uncomputed():
    report = analyze(get_game("rubik"))
    assert report.group_order == 43252003274489856000
    assert report.orbit_count is None
    assert report.orbit_sizes is None
    assert report.solvable_fraction is None


def test_analyze_z3_table():
    report = analyze(get_game("z3"))
    assert report.group_order == 3
    assert report.notable["commutative"] is True
    assert report.orbit_count == 1


def test_analyze_hex_crystallo_index():
    report = analyze(get_game("hex_crystallo"))
    assert report.group_order == 1837080
    assert report.notable["orbit_count_via_index"] == 6


def test_analyze_triangle_two_routes():
    report = analyze(get_game("triangle"))
    assert report.group_order == 40320
    assert report.notable["piece_group_order"] == 40320


def test_report_json_roundtrip():
    report = analyze(get_game("even"))
    again = AnalysisReport.from_json(report.to_json())
    assert again == report


GOLDEN_GAMES = [
    "linear5",
    "cyclic5",
    "even",
    "safe",
    "hex",
    "hex_corrected",
    "hex_crystallo",
    "triangle",
    "square_free3",
    "square_rotation4",
    "square_crystallo4",
    "elephants_reflected",
    "elephants_rotating",
    "z3",
    "inrc",
    "lock",
    "two_lamps",
    "rubik",
]


@pytest.mark.parametrize("gid", GOLDEN_GAMES)
def test_analysis_matches_golden_report(gid):
    path = GOLDEN_DIR / f"{gid}.json"
    report = analyze(get_game(gid))
    golden = AnalysisReport.from_json(path.read_text())
    assert report == golden


def test_valid_pair_square_lamps():
    pair = build_isomorphic_pair(
        get_game("square_mirrors"),
        get_game("two_lamps"),
        {"mirV": "toggle", "mirD": "swap"},
    )
    assert pair.group_order == 8


def test_pair_rejects_non_isomorphic_actions():
    with pytest.raises(InvalidSpecError):
        build_isomorphic_pair(
            get_game("two_lamps"),
            get_game("z3"),
            {"toggle": "cw", "swap": "ccw"},
        )
