import json

import pytest

from keypadlab.corpus import letter_ranking, table1_frequency_table
from keypadlab.keymodel import default_keypad, rank_keys
from keypadlab.layout import (
    PAPER_LETTER_RANKING,
    InvalidLayoutError,
    Layout,
    OutsideModelError,
    build_boustrophedon,
    load_layout,
    proposed_layout,
    tap_position,
    traditional_multitap,
    validate,
)

import oracles

KEY_RANKING = [1, 2, 4, 5, 7, 3, 6, 8, 9, 0]


def test_paper_layout():
    layout = build_boustrophedon(PAPER_LETTER_RANKING, KEY_RANKING)
    assert layout.assignment == oracles.PROPOSED_KEYS
    assert (layout.space_key, layout.symbol_key) == (0, 9)
    assert validate(layout) == []


def test_strict_table1_swaps_first_letters_of_3_and_6():
    ranking = letter_ranking(table1_frequency_table())
    layout = build_boustrophedon(ranking, rank_keys(default_keypad()))
    expected = {**oracles.PROPOSED_KEYS, 3: "ndk", 6: "sljq"}
    assert layout.assignment == expected


def test_eight_letters_single_pass():
    layout = build_boustrophedon("abcdefgh", KEY_RANKING)
    assert layout.assignment == {1: "a", 2: "b", 4: "c", 5: "d", 7: "e", 3: "f", 6: "g", 8: "h"}


def test_sixteen_letters_two_passes():
    layout = build_boustrophedon("abcdefghijklmnop", KEY_RANKING)
    assert layout.assignment[1] == "ap" and layout.assignment[8] == "hi"


def test_builder_rejects_bad_rankings():
    with pytest.raises(InvalidLayoutError):
        build_boustrophedon("aab", KEY_RANKING)
    with pytest.raises(InvalidLayoutError):
        build_boustrophedon(PAPER_LETTER_RANKING, KEY_RANKING[:9])
    with pytest.raises(InvalidLayoutError):
        build_boustrophedon(PAPER_LETTER_RANKING, KEY_RANKING, space_key=0, symbol_key=0)


def test_traditional():
    layout = traditional_multitap()
    assert tap_position(layout, "s") == (7, 4)
    assert tap_position(layout, "a") == (2, 1)
    assert validate(layout) == []


def test_tap_positions_proposed():
    layout = proposed_layout()
    assert tap_position(layout, "e") == (1, 1)
    assert tap_position(layout, "q") == (6, 4)
    assert tap_position(layout, " ") == (0, 1)
    assert tap_position(traditional_multitap(), " ") == (0, 1)
    with pytest.raises(OutsideModelError):
        tap_position(layout, "7")


def test_validate_reports_violations():
    keys = dict(oracles.PROPOSED_KEYS)
    keys[8] = "rhx"
    assert validate(Layout("m", keys, 0, 9)) == ["letter z unassigned"]
    keys = dict(oracles.PROPOSED_KEYS)
    keys[2] = "tcge"
    assert validate(Layout("d", keys, 0, 9)) == ["duplicate letter e"]
    keys = dict(oracles.PROPOSED_KEYS)
    keys[9] = "!"
    problems = validate(Layout("r", keys, 0, 9))
    assert any("reserved key 9" in p for p in problems)
    keys = {**oracles.PROPOSED_KEYS, 8: "rhxzm", 5: "ab"}
    assert any("5 letters" in p for p in validate(Layout("long", keys, 0, 9)))


def test_canonical_json_round_trip(tmp_path):
    text = proposed_layout().to_json()
    assert list(json.loads(text)["keys"]) == ["1", "2", "3", "4", "5", "6", "7", "8"]
    assert Layout.from_json(text).to_json() == text
    path = tmp_path / "l.json"
    path.write_text(text)
    assert load_layout(str(path)) == proposed_layout()


def test_load_layout_errors(tmp_path):
    with pytest.raises(InvalidLayoutError, match="cannot read"):
        load_layout(str(tmp_path / "missing.json"))
    bad = tmp_path / "bad.json"
    bad.write_text('{"keys": {"2": "abc"}}')
    with pytest.raises(InvalidLayoutError, match="unassigned"):
        load_layout(str(bad))
    bad.write_text("not json")
    with pytest.raises(InvalidLayoutError):
        load_layout(str(bad))


def test_builtin_names():
    assert load_layout("traditional").name == "traditional"
    assert load_layout("proposed").assignment == oracles.PROPOSED_KEYS
