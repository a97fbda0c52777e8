import pytest

from keypadlab import corpus
from keypadlab.cli import bundled_corpus
from keypadlab.corpus import FrequencyTable, frequency_table
from keypadlab.keymodel import default_keypad
from keypadlab.layout import Layout, proposed_layout, traditional_multitap
from keypadlab.simulate import (
    CostParams,
    CostReport,
    evaluate,
    expected_taps_per_letter,
    identity_pairs,
    jam_events,
    jam_mass,
    jam_pairs,
    jam_rate,
    key_usage,
    total_taps,
)

import oracles

PROPOSED = proposed_layout()
TRADITIONAL = traditional_multitap()
PAD = default_keypad()
PANGRAM = oracles.PANGRAM


@pytest.fixture(scope="module")
def bundled_text():
    return " ".join(corpus.read_text(p) for p in bundled_corpus())


class TestTaps:
    def test_pangram(self):
        assert oracles.tap_sum(oracles.TRADITIONAL_KEYS, PANGRAM) == 85
        assert oracles.tap_sum(oracles.PROPOSED_KEYS, PANGRAM) == 75
        assert total_taps(TRADITIONAL, PANGRAM) == 85
        assert total_taps(PROPOSED, PANGRAM) == 75
        assert total_taps(TRADITIONAL, PANGRAM, letters_only=True) == 77
        assert total_taps(PROPOSED, PANGRAM, letters_only=True) == 67

    def test_empty(self):
        assert total_taps(PROPOSED, "") == 0

    def test_expected_taps_table1(self):
        table = corpus.table1_frequency_table()
        prop = expected_taps_per_letter(PROPOSED, table)
        trad = expected_taps_per_letter(TRADITIONAL, table)
        assert prop == pytest.approx(oracles.weighted_presses(oracles.PROPOSED_KEYS, oracles.TABLE1_PERCENT))
        assert trad == pytest.approx(oracles.weighted_presses(oracles.TRADITIONAL_KEYS, oracles.TABLE1_PERCENT))
        assert prop == pytest.approx(1.467, abs=5e-4)
        assert trad == pytest.approx(2.172, abs=5e-4)

    def test_degenerate_table(self):
        assert expected_taps_per_letter(PROPOSED, FrequencyTable({"e": 5})) == 1.0

    def test_expected_taps_empty_table(self):
        with pytest.raises(ValueError):
            expected_taps_per_letter(PROPOSED, FrequencyTable())


class TestJams:
    def test_key1_pairs(self):
        pairs = jam_pairs(PROPOSED)
        assert {"ew", "ef", "wf", "we", "fe", "fw"} <= pairs
        assert {"am", "op", "iv"} <= pairs

    def test_pair_count(self):
        # 6 keys of 3 letters and 2 keys of 4 letters
        assert len(jam_pairs(PROPOSED)) == 6 * 3 * 2 + 2 * 4 * 3

    def test_single_letter_keys(self):
        layout = Layout("one", {1: "a", 2: "b"}, 0, 9)
        assert jam_pairs(layout) == frozenset()
        assert identity_pairs(layout) == {"aa", "bb"}
        t = frequency_table("aab ab")
        assert jam_rate(layout, t) == pytest.approx(1 / 3)

    def test_events(self):
        assert jam_events(PROPOSED, "ew") == 1
        assert jam_events(PROPOSED, "et") == 0
        assert jam_events(TRADITIONAL, "noon") == 3
        assert jam_events(TRADITIONAL, "no on") == 2

    def test_events_match_scan(self, bundled_text):
        sample = bundled_text[:20000]
        for keys, layout in ((oracles.PROPOSED_KEYS, PROPOSED), (oracles.TRADITIONAL_KEYS, TRADITIONAL)):
            assert jam_events(layout, sample) == oracles.adjacent_same_key(keys, sample)

    def test_table4_mass(self):
        mass = jam_mass(PROPOSED, {p: v / 100 for p, v in corpus.TABLE4_PERCENT.items()})
        assert mass == pytest.approx(0.0504, abs=1e-9)

    def test_corpus_jam_rate_order(self, bundled_text):
        t = frequency_table(bundled_text)
        assert jam_rate(PROPOSED, t) < jam_rate(TRADITIONAL, t)
        assert jam_rate(PROPOSED, t, include_identity=False) < jam_rate(PROPOSED, t)


class TestUsage:
    def test_pangram_letters(self):
        assert oracles.usage_split(oracles.PROPOSED_KEYS, PANGRAM) == (22, 13)
        u = key_usage(PROPOSED, PAD, PANGRAM, letters_only=True)
        assert (u.flexible, u.inflexible) == (22, 13)
        u = key_usage(TRADITIONAL, PAD, PANGRAM, letters_only=True)
        assert (u.flexible, u.inflexible) == (15, 20)

    def test_spaces_on_space_key(self):
        u = key_usage(PROPOSED, PAD, PANGRAM)
        assert u.per_key[0] == 8 and u.inflexible == 21

    def test_empty(self):
        u = key_usage(PROPOSED, PAD, "")
        assert u.flexible == u.inflexible == 0 and set(u.per_key.values()) == {0}


class TestEvaluate:
    def test_pangram_report(self):
        r = evaluate(PROPOSED, PAD, PANGRAM, CostParams(0.5, 2.0))
        assert r.total_chars == 43 and r.total_taps == 75 and r.jam_events == 1
        assert r.modeled_time == 75 * 0.5 + 1 * 2.0
        assert r.flexible_usage + r.inflexible_usage == 43

    def test_zero_timeout(self):
        r = evaluate(TRADITIONAL, PAD, PANGRAM, CostParams(0.3, 0.0))
        assert r.modeled_time == r.total_taps * 0.3

    def test_bundled_taps_per_letter(self, bundled_text):
        table = frequency_table(bundled_text)
        r = evaluate(PROPOSED, PAD, bundled_text, letters_only=True)
        per_letter = r.total_taps / r.total_chars
        assert per_letter == pytest.approx(1.47, abs=0.02)
        assert per_letter == pytest.approx(expected_taps_per_letter(PROPOSED, table), abs=1e-12)

    def test_text_and_table_agree(self, bundled_text):
        table = frequency_table(bundled_text)
        for layout in (PROPOSED, TRADITIONAL):
            a = evaluate(layout, PAD, bundled_text, letters_only=True)
            b = evaluate(layout, PAD, table)
            assert a == b

    def test_bundled_tap_ratio(self, bundled_text):
        p = total_taps(PROPOSED, bundled_text, letters_only=True)
        t = total_taps(TRADITIONAL, bundled_text, letters_only=True)
        assert 0.63 <= p / t <= 0.73

    def test_report_round_trip(self):
        r = evaluate(PROPOSED, PAD, PANGRAM)
        assert CostReport.from_dict(r.to_dict()) == r
        assert list(r.to_dict())[:3] == ["layout_name", "total_chars", "total_taps"]

    def test_params_validation(self):
        with pytest.raises(ValueError):
            CostParams(0, 1)
        with pytest.raises(ValueError):
            CostParams(0.1, -1)
