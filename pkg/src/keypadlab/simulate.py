"""Multitap cost model: presses, same-key jams, and key usage."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .corpus import SPACE, FrequencyTable
from .keymodel import KEYS, KeypadModel, flexible_keys
from .layout import Layout, tap_position


@dataclass(frozen=True)
class CostParams:
    """Timing constants for the modeled typing time.

    ``jam_timeout`` is the wait for the multitap cursor to advance before a
    second letter on the same key can be entered.
    """

    tap_time: float = 0.2
    jam_timeout: float = 1.0

    def __post_init__(self):
        if not self.tap_time > 0:
            raise ValueError(f"tap_time must be positive, got {self.tap_time}")
        if not self.jam_timeout >= 0:
            raise ValueError(f"jam_timeout must be non-negative, got {self.jam_timeout}")


DEFAULT_PARAMS = CostParams()

# Serialization order of CostReport; downstream diffs rely on it.
REPORT_FIELDS = (
    "layout_name",
    "total_chars",
    "total_taps",
    "jam_events",
    "letter_pairs",
    "double_letter_jams",
    "jam_rate",
    "distinct_jam_rate",
    "flexible_usage",
    "inflexible_usage",
    "modeled_time",
    "key_usage",
)


@dataclass(frozen=True)
class CostReport:
    """Evaluation of one layout over one corpus.

    ``jam_rate`` counts double letters as jams; ``distinct_jam_rate`` leaves
    them out, which is the figure comparable to a list of distinct pairs.
    Both are fractions of ``letter_pairs`` (adjacent letters inside words).
    """

    layout_name: str
    total_chars: int
    total_taps: int
    jam_events: int
    letter_pairs: int
    double_letter_jams: int
    jam_rate: float
    distinct_jam_rate: float
    flexible_usage: int
    inflexible_usage: int
    modeled_time: float
    key_usage: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        usage = {k: int(self.key_usage.get(k, 0)) for k in sorted(KEYS)}
        object.__setattr__(self, "key_usage", usage)

    def to_dict(self) -> dict:
        out = {name: getattr(self, name) for name in REPORT_FIELDS}
        out["key_usage"] = {str(k): v for k, v in self.key_usage.items()}
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: Mapping) -> "CostReport":
        kwargs = {name: data[name] for name in REPORT_FIELDS if name != "key_usage"}
        kwargs["key_usage"] = {int(k): v for k, v in data["key_usage"].items()}
        return cls(**kwargs)


def _letters(text: str) -> str:
    return text.replace(SPACE, "")


def total_taps(layout: Layout, text: str, letters_only: bool = False) -> int:
    """Key presses needed to enter normalized ``text`` by multitap."""
    if letters_only:
        text = _letters(text)
    return sum(tap_position(layout, ch)[1] for ch in text)


def expected_taps_per_letter(layout: Layout, table: FrequencyTable) -> float:
    """Mean presses per letter under the table's unigram distribution."""
    total = table.total_letters
    if total == 0:
        raise ValueError("frequency table has no letters")
    presses = sum(
        count * tap_position(layout, letter)[1]
        for letter, count in table.unigram_counts.items()
    )
    return float(Fraction(presses, total))


def jam_pairs(layout: Layout) -> frozenset[str]:
    """Ordered pairs of distinct letters sharing a key, as two-letter strings."""
    return frozenset(
        a + b
        for letters in layout.assignment.values()
        for a in letters
        for b in letters
        if a != b
    )


def identity_pairs(layout: Layout) -> frozenset[str]:
    """Double letters; every one of them jams under multitap."""
    return frozenset(ch + ch for letters in layout.assignment.values() for ch in letters)


def jam_mass(layout: Layout, pair_fractions: Mapping[str, float]) -> float:
    """Sum of the given pair frequencies over the layout's jam pairs.

    Pairs are taken as given; identity pairs are included only if present in
    ``pair_fractions`` and ``layout`` puts their letter anywhere.
    """
    jams = jam_pairs(layout) | identity_pairs(layout)
    return sum(f for pair, f in pair_fractions.items() if pair in jams)


def jam_rate(layout: Layout, table: FrequencyTable, include_identity: bool = True) -> float:
    """Fraction of intra-word letter pairs that land on a single key."""
    total = table.total_pairs
    if total == 0:
        return 0.0
    jams = jam_pairs(layout)
    if include_identity:
        jams = jams | identity_pairs(layout)
    hits = sum(c for pair, c in table.bigram_counts.items() if pair in jams)
    return hits / total


def _same_key(layout: Layout, a: str, b: str) -> bool:
    return tap_position(layout, a)[0] == tap_position(layout, b)[0]


def jam_events(layout: Layout, text: str) -> int:
    """Adjacent letter positions in ``text`` that share a key.

    Spaces break adjacency; double letters count.
    """
    return sum(
        _same_key(layout, a, b)
        for word in text.split(SPACE)
        for a, b in zip(word, word[1:])
    )


@dataclass(frozen=True)
class KeyUsage:
    per_key: dict[int, int]
    flexible: int
    inflexible: int


def _usage_from_counts(layout, keypad, counts: Mapping[str, int]) -> KeyUsage:
    per_key = {k: 0 for k in sorted(KEYS)}
    for ch, n in counts.items():
        per_key[tap_position(layout, ch)[0]] += n
    flex = flexible_keys(keypad)
    flexible = sum(n for k, n in per_key.items() if k in flex)
    return KeyUsage(per_key, flexible, sum(per_key.values()) - flexible)


def key_usage(
    layout: Layout, keypad: KeypadModel, text: str, letters_only: bool = False
) -> KeyUsage:
    """Characters typed on each key, split by the keypad's flexible keys."""
    if letters_only:
        text = _letters(text)
    counts: dict[str, int] = {}
    for ch in text:
        counts[ch] = counts.get(ch, 0) + 1
    return _usage_from_counts(layout, keypad, counts)


def _report(layout, params, *, chars, taps, jams, pairs, doubles, usage) -> CostReport:
    return CostReport(
        layout_name=layout.name,
        total_chars=chars,
        total_taps=taps,
        jam_events=jams,
        letter_pairs=pairs,
        double_letter_jams=doubles,
        jam_rate=jams / pairs if pairs else 0.0,
        distinct_jam_rate=(jams - doubles) / pairs if pairs else 0.0,
        flexible_usage=usage.flexible,
        inflexible_usage=usage.inflexible,
        modeled_time=taps * params.tap_time + jams * params.jam_timeout,
        key_usage=usage.per_key,
    )


def evaluate_text(
    layout: Layout,
    keypad: KeypadModel,
    text: str,
    params: CostParams = DEFAULT_PARAMS,
    letters_only: bool = False,
) -> CostReport:
    typed = _letters(text) if letters_only else text
    jams = 0
    pairs = 0
    doubles = 0
    for word in text.split(SPACE):
        for a, b in zip(word, word[1:]):
            pairs += 1
            if a == b:
                doubles += 1
                jams += 1
            elif _same_key(layout, a, b):
                jams += 1
    return _report(
        layout,
        params,
        chars=len(typed),
        taps=total_taps(layout, typed),
        jams=jams,
        pairs=pairs,
        doubles=doubles,
        usage=key_usage(layout, keypad, typed),
    )


def evaluate_table(
    layout: Layout,
    keypad: KeypadModel,
    table: FrequencyTable,
    params: CostParams = DEFAULT_PARAMS,
) -> CostReport:
    """Letters-only evaluation from counts; spaces are not recorded in tables."""
    jams_set = jam_pairs(layout)
    doubles = sum(c for p, c in table.bigram_counts.items() if p[0] == p[1])
    distinct = sum(c for p, c in table.bigram_counts.items() if p in jams_set)
    return _report(
        layout,
        params,
        chars=table.total_letters,
        taps=sum(
            c * tap_position(layout, ch)[1] for ch, c in table.unigram_counts.items()
        ),
        jams=distinct + doubles,
        pairs=table.total_pairs,
        doubles=doubles,
        usage=_usage_from_counts(layout, keypad, table.unigram_counts),
    )


def evaluate(
    layout: Layout,
    keypad: KeypadModel,
    source: str | FrequencyTable,
    params: CostParams = DEFAULT_PARAMS,
    letters_only: bool = False,
) -> CostReport:
    """Evaluate ``layout`` over normalized text or a frequency table."""
    if isinstance(source, FrequencyTable):
        return evaluate_table(layout, keypad, source, params)
    return evaluate_text(layout, keypad, source, params, letters_only)

