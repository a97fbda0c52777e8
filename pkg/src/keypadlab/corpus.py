"""Corpus ingestion and letter statistics.

Raw text is folded onto a 27-symbol alphabet (``a``-``z`` plus space) and
counted into unigram and intra-word bigram tables.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import re
import string
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

logger = logging.getLogger(__name__)

ALPHABET = string.ascii_lowercase
SPACE = " "

DROP = "drop"
MAP_TO_SPACE = "map_to_space"

_NON_MODEL = re.compile(r"[^a-z ]")
_SPACE_RUN = re.compile(r" {2,}")

# Letter percentages from the SMS/chat sample, in hundredths of a percent.
# Stored as integers so that table comparisons stay exact.
TABLE1_BASIS_POINTS: dict[str, int] = {
    "e": 1190, "t": 912, "o": 843, "a": 785, "i": 752, "s": 645, "n": 685,
    "r": 562, "h": 529, "l": 416, "d": 353, "u": 302, "m": 274, "y": 257,
    "c": 235, "w": 227, "f": 213, "g": 208, "p": 182, "b": 161, "v": 115,
    "k": 87, "j": 36, "x": 14, "q": 9, "z": 7,
}

# Two-letter "syllable" percentages as published. "hz" is printed twice in
# the source table; both entries read 0.00% so the duplicate is dropped.
TABLE4_PERCENT: dict[str, float] = {
    "am": 1.11, "op": 0.78, "iv": 0.67, "ab": 0.57, "ef": 0.46, "nl": 0.33,
    "ew": 0.33, "mb": 0.31, "tc": 0.12, "sk": 0.11, "oy": 0.07, "yp": 0.05,
    "nj": 0.03, "rh": 0.03, "iu": 0.02, "uv": 0.01, "nq": 0.01, "sd": 0.01,
    "cg": 0.01, "wf": 0.01, "lj": 0.00, "tg": 0.00, "dk": 0.00, "lq": 0.00,
    "kq": 0.00, "rx": 0.00, "rz": 0.00, "hz": 0.00, "xz": 0.00,
}


@dataclass(frozen=True)
class NormalizationPolicy:
    """How raw text is folded onto the model alphabet.

    Whitespace always becomes a space. Any other character outside ``a``-``z``
    (digits, punctuation, non-ASCII) is either dropped or mapped to a space.
    With ``case_fold`` off, uppercase ASCII letters count as non-alphabet.
    """

    case_fold: bool = True
    non_alphabet_action: str = MAP_TO_SPACE
    whitespace_collapse: bool = True

    def __post_init__(self):
        if self.non_alphabet_action not in (DROP, MAP_TO_SPACE):
            raise ValueError(
                f"non_alphabet_action must be {DROP!r} or {MAP_TO_SPACE!r}, "
                f"got {self.non_alphabet_action!r}"
            )

    def to_dict(self) -> dict:
        return {
            "case_fold": self.case_fold,
            "non_alphabet_action": self.non_alphabet_action,
            "whitespace_collapse": self.whitespace_collapse,
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "NormalizationPolicy":
        return cls(
            case_fold=bool(data.get("case_fold", True)),
            non_alphabet_action=data.get("non_alphabet_action", MAP_TO_SPACE),
            whitespace_collapse=bool(data.get("whitespace_collapse", True)),
        )


DEFAULT_POLICY = NormalizationPolicy()


def _ascii_table(policy: NormalizationPolicy) -> dict[int, str | None]:
    other = None if policy.non_alphabet_action == DROP else SPACE
    table: dict[int, str | None] = {}
    for code in range(128):
        ch = chr(code)
        if ch in ALPHABET:
            continue
        if ch.isspace():
            table[code] = SPACE
        elif "A" <= ch <= "Z" and policy.case_fold:
            table[code] = ch.lower()
        else:
            table[code] = other
    return table


def normalize(raw: str | bytes, policy: NormalizationPolicy = DEFAULT_POLICY) -> str:
    """Fold ``raw`` onto lowercase letters and single spaces.

    Bytes are decoded as UTF-8; undecodable bytes are treated like any other
    non-alphabet character. The result is a fixed point of this function.
    """
    if isinstance(raw, (bytes, bytearray)):
        raw = bytes(raw).decode("utf-8", errors="replace")
    text = raw.translate(_ascii_table(policy))
    # Only non-ASCII characters survive the table; str.lower() is not used
    # because it maps some of them onto ASCII letters (e.g. KELVIN SIGN -> k).
    if policy.non_alphabet_action == DROP:
        text = _NON_MODEL.sub(lambda m: SPACE if m.group().isspace() else "", text)
    else:
        text = _NON_MODEL.sub(SPACE, text)
    if policy.whitespace_collapse:
        text = _SPACE_RUN.sub(SPACE, text).strip(SPACE)
    return text


def count_unigrams(text: str) -> Counter:
    """Letter counts of normalized ``text``; spaces are not counted."""
    counts = Counter(text)
    counts.pop(SPACE, None)
    return counts


def count_bigrams(text: str) -> Counter:
    """Ordered adjacent letter pairs inside words of normalized ``text``."""
    return Counter(
        a + b for word in text.split(SPACE) for a, b in zip(word, word[1:])
    )


def _clean_counts(counts: Mapping[str, int]) -> dict[str, int]:
    out = {}
    for key in sorted(counts):
        value = int(counts[key])
        if value < 0:
            raise ValueError(f"negative count for {key!r}: {value}")
        if value:
            out[key] = value
    return out


@dataclass(frozen=True)
class FrequencyTable:
    """Unigram and bigram counts with the policy they were built under.

    Only nonzero counts are stored. Fractions are derived on demand from the
    integer counts, so two tables compare equal exactly when their counts and
    policies agree; ``source_descriptor`` is informational and not compared.
    """

    unigram_counts: Mapping[str, int] = field(default_factory=dict)
    bigram_counts: Mapping[str, int] = field(default_factory=dict)
    policy: NormalizationPolicy = DEFAULT_POLICY
    source_descriptor: str = field(default="", compare=False)

    def __post_init__(self):
        unigrams = _clean_counts(self.unigram_counts)
        bigrams = _clean_counts(self.bigram_counts)
        for sym in unigrams:
            if len(sym) != 1 or sym not in ALPHABET:
                raise ValueError(f"unigram key {sym!r} is not a model letter")
        for pair in bigrams:
            if len(pair) != 2 or not set(pair) <= set(ALPHABET):
                raise ValueError(f"bigram key {pair!r} is not a letter pair")
            missing = set(pair) - set(unigrams)
            if missing:
                raise ValueError(
                    f"bigram {pair!r} uses letters absent from unigrams: "
                    f"{''.join(sorted(missing))}"
                )
        object.__setattr__(self, "unigram_counts", unigrams)
        object.__setattr__(self, "bigram_counts", bigrams)

    @property
    def total_letters(self) -> int:
        return sum(self.unigram_counts.values())

    @property
    def total_pairs(self) -> int:
        return sum(self.bigram_counts.values())

    def unigram_fraction(self, letter: str) -> float:
        total = self.total_letters
        return self.unigram_counts.get(letter, 0) / total if total else 0.0

    def bigram_fraction(self, pair: str) -> float:
        total = self.total_pairs
        return self.bigram_counts.get(pair, 0) / total if total else 0.0

    @property
    def unigram(self) -> dict[str, tuple[int, float]]:
        total = self.total_letters
        return {k: (v, v / total) for k, v in self.unigram_counts.items()}

    @property
    def bigram(self) -> dict[str, tuple[int, float]]:
        total = self.total_pairs
        return {k: (v, v / total) for k, v in self.bigram_counts.items()}

    def to_dict(self) -> dict:
        return {
            "source": self.source_descriptor,
            "policy": self.policy.to_dict(),
            "total_letters": self.total_letters,
            "total_pairs": self.total_pairs,
            "unigram": {
                k: {"count": c, "fraction": f} for k, (c, f) in self.unigram.items()
            },
            "bigram": {
                k: {"count": c, "fraction": f} for k, (c, f) in self.bigram.items()
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: Mapping) -> "FrequencyTable":
        return cls(
            unigram_counts={k: v["count"] for k, v in data.get("unigram", {}).items()},
            bigram_counts={k: v["count"] for k, v in data.get("bigram", {}).items()},
            policy=NormalizationPolicy.from_dict(data.get("policy", {})),
            source_descriptor=data.get("source", ""),
        )

    @classmethod
    def from_json(cls, text: str) -> "FrequencyTable":
        return cls.from_dict(json.loads(text))


def frequency_table(
    text: str,
    policy: NormalizationPolicy = DEFAULT_POLICY,
    source_descriptor: str = "",
) -> FrequencyTable:
    """Count already-normalized ``text`` into a table tagged with ``policy``."""
    return FrequencyTable(
        count_unigrams(text), count_bigrams(text), policy, source_descriptor
    )


def merge(tables: Iterable[FrequencyTable]) -> FrequencyTable:
    """Sum the counts of tables built under one normalization policy."""
    tables = list(tables)
    if not tables:
        return FrequencyTable()
    policy = tables[0].policy
    for t in tables[1:]:
        if t.policy != policy:
            raise ValueError(
                f"cannot merge tables built under different policies: "
                f"{policy} vs {t.policy}"
            )
    unigrams: Counter = Counter()
    bigrams: Counter = Counter()
    for t in tables:
        unigrams.update(t.unigram_counts)
        bigrams.update(t.bigram_counts)
    source = "; ".join(t.source_descriptor for t in tables if t.source_descriptor)
    return FrequencyTable(unigrams, bigrams, policy, source)


@dataclass(frozen=True)
class LetterRanking(Sequence):
    """The 26 letters from most to least frequent.

    ``fallback`` is set when the table had no letters and the order is plain
    alphabetical.
    """

    letters: tuple[str, ...]
    fallback: bool = False

    def __getitem__(self, index):
        return self.letters[index]

    def __len__(self):
        return len(self.letters)


def letter_ranking(table: FrequencyTable) -> LetterRanking:
    """Sort letters by descending count, ties and absent letters alphabetical."""
    if table.total_letters == 0:
        logger.warning("frequency table is empty; using alphabetical ranking")
        return LetterRanking(tuple(ALPHABET), fallback=True)
    counts = table.unigram_counts
    return LetterRanking(tuple(sorted(ALPHABET, key=lambda c: (-counts.get(c, 0), c))))


def table1_frequency_table() -> FrequencyTable:
    """Unigram table carrying the published SMS/chat letter percentages."""
    return FrequencyTable(
        unigram_counts=TABLE1_BASIS_POINTS, source_descriptor="published letter table"
    )


def read_text(path: str | Path, policy: NormalizationPolicy = DEFAULT_POLICY) -> str:
    return normalize(Path(path).read_bytes(), policy)


def read_corpus(
    paths: Sequence[str | Path], policy: NormalizationPolicy = DEFAULT_POLICY
) -> FrequencyTable:
    """Count each file separately and merge the results."""
    return merge(
        frequency_table(read_text(p, policy), policy, str(p)) for p in paths
    )


def _rows_csv(counts: Mapping[str, int]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["symbol", "count"])
    for sym, count in sorted(counts.items(), key=lambda kv: (-kv[1], kv[0])):
        writer.writerow([sym, count])
    return buf.getvalue()


def unigram_csv(table: FrequencyTable) -> str:
    """Two-column (symbol, count) CSV sorted by descending count."""
    return _rows_csv(table.unigram_counts)


def bigram_csv(table: FrequencyTable) -> str:
    return _rows_csv(table.bigram_counts)


def parse_counts_csv(text: str) -> dict[str, int]:
    reader = csv.DictReader(io.StringIO(text))
    return {row["symbol"]: int(row["count"]) for row in reader}
