"""Frequency-based multitap keypad layouts and their typing cost."""

from .corpus import (
    FrequencyTable,
    NormalizationPolicy,
    count_bigrams,
    count_unigrams,
    frequency_table,
    letter_ranking,
    merge,
    normalize,
)
from .keymodel import (
    KeyErgonomics,
    KeypadModel,
    default_keypad,
    flexible_keys,
    inflexible_keys,
    rank_keys,
)
from .layout import (
    Layout,
    build_boustrophedon,
    load_layout,
    proposed_layout,
    tap_position,
    traditional_multitap,
    validate,
)
from .report import ComparisonReport, compare, render
from .simulate import (
    CostParams,
    CostReport,
    evaluate,
    expected_taps_per_letter,
    jam_events,
    jam_pairs,
    jam_rate,
    key_usage,
    total_taps,
)

__version__ = "0.1.0"
