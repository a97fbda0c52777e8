"""Side-by-side layout comparisons and their output formats.

A :class:`ComparisonReport` holds one :class:`CostReport` per layout, all
computed over the same corpus with the same timing constants. Several reports
(one per corpus) can be rendered together; the chart then draws one bar group
per corpus.

Formats are ``table`` (aligned text), ``csv`` (one row per corpus/layout),
``json`` and ``svg``. CSV and JSON parse back into equal reports.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .corpus import FrequencyTable
from .keymodel import KEYS, KeypadModel
from .layout import Layout
from .plotting import tap_chart
from .simulate import DEFAULT_PARAMS, REPORT_FIELDS, CostParams, CostReport, evaluate

FORMATS = ("table", "csv", "json", "svg")

REPORT_FILES = {"csv": "report.csv", "json": "report.json", "svg": "chart.svg"}

_SCALAR_FIELDS = tuple(f for f in REPORT_FIELDS if f != "key_usage")
_KEY_COLUMNS = tuple(f"key_{k}" for k in sorted(KEYS))
CSV_COLUMNS = ("corpus", "tap_time", "jam_timeout") + _SCALAR_FIELDS + _KEY_COLUMNS
_INT_FIELDS = {
    "total_chars",
    "total_taps",
    "jam_events",
    "letter_pairs",
    "double_letter_jams",
    "flexible_usage",
    "inflexible_usage",
}


@dataclass(frozen=True)
class PairDelta:
    """How ``layout`` compares against the earlier entry ``baseline``."""

    baseline: str
    layout: str
    tap_ratio: float | None
    jam_rate_delta: float
    flexible_usage_delta: int

    def to_dict(self) -> dict:
        return {
            "baseline": self.baseline,
            "layout": self.layout,
            "tap_ratio": self.tap_ratio,
            "jam_rate_delta": self.jam_rate_delta,
            "flexible_usage_delta": self.flexible_usage_delta,
        }


@dataclass(frozen=True)
class ComparisonReport:
    corpus_descriptor: str
    entries: tuple[CostReport, ...]
    params: CostParams = DEFAULT_PARAMS
    deltas: tuple[PairDelta, ...] = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if not self.entries:
            raise ValueError("a comparison needs at least one entry")
        object.__setattr__(self, "deltas", tuple(_deltas(self.entries)))

    def entry(self, layout_name: str) -> CostReport:
        for e in self.entries:
            if e.layout_name == layout_name:
                return e
        raise KeyError(layout_name)

    def tap_ratio(self, numerator: str, denominator: str) -> float:
        return self.entry(numerator).total_taps / self.entry(denominator).total_taps

    def to_dict(self) -> dict:
        return {
            "corpus": self.corpus_descriptor,
            "params": {
                "tap_time": self.params.tap_time,
                "jam_timeout": self.params.jam_timeout,
            },
            "entries": [e.to_dict() for e in self.entries],
            "deltas": [d.to_dict() for d in self.deltas],
        }

    @classmethod
    def from_dict(cls, data) -> "ComparisonReport":
        return cls(
            data["corpus"],
            tuple(CostReport.from_dict(e) for e in data["entries"]),
            CostParams(**data["params"]),
        )


def _deltas(entries: Sequence[CostReport]):
    for i, base in enumerate(entries):
        for other in entries[i + 1 :]:
            yield PairDelta(
                baseline=base.layout_name,
                layout=other.layout_name,
                tap_ratio=other.total_taps / base.total_taps if base.total_taps else None,
                jam_rate_delta=other.jam_rate - base.jam_rate,
                flexible_usage_delta=other.flexible_usage - base.flexible_usage,
            )


def compare(
    layouts: Sequence[Layout],
    keypad: KeypadModel,
    corpus: str | FrequencyTable,
    params: CostParams = DEFAULT_PARAMS,
    letters_only: bool = False,
    corpus_descriptor: str = "",
) -> ComparisonReport:
    """Evaluate every layout over the same corpus text or table."""
    if len(layouts) < 2:
        raise ValueError(f"compare needs at least two layouts, got {len(layouts)}")
    empty = (
        corpus.total_letters == 0
        if isinstance(corpus, FrequencyTable)
        else not corpus.strip()
    )
    if empty:
        raise ValueError("corpus is empty")
    if not corpus_descriptor and isinstance(corpus, FrequencyTable):
        corpus_descriptor = corpus.source_descriptor
    return ComparisonReport(
        corpus_descriptor,
        tuple(evaluate(lay, keypad, corpus, params, letters_only) for lay in layouts),
        params,
    )


def _as_list(reports) -> list[ComparisonReport]:
    if isinstance(reports, ComparisonReport):
        return [reports]
    return list(reports)


def to_json(reports) -> str:
    return json.dumps({"reports": [r.to_dict() for r in _as_list(reports)]}, indent=2) + "\n"


def from_json(text: str) -> list[ComparisonReport]:
    return [ComparisonReport.from_dict(r) for r in json.loads(text)["reports"]]


def to_csv(reports) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in _as_list(reports):
        for e in r.entries:
            writer.writerow(
                [r.corpus_descriptor, repr(r.params.tap_time), repr(r.params.jam_timeout)]
                + [
                    repr(v) if isinstance(v, float) else v
                    for v in (getattr(e, f) for f in _SCALAR_FIELDS)
                ]
                + [e.key_usage[k] for k in sorted(KEYS)]
            )
    return buf.getvalue()


def from_csv(text: str) -> list[ComparisonReport]:
    """Rebuild reports from :func:`to_csv` output; rows group by corpus."""
    grouped: dict[tuple, list[CostReport]] = {}
    for row in csv.DictReader(io.StringIO(text)):
        fields = {}
        for name in _SCALAR_FIELDS:
            raw = row[name]
            if name == "layout_name":
                fields[name] = raw
            elif name in _INT_FIELDS:
                fields[name] = int(raw)
            else:
                fields[name] = float(raw)
        fields["key_usage"] = {k: int(row[f"key_{k}"]) for k in KEYS}
        group = (row["corpus"], float(row["tap_time"]), float(row["jam_timeout"]))
        grouped.setdefault(group, []).append(CostReport(**fields))
    return [
        ComparisonReport(corpus, tuple(entries), CostParams(tap, jam))
        for (corpus, tap, jam), entries in grouped.items()
    ]


def to_table(reports) -> str:
    lines = []
    header = (
        f"{'layout':<14}{'chars':>10}{'taps':>11}{'taps/char':>11}"
        f"{'jams':>9}{'jam_rate':>10}{'flex':>10}{'inflex':>10}{'time_s':>12}"
    )
    for r in _as_list(reports):
        lines.append(
            f"corpus: {r.corpus_descriptor or '-'}  "
            f"(tap_time={r.params.tap_time:g} s, jam_timeout={r.params.jam_timeout:g} s)"
        )
        lines.append(header)
        for e in r.entries:
            per_char = e.total_taps / e.total_chars if e.total_chars else 0.0
            lines.append(
                f"{e.layout_name:<14}{e.total_chars:>10}{e.total_taps:>11}"
                f"{per_char:>11.4f}{e.jam_events:>9}{e.jam_rate:>10.4f}"
                f"{e.flexible_usage:>10}{e.inflexible_usage:>10}{e.modeled_time:>12.1f}"
            )
        if r.deltas:
            lines.append("")
            lines.append("deltas (layout vs baseline):")
            for d in r.deltas:
                ratio = "n/a" if d.tap_ratio is None else f"{d.tap_ratio:.4f}"
                lines.append(
                    f"  {d.layout} / {d.baseline}: tap ratio {ratio}, "
                    f"jam rate {d.jam_rate_delta:+.4f}, "
                    f"flexible usage {d.flexible_usage_delta:+d}"
                )
        lines.append("")
    return "\n".join(lines)


def to_svg(reports) -> str:
    reports = _as_list(reports)
    series: list[str] = []
    for r in reports:
        for e in r.entries:
            if e.layout_name not in series:
                series.append(e.layout_name)
    values = []
    for r in reports:
        taps = {e.layout_name: e.total_taps for e in r.entries}
        values.append([taps.get(name) for name in series])
    groups = [r.corpus_descriptor or f"corpus {i + 1}" for i, r in enumerate(reports)]
    return tap_chart(groups, series, values)


_RENDERERS = {"table": to_table, "csv": to_csv, "json": to_json, "svg": to_svg}


def render(reports, fmt: str) -> str:
    """Render one report or a sequence of reports in ``fmt``."""
    try:
        renderer = _RENDERERS[fmt]
    except KeyError:
        raise ValueError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
    return renderer(reports)


def write_outputs(reports, out_dir: str | Path) -> dict[str, Path]:
    """Write report.csv, report.json and chart.svg into ``out_dir``."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = {}
    for fmt, filename in REPORT_FILES.items():
        path = out / filename
        path.write_text(render(reports, fmt), encoding="utf-8")
        written[fmt] = path
    return written
