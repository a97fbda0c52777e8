"""Bar chart of key presses per layout, grouped by corpus.

Rendered through matplotlib's SVG backend with a fixed hash salt, no date
metadata and text kept as ``<text>`` elements, so an identical report always
yields a byte-identical file.
"""

from __future__ import annotations

import io
import textwrap
from typing import Sequence

import matplotlib
from matplotlib.backends.backend_svg import FigureCanvasSVG
from matplotlib.figure import Figure

FIGSIZE = (6.4, 4.0)  # inches
GROUP_WIDTH = 0.8  # fraction of the slot between group centres filled by bars
TICK_WIDTH = 18  # characters per x tick label line
COLORS = ("#4c72b0", "#dd8452", "#55a868", "#c44e52", "#8172b3", "#937860")

SVG_RC = {
    "svg.hashsalt": "keypadlab",
    "svg.fonttype": "none",
    "font.family": "DejaVu Sans",
    "font.size": 9,
}


def _tick_label(group: str) -> str:
    name = group.replace("\\", "/").rsplit("/", 1)[-1]
    return textwrap.fill(name, TICK_WIDTH)


def bar_id(group: int, bar: int) -> str:
    """SVG element id of bar ``bar`` in group ``group``."""
    return f"bar-{group}-{bar}"


def tap_chart(
    groups: Sequence[str],
    series: Sequence[str],
    values: Sequence[Sequence[int | None]],
    title: str = "Key presses per layout",
) -> str:
    """Draw ``values[g][s]`` as grouped bars and return the SVG document.

    ``groups`` label the x positions (one per corpus), ``series`` the bars
    inside each group (one per layout). ``None`` leaves a gap.
    """
    with matplotlib.rc_context(SVG_RC):
        fig = Figure(figsize=FIGSIZE)
        FigureCanvasSVG(fig)
        ax = fig.add_subplot()
        width = GROUP_WIDTH / max(len(series), 1)
        for s, name in enumerate(series):
            labelled = False
            offset = (s - (len(series) - 1) / 2) * width
            for g in range(len(groups)):
                value = values[g][s]
                if value is None:
                    continue
                (bar,) = ax.bar(
                    g + offset,
                    value,
                    width,
                    color=COLORS[s % len(COLORS)],
                    label=None if labelled else name,
                )
                labelled = True
                bar.set_gid(bar_id(g, s))
                ax.annotate(
                    f"{value:,}",
                    (g + offset, value),
                    xytext=(0, 2),
                    textcoords="offset points",
                    ha="center",
                    va="bottom",
                    fontsize=7,
                )
        ax.set_xticks(range(len(groups)), [_tick_label(g) for g in groups])
        ax.set_xlabel("Corpus")
        ax.set_ylabel("Number of key presses")
        ax.set_title(title)
        ax.margins(y=0.12)
        if series:
            ax.legend(frameon=False)
        fig.tight_layout()
        buf = io.StringIO()
        fig.savefig(buf, format="svg", metadata={"Date": None})
    return buf.getvalue()
