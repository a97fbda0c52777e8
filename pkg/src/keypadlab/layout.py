"""Letter-to-key layouts and the frequency-driven layout builder."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Sequence

from .corpus import ALPHABET, SPACE
from .keymodel import KEYS, default_keypad, rank_keys

MAX_LETTERS_PER_KEY = 4

# Letter order used to build the published keypad: the letter-frequency
# table's printed row order, which places s ahead of n.
PAPER_LETTER_RANKING: tuple[str, ...] = tuple("etoaisnrhldumycwfgpbvkjxqz")


class InvalidLayoutError(ValueError):
    pass


class OutsideModelError(ValueError):
    """Raised for characters that have no key in the model (digits, symbols)."""


@dataclass(frozen=True)
class Layout:
    """Letters assigned to keys, in tap order, plus the reserved keys.

    ``assignment`` maps a key number to the string of letters it cycles
    through; the first letter takes one press, the second two, and so on.
    Construction does not check the layout; use :func:`validate`.
    """

    name: str
    assignment: Mapping[int, str]
    space_key: int = 0
    symbol_key: int = 1
    _positions: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        assignment = {int(k): str(v) for k, v in self.assignment.items() if v}
        object.__setattr__(self, "assignment", dict(sorted(assignment.items())))
        positions = {}
        for key, letters in self.assignment.items():
            for i, letter in enumerate(letters, start=1):
                positions.setdefault(letter, (key, i))
        positions[SPACE] = (self.space_key, 1)
        object.__setattr__(self, "_positions", positions)

    def key_of(self, letter: str) -> int:
        return tap_position(self, letter)[0]

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "space_key": self.space_key,
            "symbol_key": self.symbol_key,
            "keys": {str(k): v for k, v in self.assignment.items()},
        }

    def to_json(self) -> str:
        """Canonical form: keys in numeric order, two-space indent."""
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: Mapping) -> "Layout":
        try:
            keys = {int(k): v for k, v in data["keys"].items()}
        except (KeyError, AttributeError, TypeError, ValueError) as exc:
            raise InvalidLayoutError(f"malformed layout document: {exc}") from exc
        return cls(
            name=data.get("name", "custom"),
            assignment=keys,
            space_key=int(data.get("space_key", 0)),
            symbol_key=int(data.get("symbol_key", 1)),
        )

    @classmethod
    def from_json(cls, text: str) -> "Layout":
        return cls.from_dict(json.loads(text))


def tap_position(layout: Layout, char: str) -> tuple[int, int]:
    """(key, number of presses) for a letter or the space character."""
    try:
        return layout._positions[char]
    except KeyError:
        raise OutsideModelError(
            f"character {char!r} is not on layout {layout.name!r}"
        ) from None


def validate(layout: Layout) -> list[str]:
    """Return every invariant violation; an empty list means the layout is ok."""
    problems = []
    if layout.space_key not in KEYS:
        problems.append(f"space key {layout.space_key} is not a keypad key")
    if layout.symbol_key not in KEYS:
        problems.append(f"symbol key {layout.symbol_key} is not a keypad key")
    if layout.space_key == layout.symbol_key:
        problems.append("space key and symbol key are the same key")
    seen: dict[str, int] = {}
    for key, letters in layout.assignment.items():
        if key not in KEYS:
            problems.append(f"key {key} is not a keypad key")
        if key in (layout.space_key, layout.symbol_key):
            problems.append(f"reserved key {key} carries letters {letters!r}")
        if len(letters) > MAX_LETTERS_PER_KEY:
            problems.append(
                f"key {key} holds {len(letters)} letters "
                f"(max {MAX_LETTERS_PER_KEY})"
            )
        for ch in letters:
            if ch not in ALPHABET:
                problems.append(f"key {key} holds non-letter {ch!r}")
            elif ch in seen:
                problems.append(f"duplicate letter {ch}")
            else:
                seen[ch] = key
    for ch in ALPHABET:
        if ch not in seen:
            problems.append(f"letter {ch} unassigned")
    return problems


def check(layout: Layout) -> Layout:
    problems = validate(layout)
    if problems:
        raise InvalidLayoutError(
            f"layout {layout.name!r} is invalid: " + "; ".join(problems)
        )
    return layout


def build_boustrophedon(
    letter_ranking: Sequence[str],
    key_ranking: Sequence[int],
    space_key: int | None = None,
    symbol_key: int | None = None,
    name: str = "proposed",
) -> Layout:
    """Deal ranked letters onto ranked keys in alternating passes.

    The two reserved keys default to the least flexible two keys (last gets
    space, second-to-last gets symbols). The remaining keys, in flexibility
    order, receive one letter each per pass, forward then backward then
    forward again. Once fewer than two full passes' worth of letters remain,
    a final pass deals one letter per key and the leftover letters go, in
    order, to the last ``remaining - n_keys`` keys of that pass, which thus
    take two letters each.
    """
    letters = list(letter_ranking)
    if len(set(letters)) != len(letters) or not set(letters) <= set(ALPHABET):
        raise InvalidLayoutError(
            "letter ranking must list distinct lowercase letters, got "
            f"{''.join(map(str, letters))!r}"
        )
    keys = list(key_ranking)
    if sorted(keys) != sorted(KEYS):
        raise InvalidLayoutError(f"key ranking must be a permutation of 0-9, got {keys}")
    if space_key is None:
        space_key = keys[-1]
    if symbol_key is None:
        symbol_key = keys[-2] if keys[-2] != space_key else keys[-1]
    if space_key == symbol_key or {space_key, symbol_key} - set(keys):
        raise InvalidLayoutError("two distinct reserved keys are required")

    slots = [k for k in keys if k not in (space_key, symbol_key)]
    n = len(slots)
    assignment: dict[int, list[str]] = {k: [] for k in slots}
    pos = 0
    pass_no = 0
    while pos < len(letters):
        order = slots if pass_no % 2 == 0 else slots[::-1]
        remaining = len(letters) - pos
        if remaining >= 2 * n:
            for key in order:
                assignment[key].append(letters[pos])
                pos += 1
        else:
            for key in order[:remaining]:
                assignment[key].append(letters[pos])
                pos += 1
            overflow = len(letters) - pos
            for key in order[n - overflow :]:
                assignment[key].append(letters[pos])
                pos += 1
        pass_no += 1
    return Layout(
        name,
        {k: "".join(v) for k, v in assignment.items()},
        space_key=space_key,
        symbol_key=symbol_key,
    )


def proposed_layout() -> Layout:
    """The frequency-based keypad built from the published letter order."""
    return build_boustrophedon(PAPER_LETTER_RANKING, rank_keys(default_keypad()))


def traditional_multitap() -> Layout:
    """Alphabetical ITU-style multitap pad: abc on 2 through wxyz on 9."""
    return Layout(
        "traditional",
        {2: "abc", 3: "def", 4: "ghi", 5: "jkl", 6: "mno", 7: "pqrs", 8: "tuv", 9: "wxyz"},
        space_key=0,
        symbol_key=1,
    )


BUILTIN_LAYOUTS = {
    "proposed": proposed_layout,
    "traditional": traditional_multitap,
}


def load_layout(ref: str | Path) -> Layout:
    """Resolve a built-in layout name or read and validate a layout file."""
    if isinstance(ref, str) and ref in BUILTIN_LAYOUTS:
        return BUILTIN_LAYOUTS[ref]()
    path = Path(ref)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidLayoutError(f"cannot read layout file {path}: {exc}") from exc
    try:
        layout = Layout.from_json(text)
    except json.JSONDecodeError as exc:
        raise InvalidLayoutError(f"{path}: not valid JSON: {exc}") from exc
    return check(layout)
