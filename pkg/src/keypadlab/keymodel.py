"""Thumb ergonomics of the ten numbered phone keys.

Each key carries the interphalangeal joint angle measured when pressing it and
whether the metacarpophalangeal joint moves forward (flexion) or laterally
(extension). Lateral movement is treated as strictly worse than any amount of
interphalangeal bending, which gives the key flexibility order used to place
letters.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Sequence

KEYS: tuple[int, ...] = (1, 2, 3, 4, 5, 6, 7, 8, 9, 0)

FORWARD = "forward"
LATERAL = "lateral"


@dataclass(frozen=True)
class KeyErgonomics:
    key: int
    ipj_angle: float
    mcj_direction: str
    flexion: bool
    extension: bool

    def __post_init__(self):
        if self.key not in KEYS:
            raise ValueError(f"key must be one of 0-9, got {self.key!r}")
        if self.mcj_direction not in (FORWARD, LATERAL):
            raise ValueError(
                f"key {self.key}: mcj_direction must be {FORWARD!r} or "
                f"{LATERAL!r}, got {self.mcj_direction!r}"
            )
        if self.flexion == self.extension:
            raise ValueError(f"key {self.key}: exactly one of flexion/extension")
        if self.flexion != (self.mcj_direction == FORWARD):
            raise ValueError(
                f"key {self.key}: flexion requires forward movement, "
                f"extension requires lateral movement"
            )
        if not 0 < self.ipj_angle < 180:
            raise ValueError(
                f"key {self.key}: ipj_angle must be in (0, 180), got {self.ipj_angle}"
            )

    @classmethod
    def from_direction(cls, key: int, ipj_angle: float, mcj_direction: str):
        return cls(
            key,
            ipj_angle,
            mcj_direction,
            flexion=mcj_direction == FORWARD,
            extension=mcj_direction == LATERAL,
        )


@dataclass(frozen=True)
class KeypadModel:
    ergonomics: tuple[KeyErgonomics, ...]
    space_key: int = 0
    symbol_key: int = 9

    def __post_init__(self):
        object.__setattr__(
            self, "ergonomics", tuple(sorted(self.ergonomics, key=lambda e: e.key))
        )
        keys = [e.key for e in self.ergonomics]
        if sorted(keys) != sorted(KEYS):
            raise ValueError(f"keypad must list each of keys 0-9 once, got {keys}")
        if self.space_key not in KEYS or self.symbol_key not in KEYS:
            raise ValueError("space_key and symbol_key must be keys 0-9")
        if self.space_key == self.symbol_key:
            raise ValueError("space_key and symbol_key must differ")

    def __getitem__(self, key: int) -> KeyErgonomics:
        for e in self.ergonomics:
            if e.key == key:
                return e
        raise KeyError(key)

    def to_dict(self) -> dict:
        return {
            "keys": [
                {
                    "key": e.key,
                    "angle_degrees": e.ipj_angle,
                    "mcj_direction": e.mcj_direction,
                }
                for e in self.ergonomics
            ],
            "space_key": self.space_key,
            "symbol_key": self.symbol_key,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: Mapping) -> "KeypadModel":
        ergonomics = []
        for row in data["keys"]:
            e = KeyErgonomics.from_direction(
                int(row["key"]), row["angle_degrees"], row["mcj_direction"]
            )
            # Explicit flags, when present, must agree with the direction.
            if "flexion" in row or "extension" in row:
                e = KeyErgonomics(
                    e.key,
                    e.ipj_angle,
                    e.mcj_direction,
                    bool(row.get("flexion", e.flexion)),
                    bool(row.get("extension", e.extension)),
                )
            ergonomics.append(e)
        return cls(
            tuple(ergonomics),
            space_key=int(data.get("space_key", 0)),
            symbol_key=int(data.get("symbol_key", 9)),
        )

    @classmethod
    def from_json(cls, text: str) -> "KeypadModel":
        return cls.from_dict(json.loads(text))


# (key, IPJ angle in degrees, MCJ direction) per measured key press.
_THUMB_TABLE: Sequence[tuple[int, float, str]] = (
    (1, 120, FORWARD),
    (2, 110, FORWARD),
    (3, 80, LATERAL),
    (4, 100, FORWARD),
    (5, 95, FORWARD),
    (6, 70, LATERAL),
    (7, 80, FORWARD),
    (8, 70, LATERAL),
    (9, 65, LATERAL),
    (0, 40, LATERAL),
)


def default_keypad() -> KeypadModel:
    """The measured thumb table, with space on key 0 and symbols on key 9."""
    return KeypadModel(
        tuple(KeyErgonomics.from_direction(*row) for row in _THUMB_TABLE),
        space_key=0,
        symbol_key=9,
    )


def load_keypad(path: str | Path) -> KeypadModel:
    return KeypadModel.from_json(Path(path).read_text(encoding="utf-8"))


def rank_keys(model: KeypadModel) -> list[int]:
    """Keys from most to least flexible.

    Flexion keys come before extension keys; within a group a wider joint
    angle ranks higher, and equal angles fall back to the lower key number.
    """
    return [
        e.key
        for e in sorted(
            model.ergonomics, key=lambda e: (e.extension, -e.ipj_angle, e.key)
        )
    ]


def flexible_keys(model: KeypadModel) -> frozenset[int]:
    return frozenset(e.key for e in model.ergonomics if e.flexion)


def inflexible_keys(model: KeypadModel) -> frozenset[int]:
    return frozenset(e.key for e in model.ergonomics if e.extension)
