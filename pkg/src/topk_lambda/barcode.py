"""Bars, barcodes, the text format and the global event order.

Bars are closed-open intervals ``[birth, death)``.  The sweep order used
everywhere in the package is: by time, deaths before births at equal times,
and equal-time births (or deaths) by ascending bar index.
"""
from __future__ import annotations

import enum
import io
import math
import re
from dataclasses import dataclass
from typing import Iterable, List, NamedTuple, Optional, Sequence, TextIO, Tuple, Union

__all__ = [
    "Bar",
    "Barcode",
    "BarcodeError",
    "ConfigurationError",
    "Event",
    "EventKind",
    "ParseError",
    "ValidationError",
    "build_event_list",
    "format_barcode",
    "format_real",
    "parse_barcode",
]

_INF_TOKENS = {"inf", "Inf", "infinity", "Infinity", "+inf", "+Inf", "+infinity", "+Infinity"}
_SPLIT = re.compile(r"[,\s]+")


class BarcodeError(ValueError):
    """Base class for barcode input problems."""


class ParseError(BarcodeError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class ConfigurationError(BarcodeError):
    """Infinite bar with no truncation horizon."""


class ValidationError(BarcodeError):
    def __init__(self, message: str, bar_index: Optional[int] = None):
        super().__init__(message)
        self.bar_index = bar_index


@dataclass(frozen=True)
class Bar:
    index: int
    birth: float
    death: float

    @property
    def length(self) -> float:
        return self.death - self.birth


@dataclass(frozen=True)
class Barcode:
    """Validated multiset of bars; ``bars[k].index == k``."""

    bars: Tuple[Bar, ...] = ()

    def __post_init__(self):
        for k, bar in enumerate(self.bars):
            if bar.index != k:
                raise ValidationError(f"bar at position {k} carries index {bar.index}", k)
            _check_bar(bar)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[float]]) -> "Barcode":
        return cls(tuple(Bar(k, float(b), float(d)) for k, (b, d) in enumerate(pairs)))

    @property
    def M(self) -> int:
        return len(self.bars)

    def __len__(self) -> int:
        return len(self.bars)

    def __iter__(self):
        return iter(self.bars)

    def __getitem__(self, k: int) -> Bar:
        return self.bars[k]

    def pairs(self) -> List[Tuple[float, float]]:
        return [(bar.birth, bar.death) for bar in self.bars]


def _check_bar(bar: Bar) -> None:
    b, d = bar.birth, bar.death
    if math.isnan(b) or math.isnan(d):
        raise ValidationError(f"bar {bar.index}: NaN endpoint", bar.index)
    if not math.isfinite(b):
        raise ValidationError(f"bar {bar.index}: birth must be finite, got {b!r}", bar.index)
    if not math.isfinite(d):
        raise ValidationError(f"bar {bar.index}: death must be finite after truncation, got {d!r}", bar.index)
    if not b < d:
        raise ValidationError(f"bar {bar.index}: empty interval [{b!r}, {d!r})", bar.index)


def _parse_token(tok: str, lineno: int) -> float:
    if tok in _INF_TOKENS:
        return math.inf
    try:
        value = float(tok)
    except ValueError:
        raise ParseError(lineno, f"not a number: {tok!r}") from None
    if math.isnan(value):
        raise ParseError(lineno, "NaN is not a valid endpoint")
    return value


def parse_barcode(text: Union[str, TextIO], t_max: Optional[float] = None) -> Barcode:
    """Parse the line-oriented ``birth death`` format.

    Tokens may be separated by whitespace or commas and ``#`` starts a
    comment.  Infinite deaths are replaced by ``t_max``; without one they
    raise :class:`ConfigurationError`.
    """
    stream = io.StringIO(text) if isinstance(text, str) else text
    bars = []
    for lineno, line in enumerate(stream, start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = [t for t in _SPLIT.split(line) if t]
        if len(tokens) != 2:
            raise ParseError(lineno, f"expected 2 tokens, got {len(tokens)}")
        b = _parse_token(tokens[0], lineno)
        d = _parse_token(tokens[1], lineno)
        if math.isinf(d) and d > 0:
            if t_max is None:
                raise ConfigurationError(f"line {lineno}: infinite death needs a truncation horizon (t_max)")
            d = float(t_max)
        bars.append(Bar(len(bars), b, d))
    return Barcode(tuple(bars))


def format_real(x: float) -> str:
    """Shortest round-tripping text for ``x``; integral values lose the ``.0``."""
    if math.isfinite(x) and x.is_integer():
        return str(int(x))
    return repr(float(x))


def format_barcode(bc: Barcode) -> str:
    return "".join(f"{format_real(bar.birth)} {format_real(bar.death)}\n" for bar in bc.bars)


class EventKind(enum.IntEnum):
    # sort key: deaths precede births at equal times
    DEATH = 0
    BIRTH = 1


class Event(NamedTuple):
    time: float
    kind: EventKind
    bar_index: int


def build_event_list(bc: Barcode) -> List[Event]:
    events = []
    for bar in bc.bars:
        events.append(Event(bar.birth, EventKind.BIRTH, bar.index))
        events.append(Event(bar.death, EventKind.DEATH, bar.index))
    events.sort()
    return events
