"""Text grammars for varieties (``E7/P1``) and weights (``w5+3w6+8w7``)."""
from __future__ import annotations

import re
from dataclasses import dataclass

from .rootsys import SERIES, DynkinType, Vec


class ParseError(ValueError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


@dataclass(frozen=True)
class VarietySpec:
    type: DynkinType
    k: int

    def __str__(self) -> str:
        return f"{self.type}/P{self.k}"


_VARIETY = re.compile(r"\s*([A-Za-z])(\d+)\s*/\s*[Pp](\d+)\s*$")


def parse_variety(text: str) -> VarietySpec:
    """Parse ``<SERIES><RANK>/P<k>``, e.g. ``F4/P4``."""
    m = _VARIETY.match(text)
    if not m:
        raise ParseError(f"malformed variety {text!r}; expected e.g. 'E7/P1'", 0)
    series, rank, k = m.group(1).upper(), int(m.group(2)), int(m.group(3))
    if series not in SERIES:
        raise ParseError(f"unknown series {m.group(1)!r}", m.start(1))
    try:
        t = DynkinType(series, rank)
    except ValueError as exc:
        raise ParseError(str(exc), m.start(2)) from None
    if k < 1:
        raise ParseError("node index must be at least 1", m.start(3))
    if k > rank:
        raise ParseError(f"node index {k} exceeds rank {rank}", m.start(3))
    return VarietySpec(t, k)


_TERM = re.compile(r"\s*([+-])?\s*(\d+)?\s*\*?\s*[wW](\d+)\s*")


def parse_weight(text: str, rank: int) -> Vec:
    """Parse a signed sum of ``[<int>]w<idx>`` terms into fundamental coordinates.

    >>> parse_weight("w5+3w6+8w7", 7)
    (0, 0, 0, 0, 1, 3, 8)
    """
    coeffs = [0] * rank
    if text.strip() in ("", "0"):
        return tuple(coeffs)
    pos = 0
    first = True
    while pos < len(text):
        if not text[pos:].strip():
            break
        m = _TERM.match(text, pos)
        if not m or (not first and m.group(1) is None):
            raise ParseError(f"malformed weight term in {text!r}", pos)
        idx = int(m.group(3))
        if not 1 <= idx <= rank:
            raise ParseError(f"weight index {idx} out of range 1..{rank}", m.start(3))
        c = int(m.group(2)) if m.group(2) else 1
        coeffs[idx - 1] += -c if m.group(1) == "-" else c
        pos = m.end()
        first = False
    return tuple(coeffs)


def parse_weight_vec(text: str, rank: int) -> Vec:
    """Parse a comma-separated coefficient vector such as ``0,0,0,0,1,3``."""
    try:
        vals = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ParseError(f"malformed weight vector {text!r}", 0) from None
    if len(vals) != rank:
        raise ParseError(f"weight vector has {len(vals)} entries, expected {rank}", 0)
    return vals


def format_weight(weight) -> str:
    """Inverse of :func:`parse_weight` in canonical form (``0`` for the zero weight)."""
    parts = []
    for i, c in enumerate(weight, start=1):
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else str(abs(c))
        sign = "-" if c < 0 else ("+" if parts else "")
        parts.append(f"{sign}{mag}w{i}")
    return "".join(parts) or "0"
