"""Exact conversion between Python integers and decimal strings.

``str(int)`` and ``int(str)`` refuse inputs beyond a few thousand digits by
default, and Fujiki constants outgrow that quickly. These helpers split the
work into pieces below the limit so any integer round-trips.
"""

from __future__ import annotations

import operator
import re

_PIECE = 1000  # digits handled by a single builtin conversion
_DECIMAL = re.compile(r"[+-]?[0-9]+")
_LOG10_2 = 0.30102999566398120


def _digits(n: int) -> str:
    if n < 10 ** _PIECE:
        return str(n)
    half = int(n.bit_length() * _LOG10_2) // 2
    hi, lo = divmod(n, 10 ** half)
    return _digits(hi) + _digits(lo).zfill(half)


def to_decimal(n: int) -> str:
    """Decimal representation of any integer."""
    n = operator.index(n)
    return "-" + _digits(-n) if n < 0 else _digits(n)


def from_decimal(text: str) -> int:
    """Parse an optionally signed string of ASCII digits of any length.

    Raises:
        ValueError: if ``text`` is not of that form.
    """
    s = text.strip()
    if not _DECIMAL.fullmatch(s):
        raise ValueError(f"not a decimal integer: {text!r}")
    sign = -1 if s[0] == "-" else 1
    s = s.lstrip("+-")
    n = 0
    for i in range(0, len(s), _PIECE):
        piece = s[i:i + _PIECE]
        n = n * 10 ** len(piece) + int(piece)
    return sign * n
