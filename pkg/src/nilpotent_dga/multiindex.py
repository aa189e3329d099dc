"""Multi-indices s = (s_1, ..., s_n) of naturals, stored as plain tuples.

Positions are 1-based to match the usual notation: ``s_lt(s, i)`` is
(s_1, ..., s_{i-1}) and ``s_gt(s, i)`` is (s_{i+1}, ..., s_n).
"""

from __future__ import annotations

import re

MultiIndex = tuple


def size(s: MultiIndex) -> int:
    """|s|, the sum of the entries."""
    return sum(s)


def length(s: MultiIndex) -> int:
    return len(s)


def weight(s: MultiIndex) -> int:
    """|s| + l(s)."""
    return sum(s) + len(s)


def s_lt(s: MultiIndex, i: int) -> MultiIndex:
    return tuple(s[: max(i - 1, 0)])


def s_gt(s: MultiIndex, i: int) -> MultiIndex:
    return tuple(s[i:])


def delta(s: MultiIndex, i: int) -> int:
    _check_pos(s, i)
    return int(s[i - 1] == 0)


def eta(s: MultiIndex, i: int) -> int:
    _check_pos(s, i)
    return int(s[i - 1] >= 1)


def _check_pos(s, i):
    if not 1 <= i <= len(s):
        raise IndexError(f"position {i} outside 1..{len(s)}")


def bump(s: MultiIndex, i: int, by: int = 1) -> MultiIndex:
    """s + by * e_i."""
    _check_pos(s, i)
    t = list(s)
    t[i - 1] += by
    if t[i - 1] < 0:
        raise ValueError(f"negative entry in {tuple(t)}")
    return tuple(t)


def prepend_zero(s: MultiIndex) -> MultiIndex:
    return (0,) + tuple(s)


def order_key(s: MultiIndex) -> tuple:
    """By length, then lexicographically."""
    return (len(s), tuple(s))


def enumerate_EN(N: int) -> list[MultiIndex]:
    """All s with |s| + l(s) <= N, ordered by length then lexicographically."""
    if N < 0:
        return []
    out = [()]
    frontier = [()]
    for _ in range(N):
        nxt = []
        for s in frontier:
            room = N - weight(s) - 1
            for v in range(room + 1):
                nxt.append(s + (v,))
        out.extend(sorted(nxt))
        frontier = nxt
        if not frontier:
            break
    return out


def format_multiindex(s: MultiIndex) -> str:
    return "(" + ",".join(str(x) for x in s) + ")"


_MI_RE = re.compile(r"^\s*\(?\s*((?:\d+\s*,\s*)*\d+)?\s*,?\s*\)?\s*$")


def parse_multiindex(text: str) -> MultiIndex:
    text = text.strip()
    if text in ("∅", "()", "", "empty"):
        return ()
    m = _MI_RE.match(text)
    if m is None or m.group(1) is None:
        raise ValueError(f"not a multi-index: {text!r}")
    return tuple(int(x) for x in m.group(1).split(","))
