"""Shared domain types for suffix sorting: texts, type maps, buckets.

Conventions used throughout the package:

* Indexing is 0-based.
* A virtual sentinel occupies position ``n``.  It is strictly smaller
  than every real symbol and never appears in the data itself.  The
  sentinel symbol is represented by :data:`SENTINEL` where a concrete
  value is needed.
* Suffix types are stored as one flag per position over ``n + 1``
  positions; the sentinel suffix is always S-type.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

SENTINEL = -1

#: marker for unfilled slots in the inducing working arrays
EMPTY_MARKER = -1

L_TYPE = 0
S_TYPE = 1


@dataclass(frozen=True)
class Text:
    """A sequence of symbols with an explicit alphabet size.

    At the top level the data is a byte string (alphabet size 256); at
    recursion levels it is a list of integer names over a smaller
    alphabet.
    """

    data: Sequence[int]
    alphabet_size: int

    @classmethod
    def from_bytes(cls, raw: bytes | bytearray | memoryview) -> "Text":
        return cls(bytes(raw), 256)

    @property
    def n(self) -> int:
        return len(self.data)

    def symbol(self, i: int) -> int:
        """Symbol at position ``i``, extended with the virtual sentinel."""
        if i >= self.n:
            return SENTINEL
        return self.data[i]


class SuffixTypeMap:
    """Per-position S/L flags over ``n + 1`` positions.

    ``types[i]`` is :data:`S_TYPE` or :data:`L_TYPE`; position ``n``
    (the sentinel suffix) is always S-type.
    """

    __slots__ = ("types",)

    def __init__(self, types: bytearray):
        self.types = types

    @property
    def n(self) -> int:
        return len(self.types) - 1

    def is_s(self, i: int) -> bool:
        return self.types[i] == S_TYPE

    def is_sstar(self, i: int) -> bool:
        """True iff suffix ``i`` is S-type and suffix ``i - 1`` is L-type."""
        return i >= 1 and self.types[i] == S_TYPE and self.types[i - 1] == L_TYPE

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SuffixTypeMap) and self.types == other.types

    def __repr__(self) -> str:
        return "SuffixTypeMap(%s)" % "".join(
            "S" if t == S_TYPE else "L" for t in self.types
        )


class BucketTable:
    """Per-symbol bucket boundaries with movable L-heads and S-tails.

    ``bucket_start[c]`` / ``bucket_end[c]`` delimit the half-open
    interval of suffixes starting with symbol ``c`` in the suffix
    array (sentinel excluded).  ``l_head`` moves right as L-suffixes
    are placed; ``s_tail`` moves left as S-suffixes are placed.
    """

    __slots__ = ("counts", "bucket_start", "bucket_end", "l_head", "s_tail")

    def __init__(self, counts: list[int]):
        self.counts = counts
        self.bucket_start = [0] * len(counts)
        self.bucket_end = [0] * len(counts)
        total = 0
        for c, cnt in enumerate(counts):
            self.bucket_start[c] = total
            total += cnt
            self.bucket_end[c] = total
        self.l_head = list(self.bucket_start)
        self.s_tail = [e - 1 for e in self.bucket_end]

    def reset_l_heads(self) -> None:
        self.l_head = list(self.bucket_start)

    def reset_s_tails(self) -> None:
        self.s_tail = [e - 1 for e in self.bucket_end]


def classify(text: Text) -> SuffixTypeMap:
    """Classify every suffix (including the sentinel) as S- or L-type.

    Single right-to-left scan: suffix ``i`` is S-type iff its first
    symbol is smaller than the next suffix's first symbol, or equal
    with the next suffix S-type.  The suffix at ``n - 1`` is always
    L-type since the sentinel is smaller than everything.
    """
    data = text.data
    n = len(data)
    types = bytearray(n + 1)
    types[n] = S_TYPE
    if n == 0:
        return SuffixTypeMap(types)
    types[n - 1] = L_TYPE
    for i in range(n - 2, -1, -1):
        if data[i] < data[i + 1]:
            types[i] = S_TYPE
        elif data[i] == data[i + 1]:
            types[i] = types[i + 1]
        else:
            types[i] = L_TYPE
    return SuffixTypeMap(types)


def sstar_positions(typemap: SuffixTypeMap) -> list[int]:
    """Ascending positions ``i`` with ``is_sstar(i)``.

    Includes the sentinel position ``n`` whenever ``n >= 1``; empty for
    the empty text.  No two returned positions are adjacent.
    """
    types = typemap.types
    out = []
    for i in range(1, len(types)):
        if types[i] == S_TYPE and types[i - 1] == L_TYPE:
            out.append(i)
    return out


def bucket_table(text: Text) -> BucketTable:
    counts = [0] * text.alphabet_size
    for c in text.data:
        counts[c] += 1
    return BucketTable(counts)


def sstar_substring_bounds(typemap: SuffixTypeMap) -> list[tuple[int, int]]:
    """Inclusive (start, end) bounds of the S*-substrings, in text order.

    Consecutive S* positions ``i < j`` yield the substring ``T[i..j]``
    (both endpoints included, so adjacent substrings overlap in one
    position); the final S* position ``n`` yields the sentinel-only
    pair ``(n, n)``.
    """
    pos = sstar_positions(typemap)
    if not pos:
        return []
    bounds = [(pos[k], pos[k + 1]) for k in range(len(pos) - 1)]
    bounds.append((pos[-1], pos[-1]))
    return bounds
