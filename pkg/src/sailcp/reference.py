"""Reference LCP algorithms, brute-force oracles, and a full verifier.

These are kept deliberately independent of the inducing construction
so they can serve as cross-checks: the brute-force suffix array sorts
suffixes directly, the naive LCP compares suffixes symbol by symbol,
and the rank-array and predecessor-permutation algorithms are the two
classic linear-time LCP constructions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Text


def _as_data(text):
    if isinstance(text, Text):
        return text.data
    return text


def brute_force_sa(text) -> list[int]:
    """Positions sorted by direct suffix comparison (test oracle).

    Relies on Python's sequence comparison, where a proper prefix
    sorts before its extensions -- exactly the virtual-sentinel
    convention.  Quadratic; intended for texts up to ~10^5.
    """
    data = _as_data(text)
    return sorted(range(len(data)), key=lambda i: data[i:])


def naive_lcp(text, sa: list[int], stats: dict | None = None) -> list[int]:
    """LCP array by direct comparison of lexicographically adjacent suffixes."""
    data = _as_data(text)
    n = len(data)
    lcp = [0] * len(sa)
    comparisons = 0
    for i in range(1, len(sa)):
        a = sa[i - 1]
        b = sa[i]
        l = 0
        while a + l < n and b + l < n and data[a + l] == data[b + l]:
            l += 1
        comparisons += l + 1
        lcp[i] = l
    if stats is not None:
        stats["comparisons"] = stats.get("comparisons", 0) + comparisons
    return lcp


def kasai_lcp(text, sa: list[int], stats: dict | None = None) -> list[int]:
    """Linear-time LCP construction via the rank (inverse) array.

    Walks the text in position order; the LCP of position ``i``
    against its lexicographic predecessor is at least the previous
    position's value minus one, so total comparison work is linear.
    """
    data = _as_data(text)
    n = len(data)
    rank = [0] * n
    for r, p in enumerate(sa):
        rank[p] = r
    lcp = [0] * n
    comparisons = 0
    h = 0
    for i in range(n):
        r = rank[i]
        if r == 0:
            h = 0
            continue
        j = sa[r - 1]
        start_h = h
        while i + h < n and j + h < n and data[i + h] == data[j + h]:
            h += 1
        comparisons += (h - start_h) + 1
        lcp[r] = h
        if h > 0:
            h -= 1
    if stats is not None:
        stats["comparisons"] = stats.get("comparisons", 0) + comparisons
    return lcp


def phi_lcp(text, sa: list[int], stats: dict | None = None) -> list[int]:
    """Linear-time LCP via the lexicographic-predecessor permutation.

    Computes, for every text position, the text position of its
    lexicographic predecessor suffix; the LCP values are then filled
    in text order (same amortization as :func:`kasai_lcp`) and
    permuted back to rank order.
    """
    data = _as_data(text)
    n = len(data)
    if n == 0:
        return []
    phi = [-1] * n
    for r in range(1, n):
        phi[sa[r]] = sa[r - 1]
    plcp = [0] * n
    comparisons = 0
    l = 0
    for i in range(n):
        j = phi[i]
        if j < 0:
            plcp[i] = 0
            l = 0
            continue
        while i + l < n and j + l < n and data[i + l] == data[j + l]:
            l += 1
            comparisons += 1
        comparisons += 1
        plcp[i] = l
        if l > 0:
            l -= 1
    lcp = [plcp[p] for p in sa]
    lcp[0] = 0
    if stats is not None:
        stats["comparisons"] = stats.get("comparisons", 0) + comparisons
    return lcp


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of a full SA/LCP check.

    ``first_violation`` is ``None`` when ``ok``, otherwise a pair of
    the offending index and one of ``not-permutation``, ``order``,
    ``lcp-too-short``, ``lcp-too-long``.
    """

    ok: bool
    first_violation: tuple[int, str] | None = None


def _fail(index: int, kind: str) -> VerifyReport:
    return VerifyReport(False, (index, kind))


def verify(text, sa: list[int], lcp: list[int]) -> VerifyReport:
    """Certify that ``sa`` and ``lcp`` are exactly correct for ``text``.

    Checks that ``sa`` is a permutation and, for every adjacent pair,
    that the claimed number of symbols agree and the next
    (sentinel-extended) symbols put the pair in strictly increasing
    order.  Together these certify both the suffix order and the
    exactness of every LCP value.
    """
    data = _as_data(text)
    n = len(data)
    if len(sa) != n or len(lcp) != n:
        return _fail(0, "not-permutation")
    seen = bytearray(n)
    for i, p in enumerate(sa):
        if not 0 <= p < n or seen[p]:
            return _fail(i, "not-permutation")
        seen[p] = 1
    if n and lcp[0] != 0:
        return _fail(0, "lcp-too-long" if lcp[0] > 0 else "lcp-too-short")
    # zero-copy slices so the prefix-agreement checks compare at C speed
    view = memoryview(data) if isinstance(data, (bytes, bytearray)) else None
    for i in range(1, n):
        a = sa[i - 1]
        b = sa[i]
        l = lcp[i]
        if l < 0:
            return _fail(i, "lcp-too-short")
        if a + l > n or b + l > n:
            return _fail(i, "lcp-too-long")
        if view is not None:
            if view[a:a + l] != view[b:b + l]:
                return _fail(i, "lcp-too-long")
        else:
            for t in range(l):
                if data[a + t] != data[b + t]:
                    return _fail(i, "lcp-too-long")
        x = data[a + l] if a + l < n else -1
        y = data[b + l] if b + l < n else -1
        if x == y:
            return _fail(i, "lcp-too-short")
        if x > y:
            return _fail(i, "order")
    return VerifyReport(True)
