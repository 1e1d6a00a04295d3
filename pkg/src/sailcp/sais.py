"""Pure-Python suffix array construction by induced sorting.

The working array convention used by the inducing passes: a list of
``n + 1`` slots where slot 0 holds the sentinel suffix ``n`` and the
``c``-bucket of real suffixes occupies slots ``[1 + bucket_start[c],
1 + bucket_end[c])``.  Empty slots hold :data:`EMPTY`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    EMPTY_MARKER,
    L_TYPE,
    S_TYPE,
    SENTINEL,
    BucketTable,
    SuffixTypeMap,
    Text,
    bucket_table,
    classify,
    sstar_positions,
    sstar_substring_bounds,
)

EMPTY = EMPTY_MARKER


@dataclass(frozen=True)
class ReducedProblem:
    """The reduced text of S*-substring names, plus naming metadata.

    ``name_lcp[r]`` is the number of leading symbols shared by the
    substrings at ranks ``r - 1`` and ``r`` of the induced order,
    capped at the shorter length (``name_lcp[0] = 0``).
    """

    reduced_text: Text
    sstar_index_to_position: list[int]
    num_names: int
    name_lcp: list[int]


def induce_L(work: list[int], text: Text, typemap: SuffixTypeMap,
             buckets: BucketTable) -> None:
    """Left-to-right L-inducing pass over the working array (in place).

    For every filled slot holding suffix ``j > 0`` whose predecessor
    ``j - 1`` is L-type, ``j - 1`` is written at the L-head of its
    bucket, which then advances.  Expects ``l_head`` at bucket starts.
    """
    data = text.data
    types = typemap.types
    l_head = buckets.l_head
    for i in range(len(work)):
        j = work[i]
        if j <= 0:
            continue
        p = j - 1
        if types[p] == L_TYPE:
            c = data[p]
            work[1 + l_head[c]] = p
            l_head[c] += 1


def induce_S(work: list[int], text: Text, typemap: SuffixTypeMap,
             buckets: BucketTable) -> None:
    """Right-to-left S-inducing pass (in place).

    Mirror image of :func:`induce_L`: predecessors that are S-type go
    to the S-tail of their bucket, which then retreats.  Expects
    ``s_tail`` reset to ``bucket_end - 1``.
    """
    data = text.data
    types = typemap.types
    s_tail = buckets.s_tail
    for i in range(len(work) - 1, -1, -1):
        j = work[i]
        if j <= 0:
            continue
        p = j - 1
        if types[p] == S_TYPE:
            c = data[p]
            work[1 + s_tail[c]] = p
            s_tail[c] -= 1


def _approx_sstar_order(text: Text, typemap: SuffixTypeMap,
                        buckets: BucketTable) -> list[int]:
    """Order the S*-suffixes by their S*-substrings.

    Places the unsorted S*-suffixes at their bucket tails (sorted by
    first symbol only), runs one L- and one S-inducing pass, and reads
    the S* entries back in slot order.  The result orders the
    S*-substrings correctly even though equal substrings may appear in
    arbitrary relative order.
    """
    data = text.data
    n = len(data)
    work = [EMPTY] * (n + 1)
    work[0] = n
    buckets.reset_s_tails()
    s_tail = buckets.s_tail
    for p in sstar_positions(typemap):
        if p == n:
            continue
        c = data[p]
        work[1 + s_tail[c]] = p
        s_tail[c] -= 1
    buckets.reset_l_heads()
    induce_L(work, text, typemap, buckets)
    buckets.reset_s_tails()
    induce_S(work, text, typemap, buckets)
    return [j for j in work if j == n or typemap.is_sstar(j)]


def _substring_symbol(data, n: int, i: int) -> int:
    return SENTINEL if i >= n else data[i]


def name_sstar_substrings(text: Text, typemap: SuffixTypeMap,
                          induced_order: list[int]) -> ReducedProblem:
    """Assign order-preserving integer names to the S*-substrings.

    Walks ``induced_order`` (the S*-substring order produced by
    :func:`_approx_sstar_order`), incrementing the name exactly when
    adjacent substrings differ in length or in any symbol.  The names,
    written back in text order of the S* positions, form the reduced
    text for the recursion.
    """
    data = text.data
    n = len(data)
    positions = sstar_positions(typemap)
    bounds = sstar_substring_bounds(typemap)
    index_of = {p: k for k, p in enumerate(positions)}

    names = [0] * len(positions)
    name_lcp = [0] * len(positions)
    current = 0
    prev_bounds = None
    for r, p in enumerate(induced_order):
        lo, hi = bounds[index_of[p]]
        if r > 0:
            plo, phi = prev_bounds
            length = hi - lo + 1
            plength = phi - plo + 1
            shared = 0
            limit = min(length, plength)
            while shared < limit and _substring_symbol(data, n, lo + shared) == \
                    _substring_symbol(data, n, plo + shared):
                shared += 1
            if shared < limit or length != plength:
                current += 1
            name_lcp[r] = shared
        names[index_of[p]] = current
        prev_bounds = (lo, hi)

    reduced = Text(names, current + 1)
    return ReducedProblem(reduced, positions, current + 1, name_lcp)


def sort_sstar_suffixes(text: Text, typemap: SuffixTypeMap) -> list[int]:
    """All S* positions (sentinel included) in lexicographic suffix order."""
    positions = sstar_positions(typemap)
    if len(positions) <= 1:
        return positions
    buckets = bucket_table(text)
    induced = _approx_sstar_order(text, typemap, buckets)
    problem = name_sstar_substrings(text, typemap, induced)
    reduced_sa = reduced_suffix_array(problem)
    pos = problem.sstar_index_to_position
    return [pos[k] for k in reduced_sa]


def reduced_suffix_array(problem: ReducedProblem) -> list[int]:
    """Suffix array of the reduced text (its own sentinel excluded).

    When all names are distinct the array is read directly off the
    names; otherwise the construction recurses.
    """
    names = problem.reduced_text.data
    if problem.num_names == len(names):
        sa = [0] * len(names)
        for k, v in enumerate(names):
            sa[v] = k
        return sa
    return _sais_work(problem.reduced_text)[1:]


def _sais_work(text: Text) -> list[int]:
    """Full induced sorting; returns the working array (sentinel at slot 0)."""
    n = text.n
    typemap = classify(text)
    order = sort_sstar_suffixes(text, typemap)
    buckets = bucket_table(text)
    return _induce_from_sorted_sstar(text, typemap, buckets, order)


def _induce_from_sorted_sstar(text: Text, typemap: SuffixTypeMap,
                              buckets: BucketTable,
                              order: list[int]) -> list[int]:
    data = text.data
    n = text.n
    work = [EMPTY] * (n + 1)
    work[0] = n
    buckets.reset_s_tails()
    s_tail = buckets.s_tail
    for r in range(len(order) - 1, 0, -1):
        p = order[r]
        c = data[p]
        work[1 + s_tail[c]] = p
        s_tail[c] -= 1
    buckets.reset_l_heads()
    induce_L(work, text, typemap, buckets)
    buckets.reset_s_tails()
    induce_S(work, text, typemap, buckets)
    return work


def build_suffix_array(text: Text | bytes | bytearray) -> list[int]:
    """Suffix array of ``text`` (sentinel suffix excluded from the output)."""
    if not isinstance(text, Text):
        text = Text.from_bytes(text)
    n = text.n
    if n == 0:
        return []
    if n == 1:
        return [0]
    return _sais_work(text)[1:]
