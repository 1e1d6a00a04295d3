"""Combined suffix-array and LCP-array construction by induced sorting.

The two inducing scans of the suffix array construction are augmented
so that whenever a suffix is placed, the LCP value between it and its
already-placed neighbour is derived from a running per-bucket minimum
over the LCP values of the inducing sources (see :mod:`.minima` for
the interchangeable minimum trackers).  LCP values between the last
L-suffix and the first S-suffix of a bucket (the L/S-seam) cannot be
induced and are recomputed directly; by the run-length structure at a
seam this costs amortized linear time overall.
"""

from __future__ import annotations

from dataclasses import dataclass, field

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
)
from .minima import make_tracker
from .sais import (
    ReducedProblem,
    _approx_sstar_order,
    name_sstar_substrings,
    reduced_suffix_array,
)

TRACKER_KINDS = ("scan", "marray", "stack")
SSTAR_LCP_METHODS = ("sparse_phi", "recursive")


@dataclass(frozen=True)
class InduceOptions:
    """Strategy switches for the combined construction.

    The defaults (``marray`` tracker, sparse-phi S*-LCPs computed at
    the top level only) are the practically fastest configuration; the
    alternatives produce identical output.
    """

    tracker_kind: str = "marray"
    sstar_lcp_method: str = "sparse_phi"

    def __post_init__(self):
        if self.tracker_kind not in TRACKER_KINDS:
            raise ValueError(f"unknown tracker kind: {self.tracker_kind!r}")
        if self.sstar_lcp_method not in SSTAR_LCP_METHODS:
            raise ValueError(
                f"unknown S*-LCP method: {self.sstar_lcp_method!r}")


@dataclass
class LcpInduceState:
    """Working arrays shared by the two LCP-inducing passes.

    Slot 0 of both arrays belongs to the sentinel suffix; the
    ``c``-bucket occupies slots ``[1 + bucket_start[c],
    1 + bucket_end[c])``.  ``l_region_end`` (per symbol, bucket-space)
    is recorded by the L-pass for the seam handling of the S-pass.
    """

    work_sa: list[int]
    work_lcp: list[int]
    l_region_end: list[int] = field(default_factory=list)


def seam_lcp(text: Text, i: int, j: int, typemap: SuffixTypeMap | None = None,
             stats: dict | None = None) -> int:
    """LCP of an L-suffix ``i`` and an S-suffix ``j`` with equal first symbol.

    Their common prefix can only consist of copies of that symbol (a
    longer mismatching tail would force both suffixes to the same
    type), so the answer is the minimum of the two run lengths,
    counted by advancing over both runs simultaneously.
    """
    data = text.data
    n = text.n
    c = data[i]
    if typemap is not None:
        assert data[j] == c
        assert typemap.types[i] == L_TYPE and typemap.types[j] == S_TYPE
    k = 1
    while i + k < n and j + k < n and data[i + k] == c and data[j + k] == c:
        k += 1
    if stats is not None:
        stats["seam_symbols"] = stats.get("seam_symbols", 0) + k
    return k


def sstar_lcp_sparse_phi(text: Text, sorted_sstar: list[int]) -> list[int]:
    """LCP values between lexicographically adjacent S*-suffixes.

    Sparse variant of the permuted-LCP computation: record each S*
    position's lexicographic predecessor, then process the S*
    positions in text order.  When the predecessor chain is shifted —
    the current predecessor equals the previous one moved forward by
    the text-order gap — the comparison starts at the previous result
    minus the gap (those symbols were already verified); otherwise it
    starts from scratch, which keeps every value exact.
    """
    data = text.data
    n = text.n
    m = len(sorted_sstar)
    out = [0] * m
    if m <= 1:
        return out
    pred = [-1] * (n + 1)
    rank_of = [0] * (n + 1)
    for r in range(1, m):
        pred[sorted_sstar[r]] = sorted_sstar[r - 1]
        rank_of[sorted_sstar[r]] = r
    rank_of[sorted_sstar[0]] = 0
    pred[sorted_sstar[0]] = -1

    prev_pos = -1
    prev_pred = -1
    prev_l = 0
    for p in sorted(sorted_sstar):
        q = pred[p]
        if q < 0 or q == n:
            # no predecessor, or the empty sentinel suffix
            l = 0
        else:
            # the carried bound is sound only along a shifted
            # predecessor chain: dropping the gap's symbols from the
            # previous (verified) match leaves a verified match
            gap = p - prev_pos
            if prev_pos >= 0 and q == prev_pred + gap and prev_l > gap:
                l = prev_l - gap
            else:
                l = 0
            while p + l < n and q + l < n and data[p + l] == data[q + l]:
                l += 1
        out[rank_of[p]] = l
        prev_pos = p
        prev_pred = q
        prev_l = l
    return out


def sstar_lcp_recursive(text: Text, reduced_sa: list[int],
                        reduced_lcp: list[int], problem: ReducedProblem,
                        stats: dict | None = None) -> list[int]:
    """Scale the reduced text's LCP values back to symbol counts.

    For rank ``k``, the matched names span a text range whose length
    is a position difference (constant time, and immune to the
    one-symbol overlap of adjacent S*-substrings); the result is then
    extended by comparing the suffixes naively from the first pair of
    mismatching S*-substrings onwards.  The comparison must be allowed
    to run past the shorter substring's end: when one substring is a
    proper prefix of the other, the true match can continue into the
    following substring.
    """
    data = text.data
    n = text.n
    pos = problem.sstar_index_to_position
    m = len(pos)
    out = [0] * m
    ops = 0

    for k in range(1, m):
        r = reduced_sa[k]
        r_prev = reduced_sa[k - 1]
        lk = reduced_lcp[k]
        span = pos[r + lk] - pos[r]
        a = pos[r + lk]
        b = pos[r_prev + lk]
        e = 0
        while True:
            x = data[a + e] if a + e < n else SENTINEL
            y = data[b + e] if b + e < n else SENTINEL
            if x != y or x == SENTINEL:
                break
            e += 1
        ops += e + 1
        out[k] = span + e
    if stats is not None:
        stats["scale_ops"] = stats.get("scale_ops", 0) + ops
    return out


def place_sstar_entries(text: Text, buckets: BucketTable, order: list[int],
                        sstar_lcps: list[int]) -> LcpInduceState:
    """Write the sorted S*-suffixes and their LCP values at the bucket tails."""
    data = text.data
    n = text.n
    work = [EMPTY_MARKER] * (n + 1)
    wlcp = [0] * (n + 1)
    work[0] = n
    buckets.reset_s_tails()
    s_tail = buckets.s_tail
    for r in range(len(order) - 1, 0, -1):
        p = order[r]
        c = data[p]
        slot = 1 + s_tail[c]
        s_tail[c] -= 1
        work[slot] = p
        wlcp[slot] = sstar_lcps[r]
    return LcpInduceState(work, wlcp)


def induce_L_with_lcp(state: LcpInduceState, text: Text,
                      typemap: SuffixTypeMap, buckets: BucketTable,
                      tracker, stats: dict | None = None) -> None:
    """Left-to-right L-inducing pass that also writes LCP values.

    At each filled slot the tracker absorbs the slot's LCP value; when
    a suffix is induced into bucket ``c``, its LCP against the
    previous occupant is 0 at the bucket front, 1 when the inducing
    sources start with different symbols, and one more than the
    tracker's interval minimum otherwise.  On first entering a
    bucket's S-region, the first S*-entry's LCP is recomputed against
    the bucket's last L-suffix (the L/S-seam).
    """
    data = text.data
    n = text.n
    types = typemap.types
    work = state.work_sa
    wlcp = state.work_lcp
    buckets.reset_l_heads()
    l_head = buckets.l_head
    starts = buckets.bucket_start
    sigma = text.alphabet_size
    last_src = [-2] * sigma
    seam_done = bytearray(sigma)

    for i in range(n + 1):
        j = work[i]
        if j < 0:
            continue
        if i > 0 and j < n and types[j] == S_TYPE:
            c = data[j]
            if not seam_done[c]:
                seam_done[c] = 1
                if l_head[c] > starts[c]:
                    # slot of the last placed L-suffix is l_head[c]
                    # in array space (1 + (l_head[c] - 1))
                    wlcp[i] = seam_lcp(text, work[l_head[c]], j, typemap,
                                       stats)
        tracker.absorb(wlcp[i])
        if j > 0 and types[j - 1] == L_TYPE:
            p = j - 1
            c = data[p]
            k = 1 + l_head[c]
            l_head[c] += 1
            work[k] = p
            src = data[j] if j < n else SENTINEL
            interval_min = tracker.take(c)
            if k == 1 + starts[c]:
                wlcp[k] = 0
            elif last_src[c] != src:
                wlcp[k] = 1
            else:
                wlcp[k] = 1 + interval_min
            last_src[c] = src

    state.l_region_end = list(l_head)


def induce_S_with_lcp(state: LcpInduceState, text: Text,
                      typemap: SuffixTypeMap, buckets: BucketTable,
                      tracker, stats: dict | None = None) -> None:
    """Right-to-left S-inducing pass that also writes LCP values.

    Mirror of :func:`induce_L_with_lcp`: a placement at slot ``k``
    fixes the LCP at ``k + 1`` (skipped at the bucket's last slot).
    When the leftmost S-suffix of a bucket is placed, its LCP against
    the bucket's last L-suffix is recomputed, since plain S-suffixes
    may land before every S*-suffix.
    """
    data = text.data
    n = text.n
    types = typemap.types
    work = state.work_sa
    wlcp = state.work_lcp
    buckets.reset_s_tails()
    s_tail = buckets.s_tail
    starts = buckets.bucket_start
    ends = buckets.bucket_end
    l_end = state.l_region_end
    sigma = text.alphabet_size
    last_src = [-2] * sigma

    for i in range(n, -1, -1):
        j = work[i]
        if j > 0 and types[j - 1] == S_TYPE:
            p = j - 1
            c = data[p]
            kpos = s_tail[c]
            k = 1 + kpos
            s_tail[c] -= 1
            work[k] = p
            src = data[j] if j < n else SENTINEL
            interval_min = tracker.take(c)
            if kpos != ends[c] - 1:
                if last_src[c] != src:
                    wlcp[k + 1] = 1
                else:
                    wlcp[k + 1] = 1 + interval_min
            last_src[c] = src
            if kpos == l_end[c]:
                if l_end[c] > starts[c]:
                    wlcp[k] = seam_lcp(text, work[k - 1], p, typemap, stats)
                else:
                    wlcp[k] = 0
        tracker.absorb(wlcp[i])


def _sorted_sstar_with_lcp(text: Text, typemap: SuffixTypeMap,
                           options: InduceOptions,
                           stats: dict | None) -> tuple[list[int], list[int]]:
    positions = sstar_positions(typemap)
    if len(positions) <= 1:
        return positions, [0] * len(positions)
    buckets = bucket_table(text)
    induced = _approx_sstar_order(text, typemap, buckets)
    problem = name_sstar_substrings(text, typemap, induced)
    pos = problem.sstar_index_to_position

    if options.sstar_lcp_method == "recursive":
        n_reduced = len(pos)
        if problem.num_names == n_reduced:
            reduced_sa = [0] * n_reduced
            for k, v in enumerate(problem.reduced_text.data):
                reduced_sa[v] = k
            reduced_lcp = [0] * n_reduced
        else:
            reduced_sa, reduced_lcp = build_sa_and_lcp(
                problem.reduced_text, options, stats=stats)
        order = [pos[k] for k in reduced_sa]
        lcps = sstar_lcp_recursive(text, reduced_sa, reduced_lcp, problem,
                                   stats)
    else:
        reduced_sa = reduced_suffix_array(problem)
        order = [pos[k] for k in reduced_sa]
        lcps = sstar_lcp_sparse_phi(text, order)
    return order, lcps


def build_sa_and_lcp(text: Text | bytes | bytearray,
                     options: InduceOptions | None = None,
                     stats: dict | None = None) -> tuple[list[int], list[int]]:
    """Suffix array and LCP array of ``text`` in one induced construction."""
    if not isinstance(text, Text):
        text = Text.from_bytes(text)
    if options is None:
        options = InduceOptions()
    n = text.n
    if n == 0:
        return [], []
    if n == 1:
        return [0], [0]

    typemap = classify(text)
    order, sstar_lcps = _sorted_sstar_with_lcp(text, typemap, options, stats)
    buckets = bucket_table(text)
    state = place_sstar_entries(text, buckets, order, sstar_lcps)

    tracker = make_tracker(options.tracker_kind, text.alphabet_size)
    induce_L_with_lcp(state, text, typemap, buckets, tracker, stats)
    tracker = make_tracker(options.tracker_kind, text.alphabet_size)
    induce_S_with_lcp(state, text, typemap, buckets, tracker, stats)

    sa = state.work_sa[1:]
    lcp = state.work_lcp[1:]
    lcp[0] = 0
    return sa, lcp
