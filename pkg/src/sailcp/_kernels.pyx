# cython: boundscheck=False, wraparound=False, initializedcheck=False
# cython: cdivision=True, language_level=3
"""Compiled hot kernels: suffix array construction by induced sorting
and the combined SA+LCP construction (sparse-phi S*-LCPs, pluggable
per-bucket minimum tracker).

The pure-Python implementation in the sibling modules is the
behavioural reference; this module reproduces it loop for loop with
typed buffers.  Index width (32/64-bit) is selected by input size via
a fused type.
"""

import numpy as np

cimport cython
cimport numpy as cnp

cnp.import_array()

ctypedef fused idx_t:
    cnp.int32_t
    cnp.int64_t

cdef enum:
    TY_L = 0
    TY_S = 1

TRACKER_CODES = {"scan": 0, "marray": 1, "stack": 2}


# ---------------------------------------------------------------------------
# shared helpers

cdef void _classify(idx_t[::1] t, Py_ssize_t n,
                    unsigned char[::1] types) noexcept nogil:
    cdef Py_ssize_t i
    types[n] = TY_S
    if n == 0:
        return
    types[n - 1] = TY_L
    for i in range(n - 2, -1, -1):
        if t[i] < t[i + 1]:
            types[i] = TY_S
        elif t[i] > t[i + 1]:
            types[i] = TY_L
        else:
            types[i] = types[i + 1]


cdef void _buckets(idx_t[::1] t, Py_ssize_t n, Py_ssize_t sigma,
                   cnp.int64_t[::1] starts,
                   cnp.int64_t[::1] ends) noexcept nogil:
    cdef Py_ssize_t i
    cdef cnp.int64_t acc = 0, cnt
    for i in range(sigma):
        ends[i] = 0
    for i in range(n):
        ends[t[i]] += 1
    for i in range(sigma):
        cnt = ends[i]
        starts[i] = acc
        acc += cnt
        ends[i] = acc


cdef void _induce_L_sa(idx_t[::1] t, unsigned char[::1] types, Py_ssize_t n,
                       cnp.int64_t[::1] head, idx_t[::1] work) noexcept nogil:
    cdef Py_ssize_t i
    cdef idx_t j
    for i in range(n + 1):
        j = work[i]
        if j > 0 and types[j - 1] == TY_L:
            work[1 + head[t[j - 1]]] = j - 1
            head[t[j - 1]] += 1


cdef void _induce_S_sa(idx_t[::1] t, unsigned char[::1] types, Py_ssize_t n,
                       cnp.int64_t[::1] tail, idx_t[::1] work) noexcept nogil:
    cdef Py_ssize_t i
    cdef idx_t j
    for i in range(n, -1, -1):
        j = work[i]
        if j > 0 and types[j - 1] == TY_S:
            work[1 + tail[t[j - 1]]] = j - 1
            tail[t[j - 1]] -= 1


cdef inline cnp.int64_t _seam_lcp(idx_t[::1] t, Py_ssize_t n, Py_ssize_t i,
                                  Py_ssize_t j) noexcept nogil:
    # both suffixes start with t[i]; their common prefix is a run of it
    cdef idx_t c = t[i]
    cdef Py_ssize_t k = 1
    while i + k < n and j + k < n and t[i + k] == c and t[j + k] == c:
        k += 1
    return k


# ---------------------------------------------------------------------------
# suffix array construction (recursive)

cdef object _sais(idx_t[::1] t, Py_ssize_t n, Py_ssize_t sigma,
                  idx_t[::1] work, bint final_passes):
    """Induced sorting over ``work`` (n + 1 slots, sentinel at slot 0).

    Returns the sorted S* positions as an ndarray.  When
    ``final_passes`` is false the working array is left in an
    unspecified state (callers run their own placement and inducing).
    """
    if idx_t is cnp.int32_t:
        dtype = np.int32
    else:
        dtype = np.int64

    cdef Py_ssize_t i, k, m, r, p, lo, hi, plo, phi_, length, plength, shared
    cdef Py_ssize_t num_names, limit
    cdef idx_t j
    cdef cnp.int64_t xa, xb

    if n == 0:
        work[0] = 0
        return np.empty(0, dtype)

    types_arr = np.empty(n + 1, np.uint8)
    cdef unsigned char[::1] types = types_arr
    _classify(t, n, types)

    starts_arr = np.empty(sigma, np.int64)
    ends_arr = np.empty(sigma, np.int64)
    cursor_arr = np.empty(sigma, np.int64)
    cdef cnp.int64_t[::1] starts = starts_arr
    cdef cnp.int64_t[::1] ends = ends_arr
    cdef cnp.int64_t[::1] cursor = cursor_arr
    _buckets(t, n, sigma, starts, ends)

    m = 0
    for i in range(1, n + 1):
        if types[i] == TY_S and types[i - 1] == TY_L:
            m += 1
    spos_arr = np.empty(m, dtype)
    cdef idx_t[::1] spos = spos_arr
    k = 0
    for i in range(1, n + 1):
        if types[i] == TY_S and types[i - 1] == TY_L:
            spos[k] = i
            k += 1

    cdef idx_t[::1] order
    cdef idx_t[::1] pos2idx
    cdef idx_t[::1] induced
    cdef idx_t[::1] names
    cdef idx_t[::1] sa_red
    cdef idx_t[::1] rwork

    if m <= 1:
        order_arr = spos_arr
        order = spos
    else:
        # approximate placement of the S*-suffixes (first symbol only)
        for i in range(n + 1):
            work[i] = -1
        work[0] = n
        for i in range(sigma):
            cursor[i] = ends[i] - 1
        for k in range(m - 1):  # spos[m - 1] is the sentinel
            p = spos[k]
            work[1 + cursor[t[p]]] = <idx_t>p
            cursor[t[p]] -= 1
        for i in range(sigma):
            cursor[i] = starts[i]
        _induce_L_sa(t, types, n, cursor, work)
        for i in range(sigma):
            cursor[i] = ends[i] - 1
        _induce_S_sa(t, types, n, cursor, work)

        induced_arr = np.empty(m, dtype)
        induced = induced_arr
        k = 0
        for i in range(n + 1):
            j = work[i]
            if j == n or (j > 0 and types[j] == TY_S and types[j - 1] == TY_L):
                induced[k] = j
                k += 1

        pos2idx_arr = np.empty(n + 1, dtype)
        pos2idx = pos2idx_arr
        for k in range(m):
            pos2idx[spos[k]] = <idx_t>k

        # name the S*-substrings by rank in the induced order
        names_arr = np.empty(m, dtype)
        names = names_arr
        num_names = 0
        plo = 0
        phi_ = 0
        for r in range(m):
            k = pos2idx[induced[r]]
            lo = spos[k]
            hi = spos[k + 1] if k + 1 < m else n
            if r > 0:
                length = hi - lo + 1
                plength = phi_ - plo + 1
                limit = length if length < plength else plength
                shared = 0
                while shared < limit:
                    xa = t[lo + shared] if lo + shared < n else -1
                    xb = t[plo + shared] if plo + shared < n else -1
                    if xa != xb:
                        break
                    shared += 1
                if shared < limit or length != plength:
                    num_names += 1
            names[k] = <idx_t>num_names
            plo = lo
            phi_ = hi
        num_names += 1

        if num_names == m:
            sa_red_arr = np.empty(m, dtype)
            sa_red = sa_red_arr
            for k in range(m):
                sa_red[names[k]] = <idx_t>k
        else:
            rwork_arr = np.empty(m + 1, dtype)
            rwork = rwork_arr
            _sais(names, m, num_names, rwork, True)
            sa_red = rwork[1:]

        order_arr = np.empty(m, dtype)
        order = order_arr
        for k in range(m):
            order[k] = spos[sa_red[k]]

    if final_passes:
        for i in range(n + 1):
            work[i] = -1
        work[0] = n
        for i in range(sigma):
            cursor[i] = ends[i] - 1
        for r in range(m - 1, 0, -1):
            p = order[r]
            work[1 + cursor[t[p]]] = <idx_t>p
            cursor[t[p]] -= 1
        for i in range(sigma):
            cursor[i] = starts[i]
        _induce_L_sa(t, types, n, cursor, work)
        for i in range(sigma):
            cursor[i] = ends[i] - 1
        _induce_S_sa(t, types, n, cursor, work)

    return order_arr


# ---------------------------------------------------------------------------
# per-bucket minimum tracker (three strategies behind one interface)

cdef class _Tracker:
    cdef int kind
    cdef Py_ssize_t sigma
    cdef cnp.int64_t[::1] last          # per bucket: scan index / stack clock
    # marray
    cdef cnp.int64_t[::1] mval
    cdef unsigned char[::1] mact
    # scan
    cdef cnp.int64_t[::1] svals
    cdef Py_ssize_t scount
    # stack
    cdef cnp.int64_t[::1] stv
    cdef cnp.int64_t[::1] sts
    cdef Py_ssize_t ssize, scap
    cdef cnp.int64_t clock
    cdef object _stv_arr, _sts_arr

    def __cinit__(self, int kind, Py_ssize_t sigma, Py_ssize_t capacity):
        self.kind = kind
        self.sigma = sigma
        last_arr = np.full(sigma, -1, np.int64)
        self.last = last_arr
        self._last_arr = last_arr
        if kind == 1:
            mval_arr = np.zeros(sigma, np.int64)
            mact_arr = np.zeros(sigma, np.uint8)
            self.mval = mval_arr
            self.mact = mact_arr
            self._mval_arr = mval_arr
            self._mact_arr = mact_arr
        elif kind == 0:
            svals_arr = np.empty(capacity, np.int64)
            self.svals = svals_arr
            self._svals_arr = svals_arr
            self.scount = 0
            last_arr[:] = 0
        else:
            self.scap = 1024
            self._stv_arr = np.empty(self.scap, np.int64)
            self._sts_arr = np.empty(self.scap, np.int64)
            self.stv = self._stv_arr
            self.sts = self._sts_arr
            self.ssize = 0
            self.clock = 0

    cdef void _grow(self):
        self.scap *= 2
        stv_arr = np.empty(self.scap, np.int64)
        sts_arr = np.empty(self.scap, np.int64)
        stv_arr[:self.ssize] = self._stv_arr[:self.ssize]
        sts_arr[:self.ssize] = self._sts_arr[:self.ssize]
        self._stv_arr = stv_arr
        self._sts_arr = sts_arr
        self.stv = stv_arr
        self.sts = sts_arr

    cdef void absorb(self, cnp.int64_t v):
        cdef Py_ssize_t c
        if self.kind == 1:
            for c in range(self.sigma):
                if self.mact[c]:
                    if self.mval[c] > v:
                        self.mval[c] = v
                else:
                    self.mval[c] = v
                    self.mact[c] = 1
        elif self.kind == 0:
            self.svals[self.scount] = v
            self.scount += 1
        else:
            while self.ssize > 0 and self.stv[self.ssize - 1] >= v:
                self.ssize -= 1
            if self.ssize > 0 and self.sts[self.ssize - 1] == self.clock:
                return  # a smaller value already covers this interval
            if self.ssize == self.scap:
                self._grow()
            self.stv[self.ssize] = v
            self.sts[self.ssize] = self.clock
            self.ssize += 1

    cdef cnp.int64_t take(self, Py_ssize_t c):
        """Minimum absorbed since the last take on bucket ``c``; -1 if none."""
        cdef cnp.int64_t result = -1, since
        cdef Py_ssize_t i, lo, hi, mid
        if self.kind == 1:
            if self.mact[c]:
                result = self.mval[c]
                self.mact[c] = 0
        elif self.kind == 0:
            for i in range(self.last[c], self.scount):
                if result < 0 or self.svals[i] < result:
                    result = self.svals[i]
            self.last[c] = self.scount
        else:
            since = self.last[c]
            lo = 0
            hi = self.ssize
            while lo < hi:  # first stamp > since
                mid = (lo + hi) // 2
                if self.sts[mid] > since:
                    hi = mid
                else:
                    lo = mid + 1
            if lo < self.ssize:
                result = self.stv[lo]
            self.last[c] = self.clock
            self.clock += 1
        return result

    # keep ndarray owners alive
    cdef object _last_arr, _mval_arr, _mact_arr, _svals_arr


# ---------------------------------------------------------------------------
# combined SA + LCP construction

cdef void _sparse_phi(idx_t[::1] t, Py_ssize_t n, idx_t[::1] order,
                      Py_ssize_t m, idx_t[::1] spos, idx_t[::1] pred,
                      idx_t[::1] rank_of, idx_t[::1] slcp) noexcept nogil:
    cdef Py_ssize_t r, k, p, q, l, gap, prev_pos, prev_pred
    cdef Py_ssize_t prev_l = 0
    pred[order[0]] = -1
    rank_of[order[0]] = 0
    for r in range(1, m):
        pred[order[r]] = order[r - 1]
        rank_of[order[r]] = <idx_t>r
    prev_pos = -1
    prev_pred = -1
    for k in range(m):
        p = spos[k]
        q = pred[p]
        if q < 0 or q == n:
            # no predecessor, or the empty sentinel suffix
            l = 0
        else:
            # the carried bound is sound only along a shifted predecessor
            # chain: dropping the gap's symbols from the previous
            # (verified) match leaves a verified match
            gap = p - prev_pos
            if prev_pos >= 0 and q == prev_pred + gap and prev_l > gap:
                l = prev_l - gap
            else:
                l = 0
            while p + l < n and q + l < n and t[p + l] == t[q + l]:
                l += 1
        slcp[rank_of[p]] = <idx_t>l
        prev_pos = p
        prev_pred = q
        prev_l = l


cdef _toplevel_lcp(idx_t[::1] t, Py_ssize_t n, Py_ssize_t sigma,
                   int tracker_kind, idx_t[::1] work, idx_t[::1] wlcp):
    """Fill ``work``/``wlcp`` (n + 1 slots each, sentinel at slot 0)."""
    if idx_t is cnp.int32_t:
        dtype = np.int32
    else:
        dtype = np.int64

    cdef Py_ssize_t i, k, m, r, p, c, kpos
    cdef idx_t j
    cdef cnp.int64_t interval_min, src

    order_arr = _sais(t, n, sigma, work, False)
    cdef idx_t[::1] order = order_arr
    m = order.shape[0]

    types_arr = np.empty(n + 1, np.uint8)
    cdef unsigned char[::1] types = types_arr
    _classify(t, n, types)

    starts_arr = np.empty(sigma, np.int64)
    ends_arr = np.empty(sigma, np.int64)
    cursor_arr = np.empty(sigma, np.int64)
    l_end_arr = np.empty(sigma, np.int64)
    cdef cnp.int64_t[::1] starts = starts_arr
    cdef cnp.int64_t[::1] ends = ends_arr
    cdef cnp.int64_t[::1] cursor = cursor_arr
    cdef cnp.int64_t[::1] l_end = l_end_arr
    _buckets(t, n, sigma, starts, ends)

    # S*-suffix LCP values via the sparse predecessor scan
    slcp_arr = np.zeros(m, dtype)
    cdef idx_t[::1] slcp = slcp_arr
    cdef idx_t[::1] spos, pred, rank_of
    if m > 1:
        spos_arr = np.sort(order_arr)
        spos = spos_arr
        pred_arr = np.empty(n + 1, dtype)
        rank_arr = np.empty(n + 1, dtype)
        pred = pred_arr
        rank_of = rank_arr
        _sparse_phi(t, n, order, m, spos, pred, rank_of, slcp)

    # step 2': sorted S*-suffixes and their LCPs at the bucket tails
    for i in range(n + 1):
        work[i] = -1
        wlcp[i] = 0
    work[0] = <idx_t>n
    for i in range(sigma):
        cursor[i] = ends[i] - 1
    for r in range(m - 1, 0, -1):
        p = order[r]
        c = t[p]
        work[1 + cursor[c]] = <idx_t>p
        wlcp[1 + cursor[c]] = slcp[r]
        cursor[c] -= 1

    cdef _Tracker tr = _Tracker(tracker_kind, sigma, n + 2)
    last_src_arr = np.full(sigma, -2, np.int64)
    seam_arr = np.zeros(sigma, np.uint8)
    cdef cnp.int64_t[::1] last_src = last_src_arr
    cdef unsigned char[::1] seam_done = seam_arr

    # step 3': left-to-right L-inducing with LCPs
    for i in range(sigma):
        cursor[i] = starts[i]
    for i in range(n + 1):
        j = work[i]
        if j < 0:
            continue
        if i > 0 and j < n and types[j] == TY_S:
            c = t[j]
            if not seam_done[c]:
                seam_done[c] = 1
                if cursor[c] > starts[c]:
                    wlcp[i] = <idx_t>_seam_lcp(t, n, work[cursor[c]], j)
        tr.absorb(wlcp[i])
        if j > 0 and types[j - 1] == TY_L:
            p = j - 1
            c = t[p]
            k = 1 + cursor[c]
            cursor[c] += 1
            work[k] = <idx_t>p
            src = t[j] if j < n else -1
            interval_min = tr.take(c)
            if k == 1 + starts[c]:
                wlcp[k] = 0
            elif last_src[c] != src:
                wlcp[k] = 1
            else:
                wlcp[k] = <idx_t>(1 + interval_min)
            last_src[c] = src
    for i in range(sigma):
        l_end[i] = cursor[i]

    # step 4': right-to-left S-inducing with LCPs
    tr = _Tracker(tracker_kind, sigma, n + 2)
    for i in range(sigma):
        last_src[i] = -2
        cursor[i] = ends[i] - 1
    for i in range(n, -1, -1):
        j = work[i]
        if j > 0 and types[j - 1] == TY_S:
            p = j - 1
            c = t[p]
            kpos = cursor[c]
            k = 1 + kpos
            cursor[c] -= 1
            work[k] = <idx_t>p
            src = t[j] if j < n else -1
            interval_min = tr.take(c)
            if kpos != ends[c] - 1:
                if last_src[c] != src:
                    wlcp[k + 1] = 1
                else:
                    wlcp[k + 1] = <idx_t>(1 + interval_min)
            last_src[c] = src
            if kpos == l_end[c]:
                if l_end[c] > starts[c]:
                    wlcp[k] = <idx_t>_seam_lcp(t, n, work[k - 1], p)
                else:
                    wlcp[k] = 0
        tr.absorb(wlcp[i])


# ---------------------------------------------------------------------------
# python entry points

def suffix_array(data):
    """Suffix array of a byte string (sentinel suffix excluded)."""
    cdef Py_ssize_t n = len(data)
    if n == 0:
        return np.empty(0, np.int32)
    if n + 1 < 2 ** 31:
        t32 = np.frombuffer(data, np.uint8).astype(np.int32)
        work32_arr = np.empty(n + 1, np.int32)
        _sais[cnp.int32_t](t32, n, 256, work32_arr, True)
        return work32_arr[1:]
    t64 = np.frombuffer(data, np.uint8).astype(np.int64)
    work64_arr = np.empty(n + 1, np.int64)
    _sais[cnp.int64_t](t64, n, 256, work64_arr, True)
    return work64_arr[1:]


def sa_and_lcp(data, tracker_kind="marray"):
    """Suffix array and LCP array of a byte string."""
    cdef int code = TRACKER_CODES[tracker_kind]
    cdef Py_ssize_t n = len(data)
    if n == 0:
        return np.empty(0, np.int32), np.empty(0, np.int32)
    if n == 1:
        return np.zeros(1, np.int32), np.zeros(1, np.int32)
    if n + 1 < 2 ** 31:
        t32 = np.frombuffer(data, np.uint8).astype(np.int32)
        sa32 = np.empty(n + 1, np.int32)
        lcp32 = np.empty(n + 1, np.int32)
        _toplevel_lcp[cnp.int32_t](t32, n, 256, code, sa32, lcp32)
        out_lcp = lcp32[1:]
        out_lcp[0] = 0
        return sa32[1:], out_lcp
    t64 = np.frombuffer(data, np.uint8).astype(np.int64)
    sa64 = np.empty(n + 1, np.int64)
    lcp64 = np.empty(n + 1, np.int64)
    _toplevel_lcp[cnp.int64_t](t64, n, 256, code, sa64, lcp64)
    out_lcp64 = lcp64[1:]
    out_lcp64[0] = 0
    return sa64[1:], out_lcp64


def kasai(data, idx_t[::1] sa):
    """Rank-array LCP construction (compiled fast path)."""
    cdef Py_ssize_t n = len(data)
    cdef const unsigned char[::1] t = data
    if idx_t is cnp.int32_t:
        dtype = np.int32
    else:
        dtype = np.int64
    rank_arr = np.empty(n, dtype)
    lcp_arr = np.zeros(n, dtype)
    cdef idx_t[::1] rank = rank_arr
    cdef idx_t[::1] lcp = lcp_arr
    cdef Py_ssize_t i, r, j, h = 0
    for i in range(n):
        rank[sa[i]] = <idx_t>i
    for i in range(n):
        r = rank[i]
        if r == 0:
            h = 0
            continue
        j = sa[r - 1]
        while i + h < n and j + h < n and t[i + h] == t[j + h]:
            h += 1
        lcp[r] = <idx_t>h
        if h > 0:
            h -= 1
    return lcp_arr


def phi(data, idx_t[::1] sa):
    """Predecessor-permutation LCP construction (compiled fast path)."""
    cdef Py_ssize_t n = len(data)
    cdef const unsigned char[::1] t = data
    if idx_t is cnp.int32_t:
        dtype = np.int32
    else:
        dtype = np.int64
    phi_arr = np.empty(n, dtype)
    plcp_arr = np.empty(n, dtype)
    lcp_arr = np.zeros(n, dtype)
    cdef idx_t[::1] ph = phi_arr
    cdef idx_t[::1] plcp = plcp_arr
    cdef idx_t[::1] lcp = lcp_arr
    cdef Py_ssize_t i, r, j, l = 0
    if n == 0:
        return lcp_arr
    ph[sa[0]] = -1
    for r in range(1, n):
        ph[sa[r]] = sa[r - 1]
    for i in range(n):
        j = ph[i]
        if j < 0:
            plcp[i] = 0
            l = 0
            continue
        while i + l < n and j + l < n and t[i + l] == t[j + l]:
            l += 1
        plcp[i] = <idx_t>l
        if l > 0:
            l -= 1
    for r in range(n):
        lcp[r] = plcp[sa[r]]
    if n:
        lcp[0] = 0
    return lcp_arr
