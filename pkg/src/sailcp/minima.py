"""Per-bucket running-minimum trackers used by the LCP-inducing scans.

All three trackers implement the same contract:

* ``absorb(value)`` folds ``value`` into every bucket's pending
  minimum.
* ``take(bucket)`` returns the minimum of all values absorbed since
  the last ``take`` on that bucket (``None`` if nothing was absorbed)
  and resets that bucket's accumulation.

They differ only in cost: re-scanning (quadratic worst case), an
explicit per-bucket array with eager capping (``O(n * sigma)``), or a
sorted stack with binary search (``O(n log sigma)``).
"""

from __future__ import annotations

from bisect import bisect_right

import numpy as np


class ScanTracker:
    """Answers ``take`` by re-scanning the absorbed values.

    Remembers, per bucket, how many values had been absorbed at the
    last take; a take scans everything absorbed since.  Simple and
    obviously correct; quadratic in the worst case.
    """

    kind = "scan"

    def __init__(self, sigma: int):
        self._values: list[int] = []
        self._last_take = [0] * sigma

    def absorb(self, value: int) -> None:
        self._values.append(value)

    def take(self, bucket: int):
        start = self._last_take[bucket]
        self._last_take[bucket] = len(self._values)
        if start == len(self._values):
            return None
        return min(self._values[start:])


class MArrayTracker:
    """Explicit per-bucket minimum array with eager capping.

    Every absorb caps all pending entries at the new value (done as
    one vectorized minimum), which is the ``O(n * sigma)`` strategy.
    """

    kind = "marray"

    def __init__(self, sigma: int):
        self._m = np.zeros(sigma, dtype=np.int64)
        self._active = np.zeros(sigma, dtype=bool)

    def absorb(self, value: int) -> None:
        np.minimum(self._m, value, out=self._m, where=self._active)
        self._m[~self._active] = value
        self._active[:] = True

    def take(self, bucket: int):
        if not self._active[bucket]:
            return None
        self._active[bucket] = False
        return int(self._m[bucket])


class StackTracker:
    """Sorted stack of (value, stamp) pairs queried by binary search.

    Stamps count take events.  The stack is strictly increasing in
    both value and stamp, so the minimum of everything absorbed after
    a bucket's last take is the value of the deepest entry with a
    larger stamp, found by binary search over the stamps.  Absorbs
    within one take-interval collapse to their minimum, so at most one
    entry is pushed per interval.
    """

    kind = "stack"

    def __init__(self, sigma: int):
        self._values: list[int] = []
        self._stamps: list[int] = []
        self._last_take = [-1] * sigma
        self._clock = 0
        # instrumentation for the amortized cost bound
        self.pushes = 0
        self.pops = 0
        self.absorbs = 0

    def absorb(self, value: int) -> None:
        self.absorbs += 1
        values = self._values
        stamps = self._stamps
        while values and values[-1] >= value:
            values.pop()
            stamps.pop()
            self.pops += 1
        if values and stamps[-1] == self._clock:
            # a smaller value from the current take-interval shadows
            # this one for every possible future query
            return
        values.append(value)
        stamps.append(self._clock)
        self.pushes += 1

    def take(self, bucket: int):
        idx = bisect_right(self._stamps, self._last_take[bucket])
        result = self._values[idx] if idx < len(self._values) else None
        self._last_take[bucket] = self._clock
        self._clock += 1
        return result


TRACKERS = {
    "scan": ScanTracker,
    "marray": MArrayTracker,
    "stack": StackTracker,
}


def make_tracker(kind: str, sigma: int):
    try:
        cls = TRACKERS[kind]
    except KeyError:
        raise ValueError(f"unknown tracker kind: {kind!r}") from None
    return cls(sigma)
