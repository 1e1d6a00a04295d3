"""Reading and writing index arrays in the CLI's on-disk formats.

Formats are raw and headerless for interoperability: ``bin32`` and
``bin64`` are little-endian unsigned arrays, ``text`` is one decimal
per line.  The width is never auto-detected on read; callers say what
they wrote.
"""

from __future__ import annotations

import numpy as np

FORMATS = ("bin32", "bin64", "text")

INT32_LIMIT = 2 ** 31


class WidthError(ValueError):
    """Raised when values do not fit the requested fixed width."""


def write_array(path, values, fmt: str) -> None:
    values = np.asarray(values, dtype=np.int64)
    if fmt == "bin32":
        if values.size and int(values.max(initial=0)) >= INT32_LIMIT:
            raise WidthError(
                "values exceed 32 bits; use --format bin64")
        values.astype("<u4").tofile(path)
    elif fmt == "bin64":
        values.astype("<u8").tofile(path)
    elif fmt == "text":
        with open(path, "w") as fh:
            for v in values:
                fh.write(f"{int(v)}\n")
    else:
        raise ValueError(f"unknown format: {fmt!r}")


def read_array(path, fmt: str) -> np.ndarray:
    if fmt == "bin32":
        return np.fromfile(path, dtype="<u4").astype(np.int64)
    if fmt == "bin64":
        return np.fromfile(path, dtype="<u8").astype(np.int64)
    if fmt == "text":
        with open(path) as fh:
            return np.array([int(line) for line in fh if line.strip()],
                            dtype=np.int64)
    raise ValueError(f"unknown format: {fmt!r}")
