"""Acceptance gate: one test per top-level criterion.

Each test prints a single ``ACCEPTANCE PASS/FAIL`` line directly to the
real stdout (bypassing capture) so the gate's outcome is visible in any
test log, then asserts.  The final criterion's hardware-dependent trend
is reported informationally and never asserted.
"""

import itertools
import random
import statistics
import sys
import time

import numpy as np
import pytest

import sailcp
from sailcp import InduceOptions, build_sa_and_lcp
from sailcp.core import L_TYPE, S_TYPE, Text, classify
from sailcp.generators import generate
from sailcp.inducing import (
    SSTAR_LCP_METHODS,
    TRACKER_KINDS,
    build_sa_and_lcp as py_build,
    seam_lcp,
)
from sailcp.minima import make_tracker
from sailcp.reference import brute_force_sa, kasai_lcp, naive_lcp, phi_lcp, verify


_CAPSYS = None


@pytest.fixture(autouse=True)
def _uncaptured(capsys):
    # keep the per-criterion verdict lines visible in the test log even
    # for passing tests (pytest captures at the fd level by default)
    global _CAPSYS
    _CAPSYS = capsys
    yield
    _CAPSYS = None


def _emit(line: str) -> None:
    if _CAPSYS is not None:
        with _CAPSYS.disabled():
            sys.stdout.write(line)
            sys.stdout.flush()
    else:
        sys.__stdout__.write(line)
        sys.__stdout__.flush()


def report(criterion: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    _emit(f"ACCEPTANCE {status}: {criterion}{suffix}\n")
    assert ok, f"{criterion}{suffix}"


def info(message: str) -> None:
    _emit(f"ACCEPTANCE INFO: {message}\n")


ALL_COMBINATIONS = [InduceOptions(t, m)
                    for t in TRACKER_KINDS for m in SSTAR_LCP_METHODS]


def test_exhaustive_oracle_equivalence():
    """Every 3-symbol text of length <= 10 equals the brute-force oracle."""
    start = time.perf_counter()
    texts = 0
    mismatches = 0
    combo_checks = 0
    for n in range(0, 11):
        for tup in itertools.product(range(3), repeat=n):
            data = bytes(tup)
            expected_sa = brute_force_sa(data)
            expected_lcp = naive_lcp(data, expected_sa)
            sa, lcp = build_sa_and_lcp(data)
            if sa.tolist() != expected_sa or lcp.tolist() != expected_lcp:
                mismatches += 1
            texts += 1
            if texts % 500 == 0:  # sampled subset: every combination
                for options in ALL_COMBINATIONS:
                    s, l = build_sa_and_lcp(data, options, backend="python")
                    if s.tolist() != expected_sa or l.tolist() != expected_lcp:
                        mismatches += 1
                    combo_checks += 1
    elapsed = time.perf_counter() - start
    report("exhaustive oracle equivalence",
           mismatches == 0 and texts == 88573,
           f"{texts} texts, {combo_checks} sampled combination checks "
           f"across all {len(ALL_COMBINATIONS)} tracker/S*-method "
           f"combinations, {elapsed:.1f}s")


def test_randomized_cross_algorithm_agreement():
    """200 length-1e5 texts: induced = kasai = phi, verifier accepts."""
    start = time.perf_counter()
    rng = random.Random(2024)
    n = 10 ** 5
    inputs = []
    for sigma in (1, 2, 4, 26, 255):
        for _ in range(32):
            inputs.append(bytes(rng.randrange(sigma) for _ in range(n)))
    for seed in range(20):
        inputs.append(generate("periodic", n, sigma=rng.randrange(2, 30)))
        inputs.append(generate("runs", n, sigma=rng.randrange(2, 30),
                               seed=seed))
    assert len(inputs) == 200
    failures = 0
    for data in inputs:
        sa, lcp = build_sa_and_lcp(data)
        k = sailcp.kasai_lcp(data, sa)
        p = sailcp.phi_lcp(data, sa)
        if not (np.array_equal(lcp, k) and np.array_equal(lcp, p)):
            failures += 1
            continue
        if not verify(data, sa.tolist(), lcp.tolist()).ok:
            failures += 1
    elapsed = time.perf_counter() - start
    report("randomized cross-algorithm agreement", failures == 0,
           f"200 texts of length 1e5, {elapsed:.1f}s")


def test_tracker_equivalence():
    """Identical tracker outputs on op sequences and in the pipeline."""
    ok = True
    for sigma in (2, 256):
        rng = random.Random(sigma)
        trackers = [make_tracker(kind, sigma) for kind in TRACKER_KINDS]
        for _ in range(10 ** 5):
            if rng.random() < 0.6:
                v = rng.randrange(10 ** 6)
                for tr in trackers:
                    tr.absorb(v)
            else:
                b = rng.randrange(sigma)
                outs = {tr.take(b) for tr in trackers}
                if len(outs) != 1:
                    ok = False
    # byte-identical LCP arrays when plugged into the full pipeline
    rng = random.Random(3)
    for trial in range(12):
        sigma = rng.choice([2, 4, 26, 255])
        data = bytes(rng.randrange(sigma) for _ in range(3000))
        blobs = set()
        for kind in TRACKER_KINDS:
            _, lcp = build_sa_and_lcp(data, InduceOptions(tracker_kind=kind))
            blobs.add(np.asarray(lcp, np.int64).tobytes())
            _, lcp = build_sa_and_lcp(data, InduceOptions(tracker_kind=kind),
                                      backend="python")
            blobs.add(np.asarray(lcp, np.int64).tobytes())
        if len(blobs) != 1:
            ok = False
    report("tracker equivalence", ok,
           "2 x 1e5-operation sequences plus 12 pipeline texts")


def test_seam_run_property():
    """Adjacent L/S pairs share only a run of their first symbol."""
    checked = 0
    ok = True
    for n in range(2, 10):
        for tup in itertools.product(range(3), repeat=n):
            data = bytes(tup)
            text = Text.from_bytes(data)
            tm = classify(text)
            sa, lcp = build_sa_and_lcp(data)
            sa = sa.tolist()
            lcp = lcp.tolist()
            for r in range(1, n):
                i, j = sa[r - 1], sa[r]
                if data[i] != data[j] or tm.types[i] == tm.types[j]:
                    continue
                if not (tm.types[i] == L_TYPE and tm.types[j] == S_TYPE):
                    ok = False  # L sorts before S within a bucket
                    continue
                c = data[i]
                l = lcp[r]
                if any(data[i + t] != c or data[j + t] != c
                       for t in range(l)):
                    ok = False
                run_i = len(data[i:]) - len(bytes(data[i:]).lstrip(bytes([c])))
                run_j = len(data[j:]) - len(bytes(data[j:]).lstrip(bytes([c])))
                naive = 0
                while (i + naive < n and j + naive < n
                       and data[i + naive] == data[j + naive]):
                    naive += 1
                if seam_lcp(text, i, j, tm) != min(run_i, run_j) or \
                        seam_lcp(text, i, j) != naive:
                    ok = False
                checked += 1
    report("L/S-seam run property", ok and checked > 10 ** 4,
           f"{checked} adjacent L/S pairs on exhaustive 3-symbol texts")


@pytest.fixture(scope="module")
def markov_corpora(tmp_path_factory):
    base = tmp_path_factory.mktemp("markov")
    sizes = {10: None, 20: None}
    for mb in sizes:
        data = generate("markov", mb * 1024 * 1024, sigma=64, seed=7)
        path = base / f"markov-{mb}mb"
        path.write_bytes(data)
        sizes[mb] = path
    return sizes


def test_linearity(markov_corpora):
    """Doubling the input at most ~doubles the combined construction time."""
    medians = {}
    for mb, path in markov_corpora.items():
        data = path.read_bytes()
        times = []
        for _ in range(3):
            t0 = time.perf_counter()
            build_sa_and_lcp(data)
            times.append(time.perf_counter() - t0)
        medians[mb] = statistics.median(times)
    ratio = medians[20] / medians[10]
    report("linearity check", ratio <= 2.6,
           f"median-of-3: 10MB {medians[10]:.2f}s, 20MB {medians[20]:.2f}s, "
           f"ratio {ratio:.2f} <= 2.6")


def test_amortization_counters():
    """Seam, rescan, and rescaling work all stay linear."""
    ok = True
    details = []

    rng = random.Random(5)
    for data in (generate("runs", 30000, sigma=3, seed=2),
                 generate("markov", 30000, sigma=8, seed=3),
                 bytes(rng.randrange(2) for _ in range(30000)),
                 b"a" * 30000):
        n = len(data)
        stats = {}
        py_build(data, stats=stats)
        if stats.get("seam_symbols", 0) > 2 * n:
            ok = False
        sa = brute_force_sa(data) if n < 1000 else \
            sailcp.build_suffix_array(data).tolist()
        for algo in (kasai_lcp, phi_lcp):
            st = {}
            algo(data, sa, stats=st)
            if st["comparisons"] > 2 * n:
                ok = False
    details.append("seam and rescan counters <= 2n on 4 x 30k texts")

    # recursive rescaling on the worst-case periodic family
    opts = InduceOptions(sstar_lcp_method="recursive")
    for n in (10 ** 4, 10 ** 5, 10 ** 6):
        data = b"ab" * (n // 2)
        stats = {}
        py_build(data, opts, stats=stats)
        if stats["scale_ops"] > 4 * n:
            ok = False
        details.append(f"scale_ops(n={n})={stats['scale_ops']}")
    report("amortization counters", ok, "; ".join(details))


def test_benchmark_table_shape(markov_corpora, tmp_path):
    """cmd_bench emits the expected CSV; the cost trend is logged only."""
    import csv as csv_mod

    from sailcp import cli

    path = markov_corpora[20]
    out = tmp_path / "bench.csv"
    code = cli.main(["bench", str(path), "--algos", "induce,kasai",
                     "--csv", str(out)])
    with open(out, newline="") as fh:
        rows = list(csv_mod.DictReader(fh))
    shape_ok = (code == 0
                and set(rows[0]) == {"input", "size", "algorithm", "tracker",
                                     "seconds", "peak_bytes", "verified"}
                and [r["algorithm"] for r in rows]
                == ["sa", "induce", "induce-marginal", "kasai"])
    seconds = {r["algorithm"]: float(r["seconds"]) for r in rows}
    marginal = seconds["induce-marginal"]
    kasai_total = seconds["kasai"]
    trend = "below" if marginal < kasai_total else "NOT below"
    info(f"on a 20MB natural-language-like input the marginal induced-LCP "
         f"cost ({marginal:.2f}s) is {trend} the standalone rank-array "
         f"cost ({kasai_total:.2f}s); hardware-dependent, not asserted")
    report("benchmark table shape", shape_ok,
           f"{len(rows)} records for one input")
