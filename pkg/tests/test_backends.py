"""The compiled extension must be indistinguishable from the pure code."""

import numpy as np
import pytest

import sailcp
from sailcp import InduceOptions, build_sa_and_lcp, build_suffix_array
from sailcp.generators import generate

from conftest import all_texts, random_text

needs_compiled = pytest.mark.skipif(not sailcp.HAVE_COMPILED,
                                    reason="compiled backend not built")


def test_python_backend_always_available():
    sa, lcp = build_sa_and_lcp(b"banana", backend="python")
    assert sa.tolist() == [5, 3, 1, 0, 4, 2]
    assert lcp.tolist() == [0, 1, 3, 0, 0, 2]


def test_unknown_backend_rejected():
    with pytest.raises(ValueError):
        build_suffix_array(b"abc", backend="gpu")


@needs_compiled
def test_compiled_banana():
    sa, lcp = build_sa_and_lcp(b"banana", backend="compiled")
    assert sa.tolist() == [5, 3, 1, 0, 4, 2]
    assert lcp.tolist() == [0, 1, 3, 0, 0, 2]


@needs_compiled
def test_backends_agree_exhaustive_small():
    for data in all_texts(3, 7):
        c_sa, c_lcp = build_sa_and_lcp(data, backend="compiled")
        p_sa, p_lcp = build_sa_and_lcp(data, backend="python")
        assert c_sa.tolist() == p_sa.tolist(), data
        assert c_lcp.tolist() == p_lcp.tolist(), data


@needs_compiled
@pytest.mark.parametrize("tracker", sailcp.TRACKER_KINDS)
def test_backends_agree_random(rng, tracker):
    opts = InduceOptions(tracker_kind=tracker)
    for _ in range(8):
        data = random_text(rng, rng.randrange(1, 4000),
                           rng.choice([1, 2, 4, 26, 255]))
        c = build_sa_and_lcp(data, opts, backend="compiled")
        p = build_sa_and_lcp(data, opts, backend="python")
        assert c[0].tolist() == p[0].tolist()
        assert c[1].tolist() == p[1].tolist()
        assert build_suffix_array(data, backend="compiled").tolist() == \
            build_suffix_array(data, backend="python").tolist()


@needs_compiled
def test_backends_agree_on_generators():
    for kind in ("random", "periodic", "runs", "markov"):
        data = generate(kind, 50000, sigma=4, seed=9)
        c = build_sa_and_lcp(data, backend="compiled")
        p = build_sa_and_lcp(data, backend="python")
        assert np.array_equal(c[0], p[0]) and np.array_equal(c[1], p[1])


@needs_compiled
def test_compiled_lcp_helpers_agree(rng):
    for _ in range(6):
        data = random_text(rng, rng.randrange(1, 3000), rng.choice([2, 26]))
        sa = build_suffix_array(data)
        k_c = sailcp.kasai_lcp(data, sa, backend="compiled")
        k_p = sailcp.kasai_lcp(data, sa, backend="python")
        p_c = sailcp.phi_lcp(data, sa, backend="compiled")
        p_p = sailcp.phi_lcp(data, sa, backend="python")
        assert np.array_equal(k_c, k_p)
        assert np.array_equal(p_c, p_p)
        assert np.array_equal(k_c, p_c)


def test_auto_backend_matches_python(rng):
    data = random_text(rng, 2000, 26)
    a = build_sa_and_lcp(data, backend="auto")
    p = build_sa_and_lcp(data, backend="python")
    assert np.array_equal(a[0], p[0]) and np.array_equal(a[1], p[1])


def test_recursive_method_runs_in_pure_python():
    # the compiled kernels only cover the default S*-LCP method
    opts = InduceOptions(sstar_lcp_method="recursive")
    sa, lcp = build_sa_and_lcp(b"banana", opts, backend="auto")
    assert sa.tolist() == [5, 3, 1, 0, 4, 2]
    if sailcp.HAVE_COMPILED:
        with pytest.raises(ValueError):
            build_sa_and_lcp(b"banana", opts, backend="compiled")


def test_index_dtype_is_compact():
    sa, lcp = build_sa_and_lcp(b"banana")
    assert sa.dtype in (np.int32, np.dtype(np.int32))
    assert lcp.dtype == sa.dtype


def test_stats_requested_uses_instrumented_path():
    # asking for counters must route auto to the instrumented pure code
    data = b"banana" * 20
    stats = {}
    sa, lcp = build_sa_and_lcp(data, backend="auto", stats=stats)
    assert stats["seam_symbols"] > 0
    assert sa.tolist() == build_sa_and_lcp(data, backend="python")[0].tolist()
