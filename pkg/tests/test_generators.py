import pytest

from sailcp.generators import KINDS, generate


def test_kinds_listed():
    assert set(KINDS) == {"random", "periodic", "runs", "markov"}


@pytest.mark.parametrize("kind", KINDS)
def test_length_and_alphabet(kind):
    data = generate(kind, 1000, sigma=5, seed=3)
    assert len(data) == 1000
    assert max(data) < 5


@pytest.mark.parametrize("kind", KINDS)
def test_deterministic(kind):
    a = generate(kind, 500, sigma=3, seed=42)
    b = generate(kind, 500, sigma=3, seed=42)
    assert a == b


def test_seed_changes_output():
    assert generate("random", 200, 4, seed=1) != generate("random", 200, 4,
                                                          seed=2)


def test_periodic_block():
    assert generate("periodic", 6, sigma=2) == bytes([0, 1, 0, 1, 0, 1])
    assert generate("periodic", 7, sigma=3) == bytes([0, 1, 2, 0, 1, 2, 0])


def test_zero_length():
    for kind in KINDS:
        assert generate(kind, 0, sigma=2) == b""


def test_runs_have_runs():
    data = generate("runs", 5000, sigma=2, seed=0)
    changes = sum(1 for a, b in zip(data, data[1:]) if a != b)
    assert changes < 2500  # far fewer runs than symbols


def test_parameter_validation():
    with pytest.raises(ValueError):
        generate("random", -1, sigma=2)
    with pytest.raises(ValueError):
        generate("random", 10, sigma=0)
    with pytest.raises(ValueError):
        generate("random", 10, sigma=256)
    with pytest.raises(ValueError):
        generate("zipf", 10, sigma=2)
