"""Deterministic test-input generators for the CLI and the benchmarks."""

from __future__ import annotations

import random

KINDS = ("random", "periodic", "runs", "markov")


def generate(kind: str, length: int, sigma: int = 2,
             seed: int = 0) -> bytes:
    """Generate ``length`` bytes over symbols ``0..sigma-1``.

    * ``random``: uniform i.i.d. symbols.
    * ``periodic``: the block ``0 1 ... sigma-1`` repeated (the
      classic worst case for naive LCP rescaling).
    * ``runs``: geometric-length runs of random symbols.
    * ``markov``: an order-1 chain with skewed transition
      probabilities, giving LCP statistics closer to natural language
      than uniform noise.

    Deterministic for a fixed seed.
    """
    if length < 0:
        raise ValueError("length must be non-negative")
    if not 1 <= sigma <= 255:
        raise ValueError("sigma must be in [1, 255]")
    if kind == "periodic":
        block = bytes(range(sigma))
        reps = length // sigma + 1
        return (block * reps)[:length]

    rng = random.Random(seed)
    if kind == "random":
        return bytes(rng.randrange(sigma) for _ in range(length))
    if kind == "runs":
        out = bytearray()
        while len(out) < length:
            c = rng.randrange(sigma)
            run = 1
            while rng.random() < 0.7:
                run += 1
            out.extend([c] * run)
        return bytes(out[:length])
    if kind == "markov":
        return _markov(rng, length, sigma)
    raise ValueError(f"unknown generator kind: {kind!r}")


def _markov(rng: random.Random, length: int, sigma: int) -> bytes:
    # each state gets a small set of likely successors with Zipf-ish
    # weights, so the chain produces repeated multi-symbol patterns
    fanout = min(sigma, 4)
    successors = []
    for _ in range(sigma):
        choices = [rng.randrange(sigma) for _ in range(fanout)]
        weights = [1.0 / (r + 1) for r in range(fanout)]
        total = sum(weights)
        cumulative = []
        acc = 0.0
        for w in weights:
            acc += w / total
            cumulative.append(acc)
        successors.append((choices, cumulative))

    out = bytearray(length)
    state = rng.randrange(sigma)
    for i in range(length):
        out[i] = state
        if rng.random() < 0.05:
            state = rng.randrange(sigma)  # occasional restart
            continue
        choices, cumulative = successors[state]
        u = rng.random()
        for c, bound in zip(choices, cumulative):
            if u <= bound:
                state = c
                break
    return bytes(out)
