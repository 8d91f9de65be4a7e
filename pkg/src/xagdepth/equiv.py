"""Simulation-based equivalence checking."""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from .xag import XAG, projection_words, simulate_words


@dataclass(frozen=True)
class EquivResult:
    equal: bool
    exhaustive: bool
    patterns: int
    counterexample: Optional[List[int]] = None
    output: Optional[int] = None


def default_seed() -> int:
    return int(os.environ.get("XAGDEPTH_SEED", "0"))


def random_words(num_inputs: int, count: int, seed: int) -> List[int]:
    """One ``count``-bit word per input, from a seeded generator."""
    rng = np.random.default_rng(seed)
    bits = rng.integers(0, 2, size=(num_inputs, count), dtype=np.uint8)
    return [int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little") for row in bits]


def check_equivalence(a: XAG, b: XAG, exhaustive_max: int = 12, vectors: int = 10000,
                      seed: Optional[int] = None) -> EquivResult:
    if a.num_inputs != b.num_inputs or len(a.outputs) != len(b.outputs):
        raise ValueError(
            f"arity mismatch: {a.num_inputs}/{len(a.outputs)} vs {b.num_inputs}/{len(b.outputs)} inputs/outputs")
    n = a.num_inputs
    exhaustive = n <= exhaustive_max
    if exhaustive:
        width = 1 << n
        words = projection_words(n)
    else:
        width = vectors
        words = random_words(n, vectors, default_seed() if seed is None else seed)
    for k, (wa, wb) in enumerate(zip(simulate_words(a, words, width), simulate_words(b, words, width))):
        diff = wa ^ wb
        if diff:
            pos = (diff & -diff).bit_length() - 1
            cex = [(w >> pos) & 1 for w in words]
            return EquivResult(False, exhaustive, width, cex, k)
    return EquivResult(True, exhaustive, width)
