"""Shared test utilities: random partitions, product states and an
independent bit-string reimplementation of the qubit-loss projection."""

from __future__ import annotations

import numpy as np

from qubitloss import StateVector, random_product_state, random_state


def random_bipartition_blocks(rng: np.random.Generator, n: int):
    """A uniformly random proper bipartition of labels 1..n."""
    mask = int(rng.integers(1, (1 << n) - 1))
    block_a = tuple(q for q in range(1, n + 1) if mask >> (q - 1) & 1)
    block_b = tuple(q for q in range(1, n + 1) if q not in block_a)
    return block_a, block_b


def random_partition_blocks(
    rng: np.random.Generator, n: int, max_block: int | None = None
):
    """A random partition of labels 1..n into >= 2 blocks.

    ``max_block`` caps block sizes (used to avoid single-qubit x (n-1)
    factorizations).
    """
    while True:
        num_blocks = int(rng.integers(2, n + 1))
        assignment = rng.integers(0, num_blocks, size=n)
        blocks = [
            tuple(q for q in range(1, n + 1) if assignment[q - 1] == b)
            for b in range(num_blocks)
        ]
        blocks = [b for b in blocks if b]
        if len(blocks) < 2:
            continue
        if max_block is not None and any(len(b) > max_block for b in blocks):
            continue
        return blocks


def random_product(rng: np.random.Generator, blocks) -> StateVector:
    return random_product_state(rng, blocks)


def random_dense(rng: np.random.Generator, n: int) -> StateVector:
    return random_state(rng, n)


def project_by_bits(state: StateVector, k: int) -> np.ndarray:
    """Qubit-loss projection recomputed from bit strings.

    For every output index, splice a 0 and then a 1 into position k of
    its bit string and add the two source amplitudes.  Deliberately
    avoids the reshape-and-sum layout used by the library.
    """
    n = state.num_qubits
    amps = state.amplitudes
    out = np.zeros(1 << (n - 1), dtype=complex)
    for idx in range(1 << (n - 1)):
        bits = format(idx, f"0{n - 1}b")
        with0 = int(bits[: k - 1] + "0" + bits[k - 1 :], 2)
        with1 = int(bits[: k - 1] + "1" + bits[k - 1 :], 2)
        out[idx] = amps[with0] + amps[with1]
    return out
