"""Named reference states.

Conventional families (GHZ, W, Dicke, the four-qubit cluster state and
Osterloh's PHI4) are returned normalized.  EXAMPLE3_4Q and WCLASS_3Q are
fixed literal amplitude patterns and stay unnormalized; every consumer in
this package is scale invariant, so the distinction is cosmetic.
"""

from __future__ import annotations

import math
import re
from itertools import combinations

import numpy as np

from .states import StateVector

CATALOG_KEYS = (
    "GHZ",
    "W",
    "DICKE(k)",
    "PHI4",
    "EXAMPLE3_4Q",
    "WCLASS_3Q",
    "CLUSTER4",
)


def ghz(num_qubits: int) -> StateVector:
    """(|0...0> + |1...1>)/sqrt(2)."""
    if num_qubits < 2:
        raise ValueError("GHZ needs at least two qubits")
    amps = np.zeros(1 << num_qubits, dtype=complex)
    amps[0] = amps[-1] = 1.0 / math.sqrt(2.0)
    return StateVector(num_qubits, amps)


def w_state(num_qubits: int) -> StateVector:
    """Uniform superposition of the Hamming-weight-1 basis states."""
    if num_qubits < 2:
        raise ValueError("W needs at least two qubits")
    amps = np.zeros(1 << num_qubits, dtype=complex)
    for q in range(1, num_qubits + 1):
        amps[1 << (num_qubits - q)] = 1.0 / math.sqrt(num_qubits)
    return StateVector(num_qubits, amps)


def dicke(num_qubits: int, excitations: int) -> StateVector:
    """Uniform superposition of the Hamming-weight-k basis states, normalized."""
    n, k = num_qubits, excitations
    if n < 1 or not 0 <= k <= n:
        raise ValueError(f"invalid Dicke parameters n={n}, k={k}")
    amps = np.zeros(1 << n, dtype=complex)
    count = math.comb(n, k)
    for positions in combinations(range(n), k):
        idx = sum(1 << (n - 1 - p) for p in positions)
        amps[idx] = 1.0 / math.sqrt(count)
    return StateVector(n, amps)


def phi4() -> StateVector:
    """(|0001> + |0010> + |1100> + |1111>)/2."""
    amps = np.zeros(16, dtype=complex)
    amps[[1, 2, 12, 15]] = 0.5
    return StateVector(4, amps)


def example3_4q() -> StateVector:
    """|0000> + |0111> - |1111>, unnormalized."""
    amps = np.zeros(16, dtype=complex)
    amps[0] = amps[7] = 1.0
    amps[15] = -1.0
    return StateVector(4, amps)


def wclass_3q() -> StateVector:
    """|001> + |010> + |100> + |111>, unnormalized.

    Genuinely entangled, yet all three of its single-qubit-loss
    projections are product states; the canonical witness that two
    genuinely entangled projections are sufficient but not necessary.
    """
    amps = np.zeros(8, dtype=complex)
    amps[[1, 2, 4, 7]] = 1.0
    return StateVector(3, amps)


def cluster4() -> StateVector:
    """Linear cluster state (|0000> + |0011> + |1100> - |1111>)/2."""
    amps = np.zeros(16, dtype=complex)
    amps[[0, 3, 12]] = 0.5
    amps[15] = -0.5
    return StateVector(4, amps)


_FIXED_N = {"PHI4": 4, "EXAMPLE3_4Q": 4, "WCLASS_3Q": 3, "CLUSTER4": 4}
_FIXED_BUILDERS = {
    "PHI4": phi4,
    "EXAMPLE3_4Q": example3_4q,
    "WCLASS_3Q": wclass_3q,
    "CLUSTER4": cluster4,
}


def named_state(name: str, num_qubits: int | None = None) -> StateVector:
    """Look up a catalog state by key.

    Keys: GHZ, W, DICKE(k), PHI4, EXAMPLE3_4Q, WCLASS_3Q, CLUSTER4.
    GHZ/W/DICKE need ``num_qubits``; the fixed four-qubit (three-qubit)
    entries reject any inconsistent ``num_qubits``.
    """
    key = name.strip().upper()
    if key in _FIXED_N:
        forced = _FIXED_N[key]
        if num_qubits is not None and num_qubits != forced:
            raise ValueError(f"{key} is a {forced}-qubit state, got n={num_qubits}")
        return _FIXED_BUILDERS[key]()
    if key == "GHZ" or key == "W":
        if num_qubits is None:
            raise ValueError(f"{key} needs an explicit qubit count")
        return ghz(num_qubits) if key == "GHZ" else w_state(num_qubits)
    m = re.fullmatch(r"DICKE\((\d+)\)", key)
    if m:
        if num_qubits is None:
            raise ValueError("DICKE(k) needs an explicit qubit count")
        return dicke(num_qubits, int(m.group(1)))
    raise ValueError(
        f"unknown catalog state {name!r}; known: {', '.join(CATALOG_KEYS)}"
    )
