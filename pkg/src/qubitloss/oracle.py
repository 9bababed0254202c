"""Brute-force ground truth for verification.

A pure state is genuinely entangled iff none of its 2^(n-1) - 1
bipartition unfoldings has numerical rank <= 1.  This scans them all with
SVDs, independent of the proportionality route, so the two can check each
other.  Cost is exponential; the scan is gated to 12 qubits.

Also provides the partial trace and the exact positive-partial-transpose
separability test for two-qubit reductions, for contrasting the
qubit-loss projection (a pure state) with tracing a qubit out (generally
a mixed state).
"""

from __future__ import annotations

from typing import Iterable, Optional

import numpy as np

from .states import Bipartition, StateVector, all_bipartitions

MAX_SCAN_QUBITS = 12


def unfold(state: StateVector, partition) -> np.ndarray:
    """Matricize a state across a bipartition.

    Entry (r, c) is the amplitude of the basis state whose block-A bits
    spell r and block-B bits spell c, each block read in ascending qubit
    order.  ``partition`` is a Bipartition or an iterable giving block A.
    Rank 1 here is exactly "product across this cut".
    """
    n = state.num_qubits
    if isinstance(partition, Bipartition):
        part = partition
    else:
        part = Bipartition.from_block(n, partition)
    if part.qubits != tuple(range(1, n + 1)):
        raise ValueError(f"partition {part} does not cover qubits 1..{n}")
    axes = [q - 1 for q in part.block_a] + [q - 1 for q in part.block_b]
    cube = state.amplitudes.reshape((2,) * n)
    return cube.transpose(axes).reshape(1 << len(part.block_a), -1)


def numerical_rank(matrix: np.ndarray, tol: float = 1e-9) -> int:
    """Number of singular values above tol times the largest one."""
    sigma = np.linalg.svd(np.asarray(matrix, dtype=complex), compute_uv=False)
    if sigma.size == 0 or sigma[0] == 0.0:
        return 0
    return int(np.count_nonzero(sigma > tol * sigma[0]))


def find_product_cut(state: StateVector, tol: float = 1e-9) -> Optional[Bipartition]:
    """First bipartition (if any) across which the state is a product."""
    n = state.num_qubits
    if n < 2:
        raise ValueError("need at least two qubits")
    if n > MAX_SCAN_QUBITS:
        raise ValueError(
            f"bipartition scan is gated to {MAX_SCAN_QUBITS} qubits, got {n}"
        )
    if state.is_zero():
        raise ValueError("cannot classify the zero state")
    for part in all_bipartitions(n):
        if numerical_rank(unfold(state, part), tol) <= 1:
            return part
    return None


def oracle_genuine(state: StateVector, tol: float = 1e-9) -> bool:
    """True iff every bipartition unfolding has rank >= 2."""
    return find_product_cut(state, tol) is None


def partial_trace(state: StateVector, keep: Iterable[int]) -> np.ndarray:
    """Reduced density matrix on the kept qubits (state normalized first).

    With M the unfolding of the normalized state across keep|rest, the
    reduction is M M^dagger: Hermitian, positive semidefinite, trace 1.
    """
    n = state.num_qubits
    keep = tuple(sorted(int(q) for q in keep))
    if not keep or len(keep) >= n:
        raise ValueError(f"kept qubits {keep} must be a nonempty proper subset")
    m = unfold(state.normalized(), keep)
    return m @ m.conj().T


def ppt_2qubit(rho: np.ndarray, tol: float = 1e-9) -> bool:
    """Exact separability of a two-qubit density matrix (True = separable).

    Transposes the second qubit's indices and checks the smallest
    eigenvalue against -tol.  The input is normalized to unit trace;
    non-Hermitian input (beyond 1e-10 relative) is rejected.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 density matrix, got {rho.shape}")
    scale = max(1.0, float(np.abs(rho).max()))
    if float(np.abs(rho - rho.conj().T).max()) > 1e-10 * scale:
        raise ValueError("density matrix is not Hermitian within tolerance")
    trace = complex(np.trace(rho))
    if trace.real <= 0.0:
        raise ValueError(f"density matrix trace must be positive, got {trace}")
    rho = rho / trace.real
    transposed = rho.reshape(2, 2, 2, 2).transpose(0, 3, 2, 1).reshape(4, 4)
    smallest = float(np.linalg.eigvalsh(transposed)[0])
    return smallest >= -tol
