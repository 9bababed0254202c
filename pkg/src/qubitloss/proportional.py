"""Proportionality of complex coefficient vectors.

A family of vectors is proportional when some nonzero member scales onto
every other one.  Decided through 2x2 cross minors instead of division,
so zero entries need no special casing and the test is symmetric.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

DEFAULT_TOL = 1e-9


def max_cross_minor(u, v) -> float:
    """Largest |u_i v_j - u_j v_i| over all index pairs.

    Zero exactly when one vector is a scalar multiple of the other
    (including the zero multiple).
    """
    u = np.asarray(u, dtype=complex).reshape(-1)
    v = np.asarray(v, dtype=complex).reshape(-1)
    if u.size != v.size:
        raise ValueError(f"vector lengths differ: {u.size} vs {v.size}")
    if u.size == 0:
        raise ValueError("vectors must have at least one entry")
    outer = np.outer(u, v)
    return float(np.abs(outer - outer.T).max())


def pair_proportional(u, v, tol: float = DEFAULT_TOL) -> bool:
    """True when u and v are proportional within a relative tolerance.

    The threshold scales with max|u| * max|v|, so the answer is invariant
    under rescaling either vector.  A numerically zero vector counts as
    proportional to anything (scaling factor zero).
    """
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    u = np.asarray(u, dtype=complex).reshape(-1)
    v = np.asarray(v, dtype=complex).reshape(-1)
    scale = float(np.abs(u).max(initial=0.0)) * float(np.abs(v).max(initial=0.0))
    return max_cross_minor(u, v) <= tol * scale


def family_proportional(vectors: Sequence, tol: float = DEFAULT_TOL) -> bool:
    """True when every vector is proportional to a common nonzero pivot.

    The pivot is the member with the largest entry in modulus.  An
    all-zero family is proportional by convention.
    """
    vs = [np.asarray(v, dtype=complex).reshape(-1) for v in vectors]
    if len(vs) < 2:
        raise ValueError("a family needs at least two vectors")
    d = vs[0].size
    if any(v.size != d for v in vs):
        raise ValueError("family vectors must all have the same length")
    maxes = [float(np.abs(v).max(initial=0.0)) for v in vs]
    pivot = int(np.argmax(maxes))
    if maxes[pivot] == 0.0:
        return True
    return all(
        pair_proportional(vs[pivot], v, tol) for i, v in enumerate(vs) if i != pivot
    )
