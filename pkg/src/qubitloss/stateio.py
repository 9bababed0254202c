"""Reading and writing state files.

Two interchangeable formats:

* text -- a header line ``qubits: n`` followed by up to 2^n lines
  ``index re im`` (decimal, whitespace separated); omitted indices are
  zero amplitudes.
* JSON -- ``{"qubits": n, "amplitudes": [[re, im], ...]}`` with exactly
  2^n entries.

Writers emit 17 significant digits so round trips are lossless.
"""

from __future__ import annotations

import json
import os

import numpy as np

from .states import StateVector


def loads_state(text: str) -> StateVector:
    """Parse a state document, sniffing JSON vs text by the first character."""
    stripped = text.lstrip()
    if not stripped:
        raise ValueError("empty state document")
    if stripped[0] == "{":
        return _loads_json(stripped)
    return _loads_text(text)


def load_state(path: str | os.PathLike) -> StateVector:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_state(fh.read())


def dumps_state(state: StateVector, fmt: str = "text") -> str:
    if fmt == "text":
        lines = [f"qubits: {state.num_qubits}"]
        for i, a in enumerate(state.amplitudes):
            if a != 0:
                lines.append(f"{i} {a.real:.17g} {a.imag:.17g}")
        return "\n".join(lines) + "\n"
    if fmt == "json":
        doc = {
            "qubits": state.num_qubits,
            "amplitudes": [[a.real, a.imag] for a in state.amplitudes],
        }
        return json.dumps(doc) + "\n"
    raise ValueError(f"unknown state format {fmt!r}")


def dump_state(state: StateVector, path: str | os.PathLike, fmt: str = "text") -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_state(state, fmt))


def _loads_text(text: str) -> StateVector:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty state document")
    header = lines[0].split(":")
    if len(header) != 2 or header[0].strip() != "qubits":
        raise ValueError(f"expected 'qubits: n' header, got {lines[0]!r}")
    try:
        n = int(header[1])
    except ValueError:
        raise ValueError(f"bad qubit count {header[1].strip()!r}") from None
    if n < 1:
        raise ValueError(f"qubit count must be >= 1, got {n}")
    amps = np.zeros(1 << n, dtype=complex)
    seen = set()
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise ValueError(f"expected 'index re im', got {ln!r}")
        try:
            idx = int(parts[0])
            re_part = float(parts[1])
            im_part = float(parts[2])
        except ValueError:
            raise ValueError(f"unparsable amplitude line {ln!r}") from None
        if not 0 <= idx < (1 << n):
            raise ValueError(f"index {idx} out of range for {n} qubits")
        if idx in seen:
            raise ValueError(f"duplicate index {idx}")
        seen.add(idx)
        amps[idx] = complex(re_part, im_part)
    return StateVector(n, amps)


def _loads_json(text: str) -> StateVector:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"bad JSON state document: {exc}") from None
    if not isinstance(doc, dict) or "qubits" not in doc or "amplitudes" not in doc:
        raise ValueError("JSON state document needs 'qubits' and 'amplitudes'")
    n = doc["qubits"]
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"bad qubit count {n!r}")
    pairs = doc["amplitudes"]
    if not isinstance(pairs, list) or len(pairs) != (1 << n):
        raise ValueError(
            f"expected exactly {1 << n} amplitude pairs, got "
            f"{len(pairs) if isinstance(pairs, list) else type(pairs).__name__}"
        )
    amps = np.empty(1 << n, dtype=complex)
    for i, pair in enumerate(pairs):
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise ValueError(f"amplitude {i} is not a [re, im] pair")
        amps[i] = complex(float(pair[0]), float(pair[1]))
    return StateVector(n, amps)
