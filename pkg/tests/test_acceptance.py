"""Acceptance suite.

Each test implements one acceptance criterion at its stated tolerance and
prints a single pass line on success (run with ``pytest -s`` to see them;
a failed assertion is the fail line).
"""

import math
import time

import numpy as np

from qubitloss import (
    StateVector,
    VerdictKind,
    all_projections,
    basis_state,
    detect,
    detect_2q,
    detect_base,
    detect_with_trace,
    entanglement_measure,
    equal_up_to_scale,
    example3_4q,
    ghz,
    lose_qubit,
    lose_qubit_set,
    numerical_rank,
    oracle_genuine,
    partial_trace,
    phi4,
    ppt_2qubit,
    product_state,
    random_state,
    sufficient_3q,
    unfold,
    w_state,
    wclass_3q,
)
from helpers import random_bipartition_blocks, random_product

TOL = 1e-9


def _ok(num: int, label: str) -> None:
    print(f"[acceptance] {num:02d} {label}: PASS")


def test_01_projection_survey_grid():
    states = [
        ("|000>", basis_state("000"), ("product", "product", "product")),
        (
            "|0>|EPR>",
            product_state([((1,), basis_state("0")), ((2, 3), ghz(2))]),
            ("entangled", "product", "product"),
        ),
        ("GHZ(3)", ghz(3), ("entangled", "entangled", "entangled")),
        ("W(3)", w_state(3), ("entangled", "entangled", "entangled")),
    ]
    start = time.perf_counter()
    for name, state, expected in states:
        row = detect_with_trace(state, tol=TOL).table
        assert row == expected, f"{name}: {row}"
    elapsed = time.perf_counter() - start
    assert elapsed < 0.1, f"grid took {elapsed:.3f} s"
    _ok(1, "three-qubit projection survey grid (12 cells)")


def test_02_reductions_vs_projections():
    for keep in ((1, 2), (1, 3), (2, 3)):
        assert ppt_2qubit(partial_trace(ghz(3), keep), tol=TOL)
        assert not ppt_2qubit(partial_trace(w_state(3), keep), tol=TOL)
    for res in all_projections(ghz(3)):
        assert detect_2q(res.state, tol=TOL).genuinely_entangled
        assert equal_up_to_scale(res.state, ghz(2), tol=TOL)
    for res in all_projections(w_state(3)):
        assert detect_2q(res.state, tol=TOL).genuinely_entangled
        assert not equal_up_to_scale(res.state, w_state(2), tol=TOL)
    _ok(2, "reductions separable/entangled vs projections (GHZ vs W)")


def test_03_w_projection_formula():
    for n in range(3, 11):
        expected = StateVector(
            n - 1,
            math.sqrt((n - 1) / n) * w_state(n - 1).amplitudes
            + (1 / math.sqrt(n)) * basis_state("0" * (n - 1)).amplitudes,
        )
        for res in all_projections(w_state(n)):
            assert equal_up_to_scale(res.state, expected, tol=1e-12)
        final = lose_qubit_set(w_state(n), range(1, n - 1))
        assert detect_2q(final, tol=TOL).genuinely_entangled
    _ok(3, "W-state single-loss formula (n=3..10) and entangled endpoint")


def test_04_two_term_chains_certify():
    rng = np.random.default_rng(40)
    for n in range(3, 11):
        for _ in range(100):
            while True:
                alpha = complex(rng.normal(), rng.normal())
                beta = complex(rng.normal(), rng.normal())
                if abs(alpha) > 1e-3 and abs(beta) > 1e-3:
                    break
            bits = rng.integers(0, 2, size=n)
            idx = int("".join(map(str, bits)), 2)
            comp = (1 << n) - 1 - idx
            amps = np.zeros(1 << n, dtype=complex)
            amps[idx], amps[comp] = alpha, beta
            state = StateVector(n, amps)
            for p in range(1, n):
                for q in range(p + 1, n + 1):
                    lose = [r for r in range(1, n + 1) if r not in (p, q)]
                    end = lose_qubit_set(state, lose)
                    z = (int(bits[p - 1]) << 1) | int(bits[q - 1])
                    assert end.amplitudes[z] == alpha
                    assert end.amplitudes[3 - z] == beta
                    assert np.count_nonzero(end.amplitudes) == 2
                    assert detect_2q(end, tol=TOL).genuinely_entangled
            assert detect(state, tol=TOL).kind is VerdictKind.GENUINE
    _ok(4, "two-term chains end entangled and certify (n=3..10, 100 each)")


def test_05_four_qubit_worked_trace():
    state = example3_4q()
    lose1 = lose_qubit(state, 1).state
    np.testing.assert_array_equal(lose1.amplitudes, basis_state("000").amplitudes)
    assert not detect_base(lose1, tol=TOL).genuinely_entangled
    inner = StateVector(3, [1, 0, 0, 1, 0, 0, 0, -1])
    for k in (2, 3, 4):
        np.testing.assert_array_equal(
            lose_qubit(state, k).state.amplitudes, inner.amplitudes
        )
    np.testing.assert_array_equal(
        lose_qubit(inner, 1).state.amplitudes, basis_state("00").amplitudes
    )
    two_q = StateVector(2, [1, 1, 0, -1])
    for k in (2, 3):
        np.testing.assert_array_equal(
            lose_qubit(inner, k).state.amplitudes, two_q.amplitudes
        )
    assert detect_2q(two_q, tol=TOL).genuinely_entangled
    assert detect(state, tol=TOL).kind is VerdictKind.GENUINE
    _ok(5, "four-qubit worked trace reproduced step by step")


def test_06_measures_and_mes():
    for n in range(3, 7):
        for family in (ghz, w_state):
            report = entanglement_measure(family(n), tol=TOL)
            assert report.genuine_count == n
            assert report.is_mes
    report = entanglement_measure(phi4(), tol=TOL)
    assert report.genuine_count == 2
    kinds = [v.kind for v in report.per_qubit]
    assert kinds == [
        VerdictKind.GENUINE,
        VerdictKind.GENUINE,
        VerdictKind.NOT_GENUINE,
        VerdictKind.NOT_GENUINE,
    ]
    _ok(6, "GHZ/W maximally entangled for n=3..6; four-term state measures 2")


def test_07_soundness_sweep():
    rng = np.random.default_rng(70)
    start = time.perf_counter()
    for n in range(3, 8):
        for _ in range(1000):
            blocks = random_bipartition_blocks(rng, n)
            state = random_product(rng, blocks)
            assert detect(state, tol=TOL).kind is not VerdictKind.GENUINE, (
                f"certified a product on {blocks}"
            )
            genuine_projections = 0
            for res in all_projections(state):
                if res.is_zero or res.state.num_qubits < 2:
                    continue
                if oracle_genuine(res.state, tol=TOL):
                    genuine_projections += 1
            assert genuine_projections <= 1, f"blocks {blocks}"
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0, f"sweep took {elapsed:.1f} s"
    _ok(7, f"5000-state product soundness sweep ({elapsed:.1f} s)")


def test_08_base_case_exactness():
    rng = np.random.default_rng(80)
    for n in (2, 3, 4):
        for trial in range(1000):
            if trial % 2 == 0:
                state = random_state(rng, n)
            else:
                state = random_product(rng, random_bipartition_blocks(rng, n))
            verdict = detect_base(state, tol=TOL)
            assert verdict.genuinely_entangled == oracle_genuine(state, tol=TOL)
            if verdict.witness is not None:
                m = unfold(state, verdict.witness.partition)
                assert numerical_rank(m, tol=TOL) == 1
    _ok(8, "exact small tests agree with the rank oracle (3000 states)")


def test_09_shortcut_consistency():
    rng = np.random.default_rng(90)
    for _ in range(1000):
        state = random_state(rng, 3)
        check = sufficient_3q(state, tol=TOL)
        direct = tuple(
            detect_2q(res.state, tol=TOL).genuinely_entangled
            for res in all_projections(state)
        )
        assert check.per_projection_entangled == direct
        if check.certified:
            assert detect_base(state, tol=TOL).genuinely_entangled
    _ok(9, "coefficient-sum shortcut consistent with projection route")


def test_10_incompleteness_exhibit():
    state = wclass_3q()
    report = detect_with_trace(state, tol=TOL)
    assert report.table == ("product", "product", "product")
    assert report.verdict.kind is VerdictKind.GENUINE
    assert oracle_genuine(state, tol=TOL)
    assert not sufficient_3q(state, tol=TOL).certified
    _ok(10, "genuine state with all-product projections stays detected")


def test_11_performance():
    rng = np.random.default_rng(110)
    dense10 = random_state(rng, 10)
    start = time.perf_counter()
    verdict = detect(dense10, tol=TOL)
    detect_time = time.perf_counter() - start
    assert verdict.kind is VerdictKind.GENUINE
    assert detect_time < 1.0, f"10-qubit detect took {detect_time:.2f} s"

    big = random_state(rng, 20)
    start = time.perf_counter()
    res = lose_qubit(big, 7)
    project_time = time.perf_counter() - start
    assert res.state.num_qubits == 19
    assert project_time < 0.5, f"20-qubit projection took {project_time:.3f} s"
    _ok(11, f"performance (detect 10q {detect_time * 1e3:.0f} ms, "
            f"project 20q {project_time * 1e3:.0f} ms)")
