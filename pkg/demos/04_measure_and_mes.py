"""Counting genuinely entangled projections as an entanglement measure.

A state's measure is how many of its n single-qubit-loss projections are
certified genuinely entangled; states with all n certified are maximally
entangled in this sense.  GHZ and W qualify at every size; Osterloh's
PHI4 only has two robust directions.
"""

from qubitloss import cluster4, dicke, entanglement_measure, ghz, phi4, w_state

cases = [
    ("GHZ(4)", ghz(4)),
    ("W(4)", w_state(4)),
    ("DICKE(2) on 4 qubits", dicke(4, 2)),
    ("cluster state", cluster4()),
    ("PHI4", phi4()),
    ("GHZ(6)", ghz(6)),
]

for name, state in cases:
    report = entanglement_measure(state)
    row = ", ".join(
        f"lose {k}: {v.kind.value}" for k, v in enumerate(report.per_qubit, start=1)
    )
    exact = "" if report.count_is_exact else " (lower bound)"
    mes = " [maximally entangled]" if report.is_mes else ""
    print(f"{name}: measure {report.genuine_count}{exact}{mes}")
    print(f"  {row}")
