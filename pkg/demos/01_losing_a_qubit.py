"""Losing a qubit vs tracing it out.

The qubit-loss projection keeps a pure state pure: it adds the two
amplitude branches of the lost qubit.  The partial trace of the same
qubit generally leaves a mixed state.  Bell pairs show the contrast
immediately.
"""

import numpy as np

from qubitloss import ghz, lose_qubit, partial_trace, w_state

bell = ghz(2)
print("Bell pair amplitudes:", np.round(bell.amplitudes, 3))

projected = lose_qubit(bell, 2).state
print("after losing qubit 2:", np.round(projected.amplitudes, 3))
print("  -> still a pure single-qubit state, (|0> + |1>)/sqrt(2)")

rho = partial_trace(bell, keep=(1,))
print("after tracing qubit 2 out:\n", np.round(rho, 3))
print("  -> the maximally mixed state, all entanglement gone")

print()
print("GHZ(4) keeps its shape under qubit loss:")
g4 = ghz(4)
for k in range(1, 5):
    res = lose_qubit(g4, k)
    print(f"  lose {k}:", np.round(res.state.amplitudes, 3))

print()
print("W(4) does not (a |000> term appears):")
w4 = w_state(4)
for k in range(1, 5):
    res = lose_qubit(w4, k)
    print(f"  lose {k}:", np.round(res.state.amplitudes, 3))
