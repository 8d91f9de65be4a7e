"""
T gates for a classical network
===============================

Map XAGs to compute/uncompute AND circuits and count T gates and qubits.
"""

from xagdepth import map_to_circuit, propagate_inverters, simulate_circuit, write_qc
from xagdepth.networks import maj5_xag, decoder

net = maj5_xag()
circuit, est = map_to_circuit(net)
print(f"MAJ-5: T-count {est.t_count}, T-depth {est.t_depth}, qubits {est.qubits}")

# every input pattern gives the right answer and leaves the scratch qubits at zero
for m in range(32):
    bits = [(m >> j) & 1 for j in range(5)]
    run = simulate_circuit(circuit, bits)
    assert run.outputs == [int(sum(bits) >= 3)] and run.clean
print("all 32 inputs simulated, ancillae clean")

print(write_qc(circuit))

# schedules: same T-depth, possibly different width
dec = propagate_inverters(decoder(4))
for schedule in ("asap", "alap"):
    _, e = map_to_circuit(dec, schedule)
    print(f"decoder(4) {schedule}: T-count {e.t_count}, T-depth {e.t_depth}, qubits {e.qubits}, copies {e.copies}")
