import dataclasses
import random

import pytest

from xagdepth.networks import and_chain, decoder, maj5_xag, random_xag, xor_chain
from xagdepth.quantum import (ALAP, ASAP, NotNormalizedError, SimulationFault, census, estimate_only,
                              map_to_circuit, simulate_circuit)
from xagdepth.xag import XAG, compute_levels, lit_not, mult_complexity, mult_depth, propagate_inverters, simulate

from conftest import majority


def assignments(n):
    for m in range(1 << n):
        yield [(m >> j) & 1 for j in range(n)]


def check_circuit(net, schedule):
    circuit, est = map_to_circuit(net, schedule)
    for bits in assignments(net.num_inputs):
        run = simulate_circuit(circuit, bits)
        assert run.outputs == simulate(net, bits)
        assert run.clean
    return circuit, est


def test_maj5_resources():
    circuit, est = check_circuit(maj5_xag(), ASAP)
    assert (est.t_count, est.t_depth, est.qubits) == (12, 2, 11)
    assert estimate_only(maj5_xag(), ASAP) == est
    c = census(circuit, ASAP)
    assert (c.t_count, c.t_depth, c.qubits) == (12, 2, 11)


def test_maj5_sample_runs():
    circuit, _ = map_to_circuit(maj5_xag())
    for bits in ([1, 1, 0, 1, 0], [0, 0, 0, 0, 0]):
        run = simulate_circuit(circuit, bits)
        assert run.outputs == [majority(bits)]
        assert run.clean


def test_xor_only_network_is_free():
    _, est = check_circuit(xor_chain(5), ASAP)
    assert (est.t_count, est.t_depth) == (0, 0)


def test_single_and():
    _, est = check_circuit(and_chain(2), ASAP)
    assert (est.t_count, est.t_depth, est.qubits) == (4, 1, 4)


def test_removing_uncompute_leaves_garbage():
    circuit, _ = map_to_circuit(and_chain(4))
    idx = max(i for i, g in enumerate(circuit.gates) if g.kind == "unand")
    broken = dataclasses.replace(circuit, gates=circuit.gates[:idx] + circuit.gates[idx + 1:])
    dirty = [not simulate_circuit(broken, bits).clean for bits in assignments(4)]
    assert any(dirty)


def test_and_onto_dirty_target_faults():
    circuit, _ = map_to_circuit(and_chain(2))
    idx = next(i for i, g in enumerate(circuit.gates) if g.kind == "and")
    doubled = dataclasses.replace(circuit, gates=circuit.gates[:idx + 1] + circuit.gates[idx:])
    with pytest.raises(SimulationFault) as exc:
        simulate_circuit(doubled, [1, 1])
    assert exc.value.index == idx + 1


def test_unnormalized_network_is_rejected():
    net = XAG(3)
    x1, x2, x3 = net.inputs()
    net.add_output(net.add_and(lit_not(net.add_and(x1, x2)), x3))
    with pytest.raises(NotNormalizedError):
        map_to_circuit(net)
    with pytest.raises(NotNormalizedError):
        estimate_only(net)
    _, est = check_circuit(propagate_inverters(net), ASAP)
    assert est.t_count == 8


def test_unknown_schedule():
    with pytest.raises(ValueError):
        map_to_circuit(maj5_xag(), "random")


def test_wrong_input_length():
    circuit, _ = map_to_circuit(maj5_xag())
    with pytest.raises(ValueError):
        simulate_circuit(circuit, [1, 0])


def test_alap_layers_not_before_asap():
    rng = random.Random(17)
    for _ in range(60):
        net = propagate_inverters(random_xag(rng.randint(2, 8), rng.randint(1, 30), 2, rng))
        info = compute_levels(net)
        live = net.live_nodes()
        for schedule, key in ((ASAP, info.level), (ALAP, info.rlevel)):
            circuit, est = map_to_circuit(net, schedule)
            layers = sorted({g.layer for g in circuit.gates if g.kind == "and"})
            assert layers == sorted({key[n] for n, op, _, _ in net.gates() if op == "AND" and live[n]})
            assert len(layers) == est.t_depth


def test_random_networks_both_schedules():
    rng = random.Random(23)
    for _ in range(120):
        net = propagate_inverters(random_xag(rng.randint(1, 8), rng.randint(1, 35), rng.randint(1, 3), rng))
        for schedule in (ASAP, ALAP):
            circuit, est = check_circuit(net, schedule)
            assert est.t_count == 4 * mult_complexity(net)
            assert est.t_depth == mult_depth(net)
            assert estimate_only(net, schedule) == est
            c = census(circuit, schedule)
            assert (c.t_count, c.t_depth, c.qubits) == (est.t_count, est.t_depth, est.qubits)


def test_estimate_matches_census_on_eight_input_network():
    net = propagate_inverters(random_xag(8, 60, 3, random.Random(99)))
    circuit, est = map_to_circuit(net)
    c = census(circuit)
    assert (c.t_count, c.t_depth, c.qubits) == (est.t_count, est.t_depth, est.qubits)


def test_decoder_copies_reported():
    _, est = check_circuit(propagate_inverters(decoder(3)), ASAP)
    assert est.t_depth == 2
    assert est.copies >= 0
    assert est.qubits >= 3 + 8
