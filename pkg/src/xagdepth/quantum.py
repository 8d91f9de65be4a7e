"""Lowering XAGs to compute/uncompute AND circuits with T-cost accounting.

Every live AND gets its own ancilla and is computed in the time step given
by its level (ASAP) or reverse level (ALAP).  Within a step, the parity
operands of all ANDs are placed on distinct qubits with CNOTs, the ANDs
fire, and the CNOTs are undone.  Operands that are linearly dependent on
the ones already placed are CNOT-copied onto scratch qubits for the step.
After the outputs are copied out, the ANDs are uncomputed in reverse order.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .xag import XAG, compute_levels, sweep_dead

T_PER_AND = 4

ASAP = "asap"
ALAP = "alap"


class NotNormalizedError(ValueError):
    pass


class SimulationFault(RuntimeError):
    def __init__(self, index: int, message: str):
        self.index = index
        super().__init__(f"gate {index}: {message}")


@dataclass(frozen=True)
class Gate:
    kind: str  # "x", "cnot", "and", "unand"
    qubits: Tuple[int, ...]
    layer: Optional[int] = None


@dataclass
class QuantumCircuit:
    qubit_count: int
    gates: List[Gate]
    sections: List[Tuple[int, int]] = field(default_factory=list)
    input_qubits: List[int] = field(default_factory=list)
    output_qubits: List[int] = field(default_factory=list)
    helper_qubits: int = 0


@dataclass(frozen=True)
class ResourceEstimate:
    t_count: int
    t_depth: int
    qubits: int
    schedule: str
    copies: int = 0


# -- GF(2) helpers --------------------------------------------------------

class _Basis:
    """Incremental GF(2) basis that remembers how each vector was formed."""

    def __init__(self):
        self.rows: List[Tuple[int, int, int]] = []  # (reduced vector, pivot bit, combination)

    def reduce(self, vec: int) -> Tuple[int, int]:
        combo = 0
        for row, pivot, c in self.rows:
            if vec & pivot:
                vec ^= row
                combo ^= c
        return vec, combo

    def add(self, vec: int, index: int) -> bool:
        red, combo = self.reduce(vec)
        if not red:
            return False
        pivot = red & -red
        combo ^= 1 << index
        # keep earlier rows free of the new pivot
        self.rows = [(r ^ red, p, c ^ combo) if r & pivot else (r, p, c) for r, p, c in self.rows]
        self.rows.append((red, pivot, combo))
        return True


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass
class _LayerPlan:
    layer: int
    ands: List[int]
    controls: List[Tuple[int, int]]  # parity pairs, one per AND
    placed: List[int]                # indices into the flat operand list
    copies: List[Tuple[int, int]]    # (operand index, combination over placed operands)


def _plan_layer(layer: int, ands: List[int], par: Dict[int, int], net: XAG) -> _LayerPlan:
    controls = []
    for g in ands:
        _, a, b = net.gate(g)
        controls.append((par[a >> 1], par[b >> 1]))
    flat = [p for pair in controls for p in pair]
    basis = _Basis()
    placed, copies, pending = [], [], []
    for idx, vec in enumerate(flat):
        if basis.add(vec, idx):
            placed.append(idx)
        else:
            pending.append(idx)
    for idx in pending:
        red, combo = basis.reduce(flat[idx])
        copies.append((idx, combo))
    return _LayerPlan(layer, ands, controls, placed, copies)


@dataclass
class _Plan:
    net: XAG
    schedule: str
    layers: List[_LayerPlan]
    par: Dict[int, int]
    qubit_of: Dict[int, int]
    claimed: Dict[int, int]  # output index -> AND node whose ancilla is the output
    num_fresh_outputs: int

    @property
    def helpers(self) -> int:
        return max((len(lp.ands) for lp in self.layers), default=0)

    @property
    def copies(self) -> int:
        return max((len(lp.copies) for lp in self.layers), default=0)

    @property
    def num_ands(self) -> int:
        return sum(len(lp.ands) for lp in self.layers)

    def estimate(self) -> ResourceEstimate:
        n = self.net.num_inputs
        outs = len(self.net.outputs)
        ancillae = self.num_ands - len(self.claimed)
        return ResourceEstimate(
            t_count=T_PER_AND * self.num_ands,
            t_depth=len(self.layers),
            qubits=n + outs + ancillae + self.helpers + self.copies,
            schedule=self.schedule,
            copies=self.copies,
        )


def _analyze(net: XAG, schedule: str) -> _Plan:
    if schedule not in (ASAP, ALAP):
        raise ValueError(f"unknown schedule {schedule!r}")
    if not net.is_normalized():
        raise NotNormalizedError("network has complemented AND fanins; run propagate_inverters first")
    net = sweep_dead(net)
    info = compute_levels(net)
    step = info.level if schedule == ASAP else info.rlevel
    by_layer: Dict[int, List[int]] = {}
    for node, op, _, _ in net.gates():
        if op == "AND":
            by_layer.setdefault(step[node], []).append(node)

    n = net.num_inputs
    qubit_of = {i: i - 1 for i in range(1, n + 1)}
    nxt = n
    for lay in sorted(by_layer):
        for g in by_layer[lay]:
            qubit_of[g] = nxt
            nxt += 1

    par = {0: 0}
    for i in range(1, n + 1):
        par[i] = 1 << qubit_of[i]
    for node, op, a, b in net.gates():
        par[node] = (1 << qubit_of[node]) if op == "AND" else par[a >> 1] ^ par[b >> 1]

    layers = [_plan_layer(lay, by_layer[lay], par, net) for lay in sorted(by_layer)]

    claimed: Dict[int, int] = {}
    used = set()
    for k, o in enumerate(net.outputs):
        node = o >> 1
        if net.is_and(node) and node not in used:
            claimed[k] = node
            used.add(node)
    return _Plan(net, schedule, layers, par, qubit_of, claimed, len(net.outputs) - len(claimed))


# -- circuit construction -------------------------------------------------

def _placement_cnots(vectors: List[int]) -> Tuple[List[Tuple[int, int]], List[int]]:
    """CNOTs moving independent parity vectors onto distinct pivot qubits.

    Starts from the state in which every qubit holds its own variable.
    Returns the ``(control, target)`` list and the qubit holding each vector.
    """
    pivots = []
    reduced = []
    for v in vectors:
        for r, p in zip(reduced, pivots):
            if v >> p & 1:
                v ^= r
        p = (v & -v).bit_length() - 1
        pivots.append(p)
        reduced.append(v)
    r = len(vectors)
    # square matrix of the vectors restricted to the pivot columns
    rows = [sum(1 << j for j, p in enumerate(pivots) if vec >> p & 1) for vec in vectors]
    ops = []
    for col in range(r):
        if not rows[col] >> col & 1:
            src = next(k for k in range(col + 1, r) if rows[k] >> col & 1)
            rows[col] ^= rows[src]
            ops.append((col, src))
        for k in range(r):
            if k != col and rows[k] >> col & 1:
                rows[k] ^= rows[col]
                ops.append((k, col))
    cnots = [(pivots[src], pivots[dst]) for dst, src in reversed(ops)]
    pivot_mask = sum(1 << p for p in pivots)
    for j, vec in enumerate(vectors):
        for q in _bits(vec & ~pivot_mask):
            cnots.append((q, pivots[j]))
    return cnots, pivots


def _emit_layer(gates: List[Gate], lp: _LayerPlan, plan: _Plan, copy_qubits: List[int],
                kind: str, skip: set) -> None:
    flat = [p for pair in lp.controls for p in pair]
    vecs = [flat[i] for i in lp.placed]
    cnots, pivots = _placement_cnots(vecs)
    holder = {idx: q for idx, q in zip(lp.placed, pivots)}
    copy_cnots = []
    for (idx, combo), cq in zip(lp.copies, copy_qubits):
        for j in _bits(combo):
            copy_cnots.append((holder[j], cq))
        holder[idx] = cq
    setup = [Gate("cnot", c) for c in cnots + copy_cnots]
    gates.extend(setup)
    body = []
    for k, g in enumerate(lp.ands):
        if g in skip:
            continue
        body.append(Gate(kind, (holder[2 * k], holder[2 * k + 1], plan.qubit_of[g]), lp.layer))
    if kind == "unand":
        body.reverse()
    gates.extend(body)
    gates.extend(reversed(setup))


def _build(plan: _Plan) -> QuantumCircuit:
    net = plan.net
    n = net.num_inputs
    nq = n + plan.num_ands
    out_qubits: List[int] = []
    for k in range(len(net.outputs)):
        if k in plan.claimed:
            out_qubits.append(plan.qubit_of[plan.claimed[k]])
        else:
            out_qubits.append(nq)
            nq += 1
    copy_qubits = list(range(nq, nq + plan.copies))
    nq += plan.copies

    gates: List[Gate] = []
    sections: List[Tuple[int, int]] = []
    for lp in plan.layers:
        sections.append((len(gates), lp.layer))
        _emit_layer(gates, lp, plan, copy_qubits, "and", set())

    for k, o in enumerate(net.outputs):
        if k in plan.claimed:
            continue
        for q in _bits(plan.par[o >> 1]):
            gates.append(Gate("cnot", (q, out_qubits[k])))
        if o & 1:
            gates.append(Gate("x", (out_qubits[k],)))

    keep = set(plan.claimed.values())
    for lp in reversed(plan.layers):
        if all(g in keep for g in lp.ands):
            continue
        sections.append((len(gates), lp.layer))
        _emit_layer(gates, lp, plan, copy_qubits, "unand", keep)

    for k, node in sorted(plan.claimed.items()):
        if net.outputs[k] & 1:
            gates.append(Gate("x", (plan.qubit_of[node],)))

    return QuantumCircuit(
        qubit_count=nq,
        gates=gates,
        sections=sections,
        input_qubits=list(range(n)),
        output_qubits=out_qubits,
        helper_qubits=plan.helpers,
    )


def map_to_circuit(net: XAG, schedule: str = ASAP) -> Tuple[QuantumCircuit, ResourceEstimate]:
    plan = _analyze(net, schedule)
    return _build(plan), plan.estimate()


def estimate_only(net: XAG, schedule: str = ASAP) -> ResourceEstimate:
    return _analyze(net, schedule).estimate()


def census(circuit: QuantumCircuit, schedule: str = ASAP) -> ResourceEstimate:
    """Resource figures counted directly from a gate list."""
    per_layer: Dict[int, int] = {}
    for g in circuit.gates:
        if g.kind == "and":
            per_layer[g.layer] = per_layer.get(g.layer, 0) + 1
    helpers = max(per_layer.values(), default=0)
    return ResourceEstimate(
        t_count=T_PER_AND * sum(per_layer.values()),
        t_depth=len(per_layer),
        qubits=circuit.qubit_count + helpers,
        schedule=schedule,
    )


# -- simulation -----------------------------------------------------------

@dataclass(frozen=True)
class CircuitRun:
    outputs: List[int]
    clean: bool


def simulate_circuit(circuit: QuantumCircuit, bits: Sequence[int]) -> CircuitRun:
    """Classical simulation of the reversible gate list on a basis state.

    ``clean`` is true when every non-output qubit is back at its initial value.
    """
    if len(bits) != len(circuit.input_qubits):
        raise ValueError(f"expected {len(circuit.input_qubits)} input bits, got {len(bits)}")
    state = [0] * circuit.qubit_count
    for q, b in zip(circuit.input_qubits, bits):
        state[q] = 1 if b else 0
    initial = list(state)
    for idx, g in enumerate(circuit.gates):
        q = g.qubits
        if g.kind == "x":
            state[q[0]] ^= 1
        elif g.kind == "cnot":
            state[q[1]] ^= state[q[0]]
        elif g.kind == "and":
            if state[q[2]]:
                raise SimulationFault(idx, f"AND target q{q[2]} is not zero")
            state[q[2]] = state[q[0]] & state[q[1]]
        elif g.kind == "unand":
            if state[q[2]] != (state[q[0]] & state[q[1]]):
                raise SimulationFault(idx, f"UNAND target q{q[2]} does not hold the AND of its controls")
            state[q[2]] = 0
        else:
            raise SimulationFault(idx, f"unknown gate {g.kind!r}")
    outs = set(circuit.output_qubits)
    clean = all(state[q] == initial[q] for q in range(circuit.qubit_count) if q not in outs)
    return CircuitRun([state[q] for q in circuit.output_qubits], clean)
