"""XOR-AND graphs with complemented edges.

Signals are AIGER-style literals: ``2 * node + complement``.  Node 0 is the
constant-0 node, nodes ``1..n`` are primary inputs and gates follow in
topological order.  XOR gates never carry complemented fanins: inversions on
XOR inputs are pulled out to the gate output while the gate is built.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

AND = "AND"
XOR = "XOR"

CONST0 = 0
CONST1 = 1


class XagError(ValueError):
    """Raised for malformed construction requests."""


def make_lit(node: int, complement: bool = False) -> int:
    return 2 * node + int(bool(complement))


def lit_node(lit: int) -> int:
    return lit >> 1


def lit_compl(lit: int) -> bool:
    return bool(lit & 1)


def lit_not(lit: int) -> int:
    return lit ^ 1


def lit_regular(lit: int) -> int:
    return lit & ~1


@dataclass(frozen=True)
class LevelInfo:
    level: List[int]
    rlevel: List[int]
    depth: int


class XAG:
    """A structurally hashed XOR-AND graph."""

    def __init__(self, num_inputs: int = 0, input_names: Optional[Sequence[str]] = None):
        # index 0 is the constant node; inputs have no fanins
        self._gates: List[Optional[Tuple[str, int, int]]] = [None] * (num_inputs + 1)
        self._level: List[int] = [0] * (num_inputs + 1)
        self._strash = {}
        self.num_inputs = num_inputs
        self.outputs: List[int] = []
        self.input_names: List[Optional[str]] = list(input_names) if input_names else [None] * num_inputs
        self.output_names: List[Optional[str]] = []
        if len(self.input_names) != num_inputs:
            raise XagError("input_names length does not match num_inputs")

    # -- construction -----------------------------------------------------

    def add_input(self, name: Optional[str] = None) -> int:
        if self.num_gates:
            raise XagError("inputs must be created before any gate")
        self._gates.append(None)
        self._level.append(0)
        self.num_inputs += 1
        self.input_names.append(name)
        return make_lit(self.num_inputs)

    def input(self, i: int) -> int:
        """Literal of the ``i``-th primary input (1-based)."""
        if not 1 <= i <= self.num_inputs:
            raise XagError(f"no primary input x{i}")
        return make_lit(i)

    def inputs(self) -> List[int]:
        return [make_lit(i) for i in range(1, self.num_inputs + 1)]

    def _check(self, lit: int) -> None:
        if lit < 0 or lit_node(lit) >= len(self._gates):
            raise XagError(f"literal {lit} references a nonexistent step")

    def add_and(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if a > b:
            a, b = b, a
        if a == b:
            return a
        if a == lit_not(b) or a == CONST0:
            return CONST0
        if a == CONST1:
            return b
        return self._hashed(AND, a, b, self._level_of(a, b) + 1)

    def add_xor(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        c = (a ^ b) & 1
        a, b = lit_regular(a), lit_regular(b)
        if a > b:
            a, b = b, a
        if a == b:
            return c
        if a == CONST0:
            return b ^ c
        return self._hashed(XOR, a, b, self._level_of(a, b)) ^ c

    def add_gate(self, op: str, a: int, b: int) -> int:
        if op == AND:
            return self.add_and(a, b)
        if op == XOR:
            return self.add_xor(a, b)
        raise XagError(f"unknown gate type {op!r}")

    def add_or(self, a: int, b: int) -> int:
        return lit_not(self.add_and(lit_not(a), lit_not(b)))

    def add_xor_many(self, lits: Iterable[int]) -> int:
        """XOR of several signals as a balanced tree of 2-input gates."""
        items = list(lits)
        if not items:
            return CONST0
        while len(items) > 1:
            nxt = [self.add_xor(items[i], items[i + 1]) for i in range(0, len(items) - 1, 2)]
            if len(items) % 2:
                nxt.append(items[-1])
            items = nxt
        return items[0]

    def add_and_many(self, lits: Iterable[int]) -> int:
        items = list(lits)
        if not items:
            return CONST1
        while len(items) > 1:
            nxt = [self.add_and(items[i], items[i + 1]) for i in range(0, len(items) - 1, 2)]
            if len(items) % 2:
                nxt.append(items[-1])
            items = nxt
        return items[0]

    def add_output(self, lit: int, name: Optional[str] = None) -> int:
        self._check(lit)
        self.outputs.append(lit)
        self.output_names.append(name)
        return len(self.outputs) - 1

    def _level_of(self, a: int, b: int) -> int:
        return max(self._level[a >> 1], self._level[b >> 1])

    def _hashed(self, op: str, a: int, b: int, level: int) -> int:
        key = (op, a, b)
        node = self._strash.get(key)
        if node is None:
            node = len(self._gates)
            self._gates.append(key)
            self._level.append(level)
            self._strash[key] = node
        return make_lit(node)

    # -- inspection -------------------------------------------------------

    @property
    def num_nodes(self) -> int:
        """Node count including the constant node."""
        return len(self._gates)

    @property
    def num_gates(self) -> int:
        return len(self._gates) - self.num_inputs - 1

    def is_input(self, node: int) -> bool:
        return 1 <= node <= self.num_inputs

    def is_gate(self, node: int) -> bool:
        return node > self.num_inputs

    def is_and(self, node: int) -> bool:
        g = self._gates[node]
        return g is not None and g[0] == AND

    def is_xor(self, node: int) -> bool:
        g = self._gates[node]
        return g is not None and g[0] == XOR

    def gate(self, node: int) -> Tuple[str, int, int]:
        g = self._gates[node]
        if g is None:
            raise XagError(f"node {node} is not a gate")
        return g

    def gates(self):
        """Yield ``(node, op, fanin_a, fanin_b)`` in topological order."""
        for node in range(self.num_inputs + 1, len(self._gates)):
            op, a, b = self._gates[node]
            yield node, op, a, b

    def level(self, lit: int) -> int:
        """AND-level of the node behind ``lit``, maintained during construction."""
        return self._level[lit >> 1]

    def num_ands(self) -> int:
        return sum(1 for _, op, _, _ in self.gates() if op == AND)

    def live_nodes(self) -> List[bool]:
        """Mark nodes in the transitive fanin of some output."""
        live = [False] * len(self._gates)
        for o in self.outputs:
            live[o >> 1] = True
        for node in range(len(self._gates) - 1, self.num_inputs, -1):
            if live[node]:
                _, a, b = self._gates[node]
                live[a >> 1] = True
                live[b >> 1] = True
        return live

    def is_normalized(self) -> bool:
        """True when no AND gate has a complemented fanin."""
        return not any(op == AND and ((a | b) & 1) for _, op, a, b in self.gates())

    def fanout_counts(self) -> List[int]:
        counts = [0] * len(self._gates)
        for _, _, a, b in self.gates():
            counts[a >> 1] += 1
            counts[b >> 1] += 1
        return counts

    def copy(self) -> "XAG":
        other = XAG(self.num_inputs, self.input_names)
        other._gates = list(self._gates)
        other._level = list(self._level)
        other._strash = dict(self._strash)
        other.outputs = list(self.outputs)
        other.output_names = list(self.output_names)
        return other

    def structure(self):
        """Hashable structural snapshot, used for identity comparisons."""
        return (self.num_inputs, tuple(self._gates[self.num_inputs + 1:]), tuple(self.outputs))

    def __repr__(self) -> str:
        return (f"XAG(inputs={self.num_inputs}, gates={self.num_gates}, "
                f"ands={self.num_ands()}, outputs={len(self.outputs)})")


# -- analysis -------------------------------------------------------------

def compute_levels(net: XAG) -> LevelInfo:
    """Forward AND-levels, reverse levels and the network depth."""
    size = net.num_nodes
    level = [0] * size
    for node, op, a, b in net.gates():
        lv = max(level[a >> 1], level[b >> 1])
        level[node] = lv + 1 if op == AND else lv
    depth = max(level) if size else 0

    inf = depth + 1
    rlevel = [inf] * size
    for o in net.outputs:
        rlevel[o >> 1] = depth
    for node in range(size - 1, net.num_inputs, -1):
        op, a, b = net.gate(node)
        if rlevel[node] == inf:
            rlevel[node] = depth  # no fanout and not an output
        r = rlevel[node] - (1 if op == AND else 0)
        for f in (a >> 1, b >> 1):
            if r < rlevel[f]:
                rlevel[f] = r
    for node in range(size):
        if rlevel[node] == inf:
            rlevel[node] = depth
    return LevelInfo(level, rlevel, depth)


def mult_depth(net: XAG) -> int:
    """Largest number of AND gates on a path ending in an output."""
    if not net.outputs:
        return 0
    return max(net.level(o) for o in net.outputs)


def mult_complexity(net: XAG) -> int:
    """Number of AND gates in the transitive fanin of the outputs."""
    live = net.live_nodes()
    return sum(1 for node, op, _, _ in net.gates() if op == AND and live[node])


def general_depth(net: XAG) -> int:
    """Longest output path counting every gate."""
    depth = [0] * net.num_nodes
    for node, _, a, b in net.gates():
        depth[node] = max(depth[a >> 1], depth[b >> 1]) + 1
    return max((depth[o >> 1] for o in net.outputs), default=0)


# -- simulation -----------------------------------------------------------

def simulate_words(net: XAG, words: Sequence[int], width: int) -> List[int]:
    """Bit-parallel simulation; ``words[i]`` holds ``width`` patterns of input i+1."""
    if len(words) != net.num_inputs:
        raise XagError(f"expected {net.num_inputs} input words, got {len(words)}")
    mask = (1 << width) - 1
    val = [0] * net.num_nodes
    val[1:net.num_inputs + 1] = [w & mask for w in words]
    for node, op, a, b in net.gates():
        va = val[a >> 1] ^ (mask if a & 1 else 0)
        vb = val[b >> 1] ^ (mask if b & 1 else 0)
        val[node] = (va & vb) if op == AND else (va ^ vb)
    return [val[o >> 1] ^ (mask if o & 1 else 0) for o in net.outputs]


def projection_words(num_vars: int) -> List[int]:
    """Truth tables of the projections x1..xk over 2**k minterms (x1 is the LSB)."""
    width = 1 << num_vars
    out = []
    for i in range(num_vars):
        block = 1 << i
        unit = ((1 << block) - 1) << block
        word = 0
        for start in range(0, width, 2 * block):
            word |= unit << start
        out.append(word)
    return out


def truth_tables(net: XAG) -> List[int]:
    """Complete truth table of every output; minterm m assigns x_i = bit i-1 of m."""
    return simulate_words(net, projection_words(net.num_inputs), 1 << net.num_inputs)


def simulate(net: XAG, assignment: Sequence[int]) -> List[int]:
    if len(assignment) != net.num_inputs:
        raise XagError(f"assignment has {len(assignment)} bits, network has {net.num_inputs} inputs")
    return simulate_words(net, [1 if b else 0 for b in assignment], 1)


# -- transformations ------------------------------------------------------

def _rebuild(net: XAG, keep: Optional[List[bool]] = None) -> Tuple[XAG, List[int]]:
    res = XAG(net.num_inputs, net.input_names)
    old2new = list(range(0, 2 * (net.num_inputs + 1), 2)) + [CONST0] * net.num_gates
    for node, op, a, b in net.gates():
        if keep is not None and not keep[node]:
            continue
        fa = old2new[a >> 1] ^ (a & 1)
        fb = old2new[b >> 1] ^ (b & 1)
        old2new[node] = res.add_gate(op, fa, fb)
    return res, old2new


def sweep_dead(net: XAG) -> XAG:
    """Drop every gate outside the transitive fanin of the outputs."""
    res, old2new = _rebuild(net, net.live_nodes())
    for o, name in zip(net.outputs, net.output_names):
        res.add_output(old2new[o >> 1] ^ (o & 1), name)
    return res


def propagate_inverters(net: XAG) -> XAG:
    """Equivalent network whose AND gates have only regular fanins.

    Uses ``(a^p)(b^q) = ab ^ q.a ^ p.b ^ pq`` so each AND stays a single AND
    and every inversion ends up on XOR structure or at an output.
    """
    res = XAG(net.num_inputs, net.input_names)
    old2new = list(range(0, 2 * (net.num_inputs + 1), 2)) + [CONST0] * net.num_gates
    live = net.live_nodes()
    for node, op, a, b in net.gates():
        if not live[node]:
            continue
        fa = old2new[a >> 1] ^ (a & 1)
        fb = old2new[b >> 1] ^ (b & 1)
        if op == XOR:
            old2new[node] = res.add_xor(fa, fb)
            continue
        p, q = fa & 1, fb & 1
        ra, rb = lit_regular(fa), lit_regular(fb)
        out = res.add_and(ra, rb)
        if q:
            out = res.add_xor(out, ra)
        if p:
            out = res.add_xor(out, rb)
        old2new[node] = out ^ (p & q)
    for o, name in zip(net.outputs, net.output_names):
        res.add_output(old2new[o >> 1] ^ (o & 1), name)
    return sweep_dead(res)
