"""Netlist and gate-list file formats.

Native format::

    xag <inputs> <gates> <outputs>
    g1 = AND x1 ~x2
    g2 = XOR g1 x3
    out ~g2

Gates are numbered 1..r in topological order; ``0`` is the constant-0 literal.
"""
from __future__ import annotations

import re
from typing import Dict, List, Optional, Tuple

from .xag import AND, XOR, XAG, CONST0, sweep_dead


class ParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


# -- ASCII AIGER ----------------------------------------------------------

def parse_aiger_ascii(text: str) -> XAG:
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty file", 1)
    header = lines[0].split()
    if len(header) != 6 or header[0] != "aag":
        raise ParseError("expected header 'aag M I L O A'", 1)
    try:
        m, i, l, o, a = (int(t) for t in header[1:])
    except ValueError:
        raise ParseError("non-integer field in header", 1) from None
    if l != 0:
        raise ParseError("latches are not supported (combinational networks only)", 1)
    if len(lines) < 1 + i + o + a:
        raise ParseError("file ends before all inputs, outputs and gates are listed", len(lines))

    def ints(lineno: int, count: int) -> List[int]:
        toks = lines[lineno - 1].split()
        if len(toks) != count:
            raise ParseError(f"expected {count} integers", lineno)
        try:
            vals = [int(t) for t in toks]
        except ValueError:
            raise ParseError("expected integers", lineno) from None
        for v in vals:
            if v < 0 or v > 2 * m + 1:
                raise ParseError(f"literal {v} out of range", lineno)
        return vals

    lineno = 2
    input_vars = []
    for _ in range(i):
        (lit,) = ints(lineno, 1)
        if lit & 1 or lit == 0:
            raise ParseError("input literal must be a positive even number", lineno)
        input_vars.append(lit >> 1)
        lineno += 1
    output_lits = []
    for _ in range(o):
        (lit,) = ints(lineno, 1)
        output_lits.append((lit, lineno))
        lineno += 1
    and_defs: Dict[int, Tuple[int, int, int]] = {}
    for _ in range(a):
        lhs, r0, r1 = ints(lineno, 3)
        if lhs & 1 or lhs == 0:
            raise ParseError("AND output literal must be a positive even number", lineno)
        if (lhs >> 1) in and_defs or (lhs >> 1) in input_vars:
            raise ParseError(f"variable {lhs >> 1} defined twice", lineno)
        and_defs[lhs >> 1] = (r0, r1, lineno)
        lineno += 1

    input_names: List[Optional[str]] = [None] * i
    output_names: List[Optional[str]] = [None] * o
    for k in range(lineno - 1, len(lines)):
        line = lines[k]
        if line.startswith("c"):
            break
        sym = re.match(r"^([io])(\d+) (.*)$", line)
        if sym:
            kind, pos, name = sym.group(1), int(sym.group(2)), sym.group(3)
            target = input_names if kind == "i" else output_names
            if pos < len(target):
                target[pos] = name
        elif line.strip():
            raise ParseError("unexpected content in symbol table", k + 1)

    net = XAG(i, input_names)
    var2lit: Dict[int, int] = {0: CONST0}
    for k, v in enumerate(input_vars):
        var2lit[v] = net.input(k + 1)

    def resolve(lit: int, where: int) -> int:
        v = lit >> 1
        if v not in var2lit:
            if v not in and_defs:
                raise ParseError(f"literal {lit} references an undefined variable", where)
            # AND gates may be listed out of order in ASCII files
            stack = [v]
            onstack = set()
            while stack:
                cur = stack[-1]
                r0, r1, at = and_defs[cur]
                pending = [x >> 1 for x in (r0, r1) if (x >> 1) not in var2lit]
                for p in pending:
                    if p not in and_defs:
                        raise ParseError(f"literal {2 * p} references an undefined variable", at)
                    if p in onstack:
                        raise ParseError("combinational cycle", at)
                if pending:
                    onstack.add(cur)
                    stack.extend(pending)
                    continue
                stack.pop()
                onstack.discard(cur)
                if cur not in var2lit:
                    var2lit[cur] = net.add_and(var2lit[r0 >> 1] ^ (r0 & 1), var2lit[r1 >> 1] ^ (r1 & 1))
        return var2lit[v] ^ (lit & 1)

    for v in sorted(and_defs):
        resolve(2 * v, and_defs[v][2])
    for (lit, where), name in zip(output_lits, output_names):
        net.add_output(resolve(lit, where), name)
    return net


# -- native format --------------------------------------------------------

def write_native(net: XAG) -> str:
    net = sweep_dead(net)
    names = {0: "0"}
    for k in range(1, net.num_inputs + 1):
        names[k] = f"x{k}"

    def lit(s: int) -> str:
        return ("~" if s & 1 else "") + names[s >> 1]

    out = [f"xag {net.num_inputs} {net.num_gates} {len(net.outputs)}"]
    for idx, (node, op, a, b) in enumerate(net.gates(), start=1):
        names[node] = f"g{idx}"
        out.append(f"g{idx} = {op} {lit(a)} {lit(b)}")
    for o in net.outputs:
        out.append(f"out {lit(o)}")
    return "\n".join(out) + "\n"


_NATIVE_LIT = re.compile(r"^(~?)(0|[xg][1-9]\d*)$")


def parse_native(text: str) -> XAG:
    rows = [(k + 1, ln.split("#", 1)[0].strip()) for k, ln in enumerate(text.splitlines())]
    rows = [(k, ln) for k, ln in rows if ln]
    if not rows:
        raise ParseError("empty file", 1)
    lineno, head = rows[0]
    parts = head.split()
    if len(parts) != 4 or parts[0] != "xag" or not all(p.isdigit() for p in parts[1:]):
        raise ParseError("expected header 'xag <inputs> <gates> <outputs>'", lineno)
    n, r, o = (int(p) for p in parts[1:])
    net = XAG(n)
    gates: Dict[int, int] = {}

    def lit(tok: str, where: int) -> int:
        mt = _NATIVE_LIT.match(tok)
        if not mt:
            raise ParseError(f"malformed literal {tok!r}", where)
        inv, ref = mt.group(1) == "~", mt.group(2)
        if ref == "0":
            base = CONST0
        elif ref[0] == "x":
            k = int(ref[1:])
            if k > n:
                raise ParseError(f"reference to nonexistent input {ref}", where)
            base = net.input(k)
        else:
            k = int(ref[1:])
            if k not in gates:
                raise ParseError(f"reference to undefined gate {ref}", where)
            base = gates[k]
        return base ^ int(inv)

    expected = 1
    for lineno, ln in rows[1:]:
        toks = ln.split()
        if toks[0] == "out":
            if len(toks) != 2:
                raise ParseError("expected 'out <literal>'", lineno)
            net.add_output(lit(toks[1], lineno))
            continue
        if len(toks) != 5 or toks[1] != "=" or toks[2] not in (AND, XOR):
            raise ParseError("expected 'g<i> = AND|XOR <lit> <lit>'", lineno)
        if toks[0] != f"g{expected}":
            raise ParseError(f"expected gate g{expected}, found {toks[0]}", lineno)
        if net.outputs:
            raise ParseError("gate defined after outputs", lineno)
        gates[expected] = net.add_gate(toks[2], lit(toks[3], lineno), lit(toks[4], lineno))
        expected += 1
    if expected - 1 != r:
        raise ParseError(f"header announces {r} gates, found {expected - 1}", rows[0][0])
    if len(net.outputs) != o:
        raise ParseError(f"header announces {o} outputs, found {len(net.outputs)}", rows[0][0])
    return net


def read_network(text: str) -> XAG:
    """Dispatch on the first token: ``aag`` or ``xag``."""
    first = text.lstrip().split(None, 1)[:1]
    if first == ["aag"]:
        return parse_aiger_ascii(text)
    if first == ["xag"]:
        return parse_native(text)
    raise ParseError("unknown netlist format (expected 'aag' or 'xag' header)", 1)


def load_network(path: str) -> XAG:
    with open(path, encoding="utf-8") as fh:
        return read_network(fh.read())


# -- quantum gate lists ---------------------------------------------------

def write_qc(circuit) -> str:
    starts = dict(circuit.sections)
    out = [f"qc {circuit.qubit_count}"]
    for idx, g in enumerate(circuit.gates):
        if idx in starts:
            out.append(f"-- layer {starts[idx]}")
        out.append(g.kind + "".join(f" q{i}" for i in g.qubits))
    return "\n".join(out) + "\n"


def parse_qc(text: str):
    """Inverse of :func:`write_qc` for the gate list and layer sections."""
    from .quantum import Gate, QuantumCircuit

    lines = text.splitlines()
    if not lines or not re.match(r"^qc \d+$", lines[0].strip()):
        raise ParseError("expected header 'qc <qubits>'", 1)
    qubits = int(lines[0].split()[1])
    arity = {"x": 1, "cnot": 2, "and": 3, "unand": 3}
    gates, sections = [], []
    layer = None
    for k, ln in enumerate(lines[1:], start=2):
        ln = ln.strip()
        if not ln:
            continue
        mt = re.match(r"^-- layer (\d+)$", ln)
        if mt:
            layer = int(mt.group(1))
            sections.append((len(gates), layer))
            continue
        toks = ln.split()
        if toks[0] not in arity or len(toks) != arity[toks[0]] + 1:
            raise ParseError(f"malformed gate {ln!r}", k)
        if not all(re.match(r"^q\d+$", t) for t in toks[1:]):
            raise ParseError(f"malformed qubit in {ln!r}", k)
        qs = tuple(int(t[1:]) for t in toks[1:])
        if any(q >= qubits for q in qs):
            raise ParseError(f"qubit out of range in {ln!r}", k)
        gates.append(Gate(toks[0], qs, layer if toks[0] in ("and", "unand") else None))
    return QuantumCircuit(qubit_count=qubits, gates=gates, sections=sections)
