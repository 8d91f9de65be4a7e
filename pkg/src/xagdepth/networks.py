"""Small reference networks and random network generators."""
from __future__ import annotations

import itertools
import random
from typing import Optional

from .xag import XAG, lit_not


def maj5_xag() -> XAG:
    """Majority-of-5 with three AND gates in two AND levels.

    Multi-input XOR nodes are decomposed into balanced 2-input XOR trees.
    """
    net = XAG(5, [f"x{i}" for i in range(1, 6)])
    x1, x2, x3, x4, x5 = net.inputs()
    p1 = net.add_xor_many([x1, x3, x4, x2])
    p2 = net.add_xor(x2, x5)
    p3 = net.add_xor(x5, x4)
    p4 = net.add_xor(x4, x3)
    a1 = net.add_and(p1, p2)
    a2 = net.add_and(p3, p4)
    p5 = net.add_xor_many([a1, x5, x1])
    p6 = net.add_xor_many([x1, x4, a2])
    a3 = net.add_and(p5, p6)
    net.add_output(net.add_xor(a3, x1), "maj5")
    return net


def maj5_sop(balanced: bool = False) -> XAG:
    """Majority-of-5 as an OR of the ten 3-literal products (AND/OR style).

    The OR is a chain by default and a balanced tree with ``balanced=True``.
    """
    net = XAG(5, [f"x{i}" for i in range(1, 6)])
    xs = net.inputs()
    terms = [net.add_and_many([xs[i] for i in c]) for c in itertools.combinations(range(5), 3)]
    if balanced:
        while len(terms) > 1:
            nxt = [net.add_or(terms[i], terms[i + 1]) for i in range(0, len(terms) - 1, 2)]
            terms = nxt + terms[len(terms) - len(terms) % 2:]
        acc = terms[0]
    else:
        acc = terms[0]
        for t in terms[1:]:
            acc = net.add_or(acc, t)
    net.add_output(acc, "maj5")
    return net


def and_chain(n: int) -> XAG:
    """Left-leaning chain ``((x1 & x2) & x3) & ...``."""
    net = XAG(n)
    xs = net.inputs()
    acc = xs[0]
    for x in xs[1:]:
        acc = net.add_and(acc, x)
    net.add_output(acc)
    return net


def xor_chain(n: int) -> XAG:
    net = XAG(n)
    xs = net.inputs()
    acc = xs[0]
    for x in xs[1:]:
        acc = net.add_xor(acc, x)
    net.add_output(acc)
    return net


def decoder(bits: int) -> XAG:
    """One-hot decoder: output m is the minterm m over ``bits`` inputs."""
    net = XAG(bits)
    xs = net.inputs()
    for m in range(1 << bits):
        lits = [x if (m >> i) & 1 else lit_not(x) for i, x in enumerate(xs)]
        net.add_output(net.add_and_many(lits), f"d{m}")
    return net


def random_xag(num_inputs: int, num_gates: int, num_outputs: int = 1,
               rng: Optional[random.Random] = None, and_ratio: float = 0.5,
               complement_ratio: float = 0.3) -> XAG:
    """Random XAG; fanins drawn from all earlier signals, biased to recent ones.

    Structural hashing may merge or fold some requests, so the gate count is
    at most ``num_gates``.
    """
    rng = rng or random.Random()
    net = XAG(num_inputs)
    pool = net.inputs()
    seen = set(pool)
    for _ in range(num_gates):
        a = pool[min(len(pool) - 1, int(len(pool) * (1 - rng.random() ** 2)))]
        b = rng.choice(pool)
        if rng.random() < complement_ratio:
            a = lit_not(a)
        if rng.random() < complement_ratio:
            b = lit_not(b)
        if rng.random() < and_ratio:
            s = net.add_and(a, b)
        else:
            s = net.add_xor(a, b)
        s &= ~1
        if s > 1 and s not in seen:
            seen.add(s)
            pool.append(s)
    candidates = pool[num_inputs:] or pool
    tail = candidates[-max(num_outputs, 1) * 2:]
    for _ in range(num_outputs):
        net.add_output(rng.choice(tail) ^ (rng.random() < complement_ratio))
    return net
