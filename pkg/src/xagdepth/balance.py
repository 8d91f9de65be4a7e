"""Cut-based multiplicative-depth balancing with ESOP and ESPP resynthesis."""
from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence, Tuple, Union

from .cuts import DEFAULT_CUT_LIMIT, DEFAULT_CUT_SIZE, enumerate_cuts
from .esop import ABSENT, NEG, Cube, Esop, anf_from_tt, minimize_esop
from .espp import Espp, espp_from_esop, greedy_merge
from .xag import AND, CONST0, CONST1, XAG, make_lit, mult_depth, sweep_dead

Leaf = Tuple[int, int]  # (signal, level)


@dataclass(frozen=True)
class ResynthChoice:
    strategy: str = "esop"
    effort: int = 2
    cut_size: int = DEFAULT_CUT_SIZE
    cut_limit: Optional[int] = DEFAULT_CUT_LIMIT
    max_rounds: int = 100
    esop_cost: str = "cubes"

    def __post_init__(self):
        if self.strategy not in ("esop", "espp"):
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if self.cut_size < 2:
            raise ValueError("cut size must be at least 2")
        if self.max_rounds < 1:
            raise ValueError("max_rounds must be at least 1")


# -- tree balancing -------------------------------------------------------

def tree_level(levels: Sequence[int]) -> int:
    """Level reached by an optimally balanced AND tree over the given leaf levels."""
    if not levels:
        raise ValueError("empty product")
    return (sum(1 << lv for lv in levels) - 1).bit_length()


def balance_and(net: XAG, items: Sequence[Leaf]) -> Leaf:
    """AND tree built by always combining the two lowest-level signals.

    Ties are resolved in insertion order.
    """
    if not items:
        raise ValueError("constant product has no AND tree")
    counter = itertools.count()
    queue = [(lv, next(counter), s) for s, lv in items]
    heapq.heapify(queue)
    while len(queue) > 1:
        lu, _, u = heapq.heappop(queue)
        lv, _, v = heapq.heappop(queue)
        s = net.add_and(u, v)
        heapq.heappush(queue, (net.level(s), next(counter), s))
    lv, _, s = queue[0]
    return s, lv


def balance_cube(net: XAG, cube: Cube, leaves: Sequence[Leaf]) -> int:
    items = [(s ^ (p == NEG), lv) for p, (s, lv) in zip(cube, leaves) if p != ABSENT]
    return balance_and(net, items)[0]


def _realize_term(net: XAG, form, t, leaves: Sequence[Leaf]) -> int:
    if isinstance(form, Esop):
        if all(p == ABSENT for p in t):
            return CONST1
        return balance_cube(net, t, leaves)
    if not t:
        return CONST1
    items = []
    for index, pol in t:
        sel = [leaves[j] for j in range(len(leaves)) if (index >> j) & 1]
        s = net.add_xor_many([x for x, _ in sel])
        items.append((s ^ (pol == 0), net.level(s)))
    return balance_and(net, items)[0]


def balance_esop(net: XAG, form: Union[Esop, Espp], leaves: Sequence[Leaf]) -> int:
    """Realize an ESOP or ESPP over leaf signals: balanced AND trees joined by XORs."""
    terms = form.cubes if isinstance(form, Esop) else form.terms
    return net.add_xor_many([_realize_term(net, form, t, leaves) for t in terms])


# -- candidate planning ---------------------------------------------------

def _compile(form) -> Tuple[Tuple[Tuple[int, ...], ...], int, int]:
    """Literal groups per term (each group is a tuple of leaf positions), ANDs and XORs."""
    groups = []
    xors = max(0, len(form) - 1)
    if isinstance(form, Esop):
        for c in form.cubes:
            groups.append(tuple((j,) for j, p in enumerate(c) if p != ABSENT))
    else:
        for t in form.terms:
            g = tuple(tuple(j for j in range(form.var_count) if (i >> j) & 1) for i, _ in t)
            xors += sum(len(x) - 1 for x in g)
            groups.append(g)
    ands = sum(max(0, len(g) - 1) for g in groups)
    return tuple(groups), ands, xors


@lru_cache(maxsize=1 << 16)
def _forms(tt: int, k: int, strategy: str, effort: int, cost: str):
    anf = anf_from_tt(tt, k)
    esop = minimize_esop(anf, effort, cost)
    forms = [esop]
    if strategy == "espp":
        espp = greedy_merge(espp_from_esop(esop))
        if espp.terms != espp_from_esop(esop).terms:
            forms.append(espp)
    if anf.cubes != esop.cubes:
        forms.append(anf)
    return tuple((f, _compile(f)) for f in forms)


def _plan(compiled, levels: Sequence[int]) -> Tuple[int, int, int]:
    groups, ands, xors = compiled
    top = 0
    for g in groups:
        if g:
            lv = tree_level([max(levels[j] for j in lit) for lit in g])
            if lv > top:
                top = lv
    return top, ands, ands + xors


# -- network balancing ----------------------------------------------------

def balance_network(net: XAG, choice: ResynthChoice = ResynthChoice()) -> XAG:
    """One dynamic-programming pass over the network in topological order.

    Each gate gets the lowest-level realization among its rebuilt original
    gate and the resynthesized functions of its non-trivial cuts; ties go to
    fewer ANDs, then fewer gates, then the earlier candidate.
    """
    cuts = enumerate_cuts(net, choice.cut_size, choice.cut_limit)
    res = XAG(net.num_inputs, net.input_names)
    best = [CONST0] * net.num_nodes
    for i in range(1, net.num_inputs + 1):
        best[i] = make_lit(i)

    for node, op, a, b in net.gates():
        fa = best[a >> 1] ^ (a & 1)
        fb = best[b >> 1] ^ (b & 1)
        top = max(res.level(fa), res.level(fb))
        best_key = (top + 1, 1, 1) if op == AND else (top, 0, 1)
        chosen = None
        for cut in cuts[node][1:]:
            sigs = [best[x] for x in cut.leaves]
            levels = [res.level(s) for s in sigs]
            for form, compiled in _forms(cut.tt, len(cut.leaves), choice.strategy,
                                         choice.effort, choice.esop_cost):
                key = _plan(compiled, levels)
                if key < best_key:
                    best_key = key
                    chosen = (form, sigs, levels)
        if chosen is None:
            best[node] = res.add_gate(op, fa, fb)
        else:
            form, sigs, levels = chosen
            best[node] = balance_esop(res, form, list(zip(sigs, levels)))

    for o, name in zip(net.outputs, net.output_names):
        res.add_output(best[o >> 1] ^ (o & 1), name)
    return sweep_dead(res)


def optimize_to_fixpoint(net: XAG, choice: ResynthChoice = ResynthChoice()) -> Tuple[XAG, int]:
    """Repeat balancing while the multiplicative depth strictly decreases."""
    cur = net
    md = mult_depth(cur)
    rounds = 0
    while rounds < choice.max_rounds:
        rounds += 1
        nxt = balance_network(cur, choice)
        nmd = mult_depth(nxt)
        if nmd >= md:
            break
        cur, md = nxt, nmd
    return cur, rounds
