"""k-feasible cut enumeration with support-normalized truth tables."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from .xag import AND, XAG, compute_levels, projection_words

DEFAULT_CUT_SIZE = 6
DEFAULT_CUT_LIMIT = 25


@dataclass(frozen=True)
class Cut:
    """Sorted leaf nodes and the root function over them (leaf 0 is the LSB variable)."""

    leaves: Tuple[int, ...]
    tt: int
    mask: int = field(default=0, compare=False, repr=False)

    @property
    def size(self) -> int:
        return len(self.leaves)

    def is_trivial(self, root: int) -> bool:
        return self.leaves == (root,)


CutSet = List[List[Cut]]


@lru_cache(maxsize=1 << 16)
def _stretch(tt: int, positions: Tuple[int, ...], nvars: int) -> int:
    """Re-express a table over ``len(positions)`` variables on ``nvars`` variables.

    Source variable j becomes target variable ``positions[j]``; the positions
    are increasing, so only don't-care variables have to be inserted.
    """
    cur = len(positions)
    have = set(positions)
    for pos in range(nvars):
        if pos in have:
            continue
        block = 1 << pos
        low = (1 << block) - 1
        out = 0
        for c in range(1 << (cur - pos)):
            chunk = (tt >> (c * block)) & low
            out |= (chunk | (chunk << block)) << (2 * c * block)
        tt = out
        cur += 1
    return tt


def _table_mask(nvars: int) -> int:
    return (1 << (1 << nvars)) - 1


def enumerate_cuts(net: XAG, k: int = DEFAULT_CUT_SIZE,
                   cut_limit: Optional[float] = DEFAULT_CUT_LIMIT) -> CutSet:
    """Cuts of every node; ``cuts[node][0]`` is always the trivial cut.

    Gates keep at most ``cut_limit`` non-trivial cuts, preferring fewer
    leaves, then shallower leaves, then lexicographically smaller leaves.
    Cuts that contain another cut of the same node are discarded.
    """
    if not 2 <= k <= 16:
        raise ValueError(f"cut size must be in 2..16, got {k}")
    if cut_limit is None:
        cut_limit = math.inf
    if cut_limit < 1:
        raise ValueError("cut_limit must be at least 1")

    level = compute_levels(net).level
    cuts: CutSet = [[] for _ in range(net.num_nodes)]
    cuts[0] = [Cut((), 0, 0)]
    for i in range(1, net.num_inputs + 1):
        cuts[i] = [Cut((i,), 0b10, 1 << i)]

    for node, op, a, b in net.gates():
        inv_a = a & 1
        inv_b = b & 1
        candidates = {}
        for c1 in cuts[a >> 1]:
            for c2 in cuts[b >> 1]:
                m = c1.mask | c2.mask
                if m in candidates:
                    continue
                if m.bit_count() > k:
                    continue
                leaves = tuple(sorted(set(c1.leaves) | set(c2.leaves)))
                nv = len(leaves)
                index = {leaf: p for p, leaf in enumerate(leaves)}
                full = _table_mask(nv)
                t1 = _stretch(c1.tt, tuple(index[x] for x in c1.leaves), nv)
                t2 = _stretch(c2.tt, tuple(index[x] for x in c2.leaves), nv)
                if inv_a:
                    t1 ^= full
                if inv_b:
                    t2 ^= full
                tt = (t1 & t2) if op == AND else (t1 ^ t2)
                candidates[m] = Cut(leaves, tt, m)

        ranked = sorted(candidates.values(),
                        key=lambda c: (c.size, max(level[x] for x in c.leaves), c.leaves))
        kept: List[Cut] = []
        for c in ranked:
            if len(kept) >= cut_limit:
                break
            if any((d.mask & c.mask) == d.mask for d in kept):
                continue
            kept.append(c)
        cuts[node] = [Cut((node,), 0b10, 1 << node)] + kept
    return cuts


def is_valid_cut(net: XAG, root: int, leaves: Sequence[int]) -> bool:
    """Every path from ``root`` to a primary input meets a leaf."""
    leafset = set(leaves)
    seen = set()
    stack = [root]
    while stack:
        node = stack.pop()
        if node in leafset or node in seen:
            continue
        seen.add(node)
        if node == 0:
            continue
        if net.is_input(node):
            return False
        _, a, b = net.gate(node)
        stack.append(a >> 1)
        stack.append(b >> 1)
    return True


def cut_function(net: XAG, root: int, leaves: Sequence[int]) -> int:
    """Truth table of ``root`` over ``leaves`` by simulating the cone."""
    leaves = list(leaves)
    if not is_valid_cut(net, root, leaves):
        raise ValueError(f"{leaves} is not a cut of node {root}")
    nv = len(leaves)
    full = _table_mask(nv)
    val = {leaf: w for leaf, w in zip(leaves, projection_words(nv))}
    val.setdefault(0, 0)

    def value(node: int) -> int:
        stack = [node]
        while stack:
            cur = stack[-1]
            if cur in val:
                stack.pop()
                continue
            op, a, b = net.gate(cur)
            missing = [f for f in (a >> 1, b >> 1) if f not in val]
            if missing:
                stack.extend(missing)
                continue
            va = val[a >> 1] ^ (full if a & 1 else 0)
            vb = val[b >> 1] ^ (full if b & 1 else 0)
            val[cur] = (va & vb) if op == AND else (va ^ vb)
            stack.pop()
        return val[node]

    return value(root)
