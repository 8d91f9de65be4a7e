"""Exclusive sums of pseudoproducts.

A pseudoproduct is an AND of (possibly negated) parity functions.  Parity
``L_i`` XORs the variables selected by the binary expansion of ``i``
(variable 1 is bit 0), so ``L_3 = x1 ^ x2``.  A term is stored sparsely as a
tuple of ``(index, polarity)`` pairs sorted by index; omitted indices are
absent literals.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .esop import POS, ABSENT, Esop
from .xag import projection_words

Pseudoproduct = Tuple[Tuple[int, int], ...]


def term(mapping: Dict[int, int]) -> Pseudoproduct:
    return tuple(sorted(mapping.items()))


@dataclass(frozen=True)
class Espp:
    terms: Tuple[Pseudoproduct, ...]
    var_count: int

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(sorted(self.terms)))

    def __len__(self) -> int:
        return len(self.terms)

    def is_esop(self) -> bool:
        return all(i.bit_count() == 1 for t in self.terms for i, _ in t)


def espp_from_esop(esop: Esop) -> Espp:
    terms = []
    for cube in esop.cubes:
        terms.append(tuple((1 << t, p) for t, p in enumerate(cube) if p != ABSENT))
    return Espp(tuple(terms), esop.var_count)


def espp_and_cost(t: Pseudoproduct) -> int:
    return max(0, len(t) - 1)


def total_and_cost(espp: Espp) -> int:
    return sum(espp_and_cost(t) for t in espp.terms)


def _parity(index: int, assignment: Sequence[int]) -> int:
    v = 0
    for j, x in enumerate(assignment):
        if (index >> j) & 1 and x:
            v ^= 1
    return v


def eval_espp(espp: Espp, assignment: Sequence[int]) -> int:
    out = 0
    for t in espp.terms:
        v = 1
        for i, p in t:
            if _parity(i, assignment) != p:
                v = 0
                break
        out ^= v
    return out


def espp_truth_table(espp: Espp) -> int:
    k = espp.var_count
    full = (1 << (1 << k)) - 1
    proj = projection_words(k)
    tt = 0
    for t in espp.terms:
        acc = full
        for i, p in t:
            lin = 0
            for j in range(k):
                if (i >> j) & 1:
                    lin ^= proj[j]
            acc &= lin if p == POS else (~lin & full)
        tt ^= acc
    return tt


def _try_merge(t1: Pseudoproduct, t2: Pseudoproduct) -> Optional[Tuple[Optional[Pseudoproduct]]]:
    """Merge two terms that agree on all but one literal each.

    Returns ``None`` if the rule does not apply, ``(None,)`` if the terms
    cancel, and ``(merged,)`` otherwise.
    """
    if len(t1) != len(t2):
        return None
    d1 = dict(t1)
    d2 = dict(t2)
    only1 = [i for i in d1 if i not in d2]
    only2 = [i for i in d2 if i not in d1]
    if len(only1) != 1 or len(only2) != 1:
        return None
    i2, i1 = only1[0], only2[0]
    for i, p in d1.items():
        if i != i2 and d2[i] != p:
            return None
    # t1 = R.L_i2^b, t2 = R.L_i1^a  ->  R.(L_i2^b ^ L_i1^a) = R.L_(i1^i2)^[a = b]
    pol = int(d2[i1] == d1[i2])
    i3 = i1 ^ i2
    rest = {i: p for i, p in d1.items() if i != i2}
    if i3 in rest:
        if rest[i3] != pol:
            return (None,)
        return (term(rest),)
    rest[i3] = pol
    return (term(rest),)


@lru_cache(maxsize=1 << 15)
def _greedy(terms: Tuple[Pseudoproduct, ...]) -> Tuple[Pseudoproduct, ...]:
    cur: List[Pseudoproduct] = sorted(terms)
    changed = True
    while changed:
        changed = False
        for a in range(len(cur)):
            for b in range(a + 1, len(cur)):
                res = _try_merge(cur[a], cur[b])
                if res is None:
                    continue
                nxt = [t for k, t in enumerate(cur) if k not in (a, b)]
                merged = res[0]
                if merged is not None:
                    if merged in nxt:
                        nxt.remove(merged)
                    else:
                        nxt.append(merged)
                cur = sorted(nxt)
                changed = True
                break
            if changed:
                break
    return tuple(cur)


def greedy_merge(espp: Espp) -> Espp:
    """Merge or cancel term pairs until no pair qualifies (first pair in sorted order wins)."""
    return Espp(_greedy(espp.terms), espp.var_count)
