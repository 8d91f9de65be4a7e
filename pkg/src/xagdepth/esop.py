"""Exclusive sum-of-products forms over small truth tables.

A cube is a tuple of polarities, one per variable: 0 for a negative
literal, 1 for a positive literal, 2 when the variable is absent.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Tuple

from .xag import projection_words

NEG, POS, ABSENT = 0, 1, 2

Cube = Tuple[int, ...]


@dataclass(frozen=True)
class Esop:
    cubes: Tuple[Cube, ...]
    var_count: int

    def __post_init__(self):
        object.__setattr__(self, "cubes", tuple(sorted(self.cubes)))

    def __len__(self) -> int:
        return len(self.cubes)

    @property
    def degree(self) -> int:
        return max((cube_degree(c) for c in self.cubes), default=0)

    @property
    def literal_count(self) -> int:
        return sum(cube_degree(c) for c in self.cubes)

    def is_anf(self) -> bool:
        return all(p != NEG for c in self.cubes for p in c)


def cube_degree(cube: Cube) -> int:
    return sum(1 for p in cube if p != ABSENT)


def _to_masks(cube: Cube) -> Tuple[int, int]:
    mask = pos = 0
    for i, p in enumerate(cube):
        if p != ABSENT:
            mask |= 1 << i
            if p == POS:
                pos |= 1 << i
    return mask, pos


def _from_masks(mask: int, pos: int, k: int) -> Cube:
    return tuple(ABSENT if not (mask >> i) & 1 else (POS if (pos >> i) & 1 else NEG) for i in range(k))


# -- evaluation -----------------------------------------------------------

def eval_esop(esop: Esop, assignment: Sequence[int]) -> int:
    out = 0
    for cube in esop.cubes:
        v = 1
        for p, x in zip(cube, assignment):
            if p == POS and not x or p == NEG and x:
                v = 0
                break
        out ^= v
    return out


def esop_truth_table(esop: Esop) -> int:
    k = esop.var_count
    full = (1 << (1 << k)) - 1
    proj = projection_words(k)
    tt = 0
    for cube in esop.cubes:
        term = full
        for p, w in zip(cube, proj):
            if p == POS:
                term &= w
            elif p == NEG:
                term &= ~w & full
        tt ^= term
    return tt


# -- algebraic normal form ------------------------------------------------

def mobius(tt: int, k: int) -> int:
    """Positive-polarity Reed-Muller coefficients; the transform is its own inverse."""
    for i, w in enumerate(projection_words(k)):
        low = ~w & ((1 << (1 << k)) - 1)
        tt ^= (tt & low) << (1 << i)
    return tt


@lru_cache(maxsize=1 << 16)
def anf_from_tt(tt: int, k: int) -> Esop:
    coeffs = mobius(tt, k)
    cubes = []
    m = 0
    while coeffs:
        if coeffs & 1:
            cubes.append(tuple(POS if (m >> i) & 1 else ABSENT for i in range(k)))
        coeffs >>= 1
        m += 1
    return Esop(tuple(cubes), k)


def algebraic_degree(tt: int, k: int) -> int:
    return anf_from_tt(tt, k).degree


def expand_to_anf(esop: Esop) -> Esop:
    """Replace every negative literal x' by 1 ^ x and cancel duplicate cubes."""
    acc = set()
    for cube in esop.cubes:
        partial = [()]
        for p in cube:
            if p == NEG:
                partial = [c + (ABSENT,) for c in partial] + [c + (POS,) for c in partial]
            else:
                partial = [c + (p,) for c in partial]
        for c in partial:
            acc ^= {c}
    return Esop(tuple(acc), esop.var_count)


# -- heuristic minimization -----------------------------------------------

def _cost(cubes, primary: str):
    lits = sum(m.bit_count() for m, _ in cubes)
    return (len(cubes), lits) if primary == "cubes" else (lits, len(cubes))


def _toggle(cubes: set, cube) -> None:
    if cube in cubes:
        cubes.remove(cube)
    else:
        cubes.add(cube)


def _with_var(cube, bit: int, pol: int):
    mask, pos = cube
    if pol == ABSENT:
        return mask & ~bit, pos & ~bit
    if pol == POS:
        return mask | bit, pos | bit
    return mask | bit, pos & ~bit


def _pol(cube, bit: int) -> int:
    mask, pos = cube
    if not mask & bit:
        return ABSENT
    return POS if pos & bit else NEG


def _merge_pass(cubes: set, k: int) -> None:
    """Apply distance-1 merges (and cancellations) until none is left."""
    work = sorted(cubes, reverse=True)
    while work:
        c = work.pop()
        if c not in cubes:
            continue
        for v in range(k):
            bit = 1 << v
            a = _pol(c, bit)
            hit = None
            for b in (NEG, POS, ABSENT):
                if b != a:
                    nb = _with_var(c, bit, b)
                    if nb in cubes:
                        hit = (nb, b)
                        break
            if hit is None:
                continue
            nb, b = hit
            cubes.remove(c)
            cubes.remove(nb)
            merged = _with_var(c, bit, 3 - a - b)
            _toggle(cubes, merged)
            if merged in cubes:
                work.append(merged)
            break


def _has_partner(cubes: set, c, k: int) -> bool:
    if c in cubes:
        return True
    for v in range(k):
        bit = 1 << v
        a = _pol(c, bit)
        for b in (NEG, POS, ABSENT):
            if b != a and _with_var(c, bit, b) in cubes:
                return True
    return False


def _exorlink_pass(cubes: set, k: int, primary: str) -> bool:
    """Try distance-2 reshapes that open a merge; keep the first improving one."""
    before = _cost(cubes, primary)
    for c1 in sorted(cubes):
        for v in range(k):
            for w in range(v + 1, k):
                bv, bw = 1 << v, 1 << w
                a, c = _pol(c1, bv), _pol(c1, bw)
                for b in (NEG, POS, ABSENT):
                    if b == a:
                        continue
                    for d in (NEG, POS, ABSENT):
                        if d == c:
                            continue
                        c2 = _with_var(_with_var(c1, bv, b), bw, d)
                        if c2 not in cubes or c2 < c1:
                            continue
                        # c1 = R x^a y^c, c2 = R x^b y^d
                        alts = (
                            (_with_var(c1, bw, 3 - c - d), _with_var(c2, bv, 3 - a - b)),
                            (_with_var(c1, bv, 3 - a - b), _with_var(c2, bw, 3 - c - d)),
                        )
                        for n1, n2 in alts:
                            rest = cubes - {c1, c2}
                            if not (_has_partner(rest, n1, k) or _has_partner(rest, n2, k)):
                                continue
                            trial = set(rest)
                            _toggle(trial, n1)
                            _toggle(trial, n2)
                            _merge_pass(trial, k)
                            if _cost(trial, primary) < before:
                                cubes.clear()
                                cubes.update(trial)
                                return True
    return False


@lru_cache(maxsize=1 << 15)
def _minimize_cached(cubes: Tuple[Cube, ...], k: int, effort: int, cost: str) -> Tuple[Cube, ...]:
    work = set()
    for c in cubes:
        _toggle(work, _to_masks(c))
    _merge_pass(work, k)
    for _ in range(effort):
        if not _exorlink_pass(work, k, cost):
            break
    return tuple(sorted(_from_masks(m, p, k) for m, p in work))


def minimize_esop(esop: Esop, effort: int = 2, cost: str = "cubes") -> Esop:
    """Local search with cube cancellation, distance-1 merges and distance-2 reshapes.

    ``effort`` bounds the number of reshape rounds; ``cost`` selects the
    primary objective (``"cubes"`` or ``"literals"``).
    """
    if cost not in ("cubes", "literals"):
        raise ValueError(f"unknown ESOP cost {cost!r}")
    return Esop(_minimize_cached(esop.cubes, esop.var_count, effort, cost), esop.var_count)


def esop_for_tt(tt: int, k: int, effort: int = 2, cost: str = "cubes") -> Esop:
    return minimize_esop(anf_from_tt(tt, k), effort, cost)


def cubes_from_strings(rows: Iterable[str]) -> Esop:
    """Parse cubes written as ``"1-0"`` (one character per variable)."""
    table = {"0": NEG, "1": POS, "-": ABSENT}
    cubes = [tuple(table[ch] for ch in row) for row in rows]
    k = len(cubes[0]) if cubes else 0
    return Esop(tuple(cubes), k)
