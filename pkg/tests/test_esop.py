import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from xagdepth.esop import (ABSENT, NEG, POS, Esop, algebraic_degree, anf_from_tt, cubes_from_strings,
                           eval_esop, esop_truth_table, expand_to_anf, minimize_esop, mobius)


def slow_anf(tt, k):
    """ANF coefficients by the subset-sum definition: a_S = XOR of f(T) over T inside S."""
    cubes = []
    for s in range(1 << k):
        c = 0
        for t in range(1 << k):
            if t & ~s == 0:
                c ^= (tt >> t) & 1
        if c:
            cubes.append(tuple(POS if (s >> i) & 1 else ABSENT for i in range(k)))
    return sorted(cubes)


def table_by_eval(esop):
    k = esop.var_count
    return sum(eval_esop(esop, [(m >> i) & 1 for i in range(k)]) << m for m in range(1 << k))


cube_strategy = st.integers(1, 6).flatmap(
    lambda k: st.tuples(st.just(k), st.lists(st.tuples(*[st.sampled_from((NEG, POS, ABSENT))] * k),
                                             max_size=12)))


def test_anf_examples():
    assert anf_from_tt(0b1000, 2).cubes == ((POS, POS),)
    assert anf_from_tt(0b0110, 2).cubes == tuple(sorted([(ABSENT, POS), (POS, ABSENT)]))
    assert set(anf_from_tt(0b11101000, 3).cubes) == {(ABSENT, POS, POS), (POS, ABSENT, POS), (POS, POS, ABSENT)}
    assert anf_from_tt(0, 3).cubes == ()
    assert anf_from_tt(0xFF, 3).cubes == ((ABSENT,) * 3,)


def test_anf_matches_subset_definition():
    for tt in range(256):
        assert list(anf_from_tt(tt, 3).cubes) == slow_anf(tt, 3)
    rng = random.Random(1)
    for _ in range(50):
        tt = rng.getrandbits(32)
        assert list(anf_from_tt(tt, 5).cubes) == slow_anf(tt, 5)


def test_mobius_is_an_involution():
    rng = random.Random(2)
    for k in range(0, 8):
        for _ in range(20):
            tt = rng.getrandbits(1 << k)
            assert mobius(mobius(tt, k), k) == tt


def test_expand_examples():
    assert set(expand_to_anf(cubes_from_strings(["0"])).cubes) == {(ABSENT,), (POS,)}
    assert set(expand_to_anf(cubes_from_strings(["01"])).cubes) == {(ABSENT, POS), (POS, POS)}
    anf = anf_from_tt(0b11101000, 3)
    assert expand_to_anf(anf) == anf


def test_minimize_examples():
    assert minimize_esop(cubes_from_strings(["11", "10"])).cubes == ((POS, ABSENT),)
    assert minimize_esop(cubes_from_strings(["1-", "11"])).cubes == ((POS, NEG),)
    assert minimize_esop(cubes_from_strings(["11", "11"])).cubes == ()


def test_eval_examples():
    one = Esop(((ABSENT, ABSENT),), 2)
    for bits in itertools.product((0, 1), repeat=2):
        assert eval_esop(one, bits) == 1
        assert eval_esop(Esop((), 2), bits) == 0
    assert eval_esop(cubes_from_strings(["10"]), (1, 0)) == 1
    assert eval_esop(cubes_from_strings(["10"]), (1, 1)) == 0


def test_unknown_cost_rejected():
    with pytest.raises(ValueError):
        minimize_esop(anf_from_tt(6, 2), cost="gates")


def test_exhaustive_three_variable_functions():
    for tt in range(256):
        anf = anf_from_tt(tt, 3)
        assert table_by_eval(anf) == tt
        for cost in ("cubes", "literals"):
            m = minimize_esop(anf, cost=cost)
            assert esop_truth_table(m) == tt
            assert len(m) <= len(anf)
            assert anf.degree <= m.degree
            assert expand_to_anf(m) == anf
        assert algebraic_degree(tt, 3) == anf.degree


def test_minimizer_improves_on_random_six_variable_functions():
    rng = random.Random(6)
    gain = 0
    for _ in range(200):
        tt = rng.getrandbits(64)
        anf = anf_from_tt(tt, 6)
        m = minimize_esop(anf)
        assert esop_truth_table(m) == tt
        gain += len(anf) - len(m)
    assert gain > 0


@settings(max_examples=200, deadline=None)
@given(cube_strategy, st.integers(0, 3))
def test_minimize_preserves_function_and_never_grows(data, effort):
    k, cubes = data
    esop = Esop(tuple(cubes), k)
    tt = esop_truth_table(esop)
    assert table_by_eval(esop) == tt
    m = minimize_esop(esop, effort=effort)
    assert esop_truth_table(m) == tt
    assert len(set(m.cubes)) == len(m.cubes)
    # duplicates cancel first, so compare against the reduced input
    distinct = {c for c in cubes if cubes.count(c) % 2}
    assert len(m) <= len(distinct)
    assert expand_to_anf(esop) == anf_from_tt(tt, k)
