import random
from functools import lru_cache

import pytest

from xagdepth.cuts import cut_function, enumerate_cuts, is_valid_cut
from xagdepth.networks import maj5_xag, random_xag
from xagdepth.xag import XAG, simulate

from conftest import maj_table, random_nets


def reference_cuts(net, k):
    """All k-feasible cuts straight from the recursive definition, then minimal ones kept."""

    @lru_cache(maxsize=None)
    def all_cuts(node):
        if node == 0:
            return frozenset({frozenset()})
        if net.is_input(node):
            return frozenset({frozenset({node})})
        _, a, b = net.gate(node)
        out = {frozenset({node})}
        for c1 in all_cuts(a >> 1):
            for c2 in all_cuts(b >> 1):
                u = c1 | c2
                if len(u) <= k:
                    out.add(u)
        return frozenset(out)

    result = {}
    for node, _, _, _ in net.gates():
        cuts = [c for c in all_cuts(node) if c != {node}]
        result[node] = {tuple(sorted(c)) for c in cuts if not any(d < c for d in cuts)}
    return result


def cone_table(net, root, leaves):
    """Table of ``root`` over ``leaves`` by brute force: simulate the cone per assignment."""
    tt = 0
    for m in range(1 << len(leaves)):
        val = {0: 0}
        for j, leaf in enumerate(leaves):
            val[leaf] = (m >> j) & 1

        def ev(node):
            if node not in val:
                op, a, b = net.gate(node)
                x = ev(a >> 1) ^ (a & 1)
                y = ev(b >> 1) ^ (b & 1)
                val[node] = x & y if op == "AND" else x ^ y
            return val[node]

        tt |= ev(root) << m
    return tt


def test_input_has_only_trivial_cut():
    net = XAG(3)
    net.add_output(net.add_and(net.input(1), net.input(2)))
    cuts = enumerate_cuts(net)
    for i in (1, 2, 3):
        assert [c.leaves for c in cuts[i]] == [(i,)]
        assert cuts[i][0].tt == 0b10


def test_single_and_with_two_leaves():
    net = XAG(2)
    g = net.add_and(*net.inputs()) >> 1
    cuts = enumerate_cuts(net, k=2)
    assert [c.leaves for c in cuts[g]] == [(g,), (1, 2)]
    assert cuts[g][1].tt == 0b1000


def test_maj5_output_root_has_full_input_cut():
    net = maj5_xag()
    root = net.outputs[0] >> 1
    cuts = enumerate_cuts(net, k=6, cut_limit=25)
    full = [c for c in cuts[root] if c.leaves == (1, 2, 3, 4, 5)]
    assert len(full) == 1
    assert full[0].tt == maj_table(5)


def test_trivial_cut_function_is_projection():
    net = maj5_xag()
    for node in range(1, net.num_nodes):
        assert cut_function(net, node, [node]) == 0b10


def test_support_normalization():
    net = XAG(9)
    x = net.inputs()
    g1 = net.add_and(x[0], x[2])
    g2 = net.add_and(x[3], x[8])
    assert cut_function(net, g1 >> 1, [1, 3]) == 0b1000
    assert cut_function(net, g2 >> 1, [4, 9]) == 0b1000


def test_maj3_cone_table():
    net = XAG(3)
    x1, x2, x3 = net.inputs()
    maj = net.add_or(net.add_or(net.add_and(x1, x2), net.add_and(x1, x3)), net.add_and(x2, x3))
    flip = 0xFF if maj & 1 else 0  # OR is built as a complemented AND
    assert cut_function(net, maj >> 1, [1, 2, 3]) ^ flip == 0b11101000
    cuts = enumerate_cuts(net, k=3)
    assert any(c.leaves == (1, 2, 3) and c.tt ^ flip == 0b11101000 for c in cuts[maj >> 1])


def test_invalid_cut_is_rejected():
    net = maj5_xag()
    root = net.outputs[0] >> 1
    assert not is_valid_cut(net, root, [1, 2, 3])
    with pytest.raises(ValueError):
        cut_function(net, root, [1, 2, 3])


@pytest.mark.parametrize("k", [1, 17, 0])
def test_cut_size_range(k):
    with pytest.raises(ValueError):
        enumerate_cuts(maj5_xag(), k=k)


def test_cut_limit_must_be_positive():
    with pytest.raises(ValueError):
        enumerate_cuts(maj5_xag(), cut_limit=0)


def test_enumerated_tables_match_cone_simulation():
    for net in random_nets(60, seed=3, max_inputs=8, max_gates=30):
        cuts = enumerate_cuts(net, k=5, cut_limit=10)
        for node, _, _, _ in net.gates():
            for c in cuts[node][1:]:
                assert is_valid_cut(net, node, c.leaves)
                assert c.tt == cone_table(net, node, c.leaves)
                assert c.tt == cut_function(net, node, c.leaves)


def test_cuts_are_irredundant_and_limited():
    for net in random_nets(60, seed=4):
        cuts = enumerate_cuts(net, k=6, cut_limit=8)
        for node, _, _, _ in net.gates():
            rest = [set(c.leaves) for c in cuts[node][1:]]
            assert len(rest) <= 8
            assert all(len(c) <= 6 for c in rest)
            for i, a in enumerate(rest):
                for j, b in enumerate(rest):
                    assert i == j or not a < b


def test_unlimited_matches_reference_enumerator():
    rng = random.Random(12)
    for _ in range(80):
        net = random_xag(rng.randint(2, 7), rng.randint(1, 20), 2, rng)
        k = rng.randint(2, 5)
        ref = reference_cuts(net, k)
        cuts = enumerate_cuts(net, k=k, cut_limit=None)
        for node, _, _, _ in net.gates():
            assert {c.leaves for c in cuts[node][1:]} == ref[node]


def test_cut_function_matches_network_outputs():
    for net in random_nets(30, seed=8, max_inputs=6):
        inputs = list(range(1, net.num_inputs + 1))
        for o in net.outputs:
            if o >> 1 <= net.num_inputs:
                continue
            tt = cut_function(net, o >> 1, inputs)
            for m in range(1 << net.num_inputs):
                bits = [(m >> j) & 1 for j in range(net.num_inputs)]
                node_val = simulate(net, bits)[net.outputs.index(o)] ^ (o & 1)
                assert (tt >> m) & 1 == node_val
