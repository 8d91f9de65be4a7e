"""
Lowering multiplicative depth
=============================

Cut-based rebalancing on a few small networks.
"""

import random

from xagdepth import ResynthChoice, optimize_to_fixpoint, mult_depth, mult_complexity, truth_tables
from xagdepth.networks import and_chain, maj5_sop, random_xag

for name, net in [("and chain of 8", and_chain(8)), ("majority SOP", maj5_sop())]:
    res, rounds = optimize_to_fixpoint(net)
    assert truth_tables(res) == truth_tables(net)
    print(f"{name:16s} MD {mult_depth(net):2d} -> {mult_depth(res)}   "
          f"MC {mult_complexity(net):2d} -> {mult_complexity(res)}   rounds {rounds}")

# the pseudoproduct strategy can trade ANDs for XORs
net = random_xag(10, 40, 2, random.Random(3), and_ratio=0.7)
for strategy in ("esop", "espp"):
    res, rounds = optimize_to_fixpoint(net, ResynthChoice(strategy=strategy))
    print(f"random net, {strategy}: MD {mult_depth(net)} -> {mult_depth(res)}, "
          f"MC {mult_complexity(net)} -> {mult_complexity(res)}")

# the fixpoint is local: cut size changes where it stops
for k in (3, 4, 6):
    res, _ = optimize_to_fixpoint(and_chain(16), ResynthChoice(cut_size=k))
    print(f"and chain of 16, cut size {k}: MD {mult_depth(res)}")
