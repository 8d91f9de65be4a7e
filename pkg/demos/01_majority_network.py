"""
Majority of five with three AND gates
=====================================

Build the 5-input majority XAG and check it against a plain truth table.
"""

from xagdepth import mult_complexity, mult_depth, truth_tables, compute_levels, write_native
from xagdepth.networks import maj5_xag, maj5_sop

net = maj5_xag()
print("gates:", net.num_gates, " MC:", mult_complexity(net), " MD:", mult_depth(net))

# truth table bit m is the output for the assignment whose binary code is m (x1 is bit 0)
expected = sum(1 << m for m in range(32) if bin(m).count("1") >= 3)
assert truth_tables(net) == [expected]
print("function is majority-of-5")

# AND levels: how many ANDs sit on the longest path to each gate
info = compute_levels(net)
for node, op, a, b in net.gates():
    if op == "AND":
        print(f"AND g{node}: level {info.level[node]}, latest level {info.rlevel[node]}")

# the textbook AND/OR version of the same function is far deeper
sop = maj5_sop()
print("sum-of-products form -> MC:", mult_complexity(sop), " MD:", mult_depth(sop))

print()
print(write_native(net))
