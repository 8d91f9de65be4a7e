"""
From truth tables to XOR forms
==============================

Minimized ESOPs and pseudoproduct merging on a few small functions.
"""

from xagdepth.esop import anf_from_tt, minimize_esop, esop_truth_table
from xagdepth.espp import espp_from_esop, greedy_merge, total_and_cost


def show(esop):
    sym = {0: "0", 1: "1", 2: "-"}
    return " ^ ".join("".join(sym[p] for p in c) for c in esop.cubes) or "0"


# majority of three: three products in the ANF, degree 2
maj3 = 0b11101000
anf = anf_from_tt(maj3, 3)
print("MAJ-3 ANF:", show(anf), " degree", anf.degree)

# x1 & ~x2 needs two ANF cubes but only one ESOP cube
tt = 0b0010
print("x1 & ~x2 ANF:", show(anf_from_tt(tt, 2)), "  ESOP:", show(minimize_esop(anf_from_tt(tt, 2))))

# a random 6-input function
import random
rng = random.Random(1)
f = rng.getrandbits(64)
a = anf_from_tt(f, 6)
m = minimize_esop(a)
assert esop_truth_table(m) == f
print(f"random 6-input function: ANF {len(a)} cubes, minimized ESOP {len(m)} cubes")

# pseudoproducts: x1 ^ x2 ^ x1x3 ^ x2x3 becomes (x1^x2) ^ (x1^x2)x3, one AND instead of two
e = espp_from_esop(anf_from_tt(0b00000110, 3))
g = greedy_merge(e)
print("ESOP terms:", e.terms, " AND cost", total_and_cost(e))
print("merged:    ", g.terms, " AND cost", total_and_cost(g))
