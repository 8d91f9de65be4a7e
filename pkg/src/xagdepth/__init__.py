"""Multiplicative-depth optimization of XOR-AND graphs and quantum resource estimation."""

from .xag import (AND, XOR, CONST0, CONST1, XAG, LevelInfo, XagError, compute_levels,
                  general_depth, mult_complexity, mult_depth, propagate_inverters, simulate,
                  sweep_dead, truth_tables)
from .cuts import Cut, cut_function, enumerate_cuts
from .esop import Esop, anf_from_tt, esop_truth_table, eval_esop, expand_to_anf, minimize_esop
from .espp import Espp, espp_and_cost, espp_from_esop, eval_espp, greedy_merge
from .balance import (ResynthChoice, balance_cube, balance_esop, balance_network,
                      optimize_to_fixpoint)
from .quantum import (ASAP, ALAP, QuantumCircuit, ResourceEstimate, estimate_only,
                      map_to_circuit, simulate_circuit)
from .netlist import (ParseError, parse_aiger_ascii, parse_native, read_network, write_native,
                      write_qc)
from .equiv import check_equivalence

__version__ = "0.1.0"

__all__ = [
    "AND",
    "XOR",
    "CONST0",
    "CONST1",
    "XAG",
    "LevelInfo",
    "XagError",
    "compute_levels",
    "general_depth",
    "mult_complexity",
    "mult_depth",
    "propagate_inverters",
    "simulate",
    "sweep_dead",
    "truth_tables",
    "Cut",
    "cut_function",
    "enumerate_cuts",
    "Esop",
    "anf_from_tt",
    "esop_truth_table",
    "eval_esop",
    "expand_to_anf",
    "minimize_esop",
    "Espp",
    "espp_and_cost",
    "espp_from_esop",
    "eval_espp",
    "greedy_merge",
    "ResynthChoice",
    "balance_cube",
    "balance_esop",
    "balance_network",
    "optimize_to_fixpoint",
    "ASAP",
    "ALAP",
    "QuantumCircuit",
    "ResourceEstimate",
    "estimate_only",
    "map_to_circuit",
    "simulate_circuit",
    "ParseError",
    "parse_aiger_ascii",
    "parse_native",
    "read_network",
    "write_native",
    "write_qc",
    "check_equivalence",
]
