"""Exact combinatorics for the blocks of truncated q-Schur algebras of type A."""

from .abacus import beta_numbers, e_core, e_weight, partition_from_betas, render_abacus, same_e_core
from .blocks import (BlockDecomposition, BlockInvariants, WeightPoset, block_label, chi_lambda,
                     frobenius_reduction, jantzen_blocks, length_function, members_with_core,
                     s_lambda, sim_lambda_classes, verify_main_theorem)
from .hooks import (RimHookInfo, horizontal_condition_a, horizontal_condition_c,
                    only_horizontal_hooks, remove_rim_hook, rim_hook, wrap_hook_candidates)
from .jantzen import (JantzenEdge, JantzenGraph, jantzen_graph, jantzen_nonzero, jantzen_partners,
                      jantzen_partners_by_columns, linkage_classes, nu_ep)
from .partitions import (ArithmeticParams, Node, Partition, conjugate, dominates, hook_length,
                         partitions_of, residue)
from .posets import (AllPartitions, Dominating, ECoreEquals, Explicit, Filtered, MaxLength,
                     NonemptyECore, generate_poset_members, parse_poset_spec)

__version__ = "0.1.0"
