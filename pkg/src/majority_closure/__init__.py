"""Majority closure of symmetric families of choice functions on pairs.

Decides which majority patterns a relabeling-closed family can produce,
with certificates both ways, and synthesizes explicit exact voter profiles.
"""
from .balance import (is_balanced, is_partition_balanced, is_partition_plus_balanced,
                      is_pseudo_balanced, is_weight_balanced, strong_components)
from .config import Limits
from .core import (UNDEFINED, ChoiceFunction, IntegerProfile, Permutation, ProbMatrix,
                   WeightedProfile, all_full, all_functions, apply_permutation, dual,
                   empty_function, from_code, linear_order, maj, make_choice_function,
                   prob_of, sym_closure)
from .enumeration import EnumerationReport, Mode, enumerate_check
from .errors import MajorityClosureError
from .generators import cyclic, generate_family, linear, random_tournament
from .realizability import (FCertificate, MembershipAnswer, certificate_obstruction,
                            decide_family_membership, decide_membership, f_certificate,
                            has_clause_g, oracle_membership)
from .synthesis import (cycle_profile, mcgarvey_classic, pair_bias_profile, realize_target,
                        synthesize, tie_profile, triangle_profile)
from .valency import biased_matrix, orbit_average, valencies, valency_signature
from .verify import majority_of_profile, verify

__version__ = "0.1.0"
