"""Exact extremal graph theory at desk scale: Turan numbers of odd wheels,
their extremal constructions, and decomposition families."""

from .canon import canonical_form, canonical_graph, is_isomorphic
from .constructions import (ConstructionRecipe, SplitChoice, build_extremal_family, build_regular_pfree,
                            f_value, feasible_component_partition)
from .decomposition import DecompositionResult, chromatic_number, decomposition_family, subchromatic
from .detect import (EmbeddingWitness, contains_subgraph, contains_wheel, find_disjoint_copies,
                     fixed_length_cycle_in_subset, is_free)
from .errors import (ArgumentError, BudgetExceeded, CapabilityError, CapacityError, ConstructionError,
                     ParseError, TuranLabError)
from .graph import (DegreeProfile, Graph, add_edge, complement, complete, complete_bipartite, cycle,
                    disjoint_union, empty, fan, join, matching, path, petersen, star, turan_edges,
                    turan_graph, wheel)
from .graph6 import decode_graph6, encode_graph6
from .matching import matching_number
from .patterns import (Clique, Custom, Cycle, Fan, Family, Matching, Path, PatternSpec, Star, Wheel,
                       parse_pattern)
from .search import SearchReport, enumerate_free_graphs, lower_bound_hill_climb, turan_number
from .verify import VerificationRow, verify_proposition21, verify_theorem

__version__ = "0.1.0"
