"""Covering, identifying and locating-dominating codes on finite graphs,
binary hypercubes and toroidal grids: verification with witnesses, exact
minimum-code search with optimality certificates, explicit constructions,
and exact-rational counting bounds.

Optimality statements assume the usual setting of simple connected graphs;
verification itself runs on any simple graph as given.
"""

from .graphs import (Graph, GraphError, GraphFormatError, GridFamily, TorusSpec,
                     complete_bipartite, cycle, figure_graph, graph_from_text,
                     graph_from_uri, graph_to_text, grid_offsets, hypercube,
                     parse_family, path, read_graph, torus, torus_vertex,
                     write_graph)
from .codes import (AdmitsReport, Code, CodeClass, CodeError, CodeKind,
                    EmptyCodeError, EquivalenceResult, UncoveredVertex,
                    UnseparatedPair, VerificationReport, admits,
                    classes_equivalent_on, iset, iset_mask, parse_kind, verify,
                    witness_violates)
from .bounds import (ShareError, ShareProfile, WindowReport,
                     hypercube_lid_lower_bound, hypercube_lid_upper_bound,
                     max_share_lower_bound, share, share_profile,
                     window_count_bound)
from .solver import (InadmissibleGraphError, InfeasibleClassError,
                     RefutationOutcome, SolveBudget, SolveResult, SolverError,
                     class_constraints, refute_size, solve_min)
from .constructions import (ConstructionError, ExplicitCode, ExplicitEntry,
                            EXPLICIT_REGISTRY, LinearCode, dimension_lift,
                            dimension_lift_valid, direct_sum, explicit,
                            full_space, hamming, hamming_lift,
                            lift_covering_to_lid)
from .patterns import (BUILTIN_PATTERNS, BuiltinPattern, PatternError,
                       PeriodicPattern, builtin_pattern, hnf_lattices,
                       pattern_from_text, pattern_search, pattern_to_text,
                       pattern_to_torus_code, read_pattern, search_lattices,
                       write_pattern)

__version__ = "0.1.0"
