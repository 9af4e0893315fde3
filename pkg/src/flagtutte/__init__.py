"""Exact Tutte polynomials of matroids, polymatroids and flag matroids.

Matroid combinatorics, base polytopes with exact lattice-point machinery,
Hilbert series of vertex cones, and the torus-equivariant localization
pipeline that turns a flag matroid into its bivariate polynomial
invariant.  Everything is integer or rational arithmetic; nothing floats.
"""

from .errors import FlagTutteError, Verdict
from .matroid import (Matroid, check_rank_axioms, cover_by_independent,
                      gale_max, gale_max_family, matroid_from_bases,
                      matroid_from_graph, matroid_from_matrix,
                      uniform_matroid, union_rank)
from .polyflag import (Flag, FlagMatroid, Polymatroid, enumerate_flags,
                       flag_check_gale, flag_from_constituents,
                       flag_from_subspace_flag, is_quotient, lifted_independent,
                       poly_bases, polymatroid_from_matroid,
                       polymatroid_from_rank, polymatroid_from_subspaces,
                       polymatroid_of_flag, polymatroid_to_matroid,
                       vertex_from_ordering)
from .laurent import KRational, LaurentPoly, evaluate_at_one
from .lattice import (HalfOpenSimplicialCone, LatticePolytope, RationalCone,
                      base_polytope, cone_at_vertex, count_shifted,
                      decompose_lattice_point, edge_direction_check, edges,
                      flag_polytope, hilbert_numerator, hilbert_series,
                      is_normal, lattice_points, minkowski_sum,
                      poly_base_polytope, triangulate)
from .invariants import (BivarPoly, characteristic_poly, log_concavity,
                         q_coefficients, qprime, qprime_delcon_check,
                         ttoq_check, tutte_activity, tutte_delcon, tutte_eval,
                         tutte_rank_nullity)
from .ktheory import (EquivariantClass, FlagSpace, ProjProductSpace, k_tutte,
                      o1_class, pullback, pushforward_to_pp,
                      to_nonequivariant, y_class)

__version__ = "0.1.0"
