"""Triangle packings, triangle hittings and Tuza-ratio certificates."""
from ._jit import backend
from .bounds import (all_bounds, complete_split_bound, complete_split_packing, extend_packing,
                     extend_packing_bound, lower_bound_general, lower_bound_split,
                     nu_complete_formula, tripartite_bound_factor)
from .coloring import delta_color_class1, konig_color, vizing_color
from .errors import TuzaError
from .flow import balanced_factor, f_factor, flow_feasible, ore_ryser_feasible
from .fourpartite import FourPartiteSpec, TuzaCertificate, build_complete_4partite, certify
from .graph import (Graph, PartitionedGraph, enumerate_triangles, validate_coloring,
                    validate_hitting, validate_packing)
from .harness import (ExperimentReport, gen_split, gen_tripartite, sweep_4partite,
                      verify_split_dense, verify_tripartite_dense)
from .hitting import clique_edges_hitting, cut_complement_hitting
from .oracles import exact_max_cut, exact_nu, exact_tau

__version__ = "0.1.0"
