"""Exact-arithmetic toolkit for the multivariate Tutte polynomial.

Evaluation by three independent routes (subgraph expansion, integer-q
coloring sum, reduced deletion-contraction), coefficient vectors and
classical specializations, matroid rank oracles with duality, the
parallel/series/duality/diamond weight algebra with certified interval
images, Sturm-based real-root isolation, the named zero-free weight
intervals, and certification suites instantiating the sign theorems.
"""

from .engine import (coeffs, coeffs_matroid, chromatic, flow, tutte_xy,
                     z_delcon, z_expansion, z_matroid_expansion,
                     z_potts_coloring)
from .exact import Rational, RationalEnclosure, UniPoly, BiPoly, rat
from .graphs import (MultiGraph, parse_graph, format_graph, path_graph,
                     cycle_graph, banana_graph, complete_graph)
from .matroids import Matroid, graphic, uniform, dual, direct_sum, parse_matroid
from .regions import diamond_interval, interval_Im, V2, V3
from .roots import isolate_roots, isolate_root_in, nth_root_enclosure
from .weightmaps import par, ser, dualw, diamond_map

__version__ = "1.0.0"

__all__ = [
    "Rational", "RationalEnclosure", "UniPoly", "BiPoly", "rat",
    "MultiGraph", "parse_graph", "format_graph",
    "path_graph", "cycle_graph", "banana_graph", "complete_graph",
    "Matroid", "graphic", "uniform", "dual", "direct_sum", "parse_matroid",
    "coeffs", "coeffs_matroid", "chromatic", "flow", "tutte_xy",
    "z_delcon", "z_expansion", "z_matroid_expansion", "z_potts_coloring",
    "par", "ser", "dualw", "diamond_map",
    "isolate_roots", "isolate_root_in", "nth_root_enclosure",
    "diamond_interval", "interval_Im", "V2", "V3",
    "__version__",
]
