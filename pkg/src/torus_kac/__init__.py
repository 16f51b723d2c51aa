"""Kac polynomials of supernova quivers via Bruhat cells, generating functions and torus orbits."""

from .bruhat import Composition, cross_section, inversion_graph, inversions
from .errors import TorusKacError
from .exactmath import BiPoly, IntPoly, RatFunc, parse_intpoly, poly_eval, poly_interpolate
from .graph import ColoredMultigraph, external_activity_subgraph_sum, external_activity_tutte, tutte
from .kacsum import kac_all_ones, kac_polynomial, rw_polynomial
from .orbits import gm_orbit_count, kac_via_oracle, oracle_cell_count, oracle_flag_orbits
from .quiver import MultiPartition, build_supernova, classify_root, delta, parse_multipartition
from .symfunc import genfun_series, kac_via_genfun

__all__ = [
    "BiPoly",
    "ColoredMultigraph",
    "Composition",
    "IntPoly",
    "MultiPartition",
    "RatFunc",
    "TorusKacError",
    "build_supernova",
    "classify_root",
    "cross_section",
    "delta",
    "external_activity_subgraph_sum",
    "external_activity_tutte",
    "genfun_series",
    "gm_orbit_count",
    "inversion_graph",
    "inversions",
    "kac_all_ones",
    "kac_polynomial",
    "kac_via_genfun",
    "kac_via_oracle",
    "oracle_cell_count",
    "oracle_flag_orbits",
    "parse_intpoly",
    "parse_multipartition",
    "poly_eval",
    "poly_interpolate",
    "rw_polynomial",
    "tutte",
]
