"""Exact computations around Borel-de Siebenthal pairs: root-system structure
constants, the Stanley-Reisner presentation of global Weyl module endomorphism
algebras with Hilbert series and shellings, irreducibility and
finite-dimensionality criteria, and local Weyl module dimensions for (B_n, D_n)."""

from .bdspair import BdsPair, ReflectionChain, all_pairs, build_pair, eligible_nodes
from .rootsys import RootSystem, build
from .srring import (
    HilbertSeries,
    SimplicialComplex,
    SRPresentation,
    SRVariable,
    Weight0,
    hilbert_series_bruteforce,
    presentation,
    verify_shelling,
)
from .weylcrit import (
    DeltaWeight,
    EvalParams,
    EvalPoint,
    IdealPoint,
    ideal_point_from_params,
    is_alambda_trivial,
    is_global_weyl_irreducible,
    local_weyl_dim_bn,
    local_weyl_dim_report,
    record_constants,
    sl2_local_weyl_basis,
    weight_convert,
    weight_restrict,
)

__all__ = [
    "BdsPair", "ReflectionChain", "all_pairs", "build_pair", "eligible_nodes",
    "RootSystem", "build",
    "HilbertSeries", "SimplicialComplex", "SRPresentation", "SRVariable", "Weight0",
    "hilbert_series_bruteforce", "presentation", "verify_shelling",
    "DeltaWeight", "EvalParams", "EvalPoint", "IdealPoint",
    "ideal_point_from_params", "is_alambda_trivial", "is_global_weyl_irreducible",
    "local_weyl_dim_bn", "local_weyl_dim_report", "record_constants",
    "sl2_local_weyl_basis", "weight_convert", "weight_restrict",
]

__version__ = "0.1.0"
