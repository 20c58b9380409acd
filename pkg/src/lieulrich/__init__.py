"""Exact Lie-theoretic computations for equivariant Ulrich bundles on G/P_k."""
from .bwb import BundleSpec, CohomologyResult, cohomology, is_ulrich_by_cohomology
from .parsing import VarietySpec, format_weight, parse_variety, parse_weight
from .rootsys import (
    DynkinType,
    InvariantError,
    RootSystem,
    build,
    dimension,
    exceptional_cases,
    fano_index,
    pairing,
    radical_coroots,
)
from .sing import AffineForm, sing_forms, sing_set
from .ulrich import SearchBox, UlrichCertificate, classify, is_ulrich, rank
from .weyl import DominanceResult, is_singular, reflect, to_dominant

__version__ = "0.1.0"
