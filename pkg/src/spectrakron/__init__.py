"""Exact symmetric-group representation theory (characters, dimensions,
Schur functions, Kronecker coefficients) and a small-scale analyzer for the
spectra of bipartite quantum states and their marginals."""

from .characters import CharacterTable, character, character_table
from .dimensions import DimensionReport, bounds, dim_u, dim_v
from .errors import CacheError, CapExceededError, InternalConsistencyError, ValidationError
from .information import kl_divergence, shannon_entropy
from .kronecker import (
    KroneckerTriple,
    cg_dimension_check,
    entropy_triple_check,
    kron,
    kron_table,
    stretch_nonvanishing_check,
)
from .partitions import (
    CycleType,
    Partition,
    class_size,
    conjugate,
    enumerate_partitions,
    majorizes,
    normalize,
    stretch,
)
from .quantum import (
    DensityMatrix,
    ball_probability,
    compat_search,
    entropy_inequality_report,
    kw_bound_check,
    partial_trace,
    spectrum,
    trace_product_slack,
    young_distribution,
)
from .symfunc import (
    content_expansion_check,
    frobenius_check,
    homog,
    power_sum,
    product_point,
    schur,
)

__version__ = "0.1.0"
