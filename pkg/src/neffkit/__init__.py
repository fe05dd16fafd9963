"""Waveguide effective-index solvers and uncertainty-bound analysis.

Core solvers find guided-mode effective indices for planar slabs (TE/TM,
any order) and step-index circular cores (exact HE11 and scalar LP01).
On top of those, the package models source coherence and evaluates a
Heisenberg-style lower bound on how sharply the effective index can be
defined for a transversely localized field, including a sweep engine and
a batch CLI (``python -m neffkit`` or the ``neffkit`` script).
"""

from .coherence import CoherenceInfo, LightSource, coherence_info, preset_sources
from .errors import ConfigError, DomainError, PoleError, SolverError, UnderflowError
from .fiber import (
    HE11,
    LP01,
    FiberGeometry,
    FiberMode,
    normalized_frequency,
    solve_he11,
    solve_lp01,
)
from .quantities import (
    CONSTS,
    EigenvalueSet,
    PhotonState,
    make_eigenvalue_set,
    photon_state,
)
from .slab import (
    TE,
    TM,
    SlabGeometry,
    SlabMode,
    cutoff_thickness,
    enumerate_modes,
    phase_residual,
    solve_mode,
)
from .sweep import (
    CORE_DIMENSION,
    EFFECTIVE_WIDTH,
    SweepRow,
    SweepSpec,
    SweepTable,
    fuzziness_crossover,
    run_sweep,
)
from .uncertainty import (
    FUZZY,
    MARGINAL,
    WELL_DEFINED,
    BoundInputs,
    UncertaintyReport,
    bound_neff,
    classify,
    definability_limit,
    delta_beta_coherence,
    delta_beta_spectral,
    dirac_bound_lambda_eff,
    dirac_bound_neff,
    measurement_duration,
)
from .units import LENGTH_UNITS, format_length, parse_length

__version__ = "0.1.0"

__all__ = [
    "CONSTS",
    "CORE_DIMENSION",
    "CoherenceInfo",
    "ConfigError",
    "DomainError",
    "EFFECTIVE_WIDTH",
    "EigenvalueSet",
    "FUZZY",
    "FiberGeometry",
    "FiberMode",
    "HE11",
    "LENGTH_UNITS",
    "LP01",
    "LightSource",
    "MARGINAL",
    "BoundInputs",
    "PhotonState",
    "PoleError",
    "SlabGeometry",
    "SlabMode",
    "SolverError",
    "SweepRow",
    "SweepSpec",
    "SweepTable",
    "TE",
    "TM",
    "UncertaintyReport",
    "UnderflowError",
    "WELL_DEFINED",
    "bound_neff",
    "classify",
    "coherence_info",
    "cutoff_thickness",
    "definability_limit",
    "delta_beta_coherence",
    "delta_beta_spectral",
    "dirac_bound_lambda_eff",
    "dirac_bound_neff",
    "enumerate_modes",
    "format_length",
    "fuzziness_crossover",
    "make_eigenvalue_set",
    "measurement_duration",
    "normalized_frequency",
    "parse_length",
    "phase_residual",
    "photon_state",
    "preset_sources",
    "run_sweep",
    "solve_he11",
    "solve_lp01",
    "solve_mode",
    "__version__",
]
