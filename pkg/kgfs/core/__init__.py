"""
Core library: special functions, quadrature, bound states and information measures.
"""
from .errors import (
    ConvergenceError,
    DivergenceError,
    DomainError,
    EvaluationError,
    KGFSError,
    QuadratureError,
    RangeError,
    SupercriticalChargeError,
    ValidationError,
)
from .infomeasures import InfoReport, info_report, zeta_fs, zeta_lmc
from .kg_states import (
    CoulombSystem,
    DensityModel,
    KGBoundState,
    ProbabilityDensity,
    QuantumNumbers,
    density_li,
    density_nli,
    kg_state,
)
from .quadrature import QuadratureConfig, QuadratureResult
from .runner import ComplexityRunner, Model, ScanSpec, preset_spec
from .sch_states import SchBoundState, sch_density
from .settings import Settings, load_settings

__all__ = [
    "ComplexityRunner", "ConvergenceError", "CoulombSystem", "DensityModel",
    "DivergenceError", "DomainError", "EvaluationError", "InfoReport", "KGBoundState",
    "KGFSError", "Model", "ProbabilityDensity", "QuadratureConfig", "QuadratureError",
    "QuadratureResult", "QuantumNumbers", "RangeError", "ScanSpec", "SchBoundState",
    "Settings", "SupercriticalChargeError", "ValidationError", "density_li",
    "density_nli", "info_report", "kg_state", "load_settings", "preset_spec",
    "sch_density", "zeta_fs", "zeta_lmc",
]
