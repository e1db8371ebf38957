"""
kgfs - Fisher-Shannon and LMC complexity of Klein-Gordon and Schrödinger
Coulomb bound states (pionic atoms by default).
"""

__version__ = "1.0.0"
__author__ = "kgfs Contributors"
__description__ = "Information-theoretic complexity of relativistic Coulomb states"

from .core import (
    ComplexityRunner,
    CoulombSystem,
    InfoReport,
    QuantumNumbers,
    Settings,
    density_li,
    density_nli,
    info_report,
    kg_state,
    sch_density,
    zeta_fs,
)

__all__ = [
    "ComplexityRunner", "CoulombSystem", "InfoReport", "QuantumNumbers", "Settings",
    "density_li", "density_nli", "info_report", "kg_state", "sch_density", "zeta_fs",
]
