"""
Nonrelativistic hydrogenic states, the baseline the relativistic model is
compared against. They go through the same Laguerre and density code as the
Klein-Gordon states, with l in place of l' and no charge weight.
"""
import math
from dataclasses import dataclass

from .kg_states import CoulombSystem, DensityModel, ProbabilityDensity, QuantumNumbers


@dataclass(frozen=True)
class SchBoundState:
    """Hydrogenic state; length_scale is the Bohr radius a = hbar c / (m0c^2 gamma)."""

    qn: QuantumNumbers
    system: CoulombSystem
    length_scale: float


def sch_state(qn: QuantumNumbers, system: CoulombSystem) -> SchBoundState:
    return SchBoundState(qn, system, system.hbar_c / (system.mass_c2 * system.gamma))


def sch_energy(qn: QuantumNumbers, system: CoulombSystem) -> float:
    """Total energy m0c^2 - m0c^2 gamma^2 / (2 n^2)."""
    return system.mass_c2 * (1.0 - system.gamma**2 / (2.0 * qn.n**2))


def sch_density(qn: QuantumNumbers, system: CoulombSystem) -> ProbabilityDensity:
    """D(r) = (2/(na))^3 (n-l-1)!/(2n (n+l)!) e^(-rho) rho^(2l) [L_(n-l-1)^(2l+1)(rho)]^2, rho = 2r/(na)."""
    state = sch_state(qn, system)
    return ProbabilityDensity(
        model=DensityModel.SCH,
        qn=qn,
        Z=system.Z,
        length_scale=0.5 * qn.n * state.length_scale,
        compton_length=system.compton_length,
        l_eff=float(qn.l),
        amplitude_norm=1.0 / math.sqrt(2.0 * qn.n),
    )
