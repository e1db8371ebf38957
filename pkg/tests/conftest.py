import numpy as np
import pytest

from kgfs.core.kg_states import FINE_STRUCTURE, PION_MASS_ME, CoulombSystem
from kgfs.core.quadrature import QuadratureConfig


def pion(Z: float, mass_me: float = PION_MASS_ME) -> CoulombSystem:
    return CoulombSystem.atomic(Z, mass_me, FINE_STRUCTURE)


def coupling(gamma: float, Z: float = 1.0) -> CoulombSystem:
    """Natural-unit system with Z * alpha = gamma."""
    return CoulombSystem(Z=Z, mass_c2=1.0, alpha_fs=gamma / Z, hbar_c=1.0)


def sign_changes(values: np.ndarray) -> int:
    signs = np.sign(values[values != 0])
    return int(np.count_nonzero(signs[1:] != signs[:-1]))


@pytest.fixture
def tight() -> QuadratureConfig:
    return QuadratureConfig(rel_tol=1e-12, abs_tol=1e-15, max_levels=14)
