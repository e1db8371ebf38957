import math

import numpy as np
import pytest
from scipy.special import eval_genlaguerre

from kgfs.core.infomeasures import radial_moment, total_probability
from kgfs.core.kg_states import CoulombSystem, DensityModel, QuantumNumbers
from kgfs.core.sch_states import sch_density, sch_energy, sch_state

from .conftest import pion, sign_changes


@pytest.mark.parametrize("n", range(1, 9))
def test_normalization(n):
    system = pion(1)
    for l in range(n):
        assert total_probability(sch_density(QuantumNumbers(n, l), system)) == pytest.approx(1.0, abs=1e-10)


def test_ground_state_closed_form():
    system = pion(3)
    d = sch_density(QuantumNumbers(1, 0), system)
    a = sch_state(QuantumNumbers(1, 0), system).length_scale
    r = np.linspace(0.0, 6.0, 31) * a
    np.testing.assert_allclose(d.radial(r), 4.0 * np.exp(-2.0 * r / a) / a**3, rtol=1e-13)
    assert d.model is DensityModel.SCH and not d.weighted
    assert d.origin_exponent == 0.0


@pytest.mark.parametrize("n,l", [(2, 0), (3, 1), (4, 2), (6, 3)])
def test_matches_factorial_form(n, l):
    system = pion(10)
    a = sch_state(QuantumNumbers(n, l), system).length_scale
    r = np.linspace(0.05, 3.0 * n * n, 60) * a
    rho = 2.0 * r / (n * a)
    expected = (
        (2.0 / (n * a)) ** 3
        * math.factorial(n - l - 1) / (2 * n * math.factorial(n + l))
        * np.exp(-rho) * rho ** (2 * l) * eval_genlaguerre(n - l - 1, 2 * l + 1, rho) ** 2
    )
    got = sch_density(QuantumNumbers(n, l), system).radial(r)
    np.testing.assert_allclose(got, expected, rtol=1e-10, atol=1e-13 * np.max(expected))


@pytest.mark.parametrize("n,l", [(1, 0), (3, 0), (4, 1), (6, 2)])
def test_node_count(n, l):
    d = sch_density(QuantumNumbers(n, l), pion(1))
    x = np.linspace(1e-3, 100.0, 10000)
    assert sign_changes(np.asarray(d.scaled_amplitude(x))) == n - l - 1
    assert d.nodes.size == n - l - 1


def test_charge_scaling():
    qn = QuantumNumbers(3, 1)
    base = sch_density(qn, pion(2))
    scaled = sch_density(qn, pion(6))
    r = np.linspace(0.1, 20.0, 40) * base.length_scale
    np.testing.assert_allclose(scaled.radial(r / 3.0), 27.0 * base.radial(r), rtol=1e-12)


@pytest.mark.parametrize("n,l", [(1, 0), (2, 1), (3, 0), (5, 4)])
def test_mean_radius(n, l):
    system = pion(7)
    a = sch_state(QuantumNumbers(n, l), system).length_scale
    expected = 0.5 * a * (3 * n * n - l * (l + 1))
    assert radial_moment(sch_density(QuantumNumbers(n, l), system), 1.0) == pytest.approx(expected, rel=1e-10)


def test_energy():
    system = CoulombSystem(Z=1.0, mass_c2=1.0, alpha_fs=0.1)
    assert sch_energy(QuantumNumbers(2, 1), system) == pytest.approx(1.0 - 0.01 / 8, rel=1e-15)


def test_bohr_radius_in_atomic_units():
    system = pion(1)
    assert sch_state(QuantumNumbers(1, 0), system).length_scale == pytest.approx(1.0 / 273.13, rel=1e-12)
