import math

import numpy as np
import pytest

from kgfs.core.errors import DivergenceError, DomainError
from kgfs.core.infomeasures import (
    angular_disequilibrium,
    angular_entropy,
    angular_fisher,
    angular_fisher_quadrature,
    disequilibrium,
    entropic_power,
    fisher_information,
    fisher_information_nested,
    fisher_shannon,
    info_report,
    integrate_radial,
    lmc_complexity,
    shannon_entropy,
    zeta_fs,
    zeta_lmc,
)
from kgfs.core.kg_states import CoulombSystem, QuantumNumbers, density_li, density_nli, kg_state
from kgfs.core.quadrature import QuadratureConfig, integrate_interval
from kgfs.core.sch_states import sch_density
from kgfs.core.specfun import sph_harmonic_sq

from .conftest import coupling, pion

C_FS_HYDROGENIC_1S = 2 * math.e * math.pi ** (-1 / 3)
C_LMC_HYDROGENIC_1S = math.e**3 / 8


def unit_bohr(Z: float = 1.0) -> CoulombSystem:
    """Natural-unit system whose Bohr radius is 1 / Z."""
    return CoulombSystem(Z=Z, mass_c2=1.0, alpha_fs=1.0, hbar_c=1.0)


class TestHydrogenicGroundState:
    @pytest.mark.parametrize("Z", [1.0, 2.5])
    def test_closed_forms(self, Z):
        a = 1.0 / Z
        report = info_report(sch_density(QuantumNumbers(1, 0), unit_bohr(Z)))
        assert report.shannon_S == pytest.approx(3 + math.log(math.pi * a**3), rel=1e-10)
        assert report.fisher_I == pytest.approx(4 / a**2, rel=1e-10)
        assert report.disequilibrium == pytest.approx(1 / (8 * math.pi * a**3), rel=1e-10)
        assert report.c_fs == pytest.approx(C_FS_HYDROGENIC_1S, rel=1e-9)
        assert report.c_lmc == pytest.approx(C_LMC_HYDROGENIC_1S, rel=1e-9)
        assert report.shannon_angular == pytest.approx(math.log(4 * math.pi))
        assert report.fisher_angular == 0.0
        assert not report.fisher_regularized and not report.diseq_regularized

    def test_standalone_functionals_agree_with_report(self):
        d = sch_density(QuantumNumbers(3, 1, 1), pion(12))
        report = info_report(d)
        assert shannon_entropy(d) == pytest.approx(report.shannon_S, rel=1e-13)
        assert fisher_information(d) == pytest.approx(report.fisher_I, rel=1e-13)
        assert disequilibrium(d) == pytest.approx(report.disequilibrium, rel=1e-13)
        assert report.fisher_I == pytest.approx(report.fisher_radial + report.fisher_angular)
        assert report.shannon_S == pytest.approx(report.shannon_radial + report.shannon_angular)


class TestAngular:
    @pytest.mark.parametrize("l", range(6))
    def test_fisher_closed_form_matches_quadrature(self, l):
        for m in range(-l, l + 1):
            assert angular_fisher_quadrature(l, m) == pytest.approx(angular_fisher(l, m), abs=1e-9)

    def test_fisher_values(self):
        assert angular_fisher(0, 0) == 0.0
        assert angular_fisher(1, 0) == 8.0
        assert angular_fisher(1, 1) == 2.0
        assert angular_fisher(3, -2) == 20.0

    def test_entropy_of_s_state(self):
        assert angular_entropy(0, 0) == pytest.approx(math.log(4 * math.pi), abs=1e-14)

    @pytest.mark.parametrize("l,m", [(1, 0), (1, 1), (2, 1), (3, 0), (4, 4)])
    def test_entropy_bounded_by_uniform(self, l, m):
        assert 0 < angular_entropy(l, m) < math.log(4 * math.pi)
        assert angular_entropy(l, m) == pytest.approx(angular_entropy(l, -m), rel=1e-12)

    @pytest.mark.parametrize("l", range(5))
    def test_disequilibrium_matches_quadrature(self, l):
        config = QuadratureConfig(rel_tol=1e-12)
        for m in range(l + 1):
            expected = integrate_interval(
                lambda t: 2 * math.pi * sph_harmonic_sq(l, m, t) ** 2 * np.sin(t), 0.0, math.pi, config
            ).value
            assert angular_disequilibrium(l, m) == pytest.approx(expected, rel=1e-10)
        assert angular_disequilibrium(0, 0) == pytest.approx(1 / (4 * math.pi), rel=1e-14)


class TestSeparableFisher:
    def test_nested_quadrature_agrees(self):
        d = density_li(kg_state(QuantumNumbers(2, 1, 0), pion(30)))
        config = QuadratureConfig(rel_tol=1e-9)
        assert fisher_information_nested(d, config) == pytest.approx(fisher_information(d), rel=1e-6)

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "Z,n,l,m", [(55, 3, 2, 1), (19, 3, 1, 1), (45, 4, 3, 2), (55, 1, 0, 0), (10, 2, 0, 0)]
    )
    def test_nested_quadrature_grid(self, Z, n, l, m):
        d = density_li(kg_state(QuantumNumbers(n, l, m), pion(Z)))
        config = QuadratureConfig(rel_tol=1e-9)
        assert fisher_information_nested(d, config) == pytest.approx(fisher_information(d), rel=1e-6)

    @pytest.mark.parametrize(
        "d",
        [
            density_li(kg_state(QuantumNumbers(3, 1), pion(40))),
            density_li(kg_state(QuantumNumbers(2, 0), pion(40))),
            sch_density(QuantumNumbers(4, 2), pion(40)),
        ],
        ids=["kg-3p", "kg-2s", "sch-4d"],
    )
    def test_radial_term_matches_finite_differences(self, d):
        report = info_report(d)
        lower = 1e-3 * d.compton_length / d.length_scale if report.fisher_regularized else 0.0
        h = 1e-6

        def integrand(x):
            D = np.asarray(d.scaled_radial(x))
            dD = (np.asarray(d.scaled_radial(x * (1 + h))) - np.asarray(d.scaled_radial(x * (1 - h)))) / (2 * h * x)
            with np.errstate(divide="ignore", invalid="ignore"):
                return np.where(D > 0, x * x * dD * dD / D, 0.0)

        expected = integrate_radial(d, integrand, lower=lower).value / d.length_scale**2
        assert report.fisher_radial == pytest.approx(expected, rel=1e-6)


class TestRegularization:
    def test_s_state_fisher_diverges_without_cutoff(self):
        d = density_li(kg_state(QuantumNumbers(1, 0), pion(30)))
        with pytest.raises(DivergenceError):
            fisher_information(d, inner_cutoff=None)
        with pytest.raises(DivergenceError):
            info_report(d, inner_cutoff=0.0)

    def test_s_state_fisher_is_regularized(self):
        report = info_report(density_li(kg_state(QuantumNumbers(2, 0), pion(30))))
        assert report.fisher_regularized and not report.diseq_regularized
        assert math.isfinite(report.fisher_I) and report.fisher_I > 0

    def test_p_state_needs_no_cutoff(self):
        d = density_li(kg_state(QuantumNumbers(2, 1), pion(60)))
        assert fisher_information(d, inner_cutoff=None) == pytest.approx(fisher_information(d), rel=1e-12)

    def test_disequilibrium_regularized_only_near_critical_charge(self):
        assert not info_report(density_li(kg_state(QuantumNumbers(1, 0), pion(55)))).diseq_regularized
        report = info_report(density_li(kg_state(QuantumNumbers(1, 0), pion(62))))
        assert report.diseq_regularized
        with pytest.raises(DivergenceError):
            disequilibrium(density_li(kg_state(QuantumNumbers(1, 0), pion(62))), inner_cutoff=None)

    def test_cutoff_dependence_follows_origin_power_law(self):
        state = kg_state(QuantumNumbers(1, 0), pion(40))
        d = density_li(state)
        values = [fisher_information(d, inner_cutoff=c) for c in (1e-3, 1e-4, 1e-5)]
        assert values[0] < values[1] < values[2]
        step1, step2 = values[1] - values[0], values[2] - values[1]
        # integrand ~ x^(2l'-1): each decade of cutoff multiplies the increment by 10^(-2l')
        assert step2 / step1 == pytest.approx(10 ** (-2 * state.l_eff), rel=0.02)


class TestScalarFunctionals:
    def test_entropic_power(self):
        S = 3 + math.log(math.pi)
        assert entropic_power(S) == pytest.approx(math.exp(2 * S / 3) / (2 * math.pi * math.e))
        # a Gaussian of variance s^2 per axis has J = s^2
        s2 = 0.7
        gaussian_S = 1.5 * math.log(2 * math.pi * math.e * s2)
        assert entropic_power(gaussian_S) == pytest.approx(s2, rel=1e-14)

    def test_fisher_shannon(self):
        assert fisher_shannon(2.0, 0.5) == 1.0
        with pytest.raises(DomainError):
            fisher_shannon(-1.0, 1.0)
        with pytest.raises(DomainError):
            fisher_shannon(1.0, 0.0)

    def test_lmc(self):
        assert lmc_complexity(0.5, math.log(2.0)) == pytest.approx(1.0)
        with pytest.raises(DomainError):
            lmc_complexity(0.0, 1.0)

    def test_zeta(self):
        assert zeta_fs(3.0, 4.0) == pytest.approx(0.25)
        assert zeta_fs(4.0, 4.0) == 0.0
        assert zeta_lmc(1.0, 2.0) == pytest.approx(0.5)
        with pytest.raises(DomainError):
            zeta_fs(0.0, 1.0)

    def test_unnormalized_density_rejected(self):
        d = density_nli(kg_state(QuantumNumbers(1, 0), pion(30)))
        with pytest.raises(DomainError):
            shannon_entropy(d)
        with pytest.raises(DomainError):
            info_report(d)


class TestInvariance:
    def test_length_rescaling(self):
        qn = QuantumNumbers(3, 2, 1)
        base = info_report(sch_density(qn, unit_bohr(1.0)))
        squeezed = info_report(sch_density(qn, unit_bohr(4.0)))
        assert squeezed.shannon_S == pytest.approx(base.shannon_S - 3 * math.log(4.0), rel=1e-10)
        assert squeezed.fisher_I == pytest.approx(16 * base.fisher_I, rel=1e-10)
        assert squeezed.c_fs == pytest.approx(base.c_fs, rel=1e-9)
        assert squeezed.c_lmc == pytest.approx(base.c_lmc, rel=1e-9)

    @pytest.mark.parametrize("n,l", [(1, 0), (2, 1)])
    def test_mass_invariance(self, n, l):
        qn = QuantumNumbers(n, l)
        light = info_report(density_li(kg_state(qn, pion(55, 273.13))))
        heavy = info_report(density_li(kg_state(qn, pion(55, 2 * 273.13))))
        assert heavy.c_fs == pytest.approx(light.c_fs, rel=1e-9)
        assert heavy.c_lmc == pytest.approx(light.c_lmc, rel=1e-9)

    def test_complexity_lower_bounds(self):
        for Z in (5, 40, 68):
            for n in (1, 2, 3):
                for l in range(n):
                    for d in (
                        density_li(kg_state(QuantumNumbers(n, l), pion(Z))),
                        sch_density(QuantumNumbers(n, l), pion(Z)),
                    ):
                        report = info_report(d)
                        assert report.c_fs >= 3.0 - 1e-9, d.label
                        assert report.c_lmc >= 1.0 - 1e-9, d.label

    def test_relativistic_correction_small_at_weak_coupling(self):
        qn = QuantumNumbers(2, 1)
        system = coupling(1e-3)
        kg = info_report(density_li(kg_state(qn, system)))
        sch = info_report(sch_density(qn, system))
        assert abs(zeta_fs(sch.c_fs, kg.c_fs)) < 1e-5


def test_report_labels_and_dict():
    report = info_report(density_li(kg_state(QuantumNumbers(3, 2, -1), pion(19))))
    assert report.labels == (19.0, 3, 2, -1)
    data = report.to_dict()
    assert data["model"] == "KG-LI"
    assert data["c_fs"] == report.c_fs
    assert set(data) >= {"shannon_S", "fisher_I", "disequilibrium", "fisher_regularized"}
