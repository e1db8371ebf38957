"""
Strictly stateless orchestration of reports and parameter scans.
Each method is self-contained so scan points can run in worker processes.
"""
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .errors import KGFSError, ValidationError
from .infomeasures import InfoReport, info_report, zeta_fs, zeta_lmc
from .kg_states import (
    CoulombSystem,
    QuantumNumbers,
    density_li,
    kg_state,
)
from .sch_states import sch_density, sch_energy
from .settings import Settings

logger = logging.getLogger(__name__)

MEASURES = ("S", "I", "J", "diseq", "C_FS", "C_LMC", "zeta")
FORMATS = ("csv", "json")
PRESETS = ("fig1", "fig2", "fig3")


class Model(str, Enum):
    KG = "KG"
    SCH = "SCH"


def parse_models(text: str) -> Tuple[Model, ...]:
    choice = text.strip().lower()
    if choice == "both":
        return (Model.KG, Model.SCH)
    if choice in ("kg", "sch"):
        return (Model(choice.upper()),)
    raise ValidationError(f"expected kg, sch or both, got {text!r}", field="model")


def parse_int_list(text: str, field_name: str) -> Tuple[int, ...]:
    """Parse '1,2,5' or '1..6' (inclusive) or a mix of both."""
    values: List[int] = []
    try:
        for item in text.split(","):
            item = item.strip()
            if not item:
                continue
            if ".." in item:
                start, stop = (int(part) for part in item.split("..", 1))
                values.extend(range(start, stop + 1))
            else:
                values.append(int(item))
    except ValueError:
        raise ValidationError(f"cannot parse integer list {text!r}", field=field_name) from None
    if not values:
        raise ValidationError("empty list", field=field_name)
    return tuple(values)


def parse_z_values(text: str) -> Tuple[float, ...]:
    """Parse a comma-separated list of nuclear charges."""
    try:
        values = tuple(float(item) for item in text.split(",") if item.strip())
    except ValueError:
        raise ValidationError(f"cannot parse charge list {text!r}", field="Z") from None
    if not values:
        raise ValidationError("empty list", field="Z")
    return values


def parse_z_range(text: str) -> Tuple[float, ...]:
    """Parse 'min:max:step' (inclusive of max) or 'min:max' with step 1."""
    parts = text.split(":")
    if len(parts) not in (2, 3):
        raise ValidationError(f"expected min:max:step, got {text!r}", field="Z-range")
    try:
        low, high = float(parts[0]), float(parts[1])
        step = float(parts[2]) if len(parts) == 3 else 1.0
    except ValueError:
        raise ValidationError(f"cannot parse range {text!r}", field="Z-range") from None
    if not step > 0 or high < low:
        raise ValidationError(f"empty or descending range {text!r}", field="Z-range")
    count = int(math.floor((high - low) / step + 1e-9)) + 1
    return tuple(low + i * step for i in range(count))


@dataclass(frozen=True)
class ScanSpec:
    """A grid of states and models to evaluate.

    l_values None means every l < n; m_values None means m = 0. Explicit
    lists must form valid (n, l, m) triples.
    """

    models: Tuple[Model, ...]
    z_values: Tuple[float, ...]
    n_values: Tuple[int, ...]
    l_values: Optional[Tuple[int, ...]] = None
    m_values: Optional[Tuple[int, ...]] = None
    measures: Optional[Tuple[str, ...]] = None
    settings: Settings = field(default_factory=Settings)
    fmt: str = "csv"
    out: Optional[Path] = None
    svg: Optional[Path] = None
    title: str = "scan"

    def __post_init__(self):
        if not self.models:
            raise ValidationError("at least one model is required", field="model")
        if len(set(self.models)) != len(self.models):
            raise ValidationError("duplicate model", field="model")
        if not self.z_values:
            raise ValidationError("empty charge list", field="Z")
        if any(not z > 0 for z in self.z_values):
            raise ValidationError("charges must be positive", field="Z")
        if not self.n_values or any(n < 1 for n in self.n_values):
            raise ValidationError("n values must be >= 1", field="n")
        if self.l_values is not None and not self.l_values:
            raise ValidationError("empty list", field="l")
        if self.m_values is not None and not self.m_values:
            raise ValidationError("empty list", field="m")
        if self.fmt not in FORMATS:
            raise ValidationError(f"expected one of {', '.join(FORMATS)}", field="format")

        measures = self.measures
        if measures is None:
            measures = MEASURES if len(self.models) == 2 else MEASURES[:-1]
            object.__setattr__(self, "measures", measures)
        unknown = [m for m in measures if m not in MEASURES]
        if unknown:
            raise ValidationError(
                f"unknown measure(s) {', '.join(unknown)}; expected {', '.join(MEASURES)}",
                field="measures",
            )
        if "zeta" in measures and len(self.models) != 2:
            raise ValidationError("zeta requires both models", field="measures")

        for n in self.n_values:
            for l in self.l_values or ():
                if not 0 <= l < n:
                    raise ValidationError(f"invalid combination n={n}, l={l}", field="l")
                for m in self.m_values or ():
                    if abs(m) > l:
                        raise ValidationError(
                            f"invalid combination n={n}, l={l}, m={m}", field="m"
                        )
        if self.l_values is None:
            for m in self.m_values or ():
                if abs(m) >= max(self.n_values):
                    raise ValidationError(f"m={m} fits no l < n", field="m")

    def points(self) -> List[Tuple[float, QuantumNumbers]]:
        """(Z, quantum numbers) in output order: Z, then n, l, m."""
        grid = []
        for Z in self.z_values:
            for n in self.n_values:
                ls = self.l_values if self.l_values is not None else range(n)
                for l in ls:
                    ms = self.m_values if self.m_values is not None else (0,)
                    for m in ms:
                        if abs(m) <= l:
                            grid.append((Z, QuantumNumbers(n, l, m)))
        return grid


@dataclass(frozen=True)
class ScanRow:
    """One (model, Z, n, l, m) output row; either report or error is set."""

    model: Model
    Z: float
    n: int
    l: int
    m: int
    report: Optional[InfoReport] = None
    zeta_fs: Optional[float] = None
    zeta_lmc: Optional[float] = None
    error: Optional[str] = None

    @property
    def success(self) -> bool:
        return self.error is None


class ComplexityRunner:
    """Stateless helpers that turn settings and quantum numbers into reports."""

    @staticmethod
    def build_system(Z: float, settings: Settings) -> CoulombSystem:
        if settings.units == "natural":
            return CoulombSystem.natural(Z, settings.alpha_fs)
        return CoulombSystem.atomic(Z, settings.mass_me, settings.alpha_fs)

    @staticmethod
    def run_report(
        qn: QuantumNumbers,
        system: CoulombSystem,
        model: Model,
        settings: Optional[Settings] = None,
    ) -> InfoReport:
        """Compute every measure of one state under one model."""
        settings = settings or Settings()
        if model is Model.KG:
            state = kg_state(qn, system)
            return info_report(
                density_li(state),
                settings.quadrature,
                settings.inner_cutoff,
                epsilon_over_mc2=state.epsilon_ratio,
                binding_energy=state.binding_energy,
            )
        energy = sch_energy(qn, system)
        return info_report(
            sch_density(qn, system),
            settings.quadrature,
            settings.inner_cutoff,
            epsilon_over_mc2=energy / system.mass_c2,
            binding_energy=energy - system.mass_c2,
        )

    @staticmethod
    def run_pair(
        Z: float, qn: QuantumNumbers, models: Sequence[Model], settings: Settings
    ) -> List[ScanRow]:
        """Rows for every requested model at one point; failures become error rows."""
        system = ComplexityRunner.build_system(Z, settings)
        reports: Dict[Model, InfoReport] = {}
        errors: Dict[Model, str] = {}
        for model in models:
            try:
                reports[model] = ComplexityRunner.run_report(qn, system, model, settings)
            except KGFSError as e:
                logger.debug("%s Z=%g %s failed: %s", model.value, Z, qn.label, e)
                errors[model] = f"{type(e).__name__}: {e}"

        z_fs = z_lmc = None
        if Model.KG in reports and Model.SCH in reports:
            kg, sch = reports[Model.KG], reports[Model.SCH]
            z_fs = zeta_fs(sch.c_fs, kg.c_fs)
            z_lmc = zeta_lmc(sch.c_lmc, kg.c_lmc)

        return [
            ScanRow(
                model=model,
                Z=Z,
                n=qn.n,
                l=qn.l,
                m=qn.m,
                report=reports.get(model),
                zeta_fs=z_fs,
                zeta_lmc=z_lmc,
                error=errors.get(model),
            )
            for model in models
        ]

    @staticmethod
    def run_scan(spec: ScanSpec) -> List[ScanRow]:
        """Evaluate the grid; rows come back in grid order for any worker count."""
        tasks = [(Z, qn, spec.models, spec.settings) for Z, qn in spec.points()]
        logger.debug("scan %s: %d points, %d workers", spec.title, len(tasks), spec.settings.workers)
        if spec.settings.workers > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=spec.settings.workers) as pool:
                chunks = list(pool.map(_evaluate_point, tasks))
        else:
            chunks = [_evaluate_point(task) for task in tasks]
        return [row for chunk in chunks for row in chunk]

    @staticmethod
    def summarize(rows: Sequence[ScanRow]) -> Dict[str, Any]:
        failed = [r for r in rows if not r.success]
        regularized = [
            r for r in rows
            if r.report is not None and (r.report.fisher_regularized or r.report.diseq_regularized)
        ]
        return {"rows": len(rows), "failed": len(failed), "regularized": len(regularized)}


def _evaluate_point(task: Tuple[float, QuantumNumbers, Sequence[Model], Settings]) -> List[ScanRow]:
    Z, qn, models, settings = task
    return ComplexityRunner.run_pair(Z, qn, models, settings)


def preset_spec(name: str, settings: Optional[Settings] = None, **options: Any) -> ScanSpec:
    """Grids reproducing the charge, principal and angular dependence figures.

    fig1 covers Z = 1..68, the whole range with a subcritical l = 0 state.
    """
    settings = settings or Settings()
    both = (Model.KG, Model.SCH)
    if name == "fig1":
        return ScanSpec(both, tuple(float(z) for z in range(1, 69)), (1,), (0,), (0,),
                        settings=settings, title=name, **options)
    if name == "fig2":
        return ScanSpec(both, (10.0, 19.0, 37.0, 55.0), tuple(range(1, 7)), (0,), (0,),
                        settings=settings, title=name, **options)
    if name == "fig3":
        return ScanSpec(both, (19.0, 55.0), tuple(range(1, 6)), None, (0,),
                        settings=settings, title=name, **options)
    raise ValidationError(f"unknown preset {name!r}; expected {', '.join(PRESETS)}", field="preset")
