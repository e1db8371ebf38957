"""
Run settings and the flat key=value configuration file.

Precedence is CLI flags > config file > built-in defaults.
"""
import os
from dataclasses import asdict, dataclass, fields, replace
from datetime import datetime
from pathlib import Path
from typing import Any, Callable, Dict, Optional

from dotenv import dotenv_values, load_dotenv

from .errors import ValidationError
from .kg_states import FINE_STRUCTURE, PION_MASS_ME
from .quadrature import QuadratureConfig

CONFIG_ENV_VAR = "KGFS_CONFIG"
UNIT_SYSTEMS = ("atomic", "natural")


@dataclass(frozen=True)
class Settings:
    """Physical constants, tolerances and run options for one invocation."""

    mass_me: float = PION_MASS_ME
    alpha_fs: float = FINE_STRUCTURE
    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_levels: int = 12
    inner_cutoff: float = 1e-3
    units: str = "atomic"
    workers: int = 1

    def __post_init__(self):
        if not self.mass_me > 0:
            raise ValidationError("must be positive", field="mass_me")
        if not self.alpha_fs > 0:
            raise ValidationError("must be positive", field="alpha_fs")
        if self.inner_cutoff < 0:
            raise ValidationError("must be non-negative", field="inner_cutoff")
        if self.units not in UNIT_SYSTEMS:
            raise ValidationError(
                f"expected one of {', '.join(UNIT_SYSTEMS)}", field="units"
            )
        if self.workers < 1:
            raise ValidationError("must be at least 1", field="workers")
        try:
            self.quadrature
        except ValueError as e:
            raise ValidationError(str(e), field="tolerance") from e

    @property
    def quadrature(self) -> QuadratureConfig:
        return QuadratureConfig(
            rel_tol=self.rel_tol, abs_tol=self.abs_tol, max_levels=self.max_levels
        )

    def with_overrides(self, **overrides: Any) -> "Settings":
        """Return a copy with every non-None override applied."""
        changes = {k: v for k, v in overrides.items() if v is not None}
        unknown = set(changes) - {f.name for f in fields(self)}
        if unknown:
            raise ValidationError(f"unknown setting(s): {', '.join(sorted(unknown))}")
        return replace(self, **changes)


# Config-file keys mapped to (Settings field, parser)
_CONFIG_KEYS: Dict[str, tuple[str, Callable[[str], Any]]] = {
    "MASS": ("mass_me", float),
    "ALPHA": ("alpha_fs", float),
    "REL_TOL": ("rel_tol", float),
    "TOL": ("rel_tol", float),
    "ABS_TOL": ("abs_tol", float),
    "MAX_LEVELS": ("max_levels", int),
    "INNER_CUTOFF": ("inner_cutoff", float),
    "UNITS": ("units", str.lower),
    "WORKERS": ("workers", int),
}


def _line_of(path: Path, key: str) -> Optional[int]:
    with open(path, "r", encoding="utf-8") as f:
        for number, line in enumerate(f, start=1):
            stripped = line.strip()
            if stripped.startswith("export "):
                stripped = stripped[len("export "):].lstrip()
            if stripped.split("=", 1)[0].strip() == key:
                return number
    return None


def read_config_file(path: Path) -> Dict[str, Any]:
    """Parse a flat KEY=VALUE file into Settings field values."""
    if not path.exists():
        raise ValidationError(f"config file not found: {path}")

    values: Dict[str, Any] = {}
    for key, raw in dotenv_values(path, encoding="utf-8").items():
        spec = _CONFIG_KEYS.get(key.upper())
        if spec is None:
            raise ValidationError(
                f"unknown key (expected one of {', '.join(_CONFIG_KEYS)})",
                field=key,
                line=_line_of(path, key),
            )
        if raw is None or raw == "":
            raise ValidationError("missing value", field=key, line=_line_of(path, key))
        name, parse = spec
        try:
            values[name] = parse(raw)
        except ValueError:
            raise ValidationError(
                f"cannot parse {raw!r}", field=key, line=_line_of(path, key)
            ) from None
    return values


def resolve_config_path(config_path: Optional[Path]) -> Optional[Path]:
    """Pick the config file from the flag, else from KGFS_CONFIG (.env aware)."""
    if config_path is not None:
        return config_path
    load_dotenv()
    env_path = os.getenv(CONFIG_ENV_VAR)
    return Path(env_path) if env_path else None


def load_settings(
    config_path: Optional[Path] = None, **overrides: Any
) -> Settings:
    """Build Settings from defaults, then the config file, then CLI overrides."""
    path = resolve_config_path(config_path)
    file_values = read_config_file(path) if path is not None else {}
    try:
        settings = Settings(**file_values)
    except ValidationError as e:
        raise ValidationError(f"{e} (in {path})") from e
    return settings.with_overrides(**overrides)


def _get_templates_dir() -> Path:
    return Path(__file__).parent.parent / "templates"


def write_config_template(path: Path, force: bool = False) -> Path:
    """Write a commented config file holding the built-in defaults."""
    if path.exists() and not force:
        raise ValidationError(f"{path} already exists (use --force to overwrite)")
    with open(_get_templates_dir() / "config_template.env", "r", encoding="utf-8") as f:
        content = f.read()

    content = content.replace("{created_date}", datetime.now().strftime("%Y-%m-%d %H:%M:%S"))
    for name, value in asdict(Settings()).items():
        content = content.replace("{" + name + "}", repr(value) if isinstance(value, float) else str(value))

    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(content)
    return path
