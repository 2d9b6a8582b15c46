"""Run configuration: flat key=value files plus command-line overrides."""
import os
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Tuple, Union, get_args, get_origin, get_type_hints

from dotenv import dotenv_values, load_dotenv

from tauprec.constants import (
    B0_RATIO,
    EPS_CLUSTER,
    EPS_OUTLIER,
    PIA_MAX_ITER,
    PIA_TOL,
    X_MAX_FACTOR,
)
from tauprec.exceptions import ConfigError

load_dotenv()

WORKERS_ENV = "TAUPREC_WORKERS"
MODES = ("eig", "svd")


def _default_workers() -> int:
    raw = os.getenv(WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ConfigError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class RunConfig:
    """Settings of one command run.

    Keys of a config file are the field names. Empty ``sizes``, ``alphas`` or
    ``precond`` and ``None`` values mean "use the command's default".
    """

    experiment: str = ""
    example: str = ""
    mode: str = "eig"
    sizes: Tuple[int, ...] = ()
    alphas: Tuple[float, ...] = ()
    beta: Optional[float] = None
    precond: str = ""
    tol: Optional[float] = None
    maxit: Optional[int] = None
    seed: int = 0
    out: Path = Path("tauprec_output")
    eps_cluster: float = EPS_CLUSTER
    eps_outlier: float = EPS_OUTLIER
    dense_cap: Optional[int] = None
    workers: int = field(default_factory=_default_workers)
    spectra: bool = False
    rate: float = 0.1
    volatility: float = 0.3
    strike: float = 100.0
    horizon: float = 1.0
    dx: float = 0.05
    dt: Optional[float] = None
    x_max_factor: float = X_MAX_FACTOR
    b0_ratio: float = B0_RATIO
    pia_tol: float = PIA_TOL
    max_iter: int = PIA_MAX_ITER
    adjusted: bool = True
    mc: bool = False
    paths: int = 100_000
    mc_dt_ratio: float = 0.1

    def __post_init__(self):
        if self.mode not in MODES:
            raise ConfigError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.eps_cluster <= 0 or self.eps_outlier <= 0:
            raise ConfigError("eps_cluster and eps_outlier must be positive")
        if self.workers < 1:
            raise ConfigError("workers must be at least 1")
        if self.tol is not None and self.tol <= 0:
            raise ConfigError("tol must be positive")
        if not 0 < self.b0_ratio <= 1:
            raise ConfigError("b0_ratio must lie in (0, 1]")
        if not 0 < self.mc_dt_ratio <= 1:
            raise ConfigError("mc_dt_ratio must lie in (0, 1]")

    def as_dict(self) -> Dict[str, Any]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


def _coerce(key: str, hint: Any, raw: Any) -> Any:
    """Convert ``raw`` to the type ``hint`` of field ``key``."""
    if not isinstance(raw, str):
        return tuple(raw) if get_origin(hint) is tuple else raw
    text = raw.strip()
    origin = get_origin(hint)
    try:
        if origin is Union:
            if text.lower() in ("", "none"):
                return None
            inner = [a for a in get_args(hint) if a is not type(None)][0]
            return _coerce(key, inner, text)
        if origin is tuple:
            item = get_args(hint)[0]
            return tuple(item(part) for part in text.split(",") if part.strip())
        if hint is bool:
            if text.lower() in _TRUE:
                return True
            if text.lower() in _FALSE:
                return False
            raise ValueError(text)
        if hint is Path:
            return Path(text)
        return hint(text)
    except (TypeError, ValueError):
        raise ConfigError(f"cannot read {key}={raw!r}") from None


def load_config(
    path: Optional[Union[str, Path]] = None,
    overrides: Optional[Mapping[str, Any]] = None,
) -> RunConfig:
    """Read a key=value file and apply command-line overrides.

    Args:
        path (Optional[Union[str, Path]], optional): Config file; ``#`` starts
            a comment. Defaults to None.
        overrides (Optional[Mapping[str, Any]], optional): Values from the
            command line; ``None`` entries are ignored.

    Returns:
        RunConfig: The configuration.

    Raises:
        ConfigError: Missing file, unknown key or unreadable value.
    """
    hints = get_type_hints(RunConfig)
    values: Dict[str, Any] = {}

    if path is not None:
        path = Path(path)
        if not path.is_file():
            raise ConfigError(f"config file {path} does not exist")
        for key, raw in dotenv_values(path).items():
            key = key.strip().lower()
            if key not in hints:
                raise ConfigError(f"unknown config key {key!r} in {path}")
            values[key] = _coerce(key, hints[key], "" if raw is None else raw)

    for key, raw in (overrides or {}).items():
        if raw is None:
            continue
        if key not in hints:
            raise ConfigError(f"unknown option {key!r}")
        values[key] = _coerce(key, hints[key], raw)

    return replace(RunConfig(), **values)
