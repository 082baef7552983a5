from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field, replace
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

import yaml

try:
    from dotenv import load_dotenv
except ImportError:  # pragma: no cover
    load_dotenv = None

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EnvStatus:
    loaded: bool
    path: Optional[Path]
    message: str


@dataclass(frozen=True)
class HGSSettings:
    project_root: Path
    reports_dir: Path
    config_path: Path
    env_status: EnvStatus


@dataclass(frozen=True)
class PipelineConfig:
    """config/pipeline.yaml 의 계산 파라미터"""

    precision_digits: int = 50
    snap_denominator_bound: int = 10**6
    numeric_tol: float = 1e-10
    tolerance_ladder: Tuple[float, ...] = (1e-6, 1e-8, 1e-10)
    base_point: complex = complex(-1.0, 0.0)
    k_min: int = 2
    k_max: int = 8
    max_workers: int = 4
    verify_timeout: float = 300.0
    source: Optional[Path] = field(default=None, compare=False)


_ENV_STATUS: Optional[EnvStatus] = None
_WARNED_FALLBACKS: set[str] = set()

DEFAULT_CONFIG_RELPATH = "config/pipeline.yaml"

# 환경 변수 -> (PipelineConfig 필드, 변환기)
_ENV_OVERRIDES = {
    "HGS_PRECISION": ("precision_digits", int),
    "HGS_SNAP_BOUND": ("snap_denominator_bound", int),
    "HGS_NUMERIC_TOL": ("numeric_tol", float),
    "HGS_MAX_WORKERS": ("max_workers", int),
}


def get_project_root() -> Path:
    return Path(__file__).resolve().parents[2]


def _resolve_path(value: str, base_dir: Path) -> Path:
    raw = (value or "").strip()
    if not raw:
        return base_dir

    path = Path(raw).expanduser()
    if not path.is_absolute():
        path = (base_dir / path).resolve()
    return path


def _env(name: str, default: str = "") -> str:
    value = os.getenv(name)
    if value is None:
        return default
    value = value.strip()
    return value or default


def _warn_once(key: str, message: str, *args: Any) -> None:
    if key in _WARNED_FALLBACKS:
        return
    _WARNED_FALLBACKS.add(key)
    logger.warning(message, *args)


def load_project_env(force: bool = False) -> EnvStatus:
    global _ENV_STATUS
    if _ENV_STATUS is not None and not force:
        return _ENV_STATUS

    root = get_project_root()
    env_hgs = root / ".env-hgs"
    env_default = root / ".env"

    if load_dotenv is None:
        _ENV_STATUS = EnvStatus(
            loaded=False,
            path=None,
            message="python-dotenv 미설치 상태입니다. OS 환경 변수와 기본값만 사용합니다.",
        )
        return _ENV_STATUS

    for candidate in (env_hgs, env_default):
        if candidate.exists():
            load_dotenv(candidate, override=False)
            _ENV_STATUS = EnvStatus(
                loaded=True,
                path=candidate,
                message=f"{candidate.name} 파일을 로드했습니다.",
            )
            return _ENV_STATUS

    _ENV_STATUS = EnvStatus(
        loaded=False,
        path=None,
        message=(
            "`.env-hgs` 또는 `.env` 파일을 찾지 못했습니다. "
            "기본값과 현재 셸 환경 변수를 사용합니다."
        ),
    )
    return _ENV_STATUS


@lru_cache(maxsize=1)
def get_settings() -> HGSSettings:
    env_status = load_project_env()
    project_root = get_project_root()
    reports_dir = _resolve_path(_env("HGS_REPORTS_DIR", "./reports"), project_root)
    config_path = _resolve_path(_env("HGS_CONFIG", DEFAULT_CONFIG_RELPATH), project_root)

    return HGSSettings(
        project_root=project_root,
        reports_dir=reports_dir,
        config_path=config_path,
        env_status=env_status,
    )


def get_env_status() -> EnvStatus:
    return get_settings().env_status


def get_reports_dir() -> Path:
    return get_settings().reports_dir


def _coerce_config(raw: Dict[str, Any], source: Optional[Path]) -> PipelineConfig:
    base = PipelineConfig()
    exact = raw.get("exact", {}) or {}
    numeric = raw.get("numeric", {}) or {}
    verify = raw.get("verify", {}) or {}

    base_point = numeric.get("base_point", [base.base_point.real, base.base_point.imag])
    if isinstance(base_point, (list, tuple)):
        base_point = complex(float(base_point[0]), float(base_point[1]))
    else:
        base_point = complex(base_point)

    ladder = numeric.get("tolerance_ladder", list(base.tolerance_ladder))

    return PipelineConfig(
        precision_digits=int(exact.get("precision_digits", base.precision_digits)),
        snap_denominator_bound=int(
            exact.get("snap_denominator_bound", base.snap_denominator_bound)
        ),
        numeric_tol=float(numeric.get("tol", base.numeric_tol)),
        tolerance_ladder=tuple(float(t) for t in ladder),
        base_point=base_point,
        k_min=int(verify.get("k_min", base.k_min)),
        k_max=int(verify.get("k_max", base.k_max)),
        max_workers=int(verify.get("max_workers", base.max_workers)),
        verify_timeout=float(verify.get("timeout", base.verify_timeout)),
        source=source,
    )


def _apply_env_overrides(config: PipelineConfig) -> PipelineConfig:
    updates: Dict[str, Any] = {}
    for name, (field_name, cast) in _ENV_OVERRIDES.items():
        value = _env(name)
        if not value:
            continue
        try:
            updates[field_name] = cast(value)
        except ValueError:
            _warn_once(
                f"{name}={value}",
                "%s=%s 값을 해석할 수 없어 기본값을 사용합니다.",
                name,
                value,
            )
    return replace(config, **updates) if updates else config


def load_pipeline_config(path: Optional[Path] = None) -> PipelineConfig:
    """YAML 설정 로드 (없으면 기본값) 후 HGS_* 환경 변수 오버라이드 적용"""
    load_project_env()
    config_path = Path(path) if path is not None else get_settings().config_path

    if not config_path.exists():
        logger.warning(f"[Config] 설정 파일 없음: {config_path}")
        return _apply_env_overrides(PipelineConfig())

    with open(config_path, "r", encoding="utf-8") as f:
        raw = yaml.safe_load(f) or {}

    logger.debug(f"[Config] 설정 로드: {config_path}")
    return _apply_env_overrides(_coerce_config(raw, config_path))


@lru_cache(maxsize=1)
def get_pipeline_config() -> PipelineConfig:
    return load_pipeline_config()


def reset_settings_cache() -> None:
    global _ENV_STATUS
    _ENV_STATUS = None
    _WARNED_FALLBACKS.clear()
    get_settings.cache_clear()
    get_pipeline_config.cache_clear()
