"""Shared runtime configuration helpers for hgstokes."""

from .settings import (
    EnvStatus,
    HGSSettings,
    PipelineConfig,
    get_env_status,
    get_pipeline_config,
    get_project_root,
    get_reports_dir,
    get_settings,
    load_pipeline_config,
    load_project_env,
    reset_settings_cache,
)

__all__ = [
    "EnvStatus",
    "HGSSettings",
    "PipelineConfig",
    "get_env_status",
    "get_pipeline_config",
    "get_project_root",
    "get_reports_dir",
    "get_settings",
    "load_pipeline_config",
    "load_project_env",
    "reset_settings_cache",
]
