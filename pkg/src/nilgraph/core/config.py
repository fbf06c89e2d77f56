"""nilgraph configuration management."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any

from dotenv import dotenv_values
from pydantic import AliasChoices, Field, ValidationError
from pydantic_settings import BaseSettings, SettingsConfigDict

from nilgraph.core.exceptions import ConfigNotFoundError, ConfigValidationError

CONFIG_FILENAME = "nilgraph.toml"
CONFIG_TABLE = "nilgraph"
ENV_PREFIX = "NILGRAPH_"


@dataclass(frozen=True)
class GenusBudget:
    """Search limits for the genus embedding searches.

    The node and step caps are deterministic; ``time_ms`` is a wall-clock
    safety net that only matters when the caps are set very high.
    """

    seed: int = 0
    time_ms: int = 30_000
    restarts: int = 24
    steps: int = 1_500
    exhaustive_nodes: int = 400_000

    def with_time(self, time_ms: int | None) -> GenusBudget:
        """Return a copy with a per-ring time override applied."""
        if time_ms is None:
            return self
        return replace(self, time_ms=time_ms)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            "seed": self.seed,
            "time_ms": self.time_ms,
            "restarts": self.restarts,
            "steps": self.steps,
            "exhaustive_nodes": self.exhaustive_nodes,
        }


@dataclass(frozen=True)
class BudgetProfile:
    """Predefined genus search profile."""

    restarts: int
    steps: int
    exhaustive_nodes: int
    description: str


# Built-in budget profiles
BUDGET_PROFILES: dict[str, BudgetProfile] = {
    "quick": BudgetProfile(
        restarts=6,
        steps=400,
        exhaustive_nodes=50_000,
        description="Smoke runs: small graphs, planar or clearly obstructed",
    ),
    "default": BudgetProfile(
        restarts=24,
        steps=1_500,
        exhaustive_nodes=400_000,
        description="Census runs: every genus-1 graph in the default census",
    ),
    "thorough": BudgetProfile(
        restarts=64,
        steps=5_000,
        exhaustive_nodes=4_000_000,
        description="Hard instances: dense graphs near the genus-2 boundary",
    ),
}


def get_profile(name: str) -> BudgetProfile:
    """Get a budget profile by name.

    Args:
        name: Profile name (quick, default, thorough)

    Returns:
        BudgetProfile with restart, step and node caps

    Raises:
        ConfigValidationError: If profile name is unknown
    """
    if name not in BUDGET_PROFILES:
        available = ", ".join(BUDGET_PROFILES.keys())
        raise ConfigValidationError("profile", name, f"one of: {available}")
    return BUDGET_PROFILES[name]


def _env(name: str) -> AliasChoices:
    """Return the environment variable name for a setting."""
    return AliasChoices(f"{ENV_PREFIX}{name}")


class NilGraphConfig(BaseSettings):
    """nilgraph runtime configuration.

    Configuration can be set via:
    1. Environment variables (NILGRAPH_* prefix)
    2. nilgraph.toml config file ([nilgraph] table)
    3. Direct instantiation
    """

    model_config = SettingsConfigDict(
        env_prefix="",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
        populate_by_name=True,
    )

    # Size bounds
    max_ring_order: int = Field(default=4096, ge=2, validation_alias=_env("MAX_RING_ORDER"))
    axiom_check_order: int = Field(
        default=4096, ge=0, validation_alias=_env("AXIOM_CHECK_ORDER")
    )  # exhaustive identity check up to this order, generators beyond
    ideal_check_order: int = Field(default=1024, ge=0, validation_alias=_env("IDEAL_CHECK_ORDER"))
    independence_max_vertices: int = Field(
        default=200, ge=1, validation_alias=_env("INDEPENDENCE_MAX_VERTICES")
    )

    # Genus search
    seed: int = Field(default=0, validation_alias=_env("SEED"))
    budget_ms: int = Field(default=30_000, ge=1, validation_alias=_env("BUDGET_MS"))
    local_search_restarts: int = Field(
        default=24, ge=1, validation_alias=_env("LOCAL_SEARCH_RESTARTS")
    )
    local_search_steps: int = Field(default=1_500, ge=1, validation_alias=_env("LOCAL_SEARCH_STEPS"))
    exhaustive_search_nodes: int = Field(
        default=400_000, ge=1, validation_alias=_env("EXHAUSTIVE_SEARCH_NODES")
    )

    # Census
    max_workers: int = Field(default=4, ge=1, validation_alias=_env("MAX_WORKERS"))

    # Logging
    log_dir: Path = Field(default_factory=lambda: Path("./logs"), validation_alias=_env("LOG_DIR"))
    verbose: bool = Field(default=False, validation_alias=_env("VERBOSE"))
    log_level: str = Field(default="INFO", validation_alias=_env("LOG_LEVEL"))

    def genus_budget(self) -> GenusBudget:
        """Derive the genus search budget from this configuration."""
        return budget_from_config(self)

    def apply_profile(self, name: str) -> NilGraphConfig:
        """Return a copy with a named budget profile's caps applied."""
        profile = get_profile(name)
        return self.model_copy(
            update={
                "local_search_restarts": profile.restarts,
                "local_search_steps": profile.steps,
                "exhaustive_search_nodes": profile.exhaustive_nodes,
            }
        )


def budget_from_config(config: NilGraphConfig) -> GenusBudget:
    """Build a GenusBudget from configuration values."""
    return GenusBudget(
        seed=config.seed,
        time_ms=config.budget_ms,
        restarts=config.local_search_restarts,
        steps=config.local_search_steps,
        exhaustive_nodes=config.exhaustive_search_nodes,
    )


def load_project_env(base_dir: Path | None = None, override: bool = False) -> Path | None:
    """Export the ``NILGRAPH_*`` entries of ``base_dir/.env`` (cwd by default).

    Other keys in the file are left out of ``os.environ``.

    Returns:
        The `.env` path that was read, or `None` if there is none.
    """
    env_path = (base_dir or Path.cwd()) / ".env"
    if not env_path.is_file():
        return None
    for key, value in dotenv_values(env_path).items():
        if not key.startswith(ENV_PREFIX) or value is None:
            continue
        if override or key not in os.environ:
            os.environ[key] = value
    return env_path


def _read_toml(path: Path) -> dict[str, Any]:
    try:
        import tomllib
    except ImportError:  # Python < 3.11
        import tomli as tomllib

    with open(path, "rb") as f:
        data: dict[str, Any] = tomllib.load(f)
    return data


def load_config(
    config_path: Path | None = None, overrides: dict[str, Any] | None = None
) -> NilGraphConfig:
    """Load configuration from file and environment.

    Priority (highest to lowest):
    1. Explicit overrides (CLI flags)
    2. Environment variables
    3. Config file
    4. Default values

    Args:
        config_path: Optional path to a nilgraph.toml file. An explicit path
            that does not exist is an error; the implicit default is optional.
        overrides: Values that win over every other source; None entries are ignored.

    Returns:
        NilGraphConfig instance

    Raises:
        ConfigNotFoundError: If an explicit config path does not exist
        ConfigValidationError: If a value fails validation
    """
    load_project_env(config_path.parent if config_path else Path.cwd())

    file_data: dict[str, Any] = {}
    if config_path is not None and not config_path.exists():
        raise ConfigNotFoundError(str(config_path))
    path = config_path or Path(CONFIG_FILENAME)
    if path.exists():
        file_data = dict(_read_toml(path).get(CONFIG_TABLE, {}))

    # Environment beats the file: drop file keys that the environment sets.
    for key in list(file_data):
        if f"{ENV_PREFIX}{key.upper()}" in os.environ:
            del file_data[key]

    try:
        config = NilGraphConfig(**file_data)
        if overrides:
            updates = {k: v for k, v in overrides.items() if v is not None}
            if updates:
                config = NilGraphConfig(**{**config.model_dump(), **updates})
    except ValidationError as e:
        first = e.errors()[0]
        field_name = ".".join(str(p) for p in first.get("loc", ())) or "config"
        raise ConfigValidationError(field_name, first.get("input"), first.get("msg", "")) from e
    return config


def save_config(config: NilGraphConfig, config_path: Path) -> None:
    """Save configuration to a TOML file.

    Args:
        config: NilGraphConfig instance to save
        config_path: Path to save the config file
    """
    lines = [
        "# nilgraph configuration",
        "",
        f"[{CONFIG_TABLE}]",
        f"max_ring_order = {config.max_ring_order}",
        f"axiom_check_order = {config.axiom_check_order}",
        f"ideal_check_order = {config.ideal_check_order}",
        f"independence_max_vertices = {config.independence_max_vertices}",
        "",
        "# Genus search",
        f"seed = {config.seed}",
        f"budget_ms = {config.budget_ms}",
        f"local_search_restarts = {config.local_search_restarts}",
        f"local_search_steps = {config.local_search_steps}",
        f"exhaustive_search_nodes = {config.exhaustive_search_nodes}",
        "",
        "# Census and logging",
        f"max_workers = {config.max_workers}",
        f'log_dir = "{config.log_dir}"',
        f'log_level = "{config.log_level}"',
        f"verbose = {str(config.verbose).lower()}",
    ]
    config_path.write_text("\n".join(lines) + "\n")
