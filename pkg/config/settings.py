"""Application settings loaded from environment variables / .env file."""

from pathlib import Path

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="IDFORGE_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # ── Verifier ─────────────────────────────────────────────────────────
    term_budget: int = 1_000_000
    default_seed: int = 0
    default_trials: int = 20
    default_jobs: int = 1

    # ── Grids ────────────────────────────────────────────────────────────
    grid_file: str = ""

    # ── Logging ──────────────────────────────────────────────────────────
    log_level: str = "WARNING"

    # ── Derived paths ────────────────────────────────────────────────────
    @property
    def grid_path(self) -> Path:
        if self.grid_file:
            return Path(self.grid_file)
        return Path(__file__).resolve().parent.parent / "config.toml"


settings = Settings()
