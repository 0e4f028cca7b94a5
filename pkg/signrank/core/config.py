"""Configuration management for the signrank toolkit."""

from fractions import Fraction
from typing import List, Optional

from dotenv import load_dotenv
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

# Load environment variables
load_dotenv()


class Settings(BaseSettings):
    """Application settings from environment variables (prefix SIGNRANK_)."""

    model_config = SettingsConfigDict(
        env_prefix="SIGNRANK_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )

    # Minimum-rank search (SIGNRANK_SEED overrides the default seed)
    seed: int = Field(default=20240101)
    search_max_rank: Optional[int] = Field(default=None, ge=1)
    search_entry_bound: int = Field(default=6, ge=1)
    search_restarts: int = Field(default=4, ge=1)
    search_iterations: int = Field(default=6, ge=1)

    # Realizer
    frame_retry_cap: int = Field(default=64, ge=1)
    max_parameters: int = Field(default=3, ge=1)
    parameter_samples: List[str] = Field(default_factory=lambda: ["2", "-3", "5/2"])
    default_field_d: int = Field(default=5, ge=2)

    # Counterexample
    avoiding_line_bound: int = Field(default=10, ge=1)

    # Exact linear algebra
    minor_enumeration_limit: int = Field(default=20000, ge=1)

    # Presentation
    log_level: str = Field(default="WARNING")
    svg_size: int = Field(default=600, ge=100)

    @field_validator("parameter_samples")
    @classmethod
    def _samples_are_rational(cls, value: List[str]) -> List[str]:
        for item in value:
            Fraction(item)
        return value

    def sample_values(self) -> List[Fraction]:
        """Parameter samples as exact rationals."""
        return [Fraction(item) for item in self.parameter_samples]


# Global settings instance
settings = Settings()
