"""Tolerances and runtime configuration."""

import os
from dataclasses import dataclass

# Amplitudes below this magnitude are dropped after every element application.
PRUNE_TOLERANCE = 1e-15

# Normalisation, unitarity and isometry checks.
NORM_TOLERANCE = 1e-12

# alpha**2 + beta**2 == 1 is enforced to this precision.
COEFFICIENT_TOLERANCE = 1e-9

# Brute force vs closed form agreement.
COMPARISON_TOLERANCE = 1e-10

# Squared overlap a corrected output must reach with the ideal state.
CORRECTION_TOLERANCE = 1e-10

THREADS_ENV = "TIMEBIN_AMP_THREADS"
LOG_LEVEL_ENV = "TIMEBIN_AMP_LOG_LEVEL"


@dataclass
class SimulationConfig:
    """Runtime knobs for sweeps and the command line."""

    # Upper bound on grid points evaluated concurrently
    max_threads: int = 4

    # Default log level when --debug is not given
    log_level: str = "WARNING"

    # Default figure grid
    sweep_etas: tuple[float, ...] = (0.2, 0.4, 0.8)
    sweep_t_min: float = 0.01
    sweep_t_max: float = 0.99
    sweep_t_step: float = 0.01

    def __post_init__(self) -> None:
        if self.max_threads < 1:
            self.max_threads = 1
        self.log_level = self.log_level.upper()

    @classmethod
    def from_env(cls) -> "SimulationConfig":
        """Create configuration from environment variables."""
        threads = os.getenv(THREADS_ENV, "4")
        try:
            max_threads = int(threads)
        except ValueError:
            max_threads = 4
        return cls(
            max_threads=max_threads,
            log_level=os.getenv(LOG_LEVEL_ENV, "WARNING"),
        )


DEFAULT_CONFIG = SimulationConfig()


def get_config() -> SimulationConfig:
    """Get the current configuration, honouring environment overrides."""
    if os.getenv(THREADS_ENV) is not None or os.getenv(LOG_LEVEL_ENV) is not None:
        return SimulationConfig.from_env()

    return DEFAULT_CONFIG
