import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables from .env file
env_path = Path(__file__).parent.parent / '.env'
load_dotenv(env_path)


def _env_int(key: str, default: int) -> int:
    return int(os.getenv(key, str(default)))


def _env_float(key: str, default: float) -> float:
    return float(os.getenv(key, str(default)))


class Config:
    # Solver Configuration
    KAPPA = _env_int('MIM_KAPPA', 12)
    SEED = _env_int('MIM_SEED', 1)
    WEIGHT_S = _env_float('MIM_WEIGHT_S', 0.636)
    ASSERTION_LEVEL = _env_int('MIM_ASSERTION_LEVEL', 1)

    # Bisection Configuration
    BISECTION_STARTS = _env_int('MIM_BISECTION_STARTS', 8)
    KL_MAX_ITER = _env_int('MIM_KL_MAX_ITER', 10)
    CUT_QUALITY_TARGET = 1 / 6 + 0.1

    # Oracle Configuration
    ORACLE_MAX_EDGES = _env_int('MIM_ORACLE_MAX_EDGES', 30)

    # Bench Configuration
    BENCH_JOBS = _env_int('MIM_BENCH_JOBS', 1)
    GROWTH_BASE = 1.2630
    GROWTH_SLACK = 0.05

    # Logging
    LOG_LEVEL = os.getenv('MIM_LOG_LEVEL', 'WARNING').upper()

    @classmethod
    def validate(cls):
        """Validate configuration values"""
        if cls.KAPPA < 3:
            raise ValueError(f"MIM_KAPPA must be at least 3, got {cls.KAPPA}")
        if not 0.5 <= cls.WEIGHT_S <= 1.0:
            raise ValueError(f"MIM_WEIGHT_S must lie in [0.5, 1], got {cls.WEIGHT_S}")
        if cls.ASSERTION_LEVEL not in (0, 1, 2):
            raise ValueError(f"MIM_ASSERTION_LEVEL must be 0, 1 or 2, got {cls.ASSERTION_LEVEL}")
        if cls.BISECTION_STARTS < 1:
            raise ValueError("MIM_BISECTION_STARTS must be positive")
        if cls.ORACLE_MAX_EDGES < 0:
            raise ValueError("MIM_ORACLE_MAX_EDGES cannot be negative")
        return True

config = Config()
