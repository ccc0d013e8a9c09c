from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # ── Application ──────────────────────────────────────────────────────────
    APP_NAME: str = "Teleportation GME Toolkit"
    APP_VERSION: str = "0.1.0"
    ENVIRONMENT: str = "development"  # development | production
    LOG_LEVEL: str = "INFO"
    # ── State tolerances ─────────────────────────────────────────────────────
    NORMALIZATION_TOL: float = 1e-9
    HERMITIAN_TOL: float = 1e-9
    UNITARY_TOL: float = 1e-9
    ZERO_PROBABILITY: float = 1e-12
    BISEPARABILITY_TOL: float = 1e-7
    # ── Measure tolerances ───────────────────────────────────────────────────
    CKW_TOL: float = 1e-8
    NEGATIVE_TANGLE_TOL: float = 1e-9
    WOOTTERS_NEGATIVE_TOL: float = 1e-7
    # Eigen-components of a two-qubit marginal below this weight are treated as noise
    WOOTTERS_RANK_CUTOFF: float = 1e-13
    # tau + C^2 below this is a numerical zero (T_ij below ~3e-8)
    ASSISTED_ZERO: float = 1e-15
    GEOMETRIC_MEAN_FLOOR: float = 1e-12
    # ── Oracle defaults ──────────────────────────────────────────────────────
    OPTIMIZER_COARSE_GRID: int = 48
    OPTIMIZER_REFINE_ITERS: int = 200
    OPTIMIZER_REFINE_TOL: float = 1e-10
    # Per-angle grid used when several assistants are searched jointly
    OPTIMIZER_ASSISTANT_GRID: int = 24
    FIVE_QUBIT_GRID: int = 16
    # ── LOCC harness ─────────────────────────────────────────────────────────
    MONOTONICITY_TOL: float = 1e-7
    # ── Four-qubit thresholds ────────────────────────────────────────────────
    FOUR_QUBIT_FIDELITY_TOL: float = 2e-3
    WITNESS_MARGIN: float = 3e-3
    FOUR_QUBIT_PURITY_TOL: float = 1e-6
    # ── Verify defaults ──────────────────────────────────────────────────────
    DEFAULT_SEED: int = 42
    VERIFY_TRIALS: int = 10_000
    VERIFY_ORACLE_STATES: int = 200
    VERIFY_FOUR_QUBIT_STATES: int = 50
    VERIFY_BISEPARABLE_STATES: int = 500
    ORACLE_AGREEMENT_TOL: float = 1.5e-3
    # ── Output ───────────────────────────────────────────────────────────────
    FIGURE_GRID_POINTS: int = 201
    CSV_SIGNIFICANT_DIGITS: int = 12
    N_JOBS: int = 1

    @field_validator("OPTIMIZER_COARSE_GRID", "OPTIMIZER_ASSISTANT_GRID", "FIVE_QUBIT_GRID")
    @classmethod
    def validate_grid(cls, v: int) -> int:
        if v < 8:
            raise ValueError(f"Grid density must be at least 8, got {v}")
        return v

    @property
    def CSV_FLOAT_FORMAT(self) -> str:
        return f"%.{self.CSV_SIGNIFICANT_DIGITS}g"


settings = Settings()
