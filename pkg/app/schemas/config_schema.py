"""
Teleportation GME: Run Configuration Schemas

OptimizerConfig: knobs of the brute-force oracles.
FamilyId:        a named state family plus its parameter.
RunConfig:       one CLI invocation, validated per subcommand.
"""

from pathlib import Path
from typing import Optional

from pydantic import Field, model_validator

from app.core.config import settings
from app.enums.enums import FamilyName, OutputFormat, Party, Subcommand
from app.schemas.base_schema import BaseSchema


class OptimizerConfig(BaseSchema):
    """
    coarse_grid:     points per angle of the single-assistant grid search. Grid
                     values only grow when the grid is doubled, since a doubled
                     grid contains the coarser one; refinement moves the result by
                     at most about refine_tol on top of that.
    assistant_grid:  points per angle when several assistants are searched jointly.
    five_qubit_grid: the same for five-qubit states.
    refine_iters:    Nelder–Mead iteration cap for local refinement (0 disables it).
    refine_tol:      absolute tolerance on both the angles and the objective.
    seed:            root seed; reserved for randomized restarts.
    """

    coarse_grid: int = Field(default_factory=lambda: settings.OPTIMIZER_COARSE_GRID, ge=8)
    assistant_grid: int = Field(
        default_factory=lambda: settings.OPTIMIZER_ASSISTANT_GRID, ge=8
    )
    five_qubit_grid: int = Field(default_factory=lambda: settings.FIVE_QUBIT_GRID, ge=8)
    refine_iters: int = Field(default_factory=lambda: settings.OPTIMIZER_REFINE_ITERS, ge=0)
    refine_tol: float = Field(default_factory=lambda: settings.OPTIMIZER_REFINE_TOL, gt=0)
    seed: int = Field(default_factory=lambda: settings.DEFAULT_SEED, ge=0, lt=2**64)


class FamilyId(BaseSchema):
    """Parameterized families (phi_t, psi_r, xi_r) need a parameter; the rest reject one."""

    name: FamilyName
    parameter: Optional[float] = None
    n_qubits: Optional[int] = Field(default=None, ge=2, le=5)

    @model_validator(mode="after")
    def check_parameter(self) -> "FamilyId":
        if self.name.is_parameterized and self.parameter is None:
            raise ValueError(f"Family {self.name.value} requires a parameter")
        if not self.name.is_parameterized and self.parameter is not None:
            raise ValueError(f"Family {self.name.value} takes no parameter")
        if self.n_qubits is not None and self.name != FamilyName.PRODUCT_N:
            raise ValueError("Only product_n takes n_qubits")
        return self


class RunConfig(BaseSchema):
    subcommand: Subcommand
    input_path: Optional[Path] = None
    family: Optional[FamilyName] = None
    param: Optional[float] = None
    grid_points: int = Field(default_factory=lambda: settings.FIGURE_GRID_POINTS, ge=2)
    seed: int = Field(default_factory=lambda: settings.DEFAULT_SEED, ge=0, lt=2**64)
    trials: Optional[int] = Field(default=None, ge=1)
    output_path: str = "-"
    format: OutputFormat = OutputFormat.CSV
    pivot: Party = Party.A
    coarse_grid: Optional[int] = Field(default=None, ge=8)

    @model_validator(mode="after")
    def check_required_fields(self) -> "RunConfig":
        needs_input = (Subcommand.MEASURE, Subcommand.FOUR)
        if self.subcommand in needs_input and self.input_path is None:
            raise ValueError(f"'{self.subcommand.value}' requires --input")
        if self.subcommand == Subcommand.FAMILY and self.family is None:
            raise ValueError("'family' requires --family")
        if self.pivot == Party.D and self.subcommand != Subcommand.FOUR:
            raise ValueError("Pivot D exists only for four-qubit states")
        return self

    def optimizer(self) -> OptimizerConfig:
        if self.coarse_grid is None:
            return OptimizerConfig(seed=self.seed)
        return OptimizerConfig(coarse_grid=self.coarse_grid, seed=self.seed)
