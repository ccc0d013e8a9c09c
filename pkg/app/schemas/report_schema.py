"""
Teleportation GME: Report Schemas

MeasureReport:     every three-qubit measure for one pure state.
FourQubitReport:   product / sequential four-qubit fidelities and their T-measures.

CSV rows use the fixed column lists below. JSON output adds the labelled
extras (minimizing pair, one-vs-rest concurrences, witness verdicts).
"""

from typing import Dict, List, Optional

from pydantic import Field

from app.enums.enums import Pair
from app.schemas.base_schema import BaseSchema

MEASURE_COLUMNS: List[str] = [
    "t_ab",
    "t_bc",
    "t_ca",
    "t_min",
    "t_gm",
    "t_min_a",
    "t_gm_a",
    "t_min_b",
    "t_gm_b",
    "t_min_c",
    "t_gm_c",
    "c_min",
    "c_gm",
    "tangle",
    "c2_ab",
    "c2_bc",
    "c2_ca",
]

FOUR_QUBIT_PAIR_KEYS: List[str] = ["ab", "ac", "ad", "bc", "bd", "cd"]

FOUR_QUBIT_COLUMNS: List[str] = (
    [f"f4_{k}" for k in FOUR_QUBIT_PAIR_KEYS]
    + [f"f4b_{k}" for k in FOUR_QUBIT_PAIR_KEYS]
    + ["t4_min", "t4_gm", "t4b_min", "t4b_gm"]
)


# ── Three-qubit ───────────────────────────────────────────────────────────────


class MeasureReport(BaseSchema):
    t_ab: float = Field(ge=0)
    t_bc: float = Field(ge=0)
    t_ca: float = Field(ge=0)
    t_min: float = Field(ge=0)
    t_gm: float = Field(ge=0)
    t_min_a: float = Field(ge=0)
    t_gm_a: float = Field(ge=0)
    t_min_b: float = Field(ge=0)
    t_gm_b: float = Field(ge=0)
    t_min_c: float = Field(ge=0)
    t_gm_c: float = Field(ge=0)
    c_min: float = Field(ge=0)
    c_gm: float = Field(ge=0)
    tangle: float = Field(ge=0)
    c2_ab: float = Field(ge=0)
    c2_bc: float = Field(ge=0)
    c2_ca: float = Field(ge=0)
    # ── Extras (JSON only) ────────────────────────────────────────────────────
    t_min_pair: Pair = Field(description="Pair attaining T_min, ties AB < BC < CA")
    c_a_bc: float = Field(ge=0)
    c_b_ca: float = Field(ge=0)
    c_c_ab: float = Field(ge=0)

    def t_pair(self, pair: Pair) -> float:
        return {Pair.AB: self.t_ab, Pair.BC: self.t_bc, Pair.CA: self.t_ca}[pair]

    def fidelity(self, pair: Pair) -> float:
        """F_ij = (T_ij + 2)/3."""
        return (self.t_pair(pair) + 2.0) / 3.0

    def to_row(self) -> Dict[str, float]:
        return {col: getattr(self, col) for col in MEASURE_COLUMNS}

    def to_json_dict(self) -> Dict[str, object]:
        return self.model_dump(mode="json")


# ── Four-qubit ────────────────────────────────────────────────────────────────


class FourQubitReport(BaseSchema):
    """
    f4[pair]:     F^(4) with independent product measurements on both assistants.
    f4_bar[pair]: F̄^(4) with one assistant measuring first and the other adapting.
    Keys of both dicts are the lowercase pair names of FOUR_QUBIT_PAIR_KEYS.
    """

    f4: Dict[str, float]
    f4_bar: Dict[str, float]
    t4_min: float = Field(ge=0)
    t4_gm: float = Field(ge=0)
    t4_bar_min: float = Field(ge=0)
    t4_bar_gm: float = Field(ge=0)
    witness_pivot: Optional[str] = None
    genuinely_entangled: Optional[bool] = None
    separable_cuts: List[str] = []

    def to_row(self) -> Dict[str, float]:
        row: Dict[str, float] = {}
        for k in FOUR_QUBIT_PAIR_KEYS:
            row[f"f4_{k}"] = self.f4[k]
        for k in FOUR_QUBIT_PAIR_KEYS:
            row[f"f4b_{k}"] = self.f4_bar[k]
        row["t4_min"] = self.t4_min
        row["t4_gm"] = self.t4_gm
        row["t4b_min"] = self.t4_bar_min
        row["t4b_gm"] = self.t4_bar_gm
        return row

    def to_json_dict(self) -> Dict[str, object]:
        return self.model_dump(mode="json")
