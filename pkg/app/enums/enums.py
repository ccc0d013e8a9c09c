"""
Teleportation GME: Enum Definitions

Using str + enum.Enum for clean JSON serialization and argparse choices.
"""

import enum
from typing import Tuple

# ---------------------------------------------------------------------------
# Parties
# ---------------------------------------------------------------------------


class Party(str, enum.Enum):
    """A qubit holder. Party A is qubit 0, the most significant bit."""

    A = "A"
    B = "B"
    C = "C"
    D = "D"

    @property
    def index(self) -> int:
        return "ABCD".index(self.value)

    @classmethod
    def from_index(cls, index: int) -> "Party":
        return cls("ABCD"[index])


class Pair(str, enum.Enum):
    """
    Unordered party pairs. Declaration order of the three-qubit pairs
    (AB < BC < CA) is the tie-break order for T_min.
    """

    AB = "AB"
    BC = "BC"
    CA = "CA"
    AC = "AC"
    AD = "AD"
    BD = "BD"
    CD = "CD"

    @property
    def parties(self) -> Tuple[Party, Party]:
        return Party(self.value[0]), Party(self.value[1])

    @property
    def indices(self) -> Tuple[int, int]:
        i, j = self.parties
        return i.index, j.index


THREE_QUBIT_PAIRS: Tuple[Pair, ...] = (Pair.AB, Pair.BC, Pair.CA)
FOUR_QUBIT_PAIRS: Tuple[Pair, ...] = (Pair.AB, Pair.AC, Pair.AD, Pair.BC, Pair.BD, Pair.CD)

# Pairs containing each pivot, in the order (ij, ik) of the pivot definitions
PIVOT_PAIRS = {
    Party.A: (Pair.AB, Pair.CA),
    Party.B: (Pair.AB, Pair.BC),
    Party.C: (Pair.BC, Pair.CA),
}


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------


class FamilyName(str, enum.Enum):
    """Named states used by examples, figures and acceptance tests."""

    GHZ3 = "ghz3"
    W3 = "w3"
    PHI_T = "phi_t"
    PSI_R = "psi_r"
    XI_R = "xi_r"
    BISEP_XI = "bisep_xi"
    GHZ4 = "ghz4"
    PRODUCT_N = "product_n"
    BELL_BELL4 = "bell_bell4"
    ZERO_GHZ3 = "zero_ghz3"

    @property
    def is_parameterized(self) -> bool:
        return self in (FamilyName.PHI_T, FamilyName.PSI_R, FamilyName.XI_R)


# ---------------------------------------------------------------------------
# Measures
# ---------------------------------------------------------------------------


class MeasureId(str, enum.Enum):
    """Pure-state measures exercised by the LOCC monotonicity harness."""

    T_AB = "T_AB"
    T_BC = "T_BC"
    T_CA = "T_CA"
    T_MIN = "T_min"
    T_GM = "T_GM"
    T_MIN_A = "T_min_A"
    T_GM_A = "T_GM_A"
    T_MIN_B = "T_min_B"
    T_GM_B = "T_GM_B"
    T_MIN_C = "T_min_C"
    T_GM_C = "T_GM_C"
    ASSISTED_AB = "sqrt(tau+C2_AB)"
    ASSISTED_BC = "sqrt(tau+C2_BC)"
    ASSISTED_CA = "sqrt(tau+C2_CA)"


# ---------------------------------------------------------------------------
# CLI
# ---------------------------------------------------------------------------


class Subcommand(str, enum.Enum):
    MEASURE = "measure"
    FAMILY = "family"
    VERIFY = "verify"
    ORACLE_COMPARE = "oracle-compare"
    FOUR = "four"


class OutputFormat(str, enum.Enum):
    CSV = "csv"
    JSON = "json"
