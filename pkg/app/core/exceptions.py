"""
Teleportation GME: Error Hierarchy

Every failure the toolkit reports carries a human-readable detail and the
process exit code the CLI returns for it:

  InvalidInputError  → exit 2  (bad state files, wrong dimensions, bad parameters)
  NumericalError     → exit 1  (spectra or CKW evaluations that cannot be trusted)
  VerificationFailed → exit 1  (a property suite found a counterexample)
"""

from typing import Optional


class GmeError(Exception):
    """Base class for all toolkit errors."""

    exit_code: int = 1

    def __init__(self, detail: str, exit_code: Optional[int] = None):
        super().__init__(detail)
        self.detail = detail
        if exit_code is not None:
            self.exit_code = exit_code


# ── Invalid input (exit 2) ────────────────────────────────────────────────────


class InvalidInputError(GmeError):
    exit_code = 2


class NotNormalized(InvalidInputError):
    pass


class DimensionMismatch(InvalidInputError):
    pass


class EmptyKeepSet(InvalidInputError):
    pass


class FullKeepSet(InvalidInputError):
    pass


class IndexOutOfRange(InvalidInputError):
    pass


class NotUnitary(InvalidInputError):
    pass


class ParameterOutOfRange(InvalidInputError):
    pass


class InvalidStateFile(InvalidInputError):
    pass


class InvalidRunConfig(InvalidInputError):
    pass


# ── Numerical failures (exit 1) ───────────────────────────────────────────────


class NumericalError(GmeError):
    exit_code = 1


class NumericalFailure(NumericalError):
    pass


class CkwInconsistency(NumericalError):
    pass


class NegativeTangle(NumericalError):
    pass


# ── Verification ──────────────────────────────────────────────────────────────


class VerificationFailed(GmeError):
    exit_code = 1
