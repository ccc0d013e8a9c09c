from app.models.measurement_model import Bipartition, MeasurementBasis, MeasurementOutcome
from app.models.povm_model import TwoOutcomePovm
from app.models.state_model import DensityMatrix, PureState

__all__ = [
    "Bipartition",
    "DensityMatrix",
    "MeasurementBasis",
    "MeasurementOutcome",
    "PureState",
    "TwoOutcomePovm",
]
