"""`four --input state.json [--pivot A] [--coarse-grid G]`: four-qubit report."""

from app.core.exceptions import DimensionMismatch
from app.core.logger import get_logger
from app.models.state_model import PureState
from app.schemas.config_schema import RunConfig
from app.schemas.report_schema import FOUR_QUBIT_COLUMNS
from app.services.export_service import read_state, write_output
from app.services.four_qubit_service import report4

logger = get_logger(__name__)


def report_state(state: PureState, cfg: RunConfig) -> int:
    if state.n_qubits != 4:
        raise DimensionMismatch(f"four expects a four-qubit state, got {state.n_qubits} qubits")
    rep = report4(state, cfg.optimizer(), pivot=cfg.pivot)
    logger.info(
        "Four-qubit verdict",
        extra={"pivot": rep.witness_pivot, "genuine": rep.genuinely_entangled},
    )
    write_output([rep.to_row()], FOUR_QUBIT_COLUMNS, rep.to_json_dict(), cfg.format, cfg.output_path)
    return 0


def handle(cfg: RunConfig) -> int:
    return report_state(read_state(cfg.input_path), cfg)
