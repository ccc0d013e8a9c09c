"""
`measure --input state.json`: every three-qubit measure for one state.
Four-qubit inputs are handed to the `four` command.
"""

from app.commands import four_command
from app.core.exceptions import DimensionMismatch
from app.core.logger import get_logger
from app.schemas.config_schema import RunConfig
from app.schemas.report_schema import MEASURE_COLUMNS
from app.services import measure_service
from app.services.export_service import read_state, write_output

logger = get_logger(__name__)


def handle(cfg: RunConfig) -> int:
    state = read_state(cfg.input_path)
    if state.n_qubits == 4:
        return four_command.report_state(state, cfg)
    if state.n_qubits != 3:
        raise DimensionMismatch(
            f"measure expects a three- or four-qubit state, got {state.n_qubits} qubits"
        )
    rep = measure_service.report(state)
    logger.info("Measured state", extra={"t_min": rep.t_min, "t_gm": rep.t_gm})
    write_output([rep.to_row()], MEASURE_COLUMNS, rep.to_json_dict(), cfg.format, cfg.output_path)
    return 0
