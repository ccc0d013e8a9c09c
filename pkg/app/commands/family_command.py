"""
`family --family NAME [--param x | --grid-points n]`: figure data.

Parameterized families are swept over a uniform grid on [0, 1] (or a single
point with --param). Fixed three-qubit states produce one row with an empty
param column; fixed four-qubit states produce a four-qubit report.
"""

from typing import Any, Dict, List

from app.commands import four_command
from app.core.exceptions import ParameterOutOfRange
from app.schemas.config_schema import FamilyId, RunConfig
from app.schemas.report_schema import MEASURE_COLUMNS, MeasureReport
from app.services import family_service, measure_service
from app.services.export_service import write_output

PARAM_COLUMN = "param"


def _rows(points: List[tuple]) -> List[Dict[str, Any]]:
    return [{PARAM_COLUMN: p, **rep.to_row()} for p, rep in points]


def _documents(points: List[tuple]) -> List[Dict[str, Any]]:
    return [{PARAM_COLUMN: p, **rep.to_json_dict()} for p, rep in points]


def handle(cfg: RunConfig) -> int:
    name = cfg.family
    if name.is_parameterized:
        if cfg.param is not None:
            grid = [cfg.param]
        else:
            grid = family_service.default_grid(cfg.grid_points)
        points = family_service.sweep(name, grid)
    else:
        if cfg.param is not None:
            raise ParameterOutOfRange(f"Family {name.value} takes no parameter")
        state = family_service.build(FamilyId(name=name))
        if state.n_qubits == 4:
            return four_command.report_state(state, cfg)
        rep: MeasureReport = measure_service.report(state)
        points = [(None, rep)]

    write_output(
        _rows(points),
        [PARAM_COLUMN] + MEASURE_COLUMNS,
        _documents(points),
        cfg.format,
        cfg.output_path,
    )
    return 0
