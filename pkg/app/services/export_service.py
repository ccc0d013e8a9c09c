"""
Teleportation GME: Export Service

State files in, tables and JSON out:
  read_state() / write_state()   StateFile JSON ↔ validated PureState
  write_table()                  pandas CSV with fixed columns and %.12g floats
  write_json()                   pretty-printed JSON document

An output path of "-" means standard output.
"""

import json
import sys
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional

import pandas as pd
from pydantic import ValidationError

from app.core.config import settings
from app.core.exceptions import InvalidStateFile
from app.core.logger import get_logger
from app.enums.enums import OutputFormat
from app.models.state_model import PureState
from app.schemas.state_schema import StateFile
from app.services.state_service import validate

logger = get_logger(__name__)

STDOUT = "-"


def read_state(path: Path | str) -> PureState:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidStateFile(f"Cannot read state file {path}: {exc}") from exc
    try:
        parsed = StateFile.model_validate_json(text)
    except ValidationError as exc:
        raise InvalidStateFile(f"Malformed state file {path}: {exc.errors()[0]['msg']}") from exc
    state = validate(parsed.to_state())
    logger.debug("State file loaded", extra={"path": str(path), "n_qubits": state.n_qubits})
    return state


def write_state(state: PureState, path: Path | str) -> None:
    Path(path).write_text(StateFile.from_state(state).model_dump_json(indent=2), encoding="utf-8")


def to_frame(rows: Iterable[Dict[str, Any]], columns: List[str]) -> pd.DataFrame:
    return pd.DataFrame(list(rows), columns=columns)


def render_csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, float_format=settings.CSV_FLOAT_FORMAT, lineterminator="\n")


def write_text(text: str, out: str) -> None:
    if out == STDOUT:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    Path(out).write_text(text, encoding="utf-8")
    logger.info("Output written", extra={"path": out, "bytes": len(text)})


def write_table(rows: Iterable[Dict[str, Any]], columns: List[str], out: str = STDOUT) -> None:
    write_text(render_csv(to_frame(rows, columns)), out)


def write_json(document: Any, out: str = STDOUT) -> None:
    write_text(json.dumps(document, indent=2, sort_keys=False) + "\n", out)


def write_output(
    rows: List[Dict[str, Any]],
    columns: List[str],
    document: Any,
    fmt: OutputFormat,
    out: Optional[str] = None,
) -> None:
    """CSV gets the flat rows, JSON the full document."""
    out = out or STDOUT
    if fmt == OutputFormat.CSV:
        write_table(rows, columns, out)
    else:
        write_json(document, out)
