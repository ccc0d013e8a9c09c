"""`verify [--trials n] [--seed s]`: run every property suite; exit 1 on any failure."""

from app.checks.base_check import CheckContext
from app.core.config import settings
from app.core.exceptions import VerificationFailed
from app.enums.enums import OutputFormat
from app.schemas.config_schema import RunConfig
from app.services.export_service import STDOUT, write_text
from app.services.verification_service import verify


def handle(cfg: RunConfig) -> int:
    context = CheckContext(
        seed=cfg.seed,
        trials=cfg.trials or settings.VERIFY_TRIALS,
        optimizer=cfg.optimizer(),
    )
    summary = verify(context)

    if cfg.format == OutputFormat.JSON:
        text = summary.model_dump_json(indent=2) + "\n"
    else:
        text = "".join(record.summary_line() + "\n" for record in summary.results)
    write_text(text, cfg.output_path or STDOUT)

    if not summary.all_passed:
        labels = ", ".join(f"{r.check}/{r.label}" for r in summary.failed)
        raise VerificationFailed(f"{len(summary.failed)} check(s) failed: {labels}")
    return 0
