"""
Teleportation GME: Verification Orchestrator

Runs every registered check in order and collects one CheckRecord per
property. Checks are independent: each derives its own random stream from
the run seed, so adding or removing one never changes the others' inputs.
"""

from typing import List, Optional, Sequence, Type

from app.checks.base_check import BaseCheck, CheckContext
from app.checks.ckw_check import CkwConsistencyCheck
from app.checks.concurrence_fidelity_check import ConcurrenceFidelityCheck
from app.checks.family_check import FamilyOrderingCheck
from app.checks.four_qubit_check import FourQubitCheck
from app.checks.local_unitary_check import LocalUnitaryCheck
from app.checks.monotonicity_check import MonotonicityCheck
from app.checks.oracle_check import OracleAgreementCheck
from app.checks.separability_check import SeparabilityCheck
from app.core.logger import get_logger
from app.schemas.check_schema import CheckRecord, CheckSummary

logger = get_logger(__name__)

CHECKS: List[Type[BaseCheck]] = [
    ConcurrenceFidelityCheck,
    SeparabilityCheck,
    CkwConsistencyCheck,
    LocalUnitaryCheck,
    FamilyOrderingCheck,
    MonotonicityCheck,
    OracleAgreementCheck,
    FourQubitCheck,
]


def verify(
    context: Optional[CheckContext] = None,
    checks: Optional[Sequence[Type[BaseCheck]]] = None,
) -> CheckSummary:
    context = context or CheckContext()
    records: List[CheckRecord] = []
    for check_cls in checks or CHECKS:
        check = check_cls()
        logger.info("Check started", extra={"check": check.name})
        for result in check.run(context):
            record = result.to_record()
            records.append(record)
            if record.passed:
                logger.info("Check passed", extra={"check": record.check, "label": record.label})
            else:
                logger.warning(
                    "Check failed",
                    extra={
                        "check": record.check,
                        "label": record.label,
                        "worst": record.worst,
                        "threshold": record.threshold,
                    },
                )
    summary = CheckSummary(seed=context.seed, results=records)
    logger.info(
        "Verification finished",
        extra={"results": len(records), "failed": len(summary.failed)},
    )
    return summary
