"""Runs a list of stages against a context and collects the report."""

from typing import Any, Dict, Optional, Sequence

from ..utils.logging import get_logger
from .results import Report
from .stages import VerificationContext, VerificationStage

logger = get_logger(__name__)


class VerificationPipeline:
    """Executes stages in order; errors propagate to the caller."""

    def __init__(self, stages: Sequence[VerificationStage]):
        self.stages = list(stages)

    def run(self, command: str, context: VerificationContext,
            params: Optional[Dict[str, Any]] = None) -> Report:
        """
        Run every stage and collect their records.

        Args:
            command: Command name echoed in the report header
            context: Shared inputs
            params: Ordered header fields after the command name

        Returns:
            Report with one record per check
        """
        report = Report(command, params)
        logger.info(f"Running {len(self.stages)} stages for '{command}' on {context.alpha}")
        for stage in self.stages:
            logger.debug(f"Stage {stage.name}")
            records = stage.process(context)
            for record in records:
                logger.debug(f"{record.name}: {record.status} in {record.elapsed_ms:.1f} ms")
            report.extend(records)
        logger.info(f"'{command}' finished with {report.status} {report.get_summary()}")
        return report
