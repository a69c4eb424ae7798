"""Registry mapping commands and checks to verification stages."""

from typing import Dict, List, Sequence, Type

from ..config.constants import (
    CHECK_ALL,
    CHECK_APPENDIX,
    CHECK_CONJ_A,
    CHECK_CONJ_B,
    CHECK_HN
)
from ..utils.logging import get_logger
from .stages import (
    AppendixStage,
    ConjectureAStage,
    ConjectureBStage,
    HNHistogramStage,
    HNSweepStage,
    KacPolynomialStage,
    MethodAgreementStage,
    MIdentityStage,
    MultiplicityTableStage,
    VerificationStage
)

logger = get_logger(__name__)


class StageFactory:
    """Factory for the stage lists behind each command and check."""

    _checks: Dict[str, List[Type[VerificationStage]]] = {
        CHECK_CONJ_A: [KacPolynomialStage, ConjectureAStage],
        CHECK_CONJ_B: [KacPolynomialStage, ConjectureBStage],
        CHECK_APPENDIX: [AppendixStage],
        CHECK_HN: [MIdentityStage, HNSweepStage],
    }

    _commands: Dict[str, List[Type[VerificationStage]]] = {
        'kac': [KacPolynomialStage],
        'kac_fields': [MethodAgreementStage],
        'mult': [MultiplicityTableStage],
        'hn': [HNHistogramStage],
    }

    @classmethod
    def for_checks(cls, checks: Sequence[str]) -> List[VerificationStage]:
        """
        Stages for the verify command, deduplicated in registry order.

        Raises:
            ValueError: If a check is unknown
        """
        names: List[str] = []
        for check in checks:
            if check == CHECK_ALL:
                names.extend(cls._checks)
            elif check in cls._checks:
                names.append(check)
            else:
                raise ValueError(
                    f"Unsupported check: '{check}'. "
                    f"Available checks: {list(cls._checks) + [CHECK_ALL]}"
                )
        classes: List[Type[VerificationStage]] = []
        for name in names:
            for stage_class in cls._checks[name]:
                if stage_class not in classes:
                    classes.append(stage_class)
        return [stage_class() for stage_class in classes]

    @classmethod
    def for_command(cls, command: str) -> List[VerificationStage]:
        if command not in cls._commands:
            raise ValueError(
                f"Unknown command: '{command}'. Available: {list(cls._commands)}"
            )
        return [stage_class() for stage_class in cls._commands[command]]

    @classmethod
    def register(cls, check: str, stages: Sequence[Type[VerificationStage]]) -> None:
        """
        Register the stages run for a new check name.

        Raises:
            ValueError: If a stage does not inherit from VerificationStage
        """
        for stage_class in stages:
            if not issubclass(stage_class, VerificationStage):
                raise ValueError(
                    f"Stage class must inherit from VerificationStage, got {stage_class}"
                )
        cls._checks[check] = list(stages)
        logger.info(f"Registered stages for check '{check}'")

    @classmethod
    def list_checks(cls) -> List[str]:
        return list(cls._checks)
