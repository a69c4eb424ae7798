"""Verification pipeline: stages, records and reports."""

from .results import CheckRecord, Report, format_value
from .stages import (
    VerificationContext,
    VerificationStage,
    MethodAgreementStage,
    KacPolynomialStage,
    ConjectureAStage,
    ConjectureBStage,
    AppendixStage,
    MIdentityStage,
    HNSweepStage,
    MultiplicityTableStage,
    HNHistogramStage,
    SweepTally,
    sweep_representations
)
from .factory import StageFactory
from .orchestrator import VerificationPipeline

__all__ = [
    'CheckRecord',
    'Report',
    'format_value',
    'VerificationContext',
    'VerificationStage',
    'MethodAgreementStage',
    'KacPolynomialStage',
    'ConjectureAStage',
    'ConjectureBStage',
    'AppendixStage',
    'MIdentityStage',
    'HNSweepStage',
    'MultiplicityTableStage',
    'HNHistogramStage',
    'SweepTally',
    'sweep_representations',
    'StageFactory',
    'VerificationPipeline'
]
