"""Check records and line-oriented reports."""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from ..config.constants import STATUS_FAIL, STATUS_PASS
from ..utils.io import write_yaml
from ..utils.logging import get_logger

logger = get_logger(__name__)


def format_value(value: Any) -> str:
    """Render a value as a single whitespace-free token."""
    if value is None:
        return '-'
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, (tuple, list)):
        return ','.join(format_value(v) for v in value)
    return str(value).replace(' ', '')


@dataclass
class CheckRecord:
    """Outcome of one check."""
    name: str
    inputs: Dict[str, Any] = field(default_factory=dict)
    outputs: Dict[str, Any] = field(default_factory=dict)
    expected: Any = None
    actual: Any = None
    status: str = STATUS_PASS
    elapsed_ms: float = 0.0

    def render(self, timings: bool = False) -> str:
        pairs = [('check', self.name)]
        pairs.extend(self.inputs.items())
        pairs.extend(self.outputs.items())
        if self.expected is not None or self.actual is not None:
            pairs.append(('expected', self.expected))
            pairs.append(('actual', self.actual))
        pairs.append(('status', self.status))
        if timings:
            pairs.append(('elapsed_ms', f"{self.elapsed_ms:.1f}"))
        return ' '.join(f"{key}={format_value(value)}" for key, value in pairs)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'inputs': {k: format_value(v) for k, v in self.inputs.items()},
            'outputs': {k: format_value(v) for k, v in self.outputs.items()},
            'expected': format_value(self.expected),
            'actual': format_value(self.actual),
            'status': self.status,
            'elapsed_ms': round(self.elapsed_ms, 3)
        }


class Report:
    """Command echo plus check records; FAIL if any record failed."""

    def __init__(self, command: str, params: Optional[Dict[str, Any]] = None):
        self.command = command
        self.params: Dict[str, Any] = dict(params or {})
        self.records: List[CheckRecord] = []

    def add(self, record: CheckRecord) -> CheckRecord:
        self.records.append(record)
        return record

    def extend(self, records: List[CheckRecord]) -> None:
        self.records.extend(records)

    @property
    def status(self) -> str:
        if any(r.status == STATUS_FAIL for r in self.records):
            return STATUS_FAIL
        return STATUS_PASS

    @property
    def exit_code(self) -> int:
        return 0 if self.status == STATUS_PASS else 1

    def lines(self, timings: bool = False) -> List[str]:
        header = [('command', self.command)] + list(self.params.items())
        lines = [' '.join(f"{k}={format_value(v)}" for k, v in header)]
        lines.extend(record.render(timings) for record in self.records)
        lines.append(f"result={self.status}")
        return lines

    def render(self, timings: bool = False) -> str:
        return '\n'.join(self.lines(timings)) + '\n'

    def to_dict(self) -> Dict[str, Any]:
        return {
            'command': self.command,
            'params': {k: format_value(v) for k, v in self.params.items()},
            'records': [r.to_dict() for r in self.records],
            'result': self.status
        }

    def save(self, path: Union[str, Path]) -> None:
        """Write the report as YAML."""
        logger.info(f"Saving report to {path}")
        write_yaml(self.to_dict(), path)

    def get_summary(self) -> Dict[str, int]:
        summary: Dict[str, int] = {}
        for record in self.records:
            summary[record.status] = summary.get(record.status, 0) + 1
        return summary
