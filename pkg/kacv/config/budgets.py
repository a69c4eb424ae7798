"""Budget and execution configuration for kacv."""

from dataclasses import dataclass, asdict, fields, replace
from pathlib import Path
from typing import Any, Dict, Optional, Union

from .constants import (
    DEFAULT_BUDGET,
    DEFAULT_SUBREP_BUDGET,
    DEFAULT_END_ENUMERATION_LIMIT,
    DEFAULT_SWEEP_BUDGET,
    DEFAULT_FIELD_TABLE_LIMIT,
    DEFAULT_MAX_PRIME,
    MAX_EXTENSION_DEGREE,
    DEFAULT_INTERPOLATION_RETRIES,
    DEFAULT_WORKERS,
    DEFAULT_CHUNK_SIZE,
    PRESET_DEFAULT,
    PRESET_QUICK,
    PRESET_THOROUGH
)


@dataclass
class BudgetConfig:
    """Upper bounds on every exhaustive enumeration."""
    # Field-element tuples enumerated by a single count
    enumeration_budget: int = DEFAULT_BUDGET

    # Subspace tuples inspected per representation
    subrep_budget: int = DEFAULT_SUBREP_BUDGET

    # Endomorphism algebra elements enumerated by the locality test
    end_enumeration_limit: int = DEFAULT_END_ENUMERATION_LIMIT

    # Representations visited by HN and King sweeps
    sweep_budget: int = DEFAULT_SWEEP_BUDGET

    # Elements of an extension field with precomputed log tables
    field_table_limit: int = DEFAULT_FIELD_TABLE_LIMIT


@dataclass
class InterpolationConfig:
    """Sampling parameters for Kac polynomial reconstruction."""
    max_prime: int = DEFAULT_MAX_PRIME
    max_extension_degree: int = MAX_EXTENSION_DEGREE
    retries: int = DEFAULT_INTERPOLATION_RETRIES
    fallback_to_direct: bool = True


@dataclass
class ParallelConfig:
    """Worker processes and numpy batch size."""
    workers: int = DEFAULT_WORKERS
    chunk_size: int = DEFAULT_CHUNK_SIZE


_SECTIONS = {
    'budgets': BudgetConfig,
    'interpolation': InterpolationConfig,
    'parallel': ParallelConfig,
}


@dataclass
class KacConfig:
    """Complete kacv configuration."""
    budgets: BudgetConfig
    interpolation: InterpolationConfig
    parallel: ParallelConfig

    def __post_init__(self):
        self.validate()

    @classmethod
    def default(cls) -> 'KacConfig':
        """Create default configuration."""
        return cls(
            budgets=BudgetConfig(),
            interpolation=InterpolationConfig(),
            parallel=ParallelConfig()
        )

    @classmethod
    def quick(cls) -> 'KacConfig':
        """Small budgets for unit tests and smoke runs."""
        return cls(
            budgets=BudgetConfig(
                enumeration_budget=2 ** 16,
                subrep_budget=2 ** 10,
                end_enumeration_limit=2 ** 10,
                sweep_budget=2 ** 10,
                field_table_limit=2 ** 12
            ),
            interpolation=InterpolationConfig(max_prime=31),
            parallel=ParallelConfig(chunk_size=2 ** 10)
        )

    @classmethod
    def thorough(cls) -> 'KacConfig':
        """Larger budgets for long verification runs."""
        return cls(
            budgets=BudgetConfig(
                enumeration_budget=2 ** 28,
                subrep_budget=2 ** 20,
                end_enumeration_limit=2 ** 20,
                sweep_budget=2 ** 16
            ),
            interpolation=InterpolationConfig(retries=6),
            parallel=ParallelConfig()
        )

    @classmethod
    def preset(cls, name: str) -> 'KacConfig':
        """Create a named preset."""
        presets = {
            PRESET_DEFAULT: cls.default,
            PRESET_QUICK: cls.quick,
            PRESET_THOROUGH: cls.thorough,
        }
        if name not in presets:
            raise ValueError(
                f"Unknown preset: {name}. Available: {list(presets.keys())}"
            )
        return presets[name]()

    @classmethod
    def from_dict(cls, data: Dict[str, Any],
                  base: Optional['KacConfig'] = None) -> 'KacConfig':
        """
        Build a configuration from nested dictionaries.

        Sections missing from ``data`` keep the values of ``base``.

        Raises:
            ValueError: On unknown sections or keys
        """
        base = base or cls.default()
        unknown = set(data) - set(_SECTIONS)
        if unknown:
            raise ValueError(f"Unknown configuration sections: {sorted(unknown)}")

        sections = {}
        for name, section_cls in _SECTIONS.items():
            current = getattr(base, name)
            values = data.get(name) or {}
            allowed = {f.name for f in fields(section_cls)}
            bad = set(values) - allowed
            if bad:
                raise ValueError(f"Unknown keys in '{name}': {sorted(bad)}")
            sections[name] = replace(current, **values)
        return cls(**sections)

    @classmethod
    def from_yaml(cls, path: Union[str, Path],
                  base: Optional['KacConfig'] = None) -> 'KacConfig':
        """Load configuration overrides from a YAML file."""
        from ..utils.io import read_yaml
        data = read_yaml(path)
        if not isinstance(data, dict):
            raise ValueError(f"Configuration file {path} must contain a mapping")
        return cls.from_dict(data, base=base)

    def with_overrides(self,
                       budget: Optional[int] = None,
                       max_prime: Optional[int] = None,
                       workers: Optional[int] = None) -> 'KacConfig':
        """Return a copy with CLI-level overrides applied."""
        budgets = self.budgets
        interpolation = self.interpolation
        parallel = self.parallel
        if budget is not None:
            budgets = replace(budgets, enumeration_budget=budget)
        if max_prime is not None:
            interpolation = replace(interpolation, max_prime=max_prime)
        if workers is not None:
            parallel = replace(parallel, workers=workers)
        return KacConfig(budgets=budgets, interpolation=interpolation,
                         parallel=parallel)

    def validate(self) -> None:
        """
        Check value ranges.

        Raises:
            ValueError: If a limit is not positive or out of range
        """
        for section in (self.budgets, self.parallel):
            for f in fields(section):
                value = getattr(section, f.name)
                if int(value) < 1:
                    raise ValueError(f"{f.name} must be positive, got {value}")
        if self.interpolation.max_prime < 2:
            raise ValueError(
                f"max_prime must be at least 2, got {self.interpolation.max_prime}"
            )
        if not 1 <= self.interpolation.max_extension_degree <= 4:
            raise ValueError(
                "max_extension_degree must lie in 1..4, "
                f"got {self.interpolation.max_extension_degree}"
            )
        if self.interpolation.retries < 0:
            raise ValueError(f"retries must be non-negative, got {self.interpolation.retries}")

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            'budgets': asdict(self.budgets),
            'interpolation': asdict(self.interpolation),
            'parallel': asdict(self.parallel)
        }


def load_config(path: Optional[Union[str, Path]] = None,
                preset: str = PRESET_DEFAULT,
                **overrides) -> KacConfig:
    """
    Resolve the effective configuration.

    Order of precedence: explicit overrides, then the YAML file, then the preset.

    Args:
        path: Optional YAML file with section overrides
        preset: Name of the starting preset
        **overrides: ``budget``, ``max_prime`` or ``workers`` (None is ignored)

    Returns:
        Validated configuration
    """
    config = KacConfig.preset(preset)
    if path:
        config = KacConfig.from_yaml(path, base=config)
    return config.with_overrides(**overrides)
