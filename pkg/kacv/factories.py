"""Factory functions for creating kacv components."""

from typing import Dict

from .counting import KacCounter, DirectCounter, MomentCounter
from .config import METHOD_DIRECT, METHOD_MOMENT


# Registry of available counters
COUNTERS: Dict[str, type] = {
    METHOD_DIRECT: DirectCounter,
    METHOD_MOMENT: MomentCounter
}


def get_counter(name: str, **kwargs) -> KacCounter:
    """
    Create a Kac-value counter.

    Args:
        name: Counting method
        **kwargs: Counter parameters (``config``)

    Returns:
        KacCounter instance

    Raises:
        ValueError: If the method name is not recognized
    """
    if name not in COUNTERS:
        raise ValueError(
            f"Unknown counting method: {name}. "
            f"Available: {list(COUNTERS.keys())}"
        )

    return COUNTERS[name](**kwargs)


def register_counter(name: str, counter_class: type) -> None:
    """Register new counting method."""
    if not issubclass(counter_class, KacCounter):
        raise TypeError(f"{counter_class} must inherit from KacCounter")
    COUNTERS[name] = counter_class
