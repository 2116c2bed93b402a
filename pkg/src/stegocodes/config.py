"""Run configuration: enumeration caps, sample counts, RNG seeding.

Every exhaustive predicate in the library compares its projected work against
``enumeration_cap`` and either degrades to seeded sampling or raises
:class:`~stegocodes.errors.BudgetExceededError`, depending on the operation's
contract.  All sampling is driven by ``random.Random(rng_seed)`` so repeated
runs are bit-identical.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

ENV_ENUMERATION_CAP = "STEGOCODES_ENUM_CAP"

MIN_CAP = 1 << 10


def default_enumeration_cap() -> int:
    """Default cap, overridable through the environment."""
    raw = os.environ.get(ENV_ENUMERATION_CAP)
    if raw:
        return int(raw)
    return 1 << 24


@dataclass(frozen=True)
class RunConfig:
    """Knobs shared by the library and the CLI.

    enumeration_cap bounds the work of exhaustive predicates; sample_count and
    rng_seed govern the probabilistic fallback used above the cap.
    """

    enumeration_cap: int = field(default_factory=default_enumeration_cap)
    sample_count: int = 100_000
    rng_seed: int = 0

    def __post_init__(self):
        if self.enumeration_cap < MIN_CAP:
            raise ValueError(f"enumeration_cap must be >= {MIN_CAP}, got {self.enumeration_cap}")
        if self.sample_count < 1:
            raise ValueError(f"sample_count must be >= 1, got {self.sample_count}")


DEFAULT_CONFIG = RunConfig()
