"""Resource caps shared by the enumerators.

Caps turn combinatorial blow-up into a clean :class:`ResourceLimitExceeded`.
Each one can be overridden from the environment with ``OHCOEFF_<FIELD>``,
e.g. ``OHCOEFF_MAX_CONTRIBUTORS=1000``.
"""

from __future__ import annotations

import dataclasses
import os
from dataclasses import dataclass

ENV_PREFIX = "OHCOEFF_"


@dataclass(frozen=True)
class Limits:
    max_contributors: int = 10**7
    max_incidences_sweep: int = 16
    max_walk_length: int = 4
    max_walks: int = 10**6
    max_permanent_size: int = 20

    @classmethod
    def from_env(cls, environ=None) -> "Limits":
        environ = os.environ if environ is None else environ
        overrides = {}
        for f in dataclasses.fields(cls):
            raw = environ.get(ENV_PREFIX + f.name.upper())
            if raw is not None:
                overrides[f.name] = int(raw)
        return cls(**overrides)

    def replace(self, **changes) -> "Limits":
        return dataclasses.replace(
            self, **{k: v for k, v in changes.items() if v is not None}
        )


DEFAULT_LIMITS = Limits()
