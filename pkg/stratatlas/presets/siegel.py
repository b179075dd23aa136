"""Siegel data: ``GSp(2g)`` with ``mu = (1, ..., 1; 1)``."""
from __future__ import annotations

from typing import Any
from typing import Dict
from typing import Optional

from .api import ExpectedTables
from .api import positive_int
from .api import Preset
from .api import PresetArguments
from ..root_datum import RationalCocharacter
from ..root_datum import RootDatum
from ..root_datum import symplectic


class SiegelPreset(Preset):
    """Parameters: ``g >= 1``."""

    name = "siegel"

    def __init__(self, arguments: PresetArguments):
        self.g = positive_int(arguments, "g")

    @property
    def parameters(self) -> Dict[str, Any]:
        return {"g": self.g}

    @property
    def coxeter_tag(self) -> Optional[str]:  # type: ignore[override]
        return {1: "A1", 2: "C2"}.get(self.g)

    def datum(self) -> RootDatum:
        return symplectic(2 * self.g, similitude=True)

    def mu(self) -> RationalCocharacter:
        return RationalCocharacter([1] * (self.g + 1))

    def expected(self) -> ExpectedTables:
        if self.g == 1:
            return ExpectedTables(
                newton_count=2,
                newton_dims=((1, 1), (0, 0)),
                eo_levels=(1, 1),
                fully_hn=True,
            )
        if self.g == 2:
            return ExpectedTables(
                newton_count=3,
                newton_dims=((3, 3), (2, 2), (1, 0)),
                eo_levels=(1, 1, 1, 1),
                fully_hn=True,
            )
        return ExpectedTables()
