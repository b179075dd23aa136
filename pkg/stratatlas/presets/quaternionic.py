"""Quaternionic data: a product over places of ``Res(GL(2), n_i)``.

At a place with ``a_i`` of its ``n_i`` embeddings nontrivial, the
cocharacter is ``(1, 0)`` on the first ``a_i`` factors and ``(0, 0)`` on
the rest.

"""
from __future__ import annotations

import itertools
import math
import re
from typing import Any
from typing import Dict
from typing import List
from typing import Sequence
from typing import Tuple

from .api import ExpectedTables
from .api import Preset
from .api import PresetArguments
from .. import exception
from ..root_datum import general_linear
from ..root_datum import product
from ..root_datum import RationalCocharacter
from ..root_datum import restriction_of_scalars
from ..root_datum import RootDatum

Place = Tuple[int, int]


def parse_place(value: Any) -> Place:
    """``"3:2"`` or ``(3, 2)`` to ``(3, 2)``."""
    if isinstance(value, str):
        match = re.match(r"^\s*(\d+)\s*:\s*(\d+)\s*$", value)
        if match is None:
            raise exception.UsageError(
                "place must be written N:A, got %r" % value
            )
        return int(match.group(1)), int(match.group(2))
    try:
        n, a = value
    except (TypeError, ValueError):
        raise exception.UsageError("place must be a pair, got %r" % (value,))
    if isinstance(n, bool) or isinstance(a, bool):
        raise exception.UsageError("place must hold integers, got %r" % (value,))
    if not isinstance(n, int) or not isinstance(a, int):
        raise exception.UsageError("place must hold integers, got %r" % (value,))
    return n, a


def place_classes(a: int) -> List[Tuple[int, int]]:
    """``(stratum dim, leaf dim)`` of each class at a place, from the
    slope pairs ``lambda1 >= lambda2`` with ``lambda1 + lambda2 = a``.

    Integral slopes give ``(lambda1, lambda1 - lambda2)``; the basic pair
    ``a/2, a/2`` gives ``(floor(a/2), 0)``.

    """
    result = [(lam, 2 * lam - a) for lam in range(a, a // 2, -1)]
    result.append((a // 2, 0))
    return result


class QuaternionicPreset(Preset):
    """Parameters: ``places``, a list of ``N:A`` strings or pairs with
    ``1 <= A <= N``."""

    name = "quaternionic"

    def __init__(self, arguments: PresetArguments):
        raw = arguments.get("places")
        if not raw:
            raise exception.UsageError(
                "quaternionic preset needs at least one --place N:A"
            )
        places = [parse_place(p) for p in raw]
        for n, a in places:
            if n < 1:
                raise exception.UsageError(
                    "place %d:%d: N must be at least 1" % (n, a)
                )
            if not 1 <= a <= n:
                raise exception.UsageError(
                    "place %d:%d: A must lie between 1 and N" % (n, a)
                )
        self.places: Tuple[Place, ...] = tuple(places)

    @property
    def parameters(self) -> Dict[str, Any]:
        return {"places": ["%d:%d" % place for place in self.places]}

    @property
    def coxeter_tag(self):  # type: ignore[override]
        return "A1" if self.places == ((1, 1),) else None

    def datum(self) -> RootDatum:
        gl2 = general_linear(2)
        return product(*[restriction_of_scalars(gl2, n) for n, _ in self.places])

    def mu(self) -> RationalCocharacter:
        coords: List[int] = []
        for n, a in self.places:
            for k in range(n):
                coords.extend((1, 0) if k < a else (0, 0))
        return RationalCocharacter(coords)

    def expected(self) -> ExpectedTables:
        per_place: Sequence[List[Tuple[int, int]]] = [
            place_classes(a) for _, a in self.places
        ]
        dims = tuple(
            sorted(
                (
                    (sum(c[0] for c in combo), sum(c[1] for c in combo))
                    for combo in itertools.product(*per_place)
                ),
                reverse=True,
            )
        )
        total = sum(a for _, a in self.places)
        return ExpectedTables(
            newton_count=math.prod(
                (a + 1) // 2 + 1 for _, a in self.places
            ),
            newton_dims=dims,
            eo_levels=tuple(math.comb(total, k) for k in range(total + 1)),
            fully_hn=all(a <= 2 for _, a in self.places),
        )
