"""Orthogonal data: ``SO(n + 2)`` with ``mu = e1``.

Defects and dimensions are computed on ``GSpin(n + 2)``, whose center is
connected; Newton classes and strata are enumerated on ``SO(n + 2)``.

Labels follow the classical tables.  EO strata are ``w_i`` by length,
with ``w'_{n/2}`` the second stratum of length ``n/2`` when ``n`` is
even.  Newton classes are ``b0`` (basic) and ``b1, b2, ...`` by
decreasing dimension; in the split even case the two classes of
dimension ``n/2`` are ``b_m`` and ``b'_m``, the primed one having
negative last coordinate.

"""
from __future__ import annotations

from typing import Any
from typing import Dict
from typing import List
from typing import Optional
from typing import Tuple

from .api import ExpectedTables
from .api import positive_int
from .api import Preset
from .api import PresetArguments
from .. import exception
from ..eo_strata import EOPoset
from ..kottwitz import Avatar
from ..kottwitz import NewtonPoset
from ..root_datum import gspin
from ..root_datum import RationalCocharacter
from ..root_datum import RootDatum
from ..root_datum import special_orthogonal


class OrthogonalPreset(Preset):
    """Parameters: ``n >= 1`` and ``form`` (``split`` or ``nonsplit``;
    ``nonsplit`` needs ``n`` even)."""

    name = "orthogonal"

    def __init__(self, arguments: PresetArguments):
        self.n = positive_int(arguments, "n")
        self.form = arguments.get("form") or "split"
        if self.form not in ("split", "nonsplit"):
            raise exception.UsageError(
                "form must be 'split' or 'nonsplit', got %r" % (self.form,)
            )
        if self.form == "nonsplit" and self.n % 2:
            raise exception.UsageError(
                "form 'nonsplit' needs n even; for odd n both forms give "
                "isomorphic groups"
            )
        self.m = (self.n + 2) // 2

    @property
    def parameters(self) -> Dict[str, Any]:
        return {"n": self.n, "form": self.form}

    @property
    def coxeter_tag(self) -> Optional[str]:  # type: ignore[override]
        n, m = self.n, self.m
        if n == 1:
            return "A1"
        if n == 2:
            return None
        if n == 3:
            return "C2"
        if n == 4:
            return "A3" if self.form == "split" else "2A3'"
        if n % 2:
            return "B%d" % m
        return ("D%d" if self.form == "split" else "2D%d") % m

    def notes(self) -> List[str]:
        notes = [
            "defect and dimensions computed on GSpin(%d); raw values on "
            "SO(%d) are reported separately" % (self.n + 2, self.n + 2)
        ]
        if self.n == 2:
            notes.append("SO(4) is of type A1 x A1, not of Coxeter type")
        return notes

    def datum(self) -> RootDatum:
        return special_orthogonal(self.n + 2, self.form)

    def mu(self) -> RationalCocharacter:
        return RationalCocharacter([1] + [0] * (self.m - 1))

    def avatar(self) -> Avatar:
        cover = gspin(self.n + 2, self.form)
        projection = tuple(
            tuple(1 if j == i + 1 else 0 for j in range(self.m + 1))
            for i in range(self.m)
        )
        return Avatar(
            cover,
            RationalCocharacter([0, 1] + [0] * (self.m - 1)),
            projection,
        )

    def relabel(
        self, newton: NewtonPoset, eo: EOPoset
    ) -> Tuple[NewtonPoset, EOPoset]:
        non_basic = [nc for nc in newton if not nc.is_basic]
        dims = sorted({nc.stratum_dim for nc in non_basic}, reverse=True)
        newton_labels = {newton.basic.nu: "b0"}
        for nc in non_basic:
            index = dims.index(nc.stratum_dim) + 1
            prime = "'" if nc.nu[-1] < 0 else ""
            newton_labels[nc.nu] = "b%s%d" % (prime, index)

        eo_labels = {}
        seen_lengths = set()
        for s in eo:
            prime = "'" if s.length in seen_lengths else ""
            seen_lengths.add(s.length)
            eo_labels[s.w] = "w%s%d" % (prime, s.length)
        return newton.relabel(newton_labels), eo.relabel(eo_labels)

    def expected(self) -> ExpectedTables:
        n, m = self.n, self.m
        labels = {}
        incidence = {}
        if n % 2:
            levels = (1,) * (n + 1)
            top_index = m
            labels["b0"] = (n - 1) // 2
            basic_lengths = range((n - 1) // 2 + 1)
        else:
            levels = tuple(2 if k == n // 2 else 1 for k in range(n + 1))
            top_index = m - 1
            if self.form == "split":
                labels["b0"] = n // 2 - 1
                labels["b%d" % m] = labels["b'%d" % m] = n // 2
                basic_lengths = range(n // 2)
                if m % 2 == 0:
                    incidence["w'%d" % (n // 2)] = "b%d" % m
                    incidence["w%d" % (n // 2)] = "b'%d" % m
                else:
                    incidence["w%d" % (n // 2)] = "b%d" % m
                    incidence["w'%d" % (n // 2)] = "b'%d" % m
            else:
                labels["b0"] = n // 2
                basic_lengths = range(n // 2 + 1)
                incidence["w'%d" % (n // 2)] = "b0"
        for i in range(1, top_index + 1):
            labels["b%d" % i] = n + 1 - i
            incidence["w%d" % (n + 1 - i)] = "b%d" % i
        for k in basic_lengths:
            incidence["w%d" % k] = "b0"
        return ExpectedTables(
            newton_count=len(labels),
            newton_labels=labels,
            eo_levels=levels,
            incidence=incidence,
            fully_hn=True,
        )
