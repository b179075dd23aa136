from __future__ import annotations

from typing import Any
from typing import Dict
from typing import List
from typing import Mapping
from typing import NamedTuple
from typing import Optional
from typing import Tuple
from typing import TYPE_CHECKING

from .. import exception
from ..root_datum import RationalCocharacter
from ..root_datum import RootDatum

if TYPE_CHECKING:
    from ..eo_strata import EOPoset
    from ..hn_atlas import StrataAtlas
    from ..kottwitz import Avatar
    from ..kottwitz import NewtonPoset

PresetArguments = Mapping[str, Any]


class ExpectedTables(NamedTuple):
    """Closed-form values a preset knows in advance.

    Every field left as None is not checked.

    """

    newton_count: Optional[int] = None
    newton_dims: Optional[Tuple[Tuple[int, int], ...]] = None
    """``(stratum dim, leaf dim)`` pairs, in descending order."""

    newton_labels: Optional[Dict[str, int]] = None
    """Newton class label to stratum dimension."""

    eo_levels: Optional[Tuple[int, ...]] = None
    """Number of EO strata of each length ``0, 1, ...``."""

    incidence: Optional[Dict[str, str]] = None
    """EO label to Newton label."""

    fully_hn: Optional[bool] = None


class Preset:
    """Base class for preset implementations.

    A preset turns a small set of named parameters into a root datum and
    a minuscule cocharacter, and may add an avatar, labels, a Coxeter
    type tag and the closed-form tables the computed atlas must match.

    """

    name: str = ""

    coxeter_tag: Optional[str] = None
    """Coxeter type of the datum, when it is of Coxeter type."""

    def __init__(self, arguments: PresetArguments):
        """Construct a new :class:`.Preset`.

        Subclasses override this to validate the given arguments,
        raising :class:`.exception.UsageError` with an explanatory
        message.

        """
        raise NotImplementedError()

    @property
    def parameters(self) -> Dict[str, Any]:
        """The canonical, JSON-ready parameters."""
        raise NotImplementedError()

    def datum(self) -> RootDatum:
        raise NotImplementedError()

    def mu(self) -> RationalCocharacter:
        raise NotImplementedError()

    def avatar(self) -> Optional["Avatar"]:
        return None

    def notes(self) -> List[str]:
        return []

    def relabel(
        self, newton: "NewtonPoset", eo: "EOPoset"
    ) -> Tuple["NewtonPoset", "EOPoset"]:
        return newton, eo

    def expected(self) -> ExpectedTables:
        return ExpectedTables()

    def check(self, atlas: "StrataAtlas") -> None:
        """Compare ``atlas`` with :meth:`expected`.

        :raises ValidationError: named ``"<preset> table"``.

        """
        expected = self.expected()
        check = "%s table" % self.name

        def fail(what, wanted, got):
            raise exception.ValidationError(
                check, "%s: expected %s, computed %s" % (what, wanted, got)
            )

        classes = atlas.newton.classes
        if (
            expected.newton_count is not None
            and len(classes) != expected.newton_count
        ):
            fail("|B(G, mu)|", expected.newton_count, len(classes))
        if expected.newton_dims is not None:
            got = tuple(
                sorted(
                    ((int(nc.stratum_dim), int(nc.leaf_dim)) for nc in classes),
                    reverse=True,
                )
            )
            if got != expected.newton_dims:
                fail("Newton (dimension, leaf) pairs", expected.newton_dims, got)
        if expected.newton_labels is not None:
            got_labels = {nc.label: int(nc.stratum_dim) for nc in classes}
            if got_labels != expected.newton_labels:
                fail("Newton dimensions", expected.newton_labels, got_labels)
        if expected.eo_levels is not None:
            top = max(s.length for s in atlas.eo)
            levels = tuple(
                sum(1 for s in atlas.eo if s.length == k)
                for k in range(top + 1)
            )
            if levels != expected.eo_levels:
                fail("EO strata per length", expected.eo_levels, levels)
        if expected.incidence is not None:
            got_incidence = {
                k: atlas.incidence.get(k) for k in expected.incidence
            }
            if got_incidence != expected.incidence:
                fail("incidence", expected.incidence, got_incidence)
        if (
            expected.fully_hn is not None
            and atlas.fully_hn != expected.fully_hn
        ):
            fail("fully_hn", expected.fully_hn, atlas.fully_hn)


def positive_int(arguments: PresetArguments, key: str, minimum: int = 1):
    value = arguments.get(key)
    if value is None:
        raise exception.UsageError("missing preset parameter %r" % key)
    if isinstance(value, str) and value.strip().lstrip("-").isdigit():
        value = int(value)
    if isinstance(value, bool) or not isinstance(value, int):
        raise exception.UsageError(
            "preset parameter %r must be an integer, got %r" % (key, value)
        )
    if value < minimum:
        raise exception.UsageError(
            "preset parameter %r must be >= %d, got %d" % (key, minimum, value)
        )
    return value
