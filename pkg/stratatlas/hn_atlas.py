"""Hodge-Newton decomposability, the EO to Newton incidence, and atlas
assembly.

:func:`.build_atlas` is the one entry point that runs every module,
cross-validates their results and returns a :class:`.StrataAtlas`.  Any
failed check raises :class:`.exception.ValidationError` naming the
check.

"""
from __future__ import annotations

import itertools
import logging
from typing import Any
from typing import Dict
from typing import List
from typing import Mapping
from typing import Optional
from typing import Sequence
from typing import Tuple

from . import __version__
from . import exception
from .eo_strata import coxeter_closure_holds
from .eo_strata import eo_poset
from .eo_strata import EOPoset
from .eo_strata import EOStratum
from .eo_strata import minimal_eo
from .kottwitz import Avatar
from .kottwitz import newton_poset
from .kottwitz import NewtonClass
from .kottwitz import NewtonPoset
from .presets import load_preset
from .presets import Preset
from .root_datum import coroot_coefficients
from .root_datum import dominant_representative
from .root_datum import galois_average
from .root_datum import RationalCocharacter
from .root_datum import RootDatum
from .root_datum import two_rho_pairing

log = logging.getLogger(__name__)

PARTIAL_INCIDENCE_NOTE = (
    "incidence is partial: a stratum w meets the Newton stratum of b "
    "exactly when X_w(b) is nonempty, which is not computed here"
)


def sigma_stable_levis(d: RootDatum) -> List[Tuple[int, ...]]:
    """Proper subsets of simple indices that sigma maps to themselves,
    smallest first."""
    orbits = d.sigma_orbits
    everything = tuple(range(d.num_simple))
    result = []
    for size in range(len(orbits) + 1):
        for chosen in itertools.combinations(orbits, size):
            subset = tuple(sorted(i for orbit in chosen for i in orbit))
            if subset != everything:
                result.append(subset)
    return sorted(result, key=lambda s: (len(s), s))


def is_hn_decomposable(
    d: RootDatum,
    mu: RationalCocharacter,
    nc: NewtonClass,
    levi: Sequence[int],
) -> bool:
    """The centralizer of ``nu`` lies in the Levi and ``mu-bar - nu`` is
    a nonnegative combination of the Levi's simple coroots."""
    inside = set(levi)
    centralizer = {
        i for i, root in enumerate(d.simple_roots) if nc.nu.pair(root) == 0
    }
    if not centralizer <= inside:
        return False
    coefficients = coroot_coefficients(d, galois_average(d, mu) - nc.nu)
    if coefficients is None:
        return False
    return all(
        c >= 0 and (c == 0 or j in inside)
        for j, c in enumerate(coefficients)
    )


def is_fully_hn(
    d: RootDatum,
    mu: RationalCocharacter,
    newton: Optional[NewtonPoset] = None,
) -> bool:
    """Every non-basic class is Hodge-Newton decomposable for some
    proper sigma-stable Levi."""
    if newton is None:
        newton = newton_poset(d, mu)
    levis = sigma_stable_levis(d)
    return all(
        any(is_hn_decomposable(d, mu, nc, levi) for levi in levis)
        for nc in newton
        if not nc.is_basic
    )


def eo_newton_incidence(
    d: RootDatum,
    mu: RationalCocharacter,
    newton: Optional[NewtonPoset] = None,
    eo: Optional[EOPoset] = None,
    fully_hn: Optional[bool] = None,
) -> Dict[str, Optional[str]]:
    """Map each EO label to the label of the Newton class containing the
    stratum.

    With fully Hodge-Newton decomposable data the map is total:
    sigma-straight strata go to the class of their Newton point and the
    others to the basic class.  Otherwise only sigma-straight strata, the
    ordinary and the superspecial stratum are placed; the rest map to
    None.

    :raises ValidationError: a non-straight stratum has a non-basic
     Newton point on fully Hodge-Newton decomposable data.

    """
    if newton is None:
        newton = newton_poset(d, mu)
    if eo is None:
        eo = eo_poset(d, mu)
    if fully_hn is None:
        fully_hn = is_fully_hn(d, mu, newton)
    basic = newton.basic
    placed = {s.label: s.newton_class for s in minimal_eo(d, mu, newton, eo)}
    incidence: Dict[str, Optional[str]] = {}
    for s in eo:
        if s.label in placed:
            incidence[s.label] = placed[s.label]
        elif fully_hn:
            if s.newton_point != basic.nu:
                raise exception.ValidationError(
                    "incidence",
                    "%s is not sigma-straight but has non-basic Newton "
                    "point %s" % (s.label, s.newton_point),
                )
            incidence[s.label] = basic.label
        else:
            incidence[s.label] = None
    incidence[eo.ordinary.label] = newton.mu_ordinary.label
    incidence[eo.superspecial.label] = basic.label
    return incidence


def preset(name: str, params: Mapping[str, Any]):
    """``(datum, mu)`` of the preset registered as ``name``."""
    loaded = load_preset(name, params)
    return loaded.datum(), loaded.mu()


def _check_minuscule(d: RootDatum, mu: RationalCocharacter) -> None:
    if len(mu) != d.rank:
        raise exception.DatumError(
            "rank mismatch: mu has %d coordinates, rank is %d"
            % (len(mu), d.rank)
        )
    mu.integral()
    for entry in d.positive_roots:
        if abs(mu.pair(entry.root)) > 1:
            raise exception.DatumError(
                "mu = %s is not minuscule: it pairs to %s with a root"
                % (mu, mu.pair(entry.root))
            )


class StrataAtlas:
    """The assembled report.

    ``incidence`` maps EO labels to Newton labels (None where undecided);
    ``provenance`` records the preset, its parameters and the tool
    version.

    """

    def __init__(
        self,
        datum: RootDatum,
        mu: RationalCocharacter,
        newton: NewtonPoset,
        eo: EOPoset,
        incidence: Mapping[str, Optional[str]],
        fully_hn: bool,
        coxeter_tag: Optional[str] = None,
        provenance: Optional[Mapping[str, Any]] = None,
        notes: Sequence[str] = (),
    ):
        self.datum = datum
        self.mu = mu
        self.mu_bar = galois_average(datum, mu)
        self.newton = newton
        self.eo = eo
        self.incidence = dict(incidence)
        self.fully_hn = fully_hn
        self.split = datum.is_split
        self.coxeter_tag = coxeter_tag
        self.provenance = dict(provenance or {})
        self.notes = list(notes)

    @property
    def dimension(self) -> int:
        return int(two_rho_pairing(self.datum, self.mu))

    def fiber(self, newton_label: str) -> List[EOStratum]:
        return [s for s in self.eo if self.incidence[s.label] == newton_label]

    def _structure(self):
        return (
            self.datum,
            self.mu,
            self.newton.classes,
            [(a.label, b.label) for a, b in self.newton.covers],
            self.eo.strata,
            [(a.label, b.label) for a, b in self.eo.covers],
            self.incidence,
            self.fully_hn,
            self.split,
            self.coxeter_tag,
            self.provenance,
            self.notes,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, StrataAtlas):
            return NotImplemented
        return self._structure() == other._structure()

    def __repr__(self) -> str:
        return "<StrataAtlas %s mu=%s: %d Newton classes, %d EO strata>" % (
            self.datum.name,
            self.mu,
            len(self.newton),
            len(self.eo),
        )


def _validate(atlas: StrataAtlas, preset_obj: Optional[Preset]) -> None:
    newton, eo, incidence = atlas.newton, atlas.eo, atlas.incidence
    top = two_rho_pairing(atlas.datum, atlas.mu)

    for nc in newton:
        below = newton.poset.below(nc)
        if below and max(b.stratum_dim for b in below) != nc.stratum_dim - 1:
            raise exception.ValidationError(
                "purity",
                "the classes below %s do not reach dimension %s"
                % (nc.label, nc.stratum_dim - 1),
            )

    ordinary = newton.mu_ordinary
    if not (
        eo.ordinary.length == ordinary.stratum_dim == ordinary.leaf_dim == top
    ):
        raise exception.ValidationError(
            "mu-ordinary",
            "ordinary length %d, mu-ordinary dimension %s and leaf %s "
            "should all be %s"
            % (eo.ordinary.length, ordinary.stratum_dim, ordinary.leaf_dim, top),
        )

    # fully HN exactly when every non-basic stratum is one central leaf
    leaves_fill = all(
        nc.stratum_dim == nc.leaf_dim for nc in newton if not nc.is_basic
    )
    if leaves_fill != atlas.fully_hn:
        raise exception.ValidationError(
            "fully Hodge-Newton restatement",
            "fully_hn is %s but non-basic strata %s central leaves"
            % (atlas.fully_hn, "are" if leaves_fill else "are not all"),
        )

    by_label = {nc.label: nc for nc in newton}
    for s in eo:
        target = incidence[s.label]
        if target is None:
            continue
        nc = by_label[target]
        if s.length > nc.stratum_dim:
            raise exception.ValidationError(
                "incidence",
                "%s of length %d lies in %s of dimension %s"
                % (s.label, s.length, nc.label, nc.stratum_dim),
            )
        if atlas.fully_hn and not nc.is_basic and s.length != nc.leaf_dim:
            raise exception.ValidationError(
                "incidence",
                "%s in non-basic %s is not a central leaf" % (s.label, target),
            )
    hit = set(v for v in incidence.values() if v is not None)
    missing = [nc.label for nc in newton if nc.label not in hit]
    if missing:
        raise exception.ValidationError(
            "incidence", "no stratum in %s" % ", ".join(missing)
        )
    if atlas.fully_hn:
        for nc in newton:
            if nc.is_basic:
                continue
            fiber = atlas.fiber(nc.label)
            if any(not s.is_sigma_straight for s in fiber):
                raise exception.ValidationError(
                    "incidence",
                    "the fiber of %s holds a stratum that is not minimal"
                    % nc.label,
                )

    if atlas.coxeter_tag is not None and not coxeter_closure_holds(
        atlas.datum, newton, eo
    ):
        raise exception.ValidationError(
            "Coxeter type",
            "orders of %s data are not almost linear" % atlas.coxeter_tag,
        )

    if preset_obj is not None:
        preset_obj.check(atlas)


def build_atlas(
    d: RootDatum,
    mu: RationalCocharacter,
    avatar: Optional[Avatar] = None,
    preset: Optional[Preset] = None,
) -> StrataAtlas:
    """Run every computation on ``(d, mu)`` and cross-validate.

    ``mu`` is replaced by its dominant representative.  When ``preset``
    is given its avatar, labels, Coxeter tag and closed-form tables are
    used, and its parameters go into the provenance.

    :raises DatumError: ``mu`` is not a minuscule integral cocharacter of
     ``d``.
    :raises ValidationError: any check fails.

    """
    _check_minuscule(d, mu)
    if not mu.is_dominant(d):
        mu, _ = dominant_representative(d, mu)
        log.debug("replaced mu by its dominant representative %s", mu)
    if preset is not None and avatar is None:
        avatar = preset.avatar()

    newton = newton_poset(d, mu, avatar)
    eo = eo_poset(d, mu)
    if preset is not None:
        newton, eo = preset.relabel(newton, eo)

    fully_hn = is_fully_hn(d, mu, newton)
    incidence = eo_newton_incidence(d, mu, newton, eo, fully_hn)
    eo = eo.replace_strata(
        [s._replace(newton_class=incidence[s.label]) for s in eo]
    )

    notes = list(preset.notes()) if preset is not None else []
    if not fully_hn:
        notes.append(PARTIAL_INCIDENCE_NOTE)
    provenance = {
        "preset": preset.name if preset is not None else None,
        "parameters": preset.parameters if preset is not None else {},
        "tool_version": __version__,
    }
    atlas = StrataAtlas(
        d,
        mu,
        newton,
        eo,
        incidence,
        fully_hn,
        coxeter_tag=preset.coxeter_tag if preset is not None else None,
        provenance=provenance,
        notes=notes,
    )
    _validate(atlas, preset)
    log.debug("built %r", atlas)
    return atlas


def build_preset_atlas(name: str, params: Mapping[str, Any]) -> StrataAtlas:
    loaded = load_preset(name, params)
    return build_atlas(loaded.datum(), loaded.mu(), preset=loaded)
