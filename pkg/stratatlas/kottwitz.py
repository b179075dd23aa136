"""The Newton poset ``B(G, mu)``.

Two independent enumerations are provided: the sigma-straight elements of
the admissible set, and an exact walk over the rational polytope of
dominant sigma-invariant points below ``mu-bar``.  :func:`.newton_poset`
runs both, insists that they agree, and annotates every class with its
defect and dimensions.

"""
from __future__ import annotations

from fractions import Fraction
import itertools
import logging
import math
from typing import Dict
from typing import Iterable
from typing import List
from typing import NamedTuple
from typing import Optional
from typing import Sequence
from typing import Tuple
from typing import Union

from . import exception
from .affine_weyl import adm_set
from .affine_weyl import AffineElement
from .affine_weyl import kottwitz_point_of
from .affine_weyl import straight_elements
from .region import default_region
from .root_datum import central_part
from .root_datum import coroot_coefficients
from .root_datum import dominance_leq
from .root_datum import galois_average
from .root_datum import kottwitz_point
from .root_datum import Pi1Class
from .root_datum import RationalCocharacter
from .root_datum import rho
from .root_datum import RootDatum
from .root_datum import two_rho_pairing
from .root_datum import weight_orbit_sums
from .util import Poset
from .util import solve_rational
from .util.lattice import IntMatrix
from .util.lattice import mat_vec

log = logging.getLogger(__name__)


class NewtonClass(NamedTuple):
    """A point of ``B(G, mu)``.

    ``defect``, ``stratum_dim`` and ``leaf_dim`` are the reported values;
    when the class was computed through an :class:`.Avatar` they come from
    the avatar, and ``raw_defect`` / ``raw_stratum_dim`` keep what the
    defect formula gives on the stated group.

    """

    nu: RationalCocharacter
    kappa: Pi1Class
    straight_witness: Optional[AffineElement] = None
    label: str = ""
    defect: Optional[Fraction] = None
    stratum_dim: Optional[Fraction] = None
    leaf_dim: Optional[Fraction] = None
    raw_defect: Optional[Fraction] = None
    raw_stratum_dim: Optional[Fraction] = None
    avatar_nu: Optional[RationalCocharacter] = None
    is_basic: bool = False
    is_mu_ordinary: bool = False

    @property
    def key(self) -> Tuple[RationalCocharacter, Pi1Class]:
        return (self.nu, self.kappa)

    def __repr__(self) -> str:
        return "<NewtonClass %s nu=%s>" % (self.label or "?", self.nu)


class Avatar(NamedTuple):
    """A connected-center datum standing in for the stated one.

    Simple indices of ``datum`` match those of the stated datum, and
    ``projection`` maps its cocharacters onto the stated ones.

    """

    datum: RootDatum
    mu: RationalCocharacter
    projection: IntMatrix

    @property
    def cache_key(self) -> str:
        return "Avatar(%s,%s,%r)" % (
            self.datum.cache_key,
            self.mu.cache_key,
            self.projection,
        )


NuLike = Union[NewtonClass, RationalCocharacter, Sequence]


def _nu(value: NuLike) -> RationalCocharacter:
    if isinstance(value, NewtonClass):
        return value.nu
    if isinstance(value, RationalCocharacter):
        return value
    return RationalCocharacter(value)


def _frac(value: Fraction) -> Fraction:
    return value - math.floor(value)


def _sort_key(d: RootDatum):
    def key(nc: NewtonClass):
        return (two_rho_pairing(d, nc.nu), nc.nu, nc.kappa)

    return key


def b_set_via_straight(
    d: RootDatum, mu: RationalCocharacter
) -> Tuple[NewtonClass, ...]:
    """Classes of the sigma-straight elements of ``Adm(mu)``.

    Each class keeps its shortest straight element as witness.

    """
    found: Dict[Tuple, NewtonClass] = {}
    for e, nu in straight_elements(adm_set(d, mu)).items():
        kappa = kottwitz_point_of(e)
        existing = found.get((nu, kappa))
        if existing is None or e < existing.straight_witness:
            found[(nu, kappa)] = NewtonClass(nu, kappa, e)
    log.debug(
        "B(G, %s) of %s via straight elements: %d classes",
        mu,
        d.name,
        len(found),
    )
    return tuple(sorted(found.values(), key=_sort_key(d)))


def b_set_via_polytope(
    d: RootDatum, mu: RationalCocharacter
) -> Tuple[NewtonClass, ...]:
    """Dominant sigma-invariant ``nu <= mu-bar`` with
    ``<mu-bar - nu, w_O>`` a natural number for every sigma-orbit ``O``
    of simple roots on which ``nu`` does not vanish.

    Writing ``nu = mu-bar - sum c_j coroot_j`` the condition reads
    ``|O| c_O`` integral on the orbits where ``nu`` breaks, and ``nu``
    is determined by the break set and those integers.

    :raises CapExceeded: more candidates than the ``polytope`` cap.

    """
    mu_bar = galois_average(d, mu)
    kappa = kottwitz_point(d, mu)
    _, ceiling = central_part(d, mu_bar)
    orbits = d.sigma_orbits
    cartan = d.cartan_matrix
    pairings = [mu_bar.pair(root) for root in d.simple_roots]

    found = set()
    examined = 0
    for size in range(len(orbits) + 1):
        for breaks in itertools.combinations(range(len(orbits)), size):
            ranges = [
                range(
                    math.floor(len(orbits[o]) * ceiling[orbits[o][0]]) + 1
                )
                for o in breaks
            ]
            free = [
                j
                for o in range(len(orbits))
                if o not in breaks
                for j in orbits[o]
            ]
            for values in itertools.product(*ranges):
                examined += 1
                default_region.check_cap(
                    "polytope", examined, "B(G, %s) of %s" % (mu, d.name)
                )
                nu = _polytope_point(
                    d, mu_bar, pairings, cartan, orbits, breaks, values, free
                )
                if nu is not None:
                    found.add(nu)
    log.debug(
        "B(G, %s) of %s via polytope: %d classes from %d candidates",
        mu,
        d.name,
        len(found),
        examined,
    )
    return tuple(
        sorted((NewtonClass(nu, kappa) for nu in found), key=_sort_key(d))
    )


def _polytope_point(
    d: RootDatum,
    mu_bar: RationalCocharacter,
    pairings: List[Fraction],
    cartan: IntMatrix,
    orbits: Sequence[Tuple[int, ...]],
    breaks: Sequence[int],
    values: Sequence[int],
    free: List[int],
) -> Optional[RationalCocharacter]:
    c: Dict[int, Fraction] = {}
    for o, n in zip(breaks, values):
        for j in orbits[o]:
            c[j] = Fraction(n, len(orbits[o]))
    if free:
        # Levi system: <nu, alpha_i> = 0 for the free indices
        rows = [[cartan[j][i] for j in free] for i in free]
        rhs = [
            pairings[i]
            - sum((c[j] * cartan[j][i] for j in c), Fraction(0))
            for i in free
        ]
        solution = solve_rational(rows, rhs)
        if solution is None:
            return None
        c.update(zip(free, solution))
    if any(value < 0 for value in c.values()):
        return None
    nu = mu_bar
    for j, value in c.items():
        if value:
            nu = nu - [value * x for x in d.simple_coroots[j]]
    for o in breaks:
        if nu.pair(d.simple_roots[orbits[o][0]]) <= 0:
            return None
    return nu


def b_order(d: RootDatum, classes: Iterable[NewtonClass]) -> Poset:
    """Dominance order on Newton points."""
    return Poset.from_relation(
        classes, lambda a, b: dominance_leq(d, a.nu, b.nu)
    )


def defect(d: RootDatum, nc: NuLike) -> Fraction:
    """``2 * sum_O frac(<nu, w_O>)`` over sigma-orbits ``O``.

    The value is returned exactly; callers decide whether a non-integral
    result is an error.

    """
    nu = _nu(nc)
    sums = weight_orbit_sums(d).sums
    return 2 * sum((_frac(nu.pair(w)) for w in sums), Fraction(0))


def newton_dim(
    d: RootDatum,
    mu: RationalCocharacter,
    nc: NuLike,
    defect_value: Optional[Fraction] = None,
) -> Fraction:
    """``<rho, mu + nu> - def / 2``.

    :raises ValidationError: the value leaves ``[0, <2 rho, mu>]``.

    """
    nu = _nu(nc)
    if defect_value is None:
        defect_value = defect(d, nu)
    r = rho(d)
    value = r.pair(mu) + r.pair(nu) - defect_value / 2
    top = two_rho_pairing(d, mu)
    if not 0 <= value <= top:
        raise exception.ValidationError(
            "Newton dimension",
            "dimension %s of nu = %s lies outside [0, %s]" % (value, nu, top),
        )
    return value


def leaf_dim(d: RootDatum, nc: NuLike) -> Fraction:
    """``<2 rho, nu>``."""
    return two_rho_pairing(d, _nu(nc))


def lift_newton_point(
    d: RootDatum,
    mu: RationalCocharacter,
    avatar: Avatar,
    nu: RationalCocharacter,
) -> RationalCocharacter:
    """Carry ``nu`` to the avatar by keeping its coroot coordinates
    below ``mu-bar``."""
    mu_bar = galois_average(d, mu)
    coefficients = coroot_coefficients(d, mu_bar - nu)
    if coefficients is None:
        raise exception.ValidationError(
            "avatar lift", "mu-bar - %s is not in the coroot span" % nu
        )
    lifted = galois_average(avatar.datum, avatar.mu)
    for c, coroot in zip(coefficients, avatar.datum.simple_coroots):
        lifted = lifted - [c * x for x in coroot]
    if RationalCocharacter(mat_vec(avatar.projection, lifted)) != nu:
        raise exception.ValidationError(
            "avatar lift", "%s does not project back to %s" % (lifted, nu)
        )
    return lifted


def _is_integral(value: Fraction) -> bool:
    return Fraction(value).denominator == 1


class NewtonPoset:
    """``B(G, mu)`` with its order and the distinguished classes."""

    def __init__(
        self,
        datum: RootDatum,
        mu: RationalCocharacter,
        classes: Sequence[NewtonClass],
        avatar: Optional[Avatar] = None,
    ):
        self.datum = datum
        self.mu = mu
        self.mu_bar = galois_average(datum, mu)
        self.avatar = avatar
        self.classes: Tuple[NewtonClass, ...] = tuple(classes)
        self.poset = b_order(datum, self.classes)

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    @property
    def basic(self) -> NewtonClass:
        return next(nc for nc in self.classes if nc.is_basic)

    @property
    def mu_ordinary(self) -> NewtonClass:
        return next(nc for nc in self.classes if nc.is_mu_ordinary)

    def find(self, nu: RationalCocharacter) -> Optional[NewtonClass]:
        for nc in self.classes:
            if nc.nu == nu:
                return nc
        return None

    def by_label(self, label: str) -> NewtonClass:
        for nc in self.classes:
            if nc.label == label:
                return nc
        raise KeyError(label)

    def relabel(self, labels: Dict[RationalCocharacter, str]) -> "NewtonPoset":
        return NewtonPoset(
            self.datum,
            self.mu,
            [nc._replace(label=labels.get(nc.nu, nc.label)) for nc in self],
            self.avatar,
        )

    @property
    def covers(self) -> List[Tuple[NewtonClass, NewtonClass]]:
        return self.poset.covers


def annotate(
    d: RootDatum,
    mu: RationalCocharacter,
    nc: NewtonClass,
    avatar: Optional[Avatar] = None,
) -> NewtonClass:
    raw_defect = defect(d, nc)
    r = rho(d)
    raw_dim = r.pair(mu) + r.pair(nc.nu) - raw_defect / 2
    if avatar is None:
        return nc._replace(
            defect=raw_defect,
            stratum_dim=newton_dim(d, mu, nc, raw_defect),
            leaf_dim=leaf_dim(d, nc),
            raw_defect=raw_defect,
            raw_stratum_dim=raw_dim,
        )
    lifted = lift_newton_point(d, mu, avatar, nc.nu)
    avatar_defect = defect(avatar.datum, lifted)
    return nc._replace(
        defect=avatar_defect,
        stratum_dim=newton_dim(avatar.datum, avatar.mu, lifted, avatar_defect),
        leaf_dim=leaf_dim(avatar.datum, lifted),
        raw_defect=raw_defect,
        raw_stratum_dim=raw_dim,
        avatar_nu=lifted,
    )


@default_region.cache_on_arguments()
def newton_poset(
    d: RootDatum, mu: RationalCocharacter, avatar: Optional[Avatar] = None
) -> NewtonPoset:
    """Compute ``B(G, mu)`` both ways and annotate it.

    Classes are labelled ``b0, b1, ...`` in increasing
    ``(<2 rho, nu>, nu)`` order, so ``b0`` is basic.

    :raises ValidationError: the enumerations disagree, a reported
     dimension or defect is not integral, or the extremal classes are not
     unique.

    """
    via_straight = b_set_via_straight(d, mu)
    via_polytope = b_set_via_polytope(d, mu)
    straight_keys = {nc.key for nc in via_straight}
    polytope_keys = {nc.key for nc in via_polytope}
    if straight_keys != polytope_keys:
        raise exception.ValidationError(
            "route equivalence",
            "straight elements give %s, polytope gives %s"
            % (
                sorted(str(nu) for nu, _ in straight_keys - polytope_keys),
                sorted(str(nu) for nu, _ in polytope_keys - straight_keys),
            ),
        )
    kappas = {nc.kappa for nc in via_straight}
    if len(kappas) != 1:
        raise exception.ValidationError(
            "Kottwitz point", "classes carry %d distinct kappa" % len(kappas)
        )

    mu_bar = galois_average(d, mu)
    classes = []
    for k, nc in enumerate(via_straight):
        nc = annotate(d, mu, nc, avatar)._replace(label="b%d" % k)
        for name in ("defect", "stratum_dim", "leaf_dim"):
            if not _is_integral(getattr(nc, name)):
                raise exception.ValidationError(
                    "integrality",
                    "%s of %s is %s" % (name, nc.nu, getattr(nc, name)),
                )
        if nc.leaf_dim > nc.stratum_dim:
            raise exception.ValidationError(
                "leaf dimension",
                "leaf %s exceeds stratum %s at %s"
                % (nc.leaf_dim, nc.stratum_dim, nc.nu),
            )
        classes.append(nc)

    result = NewtonPoset(d, mu, classes, avatar)
    minimum = result.poset.minimum
    maximum = result.poset.maximum
    if minimum is None or maximum is None or maximum.nu != mu_bar:
        raise exception.ValidationError(
            "extremal classes",
            "B(G, %s) needs a unique minimum and the maximum mu-bar = %s"
            % (mu, mu_bar),
        )
    result = NewtonPoset(
        d,
        mu,
        [
            nc._replace(is_basic=nc == minimum, is_mu_ordinary=nc == maximum)
            for nc in classes
        ],
        avatar,
    )
    log.debug("B(G, %s) of %s: %d classes", mu, d.name, len(result))
    return result
