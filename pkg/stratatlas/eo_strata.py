"""Ekedahl-Oort strata: the poset ``^JW`` and its affine avatar
``EO(mu)``."""
from __future__ import annotations

import logging
from typing import Callable
from typing import Dict
from typing import Hashable
from typing import List
from typing import NamedTuple
from typing import Optional
from typing import Sequence
from typing import Tuple

from . import exception
from .affine_weyl import AffineElement
from .affine_weyl import bruhat_leq_affine
from .affine_weyl import eo_set
from .affine_weyl import sigma_conjugate
from .affine_weyl import sigma_straightness
from .kottwitz import newton_poset
from .kottwitz import NewtonPoset
from .region import default_region
from .root_datum import RationalCocharacter
from .root_datum import RootDatum
from .root_datum import two_rho_pairing
from .util import Poset
from .weyl import bruhat_leq
from .weyl import eo_preceq
from .weyl import generate
from .weyl import jw_set
from .weyl import ParabolicType
from .weyl import parabolic_type
from .weyl import WeylElement

log = logging.getLogger(__name__)


class EOStratum(NamedTuple):
    """One Ekedahl-Oort stratum.

    ``newton_class`` is the label of the Newton class of a minimal
    (sigma-straight) stratum, and None otherwise until an incidence is
    computed.

    """

    w: WeylElement
    length: int
    affine_form: AffineElement
    is_sigma_straight: bool
    newton_point: RationalCocharacter
    zip_orbit_dim: int
    label: str
    newton_class: Optional[str] = None

    def __repr__(self) -> str:
        return "<EOStratum %s length=%d>" % (self.label, self.length)


class EOPoset:
    """``^JW`` with the order and the affine forms of its elements."""

    def __init__(
        self,
        datum: RootDatum,
        mu: RationalCocharacter,
        J: ParabolicType,
        strata: Sequence[EOStratum],
        order: Poset,
    ):
        self.datum = datum
        self.mu = mu
        self.J = J
        self.strata: Tuple[EOStratum, ...] = tuple(strata)
        by_w = {s.w: s for s in self.strata}
        self.poset = Poset(
            self.strata, [(by_w[a], by_w[b]) for a, b in order.graph.edges]
        )
        self._order = order

    def __len__(self) -> int:
        return len(self.strata)

    def __iter__(self):
        return iter(self.strata)

    @property
    def order(self) -> Poset:
        """The order on the Weyl group elements themselves."""
        return self._order

    @property
    def superspecial(self) -> EOStratum:
        return self.strata[0]

    @property
    def ordinary(self) -> EOStratum:
        return self.strata[-1]

    @property
    def covers(self) -> List[Tuple[EOStratum, EOStratum]]:
        return self.poset.covers

    def by_label(self, label: str) -> EOStratum:
        for s in self.strata:
            if s.label == label:
                return s
        raise KeyError(label)

    def replace_strata(self, strata: Sequence[EOStratum]) -> "EOPoset":
        return EOPoset(self.datum, self.mu, self.J, strata, self._order)

    def relabel(self, labels: Dict[WeylElement, str]) -> "EOPoset":
        return self.replace_strata(
            [s._replace(label=labels.get(s.w, s.label)) for s in self]
        )


def zip_orbit_dim(d: RootDatum, J: ParabolicType, w: WeylElement) -> int:
    """``dim P + l(w)`` with ``dim P = rank + |Phi+| + |Phi+_J|``."""
    inside = set(J.indices)
    levi_roots = sum(
        1
        for entry in d.positive_roots
        if all(c == 0 or k in inside for k, c in enumerate(entry.coefficients))
    )
    return d.rank + len(d.positive_roots) + levi_roots + w.length


@default_region.cache_on_arguments()
def eo_order(d: RootDatum, mu: RationalCocharacter) -> Poset:
    """The order on ``^JW``, checked to be a partial order with unique
    minimum ``e`` and a unique maximum of length ``<2 rho, mu>``."""
    J = parabolic_type(d, mu)
    elements = jw_set(d, J)
    order = Poset.from_relation(
        elements, lambda a, b: eo_preceq(d, J, a, b)
    )
    if not order.is_partial_order():
        raise exception.ValidationError(
            "EO order", "the relation on ^JW is not a partial order"
        )
    bottom, top = order.minimum, order.maximum
    if bottom is None or not bottom.is_identity:
        raise exception.ValidationError(
            "EO order", "^JW has no unique minimum e"
        )
    if top is None or top.length != two_rho_pairing(d, mu):
        raise exception.ValidationError(
            "EO order",
            "^JW has no unique maximum of length <2 rho, mu> = %s"
            % two_rho_pairing(d, mu),
        )
    for a, b in order.graph.edges:
        if a.length >= b.length:
            raise exception.ValidationError(
                "EO order", "%r < %r does not raise length" % (a, b)
            )
    return order


def tau_element(d: RootDatum, mu: RationalCocharacter) -> AffineElement:
    """The length-zero element ``t^mu w_{0,J} w0`` of ``W t^mu W``."""
    group = generate(d)
    J = parabolic_type(d, mu)
    tau = AffineElement(
        d,
        mu.integral(),
        group.longest_element(J) * group.longest,
    )
    if tau.length != 0:
        raise exception.ValidationError(
            "identification", "tau = %r has length %d" % (tau, tau.length)
        )
    return tau


def affine_eo_preceq(
    d: RootDatum, a: AffineElement, b: AffineElement
) -> bool:
    """Some ``y`` in ``W`` has ``y a sigma(y)^-1 <= b`` in the Bruhat
    order.  The order refines length, so longer ``a`` are rejected
    outright."""
    if a.length > b.length:
        return False
    for y in generate(d):
        candidate = sigma_conjugate(a, AffineElement.from_finite(y))
        if candidate.length <= b.length and bruhat_leq_affine(candidate, b):
            return True
    return False


@default_region.cache_on_arguments()
def identify_T(
    d: RootDatum, mu: RationalCocharacter
) -> Dict[WeylElement, AffineElement]:
    """``w -> tau (w0 w w0)`` from ``^JW`` onto ``EO(mu)``.

    :raises ValidationError: the image is not ``EO(mu)``, lengths are not
     preserved, or the transported order differs from the order on
     ``^JW``.

    """
    group = generate(d)
    w0 = group.longest
    tau = tau_element(d, mu)
    order = eo_order(d, mu)
    transport = {
        w: tau * AffineElement.from_finite(w0 * w * w0) for w in order
    }
    targets = set(eo_set(d, mu))
    if set(transport.values()) != targets:
        raise exception.ValidationError(
            "identification",
            "image of ^JW is not EO(mu): %d of %d elements hit"
            % (len(set(transport.values()) & targets), len(targets)),
        )
    for w, e in transport.items():
        if e.length != w.length:
            raise exception.ValidationError(
                "identification",
                "%r has length %d but its image %r has length %d"
                % (w, w.length, e, e.length),
            )
    for w1 in order:
        for w2 in order:
            expected = order.leq(w1, w2)
            found = affine_eo_preceq(d, transport[w1], transport[w2])
            if expected != found:
                raise exception.ValidationError(
                    "identification",
                    "order mismatch at (%r, %r): ^JW says %s, EO(mu) "
                    "says %s" % (w1, w2, expected, found),
                )
    log.debug("identified ^JW with EO(%s) for %s", mu, d.name)
    return transport


@default_region.cache_on_arguments()
def eo_poset(d: RootDatum, mu: RationalCocharacter) -> EOPoset:
    """All strata, in ``(length, reduced word)`` order, with their
    affine forms and the order."""
    J = parabolic_type(d, mu)
    order = eo_order(d, mu)
    transport = identify_T(d, mu)
    strata = []
    for w in order:
        e = transport[w]
        nu, straight = sigma_straightness(e)
        strata.append(
            EOStratum(
                w=w,
                length=w.length,
                affine_form=e,
                is_sigma_straight=straight,
                newton_point=nu,
                zip_orbit_dim=zip_orbit_dim(d, J, w),
                label=w.label,
            )
        )
    return EOPoset(d, mu, J, strata, order)


def minimal_eo(
    d: RootDatum,
    mu: RationalCocharacter,
    newton: Optional[NewtonPoset] = None,
    eo: Optional[EOPoset] = None,
) -> Tuple[EOStratum, ...]:
    """The sigma-straight strata, labelled with their Newton classes.

    :raises ValidationError: some Newton class has no minimal stratum,
     or a split datum has two minimal strata in one class.

    """
    if newton is None:
        newton = newton_poset(d, mu)
    if eo is None:
        eo = eo_poset(d, mu)
    result = []
    for s in eo:
        if not s.is_sigma_straight:
            continue
        nc = newton.find(s.newton_point)
        if nc is None:
            raise exception.ValidationError(
                "minimal strata",
                "%r has Newton point %s outside B(G, mu)"
                % (s, s.newton_point),
            )
        result.append(s._replace(newton_class=nc.label))
    hit = [s.newton_class for s in result]
    missing = [nc.label for nc in newton if nc.label not in hit]
    if missing:
        raise exception.ValidationError(
            "minimal strata",
            "no minimal stratum for %s" % ", ".join(missing),
        )
    if d.is_split and len(set(hit)) != len(hit):
        raise exception.ValidationError(
            "minimal strata",
            "split datum has several minimal strata in one Newton class",
        )
    return tuple(result)


def is_almost_linear(
    poset: Poset, dimension: Callable[[Hashable], object]
) -> bool:
    """Two distinct elements are comparable exactly when their
    dimensions differ, and the order raises dimension."""
    nodes = list(poset)
    for a in nodes:
        for b in nodes:
            if a == b:
                continue
            if poset.lt(a, b) and not dimension(a) < dimension(b):
                return False
            if poset.comparable(a, b) != (dimension(a) != dimension(b)):
                return False
    return True


def coxeter_closure_holds(
    d: RootDatum, newton: NewtonPoset, eo: EOPoset
) -> bool:
    """The order properties of Coxeter type: the Newton order is almost
    linear in the stratum dimension, and on the strata outside the basic
    locus the order on ``^JW`` is the Bruhat order."""
    if not is_almost_linear(newton.poset, lambda nc: nc.stratum_dim):
        return False
    basic_label = newton.basic.label
    outside: List[EOStratum] = [
        s for s in eo if s.newton_class not in (None, basic_label)
    ]
    for a in outside:
        for b in outside:
            if eo.poset.leq(a, b) != bruhat_leq(a.w, b.w):
                return False
    return True
