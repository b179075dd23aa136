"""The extended affine Weyl group ``W ⋉ X_*``.

An :class:`.AffineElement` ``t^lam u`` multiplies as
``(t^lam u)(t^nu v) = t^(lam + u nu) uv``.  The base alcove is the one in
the dominant chamber whose closure contains the origin; ``Omega`` is its
stabilizer, the set of length-zero elements.

"""
from __future__ import annotations

from fractions import Fraction
import itertools
import logging
from typing import Dict
from typing import FrozenSet
from typing import List
from typing import Sequence
from typing import Set
from typing import Tuple

from . import exception
from .region import default_region
from .root_datum import dominant
from .root_datum import kottwitz_point
from .root_datum import Pi1Class
from .root_datum import RationalCocharacter
from .root_datum import RootDatum
from .root_datum import two_rho_pairing
from .util import memoized_property
from .util.lattice import dot
from .util.lattice import mat_sub
from .util.lattice import mat_vec
from .util.lattice import identity
from .util.lattice import outer
from .weyl import generate
from .weyl import jw_set
from .weyl import parabolic_type
from .weyl import WeylElement

log = logging.getLogger(__name__)


class AffineElement:
    """``t^translation * finite``."""

    def __init__(
        self,
        datum: RootDatum,
        translation: Sequence[int],
        finite: WeylElement,
    ):
        self.datum = datum
        self.translation: Tuple[int, ...] = tuple(translation)
        self.finite = finite

    @classmethod
    def identity(cls, datum: RootDatum) -> "AffineElement":
        return cls(datum, (0,) * datum.rank, WeylElement.identity(datum))

    @classmethod
    def translation_by(
        cls, datum: RootDatum, lam: Sequence[int]
    ) -> "AffineElement":
        return cls(datum, lam, WeylElement.identity(datum))

    @classmethod
    def from_finite(cls, w: WeylElement) -> "AffineElement":
        return cls(w.datum, (0,) * w.datum.rank, w)

    def __mul__(self, other: "AffineElement") -> "AffineElement":
        moved = self.finite.act(other.translation)
        return AffineElement(
            self.datum,
            tuple(a + b for a, b in zip(self.translation, moved)),
            self.finite * other.finite,
        )

    def inverse(self) -> "AffineElement":
        back = self.finite.act_inverse(self.translation)
        return AffineElement(
            self.datum, tuple(-x for x in back), self.finite.inverse()
        )

    def twist(self) -> "AffineElement":
        """The Frobenius image ``t^(sigma lam) phi(u)``."""
        return AffineElement(
            self.datum,
            mat_vec(self.datum.sigma, self.translation),
            self.finite.twist(),
        )

    def act(self, point: Sequence) -> Tuple:
        """Action on a point of ``X_* (x) Q``."""
        moved = self.finite.act(point)
        return tuple(a + b for a, b in zip(self.translation, moved))

    @memoized_property
    def length(self) -> int:
        return im_length(self)

    @memoized_property
    def reduced_word(self) -> Tuple[int, ...]:
        return reduced_word(self)

    @memoized_property
    def left_descents(self) -> Tuple[int, ...]:
        return tuple(
            k
            for k, s in enumerate(simple_affine_reflections(self.datum))
            if (s * self).length < self.length
        )

    @property
    def is_translation(self) -> bool:
        return self.finite.is_identity

    @property
    def label(self) -> str:
        return "t^(%s)%s" % (
            ",".join(str(x) for x in self.translation),
            "" if self.finite.is_identity else "*" + self.finite.label,
        )

    @property
    def cache_key(self) -> str:
        return "A%r%r" % (self.translation, self.finite.matrix)

    def sort_key(self):
        return (self.length, self.reduced_word, self.translation)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AffineElement):
            return NotImplemented
        return (
            self.translation == other.translation
            and self.finite == other.finite
        )

    def __hash__(self) -> int:
        return hash((self.translation, self.finite.matrix))

    def __lt__(self, other: "AffineElement") -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        return "<AffineElement %s>" % self.label


def im_length(e: AffineElement) -> int:
    """Iwahori-Matsumoto length.

    ``sum |<lam, a>|`` over positive ``a`` with ``u^-1 a > 0`` plus
    ``sum |<lam, a> - 1|`` over positive ``a`` with ``u^-1 a < 0``.

    """
    total = 0
    for entry in e.datum.positive_roots:
        pairing = dot(e.translation, entry.root)
        if e.finite.inverse_sends_positive(entry.coroot):
            total += abs(pairing)
        else:
            total += abs(pairing - 1)
    return total


@default_region.cache_on_arguments()
def simple_affine_reflections(d: RootDatum) -> Tuple[AffineElement, ...]:
    """The finite simple reflections followed by one ``s_0 = t^theta
    s_theta`` per Dynkin component, ``theta`` the highest root."""
    result = [
        AffineElement.from_finite(WeylElement.simple_reflection(d, i))
        for i in range(d.num_simple)
    ]
    for component in d.components:
        theta = d.highest_root(component)
        matrix = mat_sub(identity(d.rank), outer(theta.coroot, theta.root))
        result.append(
            AffineElement(d, theta.coroot, WeylElement(d, matrix, matrix))
        )
    return tuple(result)


def reduced_word(e: AffineElement) -> Tuple[int, ...]:
    """Greedy reduced word of the ``W_a`` part, smallest left descent
    first.  Letters index :func:`.simple_affine_reflections`."""
    reflections = simple_affine_reflections(e.datum)
    word: List[int] = []
    current = e
    while current.left_descents:
        k = current.left_descents[0]
        word.append(k)
        current = reflections[k] * current
    return tuple(word)


def omega_decompose(e: AffineElement) -> Tuple[AffineElement, AffineElement]:
    """Split ``e = w * omega`` with ``w`` in ``W_a`` and ``omega`` of
    length zero."""
    reflections = simple_affine_reflections(e.datum)
    omega = e
    for k in e.reduced_word:
        omega = reflections[k] * omega
    return e * omega.inverse(), omega


def bruhat_leq_affine(u: AffineElement, v: AffineElement) -> bool:
    """Bruhat order on ``W_a ⋊ Omega``; elements of different
    ``Omega``-cosets are incomparable."""
    if u.length > v.length:
        return False
    if omega_decompose(u)[1] != omega_decompose(v)[1]:
        return False
    reflections = simple_affine_reflections(u.datum)
    while True:
        if u.length > v.length:
            return False
        if v.length == 0:
            return u == v
        k = v.left_descents[0]
        v = reflections[k] * v
        if k in u.left_descents:
            u = reflections[k] * u


def sigma_conjugate(e: AffineElement, g: AffineElement) -> AffineElement:
    """``g e sigma(g)^-1``."""
    return g * e * g.twist().inverse()


@default_region.cache_on_arguments()
def adm_set(d: RootDatum, mu: RationalCocharacter) -> Tuple[AffineElement, ...]:
    """The admissible set: everything Bruhat-below some ``t^(x mu)``.

    Built downward from the translations by co-covers, each obtained by
    deleting one letter from a reduced word and keeping results one
    shorter.

    :raises CapExceeded: the set passes the ``adm`` cap.

    """
    lam = mu.integral()
    group = generate(d)
    reflections = simple_affine_reflections(d)
    tops = {
        AffineElement.translation_by(d, x.act(lam)) for x in group
    }
    found: Set[AffineElement] = set(tops)
    frontier = sorted(tops)
    while frontier:
        next_frontier: Set[AffineElement] = set()
        for e in frontier:
            word = e.reduced_word
            _, omega = omega_decompose(e)
            prefixes = [AffineElement.identity(d)]
            for k in word:
                prefixes.append(prefixes[-1] * reflections[k])
            suffixes = [omega]
            for k in reversed(word):
                suffixes.append(reflections[k] * suffixes[-1])
            suffixes.reverse()
            for pos in range(len(word)):
                candidate = prefixes[pos] * suffixes[pos + 1]
                if candidate.length != e.length - 1 or candidate in found:
                    continue
                found.add(candidate)
                next_frontier.add(candidate)
                default_region.check_cap(
                    "adm", len(found), "Adm(%s) of %s" % (mu, d.name)
                )
        frontier = sorted(next_frontier)
    log.debug("Adm(%s) of %s: %d elements", mu, d.name, len(found))
    return tuple(sorted(found))


def newton_point(e: AffineElement) -> RationalCocharacter:
    """``(e sigma)^n = t^lam`` for ``n`` a multiple of the order of sigma;
    the Newton point is the dominant representative of ``lam / n``.

    :raises CapExceeded: more than ``power`` iterations were needed.

    """
    return _newton_data(e)[0]


def _newton_data(e: AffineElement) -> Tuple[RationalCocharacter, int]:
    d = e.datum
    n0 = d.sigma_order
    bound = len(generate(d)) * n0
    power = e
    term = e
    k = 1
    while not (k % n0 == 0 and power.finite.is_identity):
        if k > bound:
            raise exception.ValidationError(
                "Newton point",
                "(e sigma)^n is not a translation for n <= %d" % bound,
            )
        term = term.twist()
        power = power * term
        k += 1
        default_region.check_cap("power", k, "Newton point of %r" % (e,))
    nu = dominant(d, [Fraction(x, k) for x in power.translation])
    return nu, k


def kottwitz_point_of(e: AffineElement) -> Pi1Class:
    return kottwitz_point(e.datum, e.translation)


def sigma_straightness(e: AffineElement) -> Tuple[RationalCocharacter, bool]:
    """Newton point of ``e`` and whether ``e`` is sigma-straight.

    Straightness is decided twice, by ``l(e) = <nu_e, 2 rho>`` and by
    ``l((e sigma)^n) = n l(e)`` for the ``n`` making ``(e sigma)^n`` a
    translation.

    :raises ValidationError: the two tests disagree.

    """
    nu, n = _newton_data(e)
    by_newton = e.length == two_rho_pairing(e.datum, nu)
    by_power = power_length(e, n) == n * e.length
    if by_newton != by_power:
        raise exception.ValidationError(
            "sigma-straightness",
            "%s: l(e) = <nu, 2rho> is %s but l((e sigma)^%d) = %d l(e) "
            "is %s" % (e.label, by_newton, n, n, by_power),
        )
    return nu, by_newton


def is_sigma_straight(e: AffineElement) -> bool:
    return sigma_straightness(e)[1]


def power_length(e: AffineElement, n: int) -> int:
    """``l((e sigma)^n)``, read as the length of
    ``e sigma(e) ... sigma^(n-1)(e)``."""
    power = e
    term = e
    for _ in range(n - 1):
        term = term.twist()
        power = power * term
    return power.length


def has_finite_left_descent(e: AffineElement) -> bool:
    return any(k < e.datum.num_simple for k in e.left_descents)


@default_region.cache_on_arguments()
def eo_set(d: RootDatum, mu: RationalCocharacter) -> Tuple[AffineElement, ...]:
    """``Adm(mu)`` intersected with the minimal representatives of
    ``W \\ W~``.

    :raises ValidationError: the count differs from ``|^JW|``.

    """
    result = tuple(e for e in adm_set(d, mu) if not has_finite_left_descent(e))
    expected = len(jw_set(d, parabolic_type(d, mu)))
    if len(result) != expected:
        raise exception.ValidationError(
            "EO cardinality",
            "|EO(mu)| = %d but |^JW| = %d" % (len(result), expected),
        )
    return result


def length_zero_elements(
    d: RootDatum, bound: int = 1
) -> FrozenSet[AffineElement]:
    """Length-zero elements ``t^lam u`` with every coordinate of ``lam``
    in ``[-bound, bound]``."""
    group = generate(d)
    box = range(-bound, bound + 1)
    default_region.check_cap(
        "adm",
        len(box) ** d.rank * len(group),
        "length-zero search for %s" % d.name,
    )
    found = set()
    for lam in itertools.product(box, repeat=d.rank):
        for u in group:
            e = AffineElement(d, lam, u)
            if e.length == 0:
                found.add(e)
    return frozenset(found)


def straight_elements(
    elements: Sequence[AffineElement],
) -> Dict[AffineElement, RationalCocharacter]:
    """Newton points of the sigma-straight members of ``elements``."""
    result = {}
    for e in elements:
        nu, straight = sigma_straightness(e)
        if straight:
            result[e] = nu
    return result
