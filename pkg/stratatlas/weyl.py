"""Finite Weyl group of a :class:`.RootDatum`.

Elements are kept as the integer matrix of their action on ``X_*``
together with its inverse; descents, lengths and reduced words are read
off the positive coroots.

"""
from __future__ import annotations

import logging
from typing import Dict
from typing import Iterable
from typing import Iterator
from typing import List
from typing import NamedTuple
from typing import Optional
from typing import Sequence
from typing import Tuple

from . import exception
from .region import default_region
from .root_datum import RationalCocharacter
from .root_datum import RootDatum
from .util import memoized_property
from .util.lattice import identity
from .util.lattice import IntMatrix
from .util.lattice import mat_mul
from .util.lattice import mat_vec
from .util.lattice import mat_sub
from .util.lattice import outer

log = logging.getLogger(__name__)


class WeylElement:
    """An element of the finite Weyl group."""

    def __init__(
        self, datum: RootDatum, matrix: IntMatrix, inverse_matrix: IntMatrix
    ):
        self.datum = datum
        self.matrix = matrix
        self.inverse_matrix = inverse_matrix

    @classmethod
    def identity(cls, datum: RootDatum) -> "WeylElement":
        one = identity(datum.rank)
        return cls(datum, one, one)

    @classmethod
    def simple_reflection(cls, datum: RootDatum, i: int) -> "WeylElement":
        m = mat_sub(
            identity(datum.rank),
            outer(datum.simple_coroots[i], datum.simple_roots[i]),
        )
        return cls(datum, m, m)

    @classmethod
    def from_word(cls, datum: RootDatum, word: Iterable[int]) -> "WeylElement":
        result = cls.identity(datum)
        for i in word:
            result = result * cls.simple_reflection(datum, i)
        return result

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(
            self.datum,
            mat_mul(self.matrix, other.matrix),
            mat_mul(other.inverse_matrix, self.inverse_matrix),
        )

    def inverse(self) -> "WeylElement":
        return WeylElement(self.datum, self.inverse_matrix, self.matrix)

    def act(self, v: Sequence) -> Tuple:
        return mat_vec(self.matrix, v)

    def act_inverse(self, v: Sequence) -> Tuple:
        return mat_vec(self.inverse_matrix, v)

    def twist(self) -> "WeylElement":
        """The Frobenius twist ``sigma w sigma^-1``."""
        d = self.datum
        return WeylElement(
            d,
            mat_mul(mat_mul(d.sigma, self.matrix), d.sigma_inverse),
            mat_mul(mat_mul(d.sigma, self.inverse_matrix), d.sigma_inverse),
        )

    def sends_positive(self, coroot: Tuple[int, ...]) -> bool:
        return self.act(coroot) in self.datum.positive_coroot_set

    def inverse_sends_positive(self, coroot: Tuple[int, ...]) -> bool:
        return self.act_inverse(coroot) in self.datum.positive_coroot_set

    def is_left_descent(self, i: int) -> bool:
        """``l(s_i w) < l(w)``, that is ``w^-1 alpha_i < 0``."""
        return not self.inverse_sends_positive(self.datum.simple_coroots[i])

    def is_right_descent(self, i: int) -> bool:
        return not self.sends_positive(self.datum.simple_coroots[i])

    @memoized_property
    def left_descents(self) -> Tuple[int, ...]:
        return tuple(
            i for i in range(self.datum.num_simple) if self.is_left_descent(i)
        )

    @memoized_property
    def right_descents(self) -> Tuple[int, ...]:
        return tuple(
            i for i in range(self.datum.num_simple) if self.is_right_descent(i)
        )

    @memoized_property
    def length(self) -> int:
        return sum(
            1
            for entry in self.datum.positive_roots
            if not self.sends_positive(entry.coroot)
        )

    @memoized_property
    def reduced_word(self) -> Tuple[int, ...]:
        """Lexicographically least reduced word, by peeling off the
        smallest left descent."""
        word: List[int] = []
        current = self
        while current.left_descents:
            i = current.left_descents[0]
            word.append(i)
            current = WeylElement.simple_reflection(self.datum, i) * current
        return tuple(word)

    @property
    def label(self) -> str:
        if not self.reduced_word:
            return "e"
        return "".join("s%d" % (i + 1) for i in self.reduced_word)

    @property
    def is_identity(self) -> bool:
        return self.matrix == identity(self.datum.rank)

    @property
    def cache_key(self) -> str:
        return "W%r" % (self.matrix,)

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (self.length, self.reduced_word)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __lt__(self, other: "WeylElement") -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        return "<WeylElement %s>" % self.label


class ParabolicType(NamedTuple):
    """A set ``J`` of simple indices, 0-based and sorted."""

    indices: Tuple[int, ...]

    @classmethod
    def of(cls, indices: Iterable[int]) -> "ParabolicType":
        return cls(tuple(sorted(set(indices))))

    def __contains__(self, i) -> bool:  # type: ignore[override]
        return i in self.indices

    @property
    def label(self) -> str:
        return "{%s}" % ",".join(str(i + 1) for i in self.indices)


class WeylGroup:
    """The elements of ``W`` in ``(length, reduced word)`` order."""

    def __init__(self, datum: RootDatum, elements: Iterable[WeylElement]):
        self.datum = datum
        self.elements: Tuple[WeylElement, ...] = tuple(sorted(elements))
        self._index: Dict[WeylElement, int] = {
            w: k for k, w in enumerate(self.elements)
        }

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[WeylElement]:
        return iter(self.elements)

    def __contains__(self, w) -> bool:
        return w in self._index

    @property
    def identity(self) -> WeylElement:
        return self.elements[0]

    @memoized_property
    def longest(self) -> WeylElement:
        return self.elements[-1]

    @memoized_property
    def simple_reflections(self) -> Tuple[WeylElement, ...]:
        return tuple(
            WeylElement.simple_reflection(self.datum, i)
            for i in range(self.datum.num_simple)
        )

    def index(self, w: WeylElement) -> int:
        return self._index[w]

    def parabolic_subgroup(self, J: ParabolicType) -> Tuple[WeylElement, ...]:
        allowed = set(J.indices)
        return tuple(
            w for w in self.elements if allowed.issuperset(w.reduced_word)
        )

    def longest_element(self, J: Optional[ParabolicType] = None) -> WeylElement:
        if J is None:
            return self.longest
        return self.parabolic_subgroup(J)[-1]


@default_region.cache_on_arguments()
def generate(d: RootDatum) -> WeylGroup:
    """Breadth-first closure of the simple reflections.

    :raises CapExceeded: ``|W|`` passes the ``weyl`` cap.

    """
    one = WeylElement.identity(d)
    reflections = [
        WeylElement.simple_reflection(d, i) for i in range(d.num_simple)
    ]
    seen = {one}
    frontier = [one]
    while frontier:
        next_frontier = []
        for w in frontier:
            for s in reflections:
                candidate = s * w
                if candidate not in seen:
                    seen.add(candidate)
                    next_frontier.append(candidate)
                    default_region.check_cap(
                        "weyl", len(seen), "Weyl group of %s" % d.name
                    )
        frontier = next_frontier
    log.debug("generated W(%s): %d elements", d.name, len(seen))
    return WeylGroup(d, seen)


def parabolic_type(d: RootDatum, mu: Sequence) -> ParabolicType:
    """``J = {i : <mu, alpha_i> = 0}``."""
    mu = RationalCocharacter(mu)
    return ParabolicType.of(
        i for i, root in enumerate(d.simple_roots) if mu.pair(root) == 0
    )


def parabolic_subgroup(d: RootDatum, J: ParabolicType):
    return generate(d).parabolic_subgroup(J)


def longest_element(
    d: RootDatum, J: Optional[ParabolicType] = None
) -> WeylElement:
    return generate(d).longest_element(J)


def opposition(d: RootDatum) -> Tuple[int, ...]:
    """``i -> i*`` with ``w0 alpha_i = -alpha_{i*}``."""
    w0 = generate(d).longest
    index = {c: i for i, c in enumerate(d.simple_coroots)}
    result = []
    for coroot in d.simple_coroots:
        image = w0.act(coroot)
        result.append(index[tuple(-x for x in image)])
    return tuple(result)


def twist_type(d: RootDatum, J: ParabolicType) -> ParabolicType:
    """``phi(J)``, the image of ``J`` under the Frobenius permutation."""
    return ParabolicType.of(d.sigma_permutation[i] for i in J.indices)


def bruhat_leq(u: WeylElement, v: WeylElement) -> bool:
    """Bruhat order, by descent recursion on ``v``.

    If ``s`` is a left descent of ``v`` then ``u <= v`` iff ``su <= sv``
    when ``s`` is also a left descent of ``u``, and iff ``u <= sv``
    otherwise.

    """
    d = u.datum
    while True:
        if u.length > v.length:
            return False
        if v.length == 0:
            return u == v
        s = v.left_descents[0]
        reflection = WeylElement.simple_reflection(d, s)
        v = reflection * v
        if u.is_left_descent(s):
            u = reflection * u


@default_region.cache_on_arguments()
def jw_set(d: RootDatum, J: ParabolicType) -> Tuple[WeylElement, ...]:
    """Minimal length representatives of ``W_J \\ W``, sorted by
    ``(length, reduced word)``."""
    group = generate(d)
    result = tuple(
        w
        for w in group
        if not any(w.is_left_descent(i) for i in J.indices)
    )
    subgroup = group.parabolic_subgroup(J)
    if len(result) * len(subgroup) != len(group):
        raise exception.ValidationError(
            "coset count",
            "|^JW| = %d but |W|/|W_J| = %d/%d"
            % (len(result), len(group), len(subgroup)),
        )
    return result


@default_region.cache_on_arguments()
def x_element(d: RootDatum, J: ParabolicType) -> WeylElement:
    """The minimal element of ``W_K w0 W_phi(J)``, ``K = w0 phi(J) w0``.

    :raises ValidationError: the result is not the longest element of
     ``^K W^phi(J)``.

    """
    group = generate(d)
    phi_j = twist_type(d, J)
    star = opposition(d)
    K = ParabolicType.of(star[i] for i in phi_j.indices)
    w0 = group.longest
    double_coset = {
        a * w0 * b
        for a in group.parabolic_subgroup(K)
        for b in group.parabolic_subgroup(phi_j)
    }
    x = min(double_coset)
    doubly_minimal = [
        w
        for w in group
        if not any(w.is_left_descent(i) for i in K.indices)
        and not any(w.is_right_descent(i) for i in phi_j.indices)
    ]
    if max(doubly_minimal) != x:
        raise exception.ValidationError(
            "x element",
            "%r is not the longest element of ^K W^phi(J)" % (x,),
        )
    return x


def eo_preceq(
    d: RootDatum, J: ParabolicType, w1: WeylElement, w2: WeylElement
) -> bool:
    """``w1 <= w2`` in the order on ``^JW``: some ``y`` in ``W_J`` has
    ``y w1 x phi(y)^-1 x^-1 <= w2`` in the Bruhat order."""
    if w1.length > w2.length:
        return False
    x = x_element(d, J)
    x_inverse = x.inverse()
    for y in parabolic_subgroup(d, J):
        candidate = y * w1 * x * y.inverse().twist() * x_inverse
        if bruhat_leq(candidate, w2):
            return True
    return False
