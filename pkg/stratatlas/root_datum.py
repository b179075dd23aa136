"""Based root data with a Frobenius action, and the lattice arithmetic
built on them.

Cocharacters live in ``X_*`` and characters (roots, weights) in ``X^*``;
both are integer vectors of length ``rank`` and pair by the dot product.
``sigma`` is an integer matrix acting on ``X_*``; its transpose-inverse
acts on ``X^*``.

"""
from __future__ import annotations

from fractions import Fraction
import logging
import re
from typing import Any
from typing import Dict
from typing import Iterable
from typing import List
from typing import Mapping
from typing import NamedTuple
from typing import Optional
from typing import Sequence
from typing import Tuple
from typing import TYPE_CHECKING
from typing import Union

import networkx as nx

from . import exception
from .util import memoized_property
from .util import smith_form
from .util import solve_rational
from .util.lattice import block_diagonal
from .util.lattice import dot
from .util.lattice import identity
from .util.lattice import int_inverse
from .util.lattice import IntMatrix
from .util.lattice import is_identity
from .util.lattice import left_inverse
from .util.lattice import mat_mul
from .util.lattice import mat_vec
from .util.lattice import transpose

if TYPE_CHECKING:
    from .weyl import WeylElement

log = logging.getLogger(__name__)

# positive root systems of finite type stay far below this
_MAX_POSITIVE_ROOTS = 20000
_MAX_SIGMA_ORDER = 10000

Number = Union[int, Fraction]


def format_rational(value: Number) -> str:
    """Serialize an exact rational as a normalized ``"p/q"`` string."""
    value = Fraction(value)
    return "%d/%d" % (value.numerator, value.denominator)


def parse_rational(text: Union[str, int]) -> Fraction:
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str) or not re.match(
        r"^\s*[-+]?\d+(\s*/\s*\d+)?\s*$", text
    ):
        raise exception.DatumError("not a rational number: %r" % (text,))
    value = Fraction(text.replace(" ", ""))
    return value


class RationalCocharacter:
    """An exact rational vector.

    Used for cocharacters (``mu``, Newton points) and, by the same
    arithmetic, for rational weights such as ``rho``.

    """

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable[Number]):
        self.coords: Tuple[Fraction, ...] = tuple(
            Fraction(c) for c in coords
        )

    @classmethod
    def parse(cls, values: Iterable[Union[str, int]]) -> "RationalCocharacter":
        return cls(parse_rational(v) for v in values)

    @classmethod
    def zero(cls, rank: int) -> "RationalCocharacter":
        return cls([0] * rank)

    def as_strings(self) -> List[str]:
        return [format_rational(c) for c in self.coords]

    @property
    def cache_key(self) -> str:
        return "(%s)" % ",".join(self.as_strings())

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def integral(self) -> Tuple[int, ...]:
        if not self.is_integral():
            raise exception.DatumError(
                "cocharacter %s is not integral" % self
            )
        return tuple(c.numerator for c in self.coords)

    def pair(self, other: Iterable[Number]) -> Fraction:
        return sum((a * b for a, b in zip(self.coords, other)), Fraction(0))

    def is_dominant(self, datum: "RootDatum") -> bool:
        return all(self.pair(a) >= 0 for a in datum.simple_roots)

    def __iter__(self):
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, index):
        return self.coords[index]

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, RationalCocharacter):
            return self.coords == other.coords
        if isinstance(other, (tuple, list)):
            return self.coords == tuple(Fraction(c) for c in other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coords)

    def __lt__(self, other: "RationalCocharacter") -> bool:
        return self.coords < other.coords

    def __add__(self, other: Iterable[Number]) -> "RationalCocharacter":
        return RationalCocharacter(a + b for a, b in zip(self.coords, other))

    def __sub__(self, other: Iterable[Number]) -> "RationalCocharacter":
        return RationalCocharacter(a - b for a, b in zip(self.coords, other))

    def __neg__(self) -> "RationalCocharacter":
        return RationalCocharacter(-a for a in self.coords)

    def __mul__(self, scalar: Number) -> "RationalCocharacter":
        return RationalCocharacter(a * scalar for a in self.coords)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Number) -> "RationalCocharacter":
        return RationalCocharacter(a / Fraction(scalar) for a in self.coords)

    def __str__(self) -> str:
        return "(%s)" % ", ".join(str(c) for c in self.coords)

    def __repr__(self) -> str:
        return "RationalCocharacter(%s)" % str(self)


class Pi1Class(NamedTuple):
    """A class in ``(X_*/coroot lattice)_sigma``.

    ``value[k]`` is read modulo ``moduli[k]``; a modulus of 0 marks a free
    coordinate.

    """

    value: Tuple[int, ...]
    moduli: Tuple[int, ...]

    def __str__(self) -> str:
        if not self.value:
            return "0"
        return "(%s)" % ", ".join(
            "%d" % v if m == 0 else "%d mod %d" % (v, m)
            for v, m in zip(self.value, self.moduli)
        )


class Root(NamedTuple):
    root: Tuple[int, ...]
    coroot: Tuple[int, ...]
    coefficients: Tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.coefficients)


class WeightOrbitSums(NamedTuple):
    fundamental: Tuple[RationalCocharacter, ...]
    integral: bool
    orbits: Tuple[Tuple[int, ...], ...]
    sums: Tuple[RationalCocharacter, ...]


class Pi1Presentation(NamedTuple):
    left: IntMatrix
    diagonal: Tuple[int, ...]
    coordinates: Tuple[int, ...]


def _as_int_vector(values: Sequence[Any], what: str) -> Tuple[int, ...]:
    try:
        result = tuple(values)
    except TypeError:
        raise exception.DatumError("%s must be a list of integers" % what)
    for v in result:
        if isinstance(v, bool) or not isinstance(v, int):
            raise exception.DatumError(
                "%s must contain integers, got %r" % (what, v)
            )
    return result


class RootDatum:
    """A based root datum with Frobenius action.

    :param simple_roots: integer vectors in ``X^*``.
    :param simple_coroots: integer vectors in ``X_*``, index-aligned with
     ``simple_roots``.
    :param sigma: integer matrix on ``X_*`` of finite order permuting the
     simple coroots (and, through its transpose-inverse, the simple roots
     the same way).  Defaults to the identity.
    :param rank: rank of ``X_*``; required when there are no roots.
    :param name: descriptor used in reports.

    :raises DatumError: the Cartan condition fails, ``sigma`` does not
     permute the simple roots, or dimensions do not match.

    """

    def __init__(
        self,
        simple_roots: Sequence[Sequence[int]],
        simple_coroots: Sequence[Sequence[int]],
        sigma: Optional[Sequence[Sequence[int]]] = None,
        rank: Optional[int] = None,
        name: Optional[str] = None,
    ):
        roots = tuple(
            _as_int_vector(r, "simple root") for r in simple_roots
        )
        coroots = tuple(
            _as_int_vector(c, "simple coroot") for c in simple_coroots
        )
        if rank is None:
            if not roots:
                raise exception.DatumError(
                    "rank must be given for a datum without roots"
                )
            rank = len(roots[0])
        if isinstance(rank, bool) or not isinstance(rank, int) or rank < 1:
            raise exception.DatumError("rank must be a positive integer")
        if len(roots) != len(coroots):
            raise exception.DatumError(
                "rank mismatch: %d simple roots but %d simple coroots"
                % (len(roots), len(coroots))
            )
        for vector in roots + coroots:
            if len(vector) != rank:
                raise exception.DatumError(
                    "rank mismatch: vector %r is not of length %d"
                    % (vector, rank)
                )
        if sigma is None:
            sigma_matrix = identity(rank)
        else:
            sigma_matrix = tuple(
                _as_int_vector(row, "sigma row") for row in sigma
            )
            if len(sigma_matrix) != rank or any(
                len(row) != rank for row in sigma_matrix
            ):
                raise exception.DatumError(
                    "rank mismatch: sigma must be a %dx%d matrix"
                    % (rank, rank)
                )

        self.rank = rank
        self.simple_roots: Tuple[Tuple[int, ...], ...] = roots
        self.simple_coroots: Tuple[Tuple[int, ...], ...] = coroots
        self.sigma: IntMatrix = sigma_matrix
        self.name = name or "datum"
        self._validate()

    def _validate(self) -> None:
        cartan = self.cartan_matrix
        for i, row in enumerate(cartan):
            if row[i] != 2:
                raise exception.DatumError(
                    "Cartan condition fails: <coroot %d, root %d> = %d, "
                    "expected 2" % (i + 1, i + 1, row[i])
                )
            for j, entry in enumerate(row):
                if i == j:
                    continue
                if entry > 0:
                    raise exception.DatumError(
                        "Cartan condition fails: <coroot %d, root %d> = %d "
                        "is positive" % (i + 1, j + 1, entry)
                    )
                if (entry == 0) != (cartan[j][i] == 0):
                    raise exception.DatumError(
                        "Cartan condition fails: entries (%d, %d) and "
                        "(%d, %d) are not simultaneously zero"
                        % (i + 1, j + 1, j + 1, i + 1)
                    )
        # finite type and closure of the root recursion
        self.positive_roots
        # sigma invariants
        self.sigma_permutation
        self.sigma_order

    @memoized_property
    def cartan_matrix(self) -> IntMatrix:
        """``cartan_matrix[i][j] = <coroot_i, root_j>``."""
        return tuple(
            tuple(dot(c, r) for r in self.simple_roots)
            for c in self.simple_coroots
        )

    @property
    def num_simple(self) -> int:
        return len(self.simple_roots)

    @memoized_property
    def sigma_inverse(self) -> IntMatrix:
        try:
            return int_inverse(self.sigma)
        except ValueError:
            raise exception.DatumError(
                "sigma is not invertible over the integers"
            )

    @memoized_property
    def sigma_dual(self) -> IntMatrix:
        """The action of sigma on ``X^*``."""
        return transpose(self.sigma_inverse)

    @memoized_property
    def sigma_permutation(self) -> Tuple[int, ...]:
        """``p`` with ``sigma(coroot_i) = coroot_p[i]``."""
        coroot_index = {c: i for i, c in enumerate(self.simple_coroots)}
        root_index = {r: i for i, r in enumerate(self.simple_roots)}
        perm = []
        for i in range(self.num_simple):
            image = mat_vec(self.sigma, self.simple_coroots[i])
            root_image = mat_vec(self.sigma_dual, self.simple_roots[i])
            j = coroot_index.get(image)
            if j is None or root_index.get(root_image) != j:
                raise exception.DatumError(
                    "sigma does not permute the simple roots: "
                    "simple root %d is not sent to a simple root" % (i + 1)
                )
            perm.append(j)
        return tuple(perm)

    @memoized_property
    def sigma_order(self) -> int:
        power = self.sigma
        for order in range(1, _MAX_SIGMA_ORDER + 1):
            if is_identity(power):
                return order
            power = mat_mul(self.sigma, power)
        raise exception.DatumError("sigma is not of finite order")

    @property
    def is_split(self) -> bool:
        return is_identity(self.sigma)

    @memoized_property
    def positive_roots(self) -> Tuple[Root, ...]:
        """Positive roots with coroots, by the simple-reflection recursion.

        Ordered by height, then by coefficient vector.

        """
        r = self.num_simple
        found: Dict[Tuple[int, ...], Root] = {}
        queue: List[Root] = []
        for i in range(r):
            coeffs = tuple(1 if k == i else 0 for k in range(r))
            entry = Root(self.simple_roots[i], self.simple_coroots[i], coeffs)
            found[entry.root] = entry
            queue.append(entry)
        while queue:
            beta = queue.pop()
            for i in range(r):
                if beta.root == self.simple_roots[i]:
                    continue
                n = dot(self.simple_coroots[i], beta.root)
                if n == 0:
                    continue
                m = dot(beta.coroot, self.simple_roots[i])
                root = tuple(
                    b - n * a for b, a in zip(beta.root, self.simple_roots[i])
                )
                if root in found:
                    continue
                coroot = tuple(
                    b - m * a
                    for b, a in zip(beta.coroot, self.simple_coroots[i])
                )
                coeffs = tuple(
                    c - (n if k == i else 0)
                    for k, c in enumerate(beta.coefficients)
                )
                if min(coeffs) < 0:
                    raise exception.DatumError(
                        "simple-reflection recursion produced a root that "
                        "is neither positive nor negative"
                    )
                entry = Root(root, coroot, coeffs)
                found[root] = entry
                queue.append(entry)
                if len(found) > _MAX_POSITIVE_ROOTS:
                    raise exception.DatumError(
                        "Cartan matrix is not of finite type"
                    )
        return tuple(
            sorted(found.values(), key=lambda e: (e.height, e.coefficients))
        )

    @memoized_property
    def positive_coroot_set(self) -> frozenset:
        return frozenset(entry.coroot for entry in self.positive_roots)

    @memoized_property
    def components(self) -> Tuple[Tuple[int, ...], ...]:
        """Connected components of the Dynkin diagram."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.num_simple))
        cartan = self.cartan_matrix
        graph.add_edges_from(
            (i, j)
            for i in range(self.num_simple)
            for j in range(i + 1, self.num_simple)
            if cartan[i][j] != 0
        )
        return tuple(
            sorted(tuple(sorted(c)) for c in nx.connected_components(graph))
        )

    @memoized_property
    def sigma_orbits(self) -> Tuple[Tuple[int, ...], ...]:
        """Orbits of sigma on the simple indices."""
        seen = set()
        orbits = []
        for i in range(self.num_simple):
            if i in seen:
                continue
            orbit = []
            j = i
            while j not in orbit:
                orbit.append(j)
                j = self.sigma_permutation[j]
            seen.update(orbit)
            orbits.append(tuple(sorted(orbit)))
        return tuple(orbits)

    def highest_root(self, component: Sequence[int]) -> Root:
        members = set(component)
        candidates = [
            entry
            for entry in self.positive_roots
            if all(
                c == 0 or k in members
                for k, c in enumerate(entry.coefficients)
            )
        ]
        return max(candidates, key=lambda e: (e.height, e.coefficients))

    @memoized_property
    def cache_key(self) -> str:
        return "RootDatum(%r,%r,%r,%r)" % (
            self.rank,
            self.simple_roots,
            self.simple_coroots,
            self.sigma,
        )

    @memoized_property
    def coroot_left_inverse(self):
        return left_inverse(self.simple_coroots)

    @memoized_property
    def pi1_presentation(self) -> Pi1Presentation:
        """Smith form of the relations of ``(X_*/coroot lattice)_sigma``."""
        n = self.rank
        sigma_minus_one = tuple(
            tuple(self.sigma[i][j] - (1 if i == j else 0) for j in range(n))
            for i in range(n)
        )
        columns = list(self.simple_coroots) + list(transpose(sigma_minus_one))
        relations = transpose(columns)
        form = smith_form(relations, len(columns))
        diagonal = tuple(
            form.diagonal[k] if k < len(form.diagonal) else 0
            for k in range(n)
        )
        coordinates = tuple(k for k in range(n) if diagonal[k] != 1)
        return Pi1Presentation(form.left, diagonal, coordinates)

    def reflect(self, i: int, v: Sequence[Number]) -> Tuple[Number, ...]:
        """Apply the simple reflection ``s_i`` to a vector of ``X_*``."""
        n = dot(v, self.simple_roots[i])
        if n == 0:
            return tuple(v)
        return tuple(x - n * c for x, c in zip(v, self.simple_coroots[i]))

    def apply_sigma(self, v: Sequence[Number], power: int = 1):
        for _ in range(power % self.sigma_order):
            v = mat_vec(self.sigma, v)
        return tuple(v)

    def apply_sigma_dual(self, chi: Sequence[Number], power: int = 1):
        for _ in range(power % self.sigma_order):
            chi = mat_vec(self.sigma_dual, chi)
        return tuple(chi)

    def dual(self) -> "RootDatum":
        """Swap roots and coroots; sigma acts by its transpose-inverse."""
        return RootDatum(
            self.simple_coroots,
            self.simple_roots,
            self.sigma_dual,
            rank=self.rank,
            name="dual(%s)" % self.name,
        )

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, RootDatum):
            return NotImplemented
        return self.cache_key == other.cache_key

    def __hash__(self) -> int:
        return hash(self.cache_key)

    def __repr__(self) -> str:
        return "<RootDatum %s rank=%d simple=%d>" % (
            self.name,
            self.rank,
            self.num_simple,
        )


def _standard(i: int, n: int, scale: int = 1) -> Tuple[int, ...]:
    return tuple(scale if k == i else 0 for k in range(n))


def _difference(i: int, j: int, n: int) -> Tuple[int, ...]:
    return tuple(
        (1 if k == i else 0) - (1 if k == j else 0) for k in range(n)
    )


def _chain(n: int, length: int, offset: int = 0) -> List[Tuple[int, ...]]:
    return [_difference(offset + i, offset + i + 1, n) for i in range(length)]


def general_linear(k: int) -> RootDatum:
    if k < 1:
        raise exception.DatumError("GL(k) needs k >= 1")
    roots = _chain(k, k - 1)
    return RootDatum(roots, roots, rank=k, name="GL(%d)" % k)


def symplectic(two_g: int, similitude: bool = False) -> RootDatum:
    if two_g < 2 or two_g % 2:
        raise exception.DatumError(
            "symplectic groups need an even size >= 2, got %d" % two_g
        )
    g = two_g // 2
    n = g + 1 if similitude else g
    roots = _chain(n, g - 1)
    coroots = list(roots)
    long_root = list(_standard(g - 1, n, 2))
    if similitude:
        long_root[g] = -1
    roots.append(tuple(long_root))
    coroots.append(_standard(g - 1, n))
    name = "%s(%d)" % ("GSp" if similitude else "Sp", two_g)
    return RootDatum(roots, coroots, rank=n, name=name)


def _orthogonal_roots(
    n_dim: int, offset: int, total: int, spin: bool
) -> Tuple[List[Tuple[int, ...]], List[Tuple[int, ...]]]:
    m = n_dim // 2
    roots = _chain(total, m - 1, offset)
    coroots = list(roots)
    if n_dim % 2:
        if m >= 1:
            roots.append(_standard(offset + m - 1, total))
            coroot = list(_standard(offset + m - 1, total, 2))
            if spin:
                coroot[0] = -1
            coroots.append(tuple(coroot))
    elif m >= 2:
        fork = tuple(
            1 if k in (offset + m - 2, offset + m - 1) else 0
            for k in range(total)
        )
        roots.append(fork)
        coroot = list(fork)
        if spin:
            coroot[0] = -1
        coroots.append(tuple(coroot))
    return roots, coroots


def special_orthogonal(n_dim: int, form: str = "split") -> RootDatum:
    """``SO(n_dim)`` on the diagonal torus.

    The non-split even form uses ``sigma: e_m -> -e_m``, which swaps the
    two fork roots.

    """
    _check_orthogonal(n_dim, form)
    m = n_dim // 2
    roots, coroots = _orthogonal_roots(n_dim, 0, m, spin=False)
    sigma = None
    if form == "nonsplit":
        sigma = tuple(
            tuple(
                (-1 if i == m - 1 else 1) if i == j else 0 for j in range(m)
            )
            for i in range(m)
        )
    return RootDatum(
        roots, coroots, sigma, rank=m, name=_orthogonal_name("SO", n_dim, form)
    )


def gspin(n_dim: int, form: str = "split") -> RootDatum:
    """The connected-center cover of ``SO(n_dim)``.

    Coordinates are ``(e0; e1..em)``; the last simple coroot picks up
    ``-e0``.  The non-split even form uses ``sigma: e_m -> e0 - e_m``.

    """
    _check_orthogonal(n_dim, form)
    m = n_dim // 2
    roots, coroots = _orthogonal_roots(n_dim, 1, m + 1, spin=True)
    sigma = None
    if form == "nonsplit":
        rows = [list(row) for row in identity(m + 1)]
        # column m is the image of e_m
        rows[m][m] = -1
        rows[0][m] = 1
        sigma = tuple(tuple(row) for row in rows)
    return RootDatum(
        roots,
        coroots,
        sigma,
        rank=m + 1,
        name=_orthogonal_name("GSpin", n_dim, form),
    )


def _check_orthogonal(n_dim: int, form: str) -> None:
    if n_dim < 2:
        raise exception.DatumError(
            "orthogonal groups need a quadratic space of dimension >= 2"
        )
    if form not in ("split", "nonsplit"):
        raise exception.DatumError(
            "form must be 'split' or 'nonsplit', got %r" % form
        )
    if form == "nonsplit" and n_dim % 2:
        raise exception.DatumError(
            "odd orthogonal groups have no non-split unramified form"
        )


def _orthogonal_name(prefix: str, n_dim: int, form: str) -> str:
    if form == "nonsplit":
        return "%s(%d,nonsplit)" % (prefix, n_dim)
    return "%s(%d)" % (prefix, n_dim)


_DESCRIPTOR = re.compile(
    r"^\s*(GL|Sp|GSp|SO|GSpin)\s*\(\s*(\d+)\s*(?:,\s*(split|nonsplit)\s*)?\)\s*$"
)


def build_datum(descriptor: str) -> RootDatum:
    """Instantiate a classical root datum from a descriptor.

    Accepted forms are ``GL(k)``, ``Sp(2g)``, ``GSp(2g)``, ``SO(n)``,
    ``SO(2m,nonsplit)``, ``GSpin(n)`` and ``GSpin(2m,nonsplit)``; several
    descriptors joined by ``x`` give their direct product.

    """
    parts = re.split(r"\s+x\s+", descriptor.strip())
    if len(parts) > 1:
        return product(*[build_datum(p) for p in parts])
    match = _DESCRIPTOR.match(descriptor)
    if match is None:
        raise exception.DatumError("unknown descriptor %r" % descriptor)
    family, size_text, form = match.groups()
    size = int(size_text)
    if form and family not in ("SO", "GSpin"):
        raise exception.DatumError(
            "only orthogonal descriptors take a form: %r" % descriptor
        )
    if family == "GL":
        return general_linear(size)
    elif family == "Sp":
        return symplectic(size)
    elif family == "GSp":
        return symplectic(size, similitude=True)
    elif family == "SO":
        return special_orthogonal(size, form or "split")
    else:
        return gspin(size, form or "split")


def product(*data: RootDatum) -> RootDatum:
    """Direct product; sigma acts factorwise."""
    if not data:
        raise exception.DatumError("product of no data")
    if len(data) == 1:
        return data[0]
    total = sum(d.rank for d in data)
    roots: List[Tuple[int, ...]] = []
    coroots: List[Tuple[int, ...]] = []
    offset = 0
    for d in data:
        pad_left = (0,) * offset
        pad_right = (0,) * (total - offset - d.rank)
        roots.extend(pad_left + r + pad_right for r in d.simple_roots)
        coroots.extend(pad_left + c + pad_right for c in d.simple_coroots)
        offset += d.rank
    return RootDatum(
        roots,
        coroots,
        block_diagonal(*[d.sigma for d in data]),
        rank=total,
        name=" x ".join(d.name for d in data),
    )


def restriction_of_scalars(d: RootDatum, f: int) -> RootDatum:
    """The ``f``-fold product of ``d`` with Frobenius cycling the factors.

    ``sigma(v_0, ..., v_{f-1}) = (sigma_d(v_{f-1}), v_0, ..., v_{f-2})``.

    """
    if f < 1:
        raise exception.DatumError("restriction of scalars needs f >= 1")
    if f == 1:
        return d
    base = product(*([d] * f))
    n = d.rank
    total = n * f
    rows = [[0] * total for _ in range(total)]
    for block in range(f):
        source = (block - 1) % f
        for i in range(n):
            for j in range(n):
                if block == 0:
                    entry = d.sigma[i][j]
                else:
                    entry = 1 if i == j else 0
                rows[block * n + i][source * n + j] = entry
    return RootDatum(
        base.simple_roots,
        base.simple_coroots,
        tuple(tuple(row) for row in rows),
        rank=total,
        name="Res(%s,%d)" % (d.name, f),
    )


def datum_from_dict(
    data: Mapping[str, Any]
) -> Tuple[RootDatum, Optional[RationalCocharacter]]:
    """Read the JSON datum schema.

    ``{"rank", "simple_roots", "simple_coroots", "sigma", "mu", "name"}``;
    ``sigma``, ``mu`` and ``name`` are optional, ``mu`` entries are
    ``"p/q"`` strings or integers.

    """
    if not isinstance(data, Mapping):
        raise exception.DatumError("datum must be a JSON object")
    missing = [
        key
        for key in ("rank", "simple_roots", "simple_coroots")
        if key not in data
    ]
    if missing:
        raise exception.DatumError(
            "datum is missing key(s): %s" % ", ".join(missing)
        )
    datum = RootDatum(
        data["simple_roots"],
        data["simple_coroots"],
        data.get("sigma"),
        rank=data["rank"],
        name=data.get("name"),
    )
    mu = None
    if data.get("mu") is not None:
        mu = RationalCocharacter.parse(data["mu"])
        if len(mu) != datum.rank:
            raise exception.DatumError(
                "rank mismatch: mu has %d coordinates, rank is %d"
                % (len(mu), datum.rank)
            )
    return datum, mu


def datum_to_dict(
    datum: RootDatum, mu: Optional[RationalCocharacter] = None
) -> Dict[str, Any]:
    result: Dict[str, Any] = {
        "name": datum.name,
        "rank": datum.rank,
        "simple_roots": [list(r) for r in datum.simple_roots],
        "simple_coroots": [list(c) for c in datum.simple_coroots],
        "sigma": [list(row) for row in datum.sigma],
    }
    if mu is not None:
        result["mu"] = mu.as_strings()
    return result


def _dominant_with_word(
    d: RootDatum, v: Sequence[Number]
) -> Tuple[Tuple[Number, ...], List[int]]:
    current = tuple(v)
    applied: List[int] = []
    while True:
        for i, root in enumerate(d.simple_roots):
            if dot(current, root) < 0:
                current = d.reflect(i, current)
                applied.append(i)
                break
        else:
            return current, applied


def dominant(d: RootDatum, v: Sequence[Number]) -> RationalCocharacter:
    return RationalCocharacter(_dominant_with_word(d, v)[0])


def dominant_representative(
    d: RootDatum, v: Sequence[Number]
) -> Tuple[RationalCocharacter, "WeylElement"]:
    """Return ``(v_dom, w)`` with ``w . v == v_dom``, by repeated ascent."""
    from .weyl import WeylElement

    v_dom, applied = _dominant_with_word(d, v)
    # applied letters act first to last, so w = s_last ... s_first
    w = WeylElement.from_word(d, list(reversed(applied)))
    return RationalCocharacter(v_dom), w


def galois_average(d: RootDatum, mu: Sequence[Number]) -> RationalCocharacter:
    """The average of the dominant representatives of the sigma-orbit."""
    n0 = d.sigma_order
    total = RationalCocharacter.zero(d.rank)
    v = tuple(mu)
    for _ in range(n0):
        total = total + dominant(d, v)
        v = d.apply_sigma(v)
    return total / n0


def rho(d: RootDatum) -> RationalCocharacter:
    """Half the sum of the positive roots, as a rational weight."""
    total = RationalCocharacter.zero(d.rank)
    for entry in d.positive_roots:
        total = total + entry.root
    return total / 2


def two_rho_pairing(d: RootDatum, v: Sequence[Number]) -> Fraction:
    return sum(
        (Fraction(dot(v, entry.root)) for entry in d.positive_roots),
        Fraction(0),
    )


def weight_orbit_sums(d: RootDatum) -> WeightOrbitSums:
    """Fundamental weight lifts and their sigma-orbit sums.

    Lifts solve ``<coroot_j, omega_i> = delta_ij`` through the Smith form
    of the coroot matrix; free coordinates are set to zero.  When the
    divisions are not exact the lifts are rational and ``integral`` is
    False.  Orbit sums are averaged over the sigma-group so that they are
    sigma-invariant; pairings with sigma-invariant cocharacters do not
    change.

    """
    r = d.num_simple
    if r == 0:
        return WeightOrbitSums((), True, (), ())
    form = smith_form(d.simple_coroots, d.rank)
    for k in range(r):
        if form.diagonal[k] == 0:
            raise exception.DatumError(
                "singular Cartan block: simple coroots are linearly "
                "dependent"
            )
    fundamental = []
    integral = True
    for i in range(r):
        y = [
            Fraction(form.left[k][i], form.diagonal[k]) if k < r else 0
            for k in range(d.rank)
        ]
        omega = RationalCocharacter(mat_vec(form.right, y))
        integral = integral and omega.is_integral()
        fundamental.append(omega)
    sums = []
    n0 = d.sigma_order
    for orbit in d.sigma_orbits:
        total = RationalCocharacter.zero(d.rank)
        for i in orbit:
            total = total + fundamental[i]
        averaged = RationalCocharacter.zero(d.rank)
        chi = tuple(total)
        for _ in range(n0):
            averaged = averaged + chi
            chi = d.apply_sigma_dual(chi)
        sums.append(averaged / n0)
    if not integral:
        log.debug("%s: fundamental weights lift only rationally", d.name)
    return WeightOrbitSums(
        tuple(fundamental), integral, d.sigma_orbits, tuple(sums)
    )


def kottwitz_point(d: RootDatum, lam: Sequence[Number]) -> Pi1Class:
    """Class of an integral cocharacter in ``(X_*/coroots)_sigma``."""
    if isinstance(lam, RationalCocharacter):
        vector = lam.integral()
    else:
        vector = RationalCocharacter(lam).integral()
    presentation = d.pi1_presentation
    image = mat_vec(presentation.left, vector)
    value = []
    moduli = []
    for k in presentation.coordinates:
        modulus = presentation.diagonal[k]
        value.append(image[k] % modulus if modulus else image[k])
        moduli.append(modulus)
    return Pi1Class(tuple(value), tuple(moduli))


def coroot_coefficients(
    d: RootDatum, v: Sequence[Number]
) -> Optional[Tuple[Fraction, ...]]:
    """Coordinates of ``v`` in the simple coroots, or None off their span."""
    if d.num_simple == 0:
        return () if all(x == 0 for x in v) else None
    coefficients = tuple(
        Fraction(x) for x in mat_vec(d.coroot_left_inverse, v)
    )
    rebuilt = [Fraction(0)] * d.rank
    for c, coroot in zip(coefficients, d.simple_coroots):
        for k, entry in enumerate(coroot):
            rebuilt[k] += c * entry
    if tuple(rebuilt) != tuple(Fraction(x) for x in v):
        return None
    return coefficients


def dominance_leq(
    d: RootDatum, a: Sequence[Number], b: Sequence[Number]
) -> bool:
    """True iff ``b - a`` is a nonnegative combination of simple coroots."""
    difference = [Fraction(y) - Fraction(x) for x, y in zip(a, b)]
    coefficients = coroot_coefficients(d, difference)
    return coefficients is not None and all(c >= 0 for c in coefficients)


def central_part(
    d: RootDatum, v: Sequence[Number]
) -> Tuple[RationalCocharacter, Tuple[Fraction, ...]]:
    """Split ``v = nu_c + sum C_j coroot_j`` with ``nu_c`` orthogonal to
    every root.  Returns ``(nu_c, C)``."""
    if d.num_simple == 0:
        return RationalCocharacter(v), ()
    pairings = [dot(v, root) for root in d.simple_roots]
    # <v, root_i> = sum_j C_j <coroot_j, root_i>
    system = transpose(d.cartan_matrix)
    coefficients = solve_rational(system, pairings)
    if coefficients is None:
        raise exception.DatumError("singular Cartan matrix")
    nu = RationalCocharacter(v)
    for c, coroot in zip(coefficients, d.simple_coroots):
        nu = nu - [c * x for x in coroot]
    return nu, coefficients
