"""Exact integer and rational matrix helpers.

Matrices are plain tuples of row tuples so that they hash and compare
cheaply; sympy is used where elimination is needed (Smith form,
inverses, rational solves).

"""
from fractions import Fraction
from typing import Any
from typing import NamedTuple
from typing import Optional
from typing import Sequence
from typing import Tuple

from sympy import eye
from sympy import Matrix
from sympy import Rational

IntMatrix = Tuple[Tuple[int, ...], ...]
RationalMatrix = Tuple[Tuple[Fraction, ...], ...]


def identity(n: int) -> IntMatrix:
    return tuple(
        tuple(1 if i == j else 0 for j in range(n)) for i in range(n)
    )


def is_identity(m: IntMatrix) -> bool:
    return all(
        m[i][j] == (1 if i == j else 0)
        for i in range(len(m))
        for j in range(len(m))
    )


def transpose(m: Sequence[Sequence[Any]]) -> Tuple[Tuple[Any, ...], ...]:
    return tuple(zip(*m)) if m else ()


def mat_mul(a: Sequence[Sequence[Any]], b: Sequence[Sequence[Any]]):
    cols = transpose(b)
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in cols)
        for row in a
    )


def mat_vec(m: Sequence[Sequence[Any]], v: Sequence[Any]) -> Tuple[Any, ...]:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def dot(u: Sequence[Any], v: Sequence[Any]) -> Any:
    return sum(x * y for x, y in zip(u, v))


def outer(u: Sequence[int], v: Sequence[int]) -> IntMatrix:
    return tuple(tuple(x * y for y in v) for x in u)


def mat_sub(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return tuple(
        tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def block_diagonal(*blocks: IntMatrix) -> IntMatrix:
    size = sum(len(b) for b in blocks)
    rows = []
    offset = 0
    for block in blocks:
        for row in block:
            full = [0] * size
            full[offset : offset + len(row)] = row
            rows.append(tuple(full))
        offset += len(block)
    return tuple(rows)


def to_fraction(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    # sympy Rational / Integer
    return Fraction(int(value.p), int(value.q))


def _to_sympy(value: Any) -> Any:
    if isinstance(value, Fraction):
        return Rational(value.numerator, value.denominator)
    return value


def _sympy_matrix(rows: Sequence[Sequence[Any]], ncols: int = 0) -> Matrix:
    if not rows:
        return Matrix.zeros(0, ncols)
    return Matrix([[_to_sympy(x) for x in row] for row in rows])


def int_inverse(m: IntMatrix) -> IntMatrix:
    """Inverse of a unimodular integer matrix.

    :raises ValueError: the matrix is singular or its inverse is not
     integral.

    """
    inv = _sympy_matrix(m).inv()
    result = []
    for i in range(inv.rows):
        row = []
        for j in range(inv.cols):
            entry = to_fraction(inv[i, j])
            if entry.denominator != 1:
                raise ValueError("matrix is not invertible over the integers")
            row.append(entry.numerator)
        result.append(tuple(row))
    return tuple(result)


def solve_rational(
    rows: Sequence[Sequence[Any]], rhs: Sequence[Any]
) -> Optional[Tuple[Fraction, ...]]:
    """Solve ``rows * x = rhs`` exactly.

    Returns ``None`` when the system is inconsistent.  Free parameters of
    an underdetermined system are set to zero.

    """
    ncols = len(rows[0]) if rows else 0
    if ncols == 0:
        return ()
    system = _sympy_matrix(rows)
    target = Matrix([_to_sympy(x) for x in rhs])
    try:
        solution, params = system.gauss_jordan_solve(target)
    except ValueError:
        return None
    if params.shape[0]:
        solution = solution.subs({p: 0 for p in params})
    return tuple(to_fraction(solution[i, 0]) for i in range(ncols))


def left_inverse(columns: Sequence[Sequence[int]]) -> RationalMatrix:
    """Rational left inverse of the matrix whose columns are given.

    The columns must be linearly independent; the product with any vector
    of their span returns its coordinates.

    """
    c = _sympy_matrix(columns).T
    gram = c.T * c
    inv = gram.inv() * c.T
    return tuple(
        tuple(to_fraction(inv[i, j]) for j in range(inv.cols))
        for i in range(inv.rows)
    )


class SmithForm(NamedTuple):
    """``left * matrix * right == diag(diagonal)`` with unimodular
    ``left`` and ``right`` and each entry of ``diagonal`` dividing the
    next."""

    diagonal: Tuple[int, ...]
    left: IntMatrix
    right: IntMatrix


def _least_entry(m, s):
    best = None
    for i in range(s, m.rows):
        for j in range(s, m.cols):
            if m[i, j] != 0 and (best is None or abs(m[i, j]) < best[0]):
                best = (abs(m[i, j]), i, j)
    return None if best is None else best[1:]


def _clear_edging(m, left, right, s):
    pivot = m[s, s]
    for i in range(s + 1, m.rows):
        q = m[i, s] // pivot
        if q:
            m.row_op(i, lambda val, col: val - q * m[s, col])
            left.row_op(i, lambda val, col: val - q * left[s, col])
    for j in range(s + 1, m.cols):
        q = m[s, j] // pivot
        if q:
            m.col_op(j, lambda val, row: val - q * m[row, s])
            right.col_op(j, lambda val, row: val - q * right[row, s])
    return all(m[i, s] == 0 for i in range(s + 1, m.rows)) and all(
        m[s, j] == 0 for j in range(s + 1, m.cols)
    )


def _indivisible_row(m, s):
    pivot = m[s, s]
    for i in range(s + 1, m.rows):
        for j in range(s + 1, m.cols):
            if m[i, j] % pivot != 0:
                return i
    return None


def _as_int_rows(m) -> IntMatrix:
    return tuple(
        tuple(int(m[i, j]) for j in range(m.cols)) for i in range(m.rows)
    )


def smith_form(rows: Sequence[Sequence[int]], ncols: int = 0) -> SmithForm:
    """Smith normal form of an integer matrix, with transforms.

    Row and column operations are mirrored onto identity matrices, the
    same bookkeeping a hand computation uses.

    """
    m = _sympy_matrix(rows, ncols)
    left = eye(m.rows)
    right = eye(m.cols)
    for s in range(min(m.rows, m.cols)):
        while True:
            pivot = _least_entry(m, s)
            if pivot is None:
                break
            i, j = pivot
            if i != s:
                m.row_swap(s, i)
                left.row_swap(s, i)
            if j != s:
                m.col_swap(s, j)
                right.col_swap(s, j)
            if not _clear_edging(m, left, right, s):
                continue
            k = _indivisible_row(m, s)
            if k is not None:
                m.row_op(s, lambda val, col: val + m[k, col])
                left.row_op(s, lambda val, col: val + left[k, col])
                continue
            if m[s, s] < 0:
                m.row_op(s, lambda val, col: -val)
                left.row_op(s, lambda val, col: -val)
            break
    diagonal = tuple(int(m[k, k]) for k in range(min(m.rows, m.cols)))
    return SmithForm(diagonal, _as_int_rows(left), _as_int_rows(right))
