"""Skew tableaux with three column groups, and their counting formulas.

The shape (a, i, b) consists of a left column of height a, then i - 1 middle
columns of height 2, then a right column of height b.  All columns share a
common two-row strip.

Cell coordinates: rows increase downward and the shared strip occupies rows
0 and 1.  Column 0 runs from row 0 down to row a - 1, middle columns 1..i-1
occupy rows 0..1, and column i runs from row -(b - 2) at its top down to
row 1.  A legal filling places 1..(a + 2i + b - 2) bijectively so that every
row increases rightward and every column increases downward.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import IndexOutOfRange, InvalidParameters, InvalidShape
from .exactarith import binomial, factorial, parity_sign


@dataclass(frozen=True)
class SkewShape:
    """The three-column-group diagram with left height a, i - 1 middle columns, right height b."""

    a: int
    i: int
    b: int

    def __post_init__(self):
        if self.i < 1:
            raise InvalidShape(f"shape needs at least one column step, got i={self.i}")
        if self.a < 2 or self.b < 2:
            raise InvalidShape(
                f"no cells to fill when a or b is below 2 (a={self.a}, b={self.b})"
            )

    @property
    def cell_count(self) -> int:
        return self.a + 2 * self.i + self.b - 2

    def column_rows(self, c: int) -> range:
        if c == 0:
            return range(0, self.a)
        if c == self.i:
            return range(-(self.b - 2), 2)
        if 0 < c < self.i:
            return range(0, 2)
        raise InvalidShape(f"column {c} outside 0..{self.i}")

    def cells(self) -> list[tuple[int, int]]:
        return [(r, c) for c in range(self.i + 1) for r in self.column_rows(c)]

    def contains(self, r: int, c: int) -> bool:
        return 0 <= c <= self.i and r in self.column_rows(c)


@dataclass(frozen=True)
class Filling:
    """A bijective assignment of 1..n to the cells of a SkewShape.

    ``columns[c]`` lists column c's entries top to bottom.
    """

    shape: SkewShape
    columns: tuple[tuple[int, ...], ...]

    def value_at(self, r: int, c: int) -> int:
        rows = self.shape.column_rows(c)
        if r not in rows:
            raise InvalidShape(f"cell ({r}, {c}) not in shape {self.shape}")
        return self.columns[c][r - rows.start]

    def entries_column_major(self) -> tuple[int, ...]:
        return tuple(v for col in self.columns for v in col)

    def is_legal(self) -> bool:
        shape = self.shape
        n = shape.cell_count
        if sorted(self.entries_column_major()) != list(range(1, n + 1)):
            return False
        for c in range(shape.i + 1):
            col = self.columns[c]
            if any(col[k] >= col[k + 1] for k in range(len(col) - 1)):
                return False
        for r in (0, 1):
            row = [self.value_at(r, c) for c in range(shape.i + 1)]
            if any(row[k] >= row[k + 1] for k in range(len(row) - 1)):
                return False
        return True

    def to_json_dict(self) -> dict:
        return {
            "a": self.shape.a,
            "i": self.shape.i,
            "b": self.shape.b,
            "columns": [list(col) for col in self.columns],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(", ", ": "))

    @classmethod
    def from_columns(cls, a: int, i: int, b: int, columns) -> "Filling":
        shape = SkewShape(a, i, b)
        cols = tuple(tuple(int(v) for v in col) for col in columns)
        if len(cols) != i + 1 or any(
            len(cols[c]) != len(shape.column_rows(c)) for c in range(i + 1)
        ):
            raise InvalidShape("column lengths do not match the shape")
        return cls(shape, cols)

    @classmethod
    def from_json_dict(cls, payload: dict) -> "Filling":
        return cls.from_columns(payload["a"], payload["i"], payload["b"], payload["columns"])


def _iter_fillings(shape: SkewShape) -> Iterator[dict[tuple[int, int], int]]:
    """Backtracking linear-extension enumeration.

    Entries are placed in increasing order 1..n; each goes into any empty
    cell whose upper and left neighbours (within the shape) are filled, which
    prunes illegal prefixes automatically.
    """
    cells = shape.cells()
    prereqs: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for (r, c) in cells:
        need = []
        if shape.contains(r - 1, c):
            need.append((r - 1, c))
        if shape.contains(r, c - 1):
            need.append((r, c - 1))
        prereqs[(r, c)] = need
    n = shape.cell_count
    placed: dict[tuple[int, int], int] = {}

    def extend(value: int) -> Iterator[dict[tuple[int, int], int]]:
        if value > n:
            yield dict(placed)
            return
        for cell in cells:
            if cell in placed:
                continue
            if all(p in placed for p in prereqs[cell]):
                placed[cell] = value
                yield from extend(value + 1)
                del placed[cell]

    yield from extend(1)


def _filling_from_cells(shape: SkewShape, assignment: dict[tuple[int, int], int]) -> Filling:
    columns = tuple(
        tuple(assignment[(r, c)] for r in shape.column_rows(c)) for c in range(shape.i + 1)
    )
    return Filling(shape, columns)


@lru_cache(maxsize=512)
def _enumerate_cached(a: int, i: int, b: int) -> tuple[Filling, ...]:
    shape = SkewShape(a, i, b)
    fillings = [_filling_from_cells(shape, assignment) for assignment in _iter_fillings(shape)]
    fillings.sort(key=Filling.entries_column_major)
    return tuple(fillings)


def enumerate_skyt(a: int, i: int, b: int) -> list[Filling]:
    """All legal fillings of shape (a, i, b) in column-major lexicographic order.

    Requires i >= 1; returns the empty list when a or b is below 2 (there is
    nothing fillable then).
    """
    if i < 1:
        raise InvalidShape("enumeration needs i >= 1; the i = 0 cases are count-level conventions")
    if a < 0 or b < 0:
        raise InvalidShape(f"negative shape parameter (a={a}, b={b})")
    if a < 2 or b < 2:
        return []
    return list(_enumerate_cached(a, i, b))


def _syt_rows(a: int, i: int, k: int) -> list[int]:
    """Row lengths of the straight diagram: column 0 of height a, i columns of
    height 2, k columns of height 1 hanging off the top row."""
    if k < 0 or i < 0:
        raise InvalidShape(f"negative partition parameter (i={i}, k={k})")
    if a >= 2:
        return [1 + i + k, 1 + i] + [1] * (a - 2)
    if a == 1 and i == 0:
        return [1 + k]
    raise InvalidShape(f"not a partition: a={a}, i={i}, k={k}")


def count_syt(a: int, i: int, k: int) -> int:
    """Number of standard fillings of the straight shape, by the hook-length formula."""
    rows = _syt_rows(a, i, k)
    n = sum(rows)
    hook_product = 1
    for r, length in enumerate(rows):
        for c in range(length):
            arm = length - c - 1
            leg = sum(1 for rr in range(r + 1, len(rows)) if rows[rr] > c)
            hook_product *= arm + leg + 1
    count, rem = divmod(factorial(n), hook_product)
    if rem:
        raise AssertionError(f"hook product {hook_product} does not divide {n}!")
    return count


@lru_cache(maxsize=None)
def count_skyt(a: int, i: int, b: int) -> int:
    """Number of legal fillings of shape (a, i, b).

    Conventions first: 1 when i = 0, and 0 when i > 0 with a or b below 2.
    Otherwise the count is assembled by inclusion-exclusion from straight-shape
    counts: sum over k of (-1)^k C(a+2i+b-2, b-k-2) * count_syt(a, i, k).
    """
    if i < 0:
        raise InvalidShape(f"negative i={i}")
    if i == 0:
        return 1
    if a < 2 or b < 2:
        return 0
    n = a + 2 * i + b - 2
    total = 0
    for k in range(b - 1):
        total += parity_sign(k) * binomial(n, b - k - 2) * count_syt(a, i, k)
    return total


def involution_rotate(f: Filling) -> Filling:
    """Rotate the shape half a turn and replace every entry v by n + 1 - v.

    Sends legal fillings of (a, i, b) to legal fillings of (b, i, a); applying
    it twice gives back the original filling.
    """
    shape = f.shape
    n = shape.cell_count
    new_shape = SkewShape(shape.b, shape.i, shape.a)
    # Cell (r, c) of the rotated shape came from cell (1 - r, i - c).
    columns = tuple(
        tuple(n + 1 - f.value_at(1 - r, shape.i - c) for r in new_shape.column_rows(c))
        for c in range(shape.i + 1)
    )
    return Filling(new_shape, columns)


@lru_cache(maxsize=None)
def count_overline_skyt(i: int, b: int) -> int:
    """Fillings of shape (2, i, b) whose top-left entry is 1; zero when i = 0.

    The height-2 left column makes the usual extra condition on a left tail
    vacuous; taller left columns reduce to this count by forgetting the tail.

    Computed without enumeration: the entry 1 sits at one of the two corner
    cells with no upper or left neighbour, the top-left or (when b >= 3) the
    top of the right column.  Deleting a top-right 1 and shifting every entry
    down by one bijects those fillings onto the (b - 1)-shape, so the count
    is count_skyt(2, i, b) - count_skyt(2, i, b - 1).  The filtered
    enumeration serves as the test oracle for this.
    """
    if i < 0:
        raise InvalidShape(f"negative i={i}")
    if i == 0:
        return 0
    if b < 2:
        return 0
    return count_skyt(2, i, b) - count_skyt(2, i, b - 1)


def _validate_family_params(m: int, d: int, rho: int) -> None:
    # Mirrors the removed-basis family validity rules (see closedforms).
    if m < 1:
        raise InvalidParameters(f"m must be at least 1, got {m}")
    if d < 0 or rho < 0:
        raise InvalidParameters(f"d and rho must be non-negative (d={d}, rho={rho})")
    if rho >= 1 and d == 1:
        raise InvalidParameters("removing bases of size 1 creates loops; d must be 0 or >= 2")
    if rho >= 1 and d >= 2 and d * rho > m + d:
        raise InvalidParameters(
            f"not enough room for {rho} disjoint bases of size {d} among {m + d} elements"
        )


def satisfies_removed_family_conditions(f: Filling, d: int, rho: int) -> bool:
    """At least one of the three boundary-entry conditions holds for f.

    On shape (a, i, b): the top of the right column is 1, or the bottom of the
    right column exceeds d + rho, or the left column has a third cell and its
    entry is at most d.
    """
    shape = f.shape
    if f.value_at(-(shape.b - 2), shape.i) == 1:
        return True
    if f.value_at(1, shape.i) > d + rho:
        return True
    if shape.a >= 3 and f.value_at(2, 0) < d + 1:
        return True
    return False


def count_skyt_rho_direct(m: int, d: int, i: int, rho: int) -> int:
    """Count fillings of shape (m+1, i, d-2i+1) passing the boundary conditions.

    This is the direct filtered enumeration; it always agrees with
    count_skyt(m+1, i, d-2i+1) - rho * count_overline_skyt(i, d-2i+1).
    Returns 1 for i = 0 by convention, 0 for i outside the coefficient range.
    """
    _validate_family_params(m, d, rho)
    if i < 0:
        return 0
    if i == 0:
        return 1
    b = d - 2 * i + 1
    if b < 2:
        return 0
    return sum(
        1
        for f in _enumerate_cached(m + 1, i, b)
        if satisfies_removed_family_conditions(f, d, rho)
    )


def iota_action(j: int, f: Filling, m: int) -> Filling:
    """Embed a filling of (2, i, b) into (m + 1, i, b), twisting by index j.

    Write n for the number of entries of f (its bottom-right entry, which is
    always the maximum).  The image keeps all entries of f except that the
    bottom-right becomes n + j, and the m - 1 new cells below the left column
    hold the remaining values of {n, ..., n + m - 1} in increasing order.
    j = 0 leaves the bottom-right at n with an untouched tail.
    """
    if f.shape.a != 2:
        raise InvalidShape("the action is defined on fillings with left column of height 2")
    if m < 1:
        raise InvalidParameters(f"m must be at least 1, got {m}")
    if not 0 <= j <= m - 1:
        raise IndexOutOfRange(f"index {j} outside 0..{m - 1}")
    shape = f.shape
    n = shape.cell_count
    tail = tuple(v for v in range(n, n + m) if v != n + j)
    new_shape = SkewShape(m + 1, shape.i, shape.b)
    columns = list(f.columns)
    columns[0] = columns[0] + tail
    right = columns[shape.i]
    columns[shape.i] = right[:-1] + (n + j,)
    return Filling(new_shape, tuple(columns))
