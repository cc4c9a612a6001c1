"""Independent brute-force oracles used only by the tests.

These deliberately avoid the formulas and data paths of the package: Pascal
recursion instead of factorials, backtracking placement instead of hook
lengths, subset search instead of basis intersections.  Expected values in
the tests are frozen from these oracles.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations


@lru_cache(maxsize=None)
def pascal(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    if k == 0 or k == n:
        return 1
    return pascal(n - 1, k - 1) + pascal(n - 1, k)


def brute_syt_count(rows: tuple[int, ...]) -> int:
    """Standard fillings of a partition, counted by direct backtracking."""
    cells = [(r, c) for r, length in enumerate(rows) for c in range(length)]
    n = len(cells)
    placed: dict[tuple[int, int], int] = {}

    def ready(cell):
        r, c = cell
        if r > 0 and rows[r - 1] > c and (r - 1, c) not in placed:
            return False
        if c > 0 and (r, c - 1) not in placed:
            return False
        return True

    def count(value: int) -> int:
        if value > n:
            return 1
        total = 0
        for cell in cells:
            if cell not in placed and ready(cell):
                placed[cell] = value
                total += count(value + 1)
                del placed[cell]
        return total

    return count(1)


def geometric_2var_coeff(p: int, q: int) -> int:
    """Coefficient of x^p y^q in 1/(1 - x - y), via the lattice-path recurrence."""

    @lru_cache(maxsize=None)
    def walk(a: int, b: int) -> int:
        if a < 0 or b < 0:
            return 0
        if a == 0 and b == 0:
            return 1
        return walk(a - 1, b) + walk(a, b - 1)

    return walk(p, q)


def catalan(n: int) -> int:
    """Catalan numbers by the convolution recurrence."""
    cats = [1]
    for k in range(1, n + 1):
        cats.append(sum(cats[j] * cats[k - 1 - j] for j in range(k)))
    return cats[n]


def brute_rank(n: int, bases: list[frozenset[int]], subset: frozenset[int]) -> int:
    """Rank as the largest independent subset, where independent means
    'contained in some basis'."""
    for size in range(len(subset), -1, -1):
        for candidate in combinations(sorted(subset), size):
            cset = set(candidate)
            if any(cset <= b for b in bases):
                return size
    return 0


def termwise_integral(poly_coeffs: dict[int, int], lower: int, upper: int) -> Fraction:
    """Exact integral of an integer polynomial between integer bounds."""
    total = Fraction(0)
    for power, coeff in poly_coeffs.items():
        prim = Fraction(coeff, power + 1)
        total += prim * (upper ** (power + 1) - lower ** (power + 1))
    return total
