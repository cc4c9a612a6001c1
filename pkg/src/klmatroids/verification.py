"""Cross-checks between the formula layer and the brute-force matroid oracle.

Every sweep compares two or three logically independent routes to the same
value (closed form vs. filtered enumeration vs. the defining recurrence) and
reports exact agreement.  Heavy sweeps accept a ``jobs`` argument; grid
points are independent pure computations, so they parallelize freely and
results are aggregated in deterministic grid order.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .closedforms import (
    MinorClass,
    RhoUniformParams,
    build_rho_uniform,
    char_poly_rho,
    classify_minor,
    coeff_rho,
    coeff_uniform_klum,
    coeff_uniform_tableau,
    expected_flats,
    valid_rhos,
)
from .exactarith import IntPoly, poly_reverse
from .identities import IdentityReport
from .matroid import (
    char_poly,
    contraction,
    is_isomorphic,
    kl_poly,
    localization,
    matroid_from_bases,
)
from .tableaux import (
    count_skyt,
    count_skyt_rho_direct,
    enumerate_skyt,
    involution_rotate,
)


def default_jobs() -> int:
    return os.cpu_count() or 1


def _run_points(
    report: IdentityReport,
    points: Sequence,
    checker: Callable,
    jobs: int = 1,
) -> IdentityReport:
    if jobs > 1 and len(points) > 1:
        chunk = max(1, len(points) // (jobs * 4))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(checker, points, chunksize=chunk))
    else:
        results = [checker(point) for point in points]
    for point, ok in zip(points, results):
        report.record(point, ok)
    return report


def family_grid(total_max: int, min_d: int = 1) -> list[RhoUniformParams]:
    """All valid (m, d, rho) with m + d <= total_max and d >= min_d."""
    grid = []
    for m in range(1, total_max + 1 - min_d):
        for d in range(min_d, total_max - m + 1):
            for rho in valid_rhos(m, d):
                grid.append(RhoUniformParams(m, d, rho))
    return grid


# -- coefficient agreement ------------------------------------------------------


def kl_defining_equation_holds(matroid) -> bool:
    """Substitute the computed polynomial back into the functional equation.

    This exercises the full equation, not just the low-degree part that the
    solver extracts: t^rank P(1/t) - P(t) must equal the sum over nonempty
    flats of char_poly(localization) * kl_poly(contraction) exactly.
    """
    p = kl_poly(matroid)
    if matroid.rank == 0:
        return p == IntPoly([1])
    lattice = matroid.lattice()
    rhs = IntPoly()
    for flat in lattice.flats:
        if flat == 0:
            continue
        rhs = rhs + char_poly(localization(matroid, flat)) * kl_poly(contraction(matroid, flat))
    return poly_reverse(p, matroid.rank) - p == rhs


def _theorem1_point(p: RhoUniformParams) -> bool:
    matroid = build_rho_uniform(p)
    oracle = kl_poly(matroid)
    if oracle.coeff(0) != 1:
        return False
    if p.d > 0 and 2 * oracle.degree >= p.d:
        return False
    top = (p.d - 1) // 2 if p.d else 0
    for i in range(top + 2):  # one index past the range must give 0 everywhere
        formula = coeff_rho(p.m, p.d, i, p.rho)
        direct = count_skyt_rho_direct(p.m, p.d, i, p.rho)
        if not formula == direct == oracle.coeff(i):
            return False
    return kl_defining_equation_holds(matroid)


def sweep_theorem1(total_max: int = 9, jobs: int = 1) -> IdentityReport:
    """Counting formula == filtered enumeration == recurrence, every coefficient."""
    report = IdentityReport("theorem1", f"valid (m, d, rho), m+d<={total_max}")
    return _run_points(report, family_grid(total_max, min_d=0), _theorem1_point, jobs)


def _theorem2_point(p: RhoUniformParams) -> bool:
    oracle = kl_poly(build_rho_uniform(p))
    top = (p.d - 1) // 2 if p.d else 0
    for i in range(top + 2):
        tableau = coeff_uniform_tableau(p.m, p.d, i)
        closed = coeff_uniform_klum(p.m, p.d, i)
        if not tableau == closed == oracle.coeff(i):
            return False
    return True


def sweep_theorem2(total_max: int = 9, jobs: int = 1) -> IdentityReport:
    """For the plain uniform family: tableau count == older closed form == recurrence."""
    report = IdentityReport("theorem2", f"uniform (m, d), m+d<={total_max}")
    points = [p for p in family_grid(total_max) if p.rho == 0]
    return _run_points(report, points, _theorem2_point, jobs)


# -- tableau counting and symmetry ----------------------------------------------


def shape_grid(a_max: int = 6, b_max: int = 6, i_max: int = 4, cell_max: int = 14):
    grid = []
    for i in range(1, i_max + 1):
        for a in range(a_max + 1):
            for b in range(b_max + 1):
                if a + 2 * i + b - 2 <= cell_max:
                    grid.append((a, i, b))
    return grid


def _counting_point(point: tuple[int, int, int]) -> bool:
    a, i, b = point
    return count_skyt(a, i, b) == len(enumerate_skyt(a, i, b))


def sweep_counting(
    a_max: int = 6, b_max: int = 6, i_max: int = 4, cell_max: int = 14, jobs: int = 1
) -> IdentityReport:
    """Inclusion-exclusion count == backtracking enumeration, shape by shape."""
    report = IdentityReport(
        "counting", f"a<={a_max}, b<={b_max}, i<={i_max}, cells<={cell_max}"
    )
    return _run_points(report, shape_grid(a_max, b_max, i_max, cell_max), _counting_point, jobs)


def _symmetry_point(point: tuple[int, int, int]) -> bool:
    a, i, b = point
    if count_skyt(a, i, b) != count_skyt(b, i, a):
        return False
    if a < 2 or b < 2:
        return True
    fillings = enumerate_skyt(a, i, b)
    rotated = [involution_rotate(f) for f in fillings]
    if any(not g.is_legal() for g in rotated):
        return False
    if any(involution_rotate(g) != f for f, g in zip(fillings, rotated)):
        return False
    mirror = set(enumerate_skyt(b, i, a))
    return set(rotated) == mirror


def sweep_symmetry(
    a_max: int = 6, b_max: int = 6, i_max: int = 4, cell_max: int = 14, jobs: int = 1
) -> IdentityReport:
    """count(a,i,b) == count(b,i,a), via an explicit entry-reversing rotation bijection."""
    report = IdentityReport(
        "symmetry", f"a<={a_max}, b<={b_max}, i<={i_max}, cells<={cell_max}"
    )
    return _run_points(report, shape_grid(a_max, b_max, i_max, cell_max), _symmetry_point, jobs)


def catalan_numbers(count: int) -> list[int]:
    """First ``count`` Catalan numbers via the convolution recurrence."""
    cats = [1]
    for n in range(1, count):
        cats.append(sum(cats[k] * cats[n - 1 - k] for k in range(n)))
    return cats


def sweep_catalan(i_max: int = 6) -> IdentityReport:
    """count_skyt(2, i, 2) runs through the Catalan sequence."""
    report = IdentityReport("catalan", f"1<=i<={i_max}")
    cats = catalan_numbers(i_max + 2)
    for i in range(1, i_max + 1):
        report.record((i,), count_skyt(2, i, 2) == cats[i + 1])
    return report


# -- characteristic polynomial ----------------------------------------------------


def _charpoly_point(p: RhoUniformParams) -> bool:
    formula = char_poly_rho(p)
    oracle = char_poly(build_rho_uniform(p))
    return formula == oracle and formula(1) == 0


def sweep_charpoly(total_max: int = 10, jobs: int = 1) -> IdentityReport:
    """Closed-form characteristic polynomial == Mobius oracle, and vanishing at 1."""
    report = IdentityReport("charpoly", f"valid (m, d, rho), d>=1, m+d<={total_max}")
    return _run_points(report, family_grid(total_max), _charpoly_point, jobs)


# -- minors and flats ---------------------------------------------------------------


def _minors_point(p: RhoUniformParams) -> bool:
    matroid = build_rho_uniform(p)
    lattice = matroid.lattice()
    for flat in lattice.flats:
        for kind, make in (("localization", localization), ("contraction", contraction)):
            claimed: MinorClass = classify_minor(p, flat, kind)
            actual = make(matroid, flat)
            if not is_isomorphic(actual, claimed.build()):
                return False
    return True


def sweep_minors(total_max: int = 8, jobs: int = 1) -> IdentityReport:
    """Predicted minor types match the computed minors up to isomorphism, flat by flat."""
    report = IdentityReport("minors", f"valid (m, d, rho), m+d<={total_max}, every flat")
    return _run_points(report, family_grid(total_max), _minors_point, jobs)


def _flats_point(p: RhoUniformParams) -> bool:
    matroid = build_rho_uniform(p)
    lattice = matroid.lattice()
    if set(lattice.flats) != expected_flats(p):
        return False
    # Mobius sanity: values over each lower interval sum to zero above the bottom.
    for idx, flat in enumerate(lattice.flats):
        total = sum(
            lattice.mobius[jdx]
            for jdx, g in enumerate(lattice.flats)
            if g & flat == g
        )
        if total != (1 if flat == lattice.bottom else 0):
            return False
    return True


def sweep_flats(total_max: int = 8, jobs: int = 1) -> IdentityReport:
    """Computed lattice of flats matches the structural description exactly."""
    report = IdentityReport("flats", f"valid (m, d, rho), m+d<={total_max}")
    return _run_points(report, family_grid(total_max), _flats_point, jobs)


# -- monotonicity --------------------------------------------------------------------


def _monotonicity_point(point: tuple[int, int]) -> bool:
    m, d = point
    rhos = valid_rhos(m, d)
    for i in range((d - 1) // 2 + 1):
        values = [coeff_rho(m, d, i, rho) for rho in rhos]
        if any(v < 0 for v in values):
            return False
        if any(earlier < later for earlier, later in zip(values, values[1:])):
            return False
    return True


def sweep_monotonicity(total_max: int = 9, jobs: int = 1) -> IdentityReport:
    """Coefficients weakly decrease (and stay non-negative) as bases are removed."""
    report = IdentityReport("monotonicity", f"(m, d), m+d<={total_max}, all rho")
    points = [
        (m, d)
        for m in range(1, total_max)
        for d in range(1, total_max - m + 1)
    ]
    return _run_points(report, points, _monotonicity_point, jobs)


# -- exchange-axiom validator ----------------------------------------------------------


def disjoint_families(n: int, d: int) -> Iterable[tuple[frozenset[int], ...]]:
    """Every nonempty family of pairwise disjoint d-subsets of {1..n}, up to order."""
    subsets = [frozenset(c) for c in combinations(range(1, n + 1), d)]

    def extend(start: int, chosen: tuple[frozenset[int], ...], used: frozenset[int]):
        for idx in range(start, len(subsets)):
            s = subsets[idx]
            if used & s:
                continue
            family = chosen + (s,)
            yield family
            yield from extend(idx + 1, family, used | s)

    yield from extend(0, (), frozenset())


def _exchange_point(point: tuple[int, int]) -> bool:
    n, d = point
    all_bases = [frozenset(c) for c in combinations(range(1, n + 1), d)]
    for family in disjoint_families(n, d):
        removed = set(family)
        remaining = [b for b in all_bases if b not in removed]
        if not remaining:
            continue  # removing every basis leaves nothing to validate
        try:
            matroid_from_bases(n, remaining)
        except Exception:
            return False
    return True


def sweep_exchange_validator(n_max: int = 8, jobs: int = 1) -> IdentityReport:
    """The validator accepts all d-subsets minus any disjoint family, d >= 2."""
    report = IdentityReport("exchange-validator", f"n<={n_max}, 2<=d<=n")
    points = [(n, d) for n in range(2, n_max + 1) for d in range(2, n + 1)]
    return _run_points(report, points, _exchange_point, jobs)
