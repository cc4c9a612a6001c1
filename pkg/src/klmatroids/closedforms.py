"""The removed-basis uniform family and every closed-form result about it.

U(m, d; rho) is the rank-d uniform matroid on m + d elements with rho
pairwise disjoint bases removed.  The canonical removed bases are the
consecutive blocks {1..d}, {d+1..2d}, ..., {(rho-1)d+1..rho d}; disjointness
is what makes the removal produce a matroid at all, and it needs
rho * d <= m + d elements of room.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .errors import InvalidParameters, NonIntegerResult, NotAFlat
from .exactarith import IntPoly, binomial, parity_sign
from .matroid import (
    GroundSubset,
    Matroid,
    elements_of,
    ground_mask,
    mask_from,
    matroid_from_bases,
    uniform_matroid,
)
from .tableaux import count_overline_skyt, count_skyt


@dataclass(frozen=True)
class RhoUniformParams:
    """Parameters (m, d, rho) of the removed-basis uniform matroid U(m, d; rho).

    Validity: m >= 1 (the m = 0 family is degenerate and rejected), d >= 0,
    rho >= 0, and for rho >= 1 either d = 0 (removal is a no-op by
    convention) or d >= 2 with rho * d <= m + d.  Removing size-1 bases is
    rejected because it creates loops.
    """

    m: int
    d: int
    rho: int = 0

    def __post_init__(self):
        if self.m < 1:
            raise InvalidParameters(f"m must be at least 1, got {self.m}")
        if self.d < 0 or self.rho < 0:
            raise InvalidParameters(
                f"d and rho must be non-negative (d={self.d}, rho={self.rho})"
            )
        if self.rho >= 1 and self.d == 1:
            raise InvalidParameters(
                "removing bases of size 1 creates loops; d must be 0 or >= 2"
            )
        if self.rho >= 1 and self.d >= 2 and self.d * self.rho > self.m + self.d:
            raise InvalidParameters(
                f"{self.rho} disjoint bases of size {self.d} do not fit in "
                f"{self.m + self.d} elements"
            )

    @property
    def n(self) -> int:
        return self.m + self.d

    def label(self) -> str:
        if self.rho == 0:
            return f"U({self.m},{self.d})"
        return f"U({self.m},{self.d};{self.rho})"


def params_are_valid(m: int, d: int, rho: int) -> bool:
    try:
        RhoUniformParams(m, d, rho)
    except InvalidParameters:
        return False
    return True


def valid_rhos(m: int, d: int) -> list[int]:
    """All rho values admissible for the given (m, d), one per distinct matroid.

    For d < 2 only rho = 0 is listed (d = 1 removal is invalid, d = 0 removal
    is a no-op); otherwise rho ranges up to (m + d) // d.
    """
    if m < 1 or d < 0:
        raise InvalidParameters(f"need m >= 1 and d >= 0 (got m={m}, d={d})")
    if d < 2:
        return [0]
    return list(range((m + d) // d + 1))


def consecutive_block(d: int, offset: int) -> frozenset[int]:
    """The interval {1 + offset, ..., d + offset}."""
    return frozenset(range(1 + offset, d + offset + 1))


def removed_blocks(p: RhoUniformParams) -> list[frozenset[int]]:
    """The canonically removed bases: disjoint blocks at offsets 0, d, 2d, ..."""
    if p.d == 0:
        return []
    return [consecutive_block(p.d, ell * p.d) for ell in range(p.rho)]


def removed_block_masks(p: RhoUniformParams) -> list[GroundSubset]:
    return [mask_from(block, p.n) for block in removed_blocks(p)]


@lru_cache(maxsize=128)
def _build_cached(p: RhoUniformParams) -> Matroid:
    n = p.n
    if p.d == 0:
        return matroid_from_bases(n, [0])
    removed = set(removed_block_masks(p))
    bases = [
        mask_from(combo, n)
        for combo in combinations(range(1, n + 1), p.d)
    ]
    return matroid_from_bases(n, [b for b in bases if b not in removed])


def build_rho_uniform(p: RhoUniformParams) -> Matroid:
    """Construct U(m, d; rho) and validate it through the generic basis checks."""
    return _build_cached(p)


def _in_coefficient_range(d: int, i: int) -> bool:
    # i = 0 is always a coefficient (the constant term is defined even for
    # rank 0); higher coefficients exist only below half the rank.
    return i == 0 or (i > 0 and 2 * i < d)


def coeff_uniform_tableau(m: int, d: int, i: int) -> int:
    """Coefficient i of the KL polynomial of U(m, d), as a tableau count.

    Equals count_skyt(m + 1, i, d - 2i + 1); out-of-range i gives 0.
    """
    if m < 1 or d < 0:
        raise InvalidParameters(f"need m >= 1 and d >= 0 (got m={m}, d={d})")
    if i < 0 or not _in_coefficient_range(d, i):
        return 0
    return count_skyt(m + 1, i, d - 2 * i + 1)


def coeff_uniform_klum(m: int, d: int, i: int) -> int:
    """Coefficient i of the KL polynomial of U(m, d), by the older closed form.

    With a = m + 1 and b = d - 2i + 1:

        (1 / (b + i - 1)) * C(b + 2i + a - 2, i)
            * sum over h of C(b + i + h - 1, h + i + 1) * C(i - 1 + h, h)

    computed in exact rationals; the division must come out integral, and a
    non-integer result raises (it would mean an implementation bug).
    """
    if m < 1 or d < 0:
        raise InvalidParameters(f"need m >= 1 and d >= 0 (got m={m}, d={d})")
    if i < 0 or not _in_coefficient_range(d, i):
        return 0
    if i == 0:
        return 1
    a = m + 1
    b = d - 2 * i + 1
    inner = sum(
        binomial(b + i + h - 1, h + i + 1) * binomial(i - 1 + h, h)
        for h in range(a - 1)
    )
    value = Fraction(binomial(b + 2 * i + a - 2, i) * inner, b + i - 1)
    if value.denominator != 1:
        raise NonIntegerResult(
            f"closed form for (m={m}, d={d}, i={i}) gave non-integer {value}"
        )
    return int(value)


def coeff_rho(m: int, d: int, i: int, rho: int) -> int:
    """Coefficient i of the KL polynomial of U(m, d; rho).

    count_skyt(m+1, i, d-2i+1) - rho * count_overline_skyt(i, d-2i+1); always
    non-negative, and equal to the direct filtered count.  Out-of-range i
    gives 0.
    """
    RhoUniformParams(m, d, rho)
    if i < 0 or not _in_coefficient_range(d, i):
        return 0
    b = d - 2 * i + 1
    return count_skyt(m + 1, i, b) - rho * count_overline_skyt(i, b)


def kl_poly_rho(p: RhoUniformParams) -> IntPoly:
    """The full KL polynomial of U(m, d; rho), assembled coefficient by coefficient."""
    if p.d == 0:
        return IntPoly([1])
    return IntPoly(
        coeff_rho(p.m, p.d, i, p.rho) for i in range((p.d - 1) // 2 + 1)
    )


def char_poly_rho(p: RhoUniformParams) -> IntPoly:
    """Characteristic polynomial of U(m, d; rho), directly from the closed form.

    [t^0] = (-1)^d (C(m+d-1, d-1) - rho), [t^1] = (-1)^(d-1) (C(m+d, d-1) - rho),
    [t^i] = (-1)^(d-i) C(m+d, d-i) for 2 <= i <= d.
    """
    if p.d < 1:
        raise InvalidParameters("the closed form needs d >= 1")
    m, d, rho = p.m, p.d, p.rho
    coeffs = [0] * (d + 1)
    coeffs[0] = parity_sign(d) * (binomial(m + d - 1, d - 1) - rho)
    if d >= 1:
        coeffs[1] = parity_sign(d - 1) * (binomial(m + d, d - 1) - rho)
    for i in range(2, d + 1):
        coeffs[i] = parity_sign(d - i) * binomial(m + d, d - i)
    return IntPoly(coeffs)


@dataclass(frozen=True)
class MinorClass:
    """Symbolic isomorphism type of a minor: U(m, d; rho), uniform when rho = 0."""

    m: int
    d: int
    rho: int = 0

    def label(self) -> str:
        if self.rho == 0:
            return f"U({self.m},{self.d})"
        return f"U({self.m},{self.d};{self.rho})"

    def build(self) -> Matroid:
        if self.rho == 0:
            return uniform_matroid(self.m, self.d)
        return build_rho_uniform(RhoUniformParams(self.m, self.d, self.rho))


def classify_minor(
    p: RhoUniformParams, flat, kind: str
) -> MinorClass:
    """Predicted isomorphism type of the localization or contraction at a flat.

    Localizations: the whole matroid at the top, U(1, d-1) at a removed
    block, and the free matroid U(0, |F|) elsewhere.  Contractions: the whole
    matroid at the empty flat, U(m, d-|F|; 1) strictly inside a removed
    block, U(m-1, 1) at a block, and the uniform answer U(m, d-|F|)
    elsewhere (U(0, 0) at the top).

    The return value is symbolic; verification builds the claimed matroid
    separately and compares by brute-force isomorphism.
    """
    if kind not in ("localization", "contraction"):
        raise ValueError(f"kind must be localization or contraction, got {kind!r}")
    if not isinstance(flat, int):
        flat = mask_from(flat, p.n)
    matroid = build_rho_uniform(p)
    lattice = matroid.lattice()
    if flat not in set(lattice.flats):
        raise NotAFlat(f"{set(elements_of(flat))} is not a flat of {p.label()}")
    full = ground_mask(p.n)
    blocks = removed_block_masks(p)
    size = flat.bit_count()
    if kind == "localization":
        if flat == full:
            return MinorClass(p.m, p.d, p.rho)
        if flat in blocks:
            return MinorClass(1, p.d - 1)
        return MinorClass(0, size)
    if flat == 0:
        return MinorClass(p.m, p.d, p.rho)
    if flat == full:
        return MinorClass(0, 0)
    if flat in blocks:
        return MinorClass(p.m - 1, 1)
    if any(flat & block == flat for block in blocks):
        return MinorClass(p.m, p.d - size, 1)
    return MinorClass(p.m, p.d - size)


def expected_flats(p: RhoUniformParams) -> set[GroundSubset]:
    """The flats of U(m, d; rho) predicted structurally.

    Every subset of size at most d - 2, the size d - 1 subsets contained in
    no removed block, the removed blocks themselves, and the full ground set.
    """
    n, d = p.n, p.d
    full = ground_mask(n)
    if d == 0:
        return {full}
    blocks = removed_block_masks(p)
    out: set[GroundSubset] = {full}
    for size in range(0, d):
        for combo in combinations(range(1, n + 1), size):
            mask = mask_from(combo, n)
            if size == d - 1 and any(mask & block == mask for block in blocks):
                continue
            out.add(mask)
    out.update(blocks)
    return out
