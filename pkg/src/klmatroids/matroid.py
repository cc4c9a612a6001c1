"""Matroids over explicit basis systems, given as bitmasks on {1..n}.

Element e of the ground set corresponds to bit e - 1.  A matroid is stored
as its full list of bases; rank, closure, the lattice of flats with Mobius
values, minors, the characteristic polynomial, and the Kazhdan-Lusztig
polynomial are all computed from that list directly.  This favours
simplicity and independence from any closed-form shortcut: these routines
serve as the oracle that the formula layer is checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Collection, Iterable

from .errors import (
    EmptyBases,
    ExchangeAxiomViolation,
    HasLoops,
    MixedCardinality,
    NotAFlat,
)
from .exactarith import IntPoly

GroundSubset = int  # bitmask over {1..n}

_FLATS_MAX_GROUND = 16  # the 2**n closure sweep is intentional; keep it sane


def mask_from(elements: Iterable[int], n: int) -> GroundSubset:
    mask = 0
    for e in elements:
        if not 1 <= e <= n:
            raise ValueError(f"element {e} outside ground set 1..{n}")
        mask |= 1 << (e - 1)
    return mask


def elements_of(mask: GroundSubset) -> tuple[int, ...]:
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


def ground_mask(n: int) -> GroundSubset:
    return (1 << n) - 1


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


class Matroid:
    """Immutable matroid with an explicit, validated basis list.

    Use :func:`matroid_from_bases` to construct one; the constructor itself
    assumes masks that already passed validation.
    """

    __slots__ = ("n", "bases", "rank", "_basis_set", "_rank_table", "_lattice")

    def __init__(self, n: int, base_masks: tuple[GroundSubset, ...]):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "bases", base_masks)
        object.__setattr__(self, "rank", base_masks[0].bit_count() if base_masks else 0)
        object.__setattr__(self, "_basis_set", frozenset(base_masks))
        object.__setattr__(self, "_rank_table", None)
        object.__setattr__(self, "_lattice", None)

    def __setattr__(self, name, value):
        raise AttributeError("Matroid is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.n == other.n and self.bases == other.bases

    def __hash__(self) -> int:
        return hash((self.n, self.bases))

    def __repr__(self) -> str:
        shown = [set(elements_of(b)) or set() for b in self.bases[:6]]
        more = "..." if len(self.bases) > 6 else ""
        return f"Matroid(n={self.n}, rank={self.rank}, bases={shown}{more})"

    def key(self) -> tuple[int, tuple[int, ...]]:
        return (self.n, self.bases)

    # -- rank machinery -----------------------------------------------------

    def rank_table(self) -> tuple[int, ...]:
        """rank of every subset, indexed by bitmask (2**n entries)."""
        if self._rank_table is None:
            if self.n > _FLATS_MAX_GROUND:
                raise ValueError(
                    f"ground set of size {self.n} exceeds the {_FLATS_MAX_GROUND} element "
                    "limit for exhaustive subset sweeps"
                )
            table = [0] * (1 << self.n)
            for s in range(1 << self.n):
                best = 0
                for b in self.bases:
                    inter = (s & b).bit_count()
                    if inter > best:
                        best = inter
                table[s] = best
            object.__setattr__(self, "_rank_table", tuple(table))
        return self._rank_table

    def rank_of(self, mask: GroundSubset) -> int:
        if self._rank_table is not None:
            return self._rank_table[mask]
        return max((mask & b).bit_count() for b in self.bases)

    def closure_of(self, mask: GroundSubset) -> GroundSubset:
        table = self.rank_table()
        r = table[mask]
        closed = mask
        for e in range(self.n):
            bit = 1 << e
            if not mask & bit and table[mask | bit] == r:
                closed |= bit
        return closed

    def lattice(self) -> "FlatLattice":
        if self._lattice is None:
            object.__setattr__(self, "_lattice", _build_lattice(self))
        return self._lattice


def matroid_from_bases(n: int, bases: Iterable[Collection[int] | GroundSubset]) -> Matroid:
    """Validate a basis system and build the matroid.

    Bases may be given as collections of elements in 1..n or as bitmasks.
    Raises EmptyBases, MixedCardinality, or ExchangeAxiomViolation (with a
    witnessing pair and element) when the family is not a basis system.
    """
    if n < 0:
        raise ValueError(f"ground set size must be non-negative, got {n}")
    masks: set[GroundSubset] = set()
    for b in bases:
        if isinstance(b, int):
            if b < 0 or b >= (1 << n):
                raise ValueError(f"bitmask {b} outside ground set of size {n}")
            masks.add(b)
        else:
            masks.add(mask_from(b, n))
    if not masks:
        raise EmptyBases("a matroid needs at least one basis")
    sizes = {m.bit_count() for m in masks}
    if len(sizes) > 1:
        raise MixedCardinality(f"bases of different sizes: {sorted(sizes)}")
    ordered = tuple(sorted(masks))
    basis_set = frozenset(ordered)
    for b1 in ordered:
        for b2 in ordered:
            if b1 == b2:
                continue
            candidates = b2 & ~b1
            for bit in _iter_bits(b1 & ~b2):
                stripped = b1 ^ bit
                if not any(stripped | c in basis_set for c in _iter_bits(candidates)):
                    element = bit.bit_length()
                    raise ExchangeAxiomViolation(
                        elements_of(b1), elements_of(b2), element
                    )
    return Matroid(n, ordered)


def uniform_matroid(m: int, d: int) -> Matroid:
    """Rank-d matroid on m + d elements whose bases are all d-subsets."""
    if m < 0 or d < 0:
        raise ValueError(f"uniform matroid needs m, d >= 0 (got m={m}, d={d})")
    n = m + d
    bases = [mask_from(combo, n) for combo in combinations(range(1, n + 1), d)]
    return matroid_from_bases(n, bases)


def rank(matroid: Matroid, subset: Collection[int] | GroundSubset) -> int:
    """Largest intersection of the subset with a basis."""
    mask = subset if isinstance(subset, int) else mask_from(subset, matroid.n)
    return matroid.rank_of(mask)


def closure(matroid: Matroid, subset: Collection[int] | GroundSubset) -> GroundSubset:
    """All elements whose addition does not raise the rank of the subset."""
    mask = subset if isinstance(subset, int) else mask_from(subset, matroid.n)
    return matroid.closure_of(mask)


@dataclass(frozen=True)
class FlatLattice:
    """Closure-closed subsets ordered by inclusion, with ranks and Mobius values.

    ``flats`` is sorted by (cardinality, mask); ``mobius[k]`` is the Mobius
    value from the bottom flat to ``flats[k]``.
    """

    n: int
    flats: tuple[GroundSubset, ...]
    ranks: tuple[int, ...]
    mobius: tuple[int, ...]

    @property
    def bottom(self) -> GroundSubset:
        return self.flats[0]

    @property
    def top(self) -> GroundSubset:
        return self.flats[-1]

    def index_of(self, flat: GroundSubset) -> int:
        # flats are sorted by (bit_count, value); bisect is unnecessary at these sizes
        try:
            return self.flats.index(flat)
        except ValueError:
            raise NotAFlat(f"{set(elements_of(flat))} is not a flat") from None

    def rank_of(self, flat: GroundSubset) -> int:
        return self.ranks[self.index_of(flat)]

    def mobius_of(self, flat: GroundSubset) -> int:
        return self.mobius[self.index_of(flat)]

    def contains(self, mask: GroundSubset) -> bool:
        return mask in set(self.flats)


def _build_lattice(matroid: Matroid) -> FlatLattice:
    table = matroid.rank_table()
    seen: set[GroundSubset] = set()
    for s in range(1 << matroid.n):
        seen.add(matroid.closure_of(s))
    flats = tuple(sorted(seen, key=lambda f: (f.bit_count(), f)))
    ranks = tuple(table[f] for f in flats)
    mobius = [0] * len(flats)
    for idx, f in enumerate(flats):
        if idx == 0:
            mobius[idx] = 1
            continue
        acc = 0
        for jdx in range(idx):
            g = flats[jdx]
            if g & f == g:
                acc += mobius[jdx]
        mobius[idx] = -acc
    return FlatLattice(matroid.n, flats, ranks, tuple(mobius))


def flats(matroid: Matroid) -> FlatLattice:
    return matroid.lattice()


def _relabel(masks: Iterable[GroundSubset], kept: tuple[int, ...]) -> list[GroundSubset]:
    """Map surviving elements (1-based, ascending) onto 1..len(kept), order preserving."""
    position = {e: idx for idx, e in enumerate(kept)}
    out = []
    for mask in masks:
        new = 0
        for e in elements_of(mask):
            new |= 1 << position[e]
        out.append(new)
    return out


def localization(matroid: Matroid, flat: Collection[int] | GroundSubset) -> Matroid:
    """Restriction to a flat: ground set F, independent sets those of the parent inside F.

    The result is relabelled onto 1..|F| preserving element order.
    """
    mask = flat if isinstance(flat, int) else mask_from(flat, matroid.n)
    if matroid.closure_of(mask) != mask:
        raise NotAFlat(f"{set(elements_of(mask))} is not a flat")
    table = matroid.rank_table()
    r = table[mask]
    kept = elements_of(mask)
    bases = [
        mask_from(combo, matroid.n)
        for combo in combinations(kept, r)
    ]
    good = [b for b in bases if table[b] == r]
    return matroid_from_bases(len(kept), _relabel(good, kept))


def contraction(matroid: Matroid, flat: Collection[int] | GroundSubset) -> Matroid:
    """Quotient by a flat: ground set is the complement, a set is independent
    when its union with a basis of the flat is independent in the parent.

    The result is relabelled onto 1..(n - |F|) preserving element order.
    """
    mask = flat if isinstance(flat, int) else mask_from(flat, matroid.n)
    if matroid.closure_of(mask) != mask:
        raise NotAFlat(f"{set(elements_of(mask))} is not a flat")
    table = matroid.rank_table()
    r = table[mask]
    anchor = 0
    for bit in _iter_bits(mask):
        if table[anchor | bit] > table[anchor]:
            anchor |= bit
    kept = elements_of(ground_mask(matroid.n) & ~mask)
    k = matroid.rank - r
    good = []
    for combo in combinations(kept, k):
        cm = mask_from(combo, matroid.n)
        if table[cm | anchor] == k + r:
            good.append(cm)
    return matroid_from_bases(len(kept), _relabel(good, kept))


# Global result caches, keyed by the exact (n, sorted bases) representation of
# a matroid, never by isomorphism class: the oracle must stay independent of
# the isomorphism claims it is used to verify.  Plain dicts are fine under the
# GIL; a concurrent duplicate insert just recomputes the same immutable value.
_CHAR_CACHE: dict[tuple[int, tuple[int, ...]], IntPoly] = {}
_KL_CACHE: dict[tuple[int, tuple[int, ...]], IntPoly] = {}


def char_poly(matroid: Matroid) -> IntPoly:
    """Characteristic polynomial: Mobius-weighted sum of t^(rank M - rank F) over flats.

    Only defined for loopless matroids; a loop would silently zero out the
    standard identities, so it is treated as misuse and raises HasLoops.
    """
    key = matroid.key()
    cached = _CHAR_CACHE.get(key)
    if cached is not None:
        return cached
    if matroid.n > 0 and matroid.closure_of(0) != 0:
        raise HasLoops(f"loops {set(elements_of(matroid.closure_of(0)))} present")
    lat = matroid.lattice()
    d = matroid.rank
    coeffs = [0] * (d + 1)
    for flat, r, mu in zip(lat.flats, lat.ranks, lat.mobius):
        coeffs[d - r] += mu
    poly = IntPoly(coeffs)
    _CHAR_CACHE[key] = poly
    return poly


def kl_poly(matroid: Matroid) -> IntPoly:
    """Kazhdan-Lusztig polynomial, straight from the defining recurrence.

    The unique polynomial P with deg P < rank/2, constant value 1 in rank 0,
    and t^rank P(1/t) - P(t) equal to the sum over nonempty flats F of
    char_poly(localization at F) * kl_poly(contraction at F).  Since the
    reversal only produces terms of degree > rank/2, P is recovered by
    negating the low-degree part of that sum.  Memoized on the exact
    (n, bases) representation.
    """
    key = matroid.key()
    cached = _KL_CACHE.get(key)
    if cached is not None:
        return cached
    d = matroid.rank
    if d == 0:
        poly = IntPoly([1])
        _KL_CACHE[key] = poly
        return poly
    if matroid.closure_of(0) != 0:
        raise HasLoops("the recurrence is implemented for loopless matroids only")
    lat = matroid.lattice()
    total = IntPoly()
    for flat in lat.flats:
        if flat == 0:
            continue
        local = localization(matroid, flat)
        contracted = contraction(matroid, flat)
        total = total + char_poly(local) * kl_poly(contracted)
    poly = IntPoly(-total.coeff(j) for j in range((d + 1) // 2))
    _KL_CACHE[key] = poly
    return poly


def clear_caches() -> None:
    _CHAR_CACHE.clear()
    _KL_CACHE.clear()


def _degree_profile(matroid: Matroid) -> dict[int, list[int]]:
    """Group ground elements by how many bases contain them."""
    degs: dict[int, int] = {}
    for e in range(1, matroid.n + 1):
        bit = 1 << (e - 1)
        degs[e] = sum(1 for b in matroid.bases if b & bit)
    groups: dict[int, list[int]] = {}
    for e, deg in degs.items():
        groups.setdefault(deg, []).append(e)
    return groups


def is_isomorphic(m1: Matroid, m2: Matroid, *, max_ground: int = 9) -> bool:
    """Brute-force isomorphism test by ground-set permutation.

    Permutations are restricted to matching element-degree classes, which is
    pure pruning: any isomorphism must preserve the number of bases through
    each element.  Refuses ground sets larger than ``max_ground``.
    """
    if m1.n != m2.n or m1.rank != m2.rank or len(m1.bases) != len(m2.bases):
        return False
    if m1.bases == m2.bases:
        return True
    if m1.n > max_ground:
        raise ValueError(f"isomorphism search limited to {max_ground} elements")
    groups1 = _degree_profile(m1)
    groups2 = _degree_profile(m2)
    if sorted((deg, len(es)) for deg, es in groups1.items()) != sorted(
        (deg, len(es)) for deg, es in groups2.items()
    ):
        return False
    if set(groups1) != set(groups2):
        return False
    degrees = sorted(groups1)
    sources = [sorted(groups1[deg]) for deg in degrees]
    target_set = m2._basis_set
    for arrangement in product(*(permutations(sorted(groups2[deg])) for deg in degrees)):
        mapping = {}
        for src_list, dst_list in zip(sources, arrangement):
            if len(src_list) != len(dst_list):
                break
            for s, t in zip(src_list, dst_list):
                mapping[s] = t
        else:
            remapped = frozenset(
                mask_from((mapping[e] for e in elements_of(b)), m2.n) for b in m1.bases
            )
            if remapped == target_set:
                return True
    return False
