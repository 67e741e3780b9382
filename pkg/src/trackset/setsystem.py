"""Tracking sets for set systems.

A tracking set T for a family of sets has a distinct intersection with
every set in the family. The solve route goes through hitting set: the
pairwise symmetric differences of the family must all be hit by T, and
hitting them is equivalent to tracking the family.
"""

from __future__ import annotations

from itertools import combinations
from typing import FrozenSet, Iterable, Optional, Sequence, Tuple


class SetSystem:
    """Universe of ``universe_size`` elements plus a family of distinct subsets.

    ``d``, when given, bounds the size of every set in the family.
    """

    __slots__ = ("universe_size", "family", "d")

    def __init__(self, universe_size: int, family: Iterable[Iterable[int]],
                 d: Optional[int] = None):
        if universe_size < 0:
            raise ValueError("universe_size must be nonnegative")
        fam = tuple(frozenset(s) for s in family)
        for s in fam:
            for e in s:
                if not (0 <= e < universe_size):
                    raise ValueError(f"element {e} outside universe")
            if d is not None and len(s) > d:
                raise ValueError(f"set of size {len(s)} exceeds bound d={d}")
        if len(set(fam)) != len(fam):
            raise ValueError("family sets must be pairwise distinct")
        self.universe_size = universe_size
        self.family = fam
        self.d = d

    def __repr__(self):
        return f"SetSystem(universe_size={self.universe_size}, m={len(self.family)}, d={self.d})"


class HittingInstance:
    """Hitting-set instance built from the pairwise symmetric differences."""

    __slots__ = ("universe_size", "family", "bound")

    def __init__(self, universe_size: int, family: Iterable[Iterable[int]],
                 bound: Optional[int] = None):
        fam = tuple(frozenset(s) for s in family)
        for s in fam:
            if not s:
                raise ValueError("hitting family contains an empty set (infeasible)")
        self.universe_size = universe_size
        self.family = fam
        self.bound = bound


def tracks(family: Sequence[FrozenSet[int]], trackers: FrozenSet[int]) -> bool:
    """True iff ``trackers`` intersects every family set in a distinct set."""
    seen = set()
    for s in family:
        key = s & trackers
        if key in seen:
            return False
        seen.add(key)
    return True


def tracking_lower_bound(m: int) -> int:
    """Minimum possible tracking-set size for a family of m distinct sets: ceil(lg m)."""
    if m < 1:
        raise ValueError("family size must be at least 1")
    return (m - 1).bit_length()


def reduce_to_hitting(sys: SetSystem) -> HittingInstance:
    """Symmetric-difference reduction: T tracks sys iff T hits the output.

    Identical difference sets are deduplicated; this is semantics-preserving
    for hitting.
    """
    diffs = []
    seen = set()
    for r, s in combinations(sys.family, 2):
        f = r ^ s
        if f not in seen:
            seen.add(f)
            diffs.append(f)
    diffs.sort(key=lambda f: (len(f), sorted(f)))
    bound = 2 * sys.d if sys.d is not None else None
    return HittingInstance(sys.universe_size, diffs, bound)


def solve_hitting(h: HittingInstance, k: int) -> Optional[FrozenSet[int]]:
    """Bounded-depth branching: hitting set of size <= k, or None.

    Branches on the elements of the smallest unhit set, ascending, so the
    witness is deterministic.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    family = sorted(h.family, key=lambda f: (len(f), sorted(f)))

    def search(chosen: set, budget: int) -> Optional[FrozenSet[int]]:
        unhit = None
        for f in family:
            if not (f & chosen):
                if unhit is None or len(f) < len(unhit):
                    unhit = f
        if unhit is None:
            return frozenset(chosen)
        if budget == 0:
            return None
        for e in sorted(unhit):
            chosen.add(e)
            found = search(chosen, budget - 1)
            chosen.discard(e)
            if found is not None:
                return found
        return None

    witness = search(set(), k)
    if witness is not None:
        assert all(witness & f for f in h.family)
    return witness


def solve_tracking_set(sys: SetSystem, k: int) -> Optional[FrozenSet[int]]:
    """Tracking set of size <= k for the set system, or None.

    Families of size <= 1 are tracked by the empty set. Otherwise the
    ceil(lg m) lower bound gates immediately, then the hitting-set route
    decides. Any witness is re-verified against the definition.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    m = len(sys.family)
    if m <= 1:
        return frozenset()
    if k < tracking_lower_bound(m):
        return None
    witness = solve_hitting(reduce_to_hitting(sys), k)
    if witness is not None:
        assert tracks(sys.family, witness)
    return witness


def dualize(sys: SetSystem) -> SetSystem:
    """Incidence-matrix transpose: one output set per input element.

    Element i maps to the set of indices of the family sets containing it.
    A size-k tracking set of the input corresponds to a size-k test cover
    of the output. Raises if two elements have identical incidence (the
    transpose would not be a valid set system).
    """
    fam: list[frozenset] = []
    for i in range(sys.universe_size):
        fam.append(frozenset(j for j, s in enumerate(sys.family) if i in s))
    if len(set(fam)) != len(fam):
        raise ValueError("duplicate element incidence: dual family would repeat sets")
    return SetSystem(len(sys.family), fam)
