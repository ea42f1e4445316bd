"""Interval sets satisfying the nesting axiom (P0) and covering axiom (P1).

An :class:`IntervalSet` is any finite set of same-parity intervals of
``[1, D]``; membership in ``S_D`` is a property checked by :func:`validate`.
The reduction ``B -> 1B`` drops maximal even intervals, and
:func:`saturate` inverts it on the sets of maximal size ``D/2``.
"""

from __future__ import annotations

import functools
import os
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .errors import InvalidInput, NotAMember, ResourceLimit
from .intervals import (
    ENTANGLED,
    Interval,
    admissible_kappa,
    apart,
    check_member,
    even_interior,
    interval,
    kappa,
    parity_intervals,
    precedes,
    relate,
)

DEFAULT_CEILING = 16
BRUTE_FORCE_MAX_D = 8
FILTERS = ("all", "half", "reduced")


def d_ceiling() -> int:
    """Largest D that enumeration accepts; ``ASR_D_CEILING`` overrides the default."""
    value = os.environ.get("ASR_D_CEILING")
    if value is None:
        return DEFAULT_CEILING
    try:
        return int(value)
    except ValueError:
        raise InvalidInput(f"ASR_D_CEILING must be an integer, got {value!r}") from None


def check_d(D: int) -> None:
    if not isinstance(D, int) or D < 0 or D % 2:
        raise InvalidInput(f"D must be an even nonnegative integer, got {D!r}")


@dataclass(frozen=True)
class IntervalSet:
    """A set of same-parity intervals of [1, D], stored sorted."""

    D: int
    intervals: tuple[Interval, ...] = ()

    def __post_init__(self):
        check_d(self.D)
        items = tuple(sorted({interval(x) for x in self.intervals}))
        for I in items:
            check_member(I, self.D)
        object.__setattr__(self, "intervals", items)

    def __iter__(self) -> Iterator[Interval]:
        return iter(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)

    def __contains__(self, I: object) -> bool:
        return I in self.intervals

    def __repr__(self) -> str:
        return f"IntervalSet(D={self.D}, {self.render()})"

    def union(self, others: Iterable[Interval]) -> "IntervalSet":
        return IntervalSet(self.D, self.intervals + tuple(others))

    def without(self, others: Iterable[Interval]) -> "IntervalSet":
        drop = set(others)
        return IntervalSet(self.D, tuple(I for I in self.intervals if I not in drop))

    def render(self) -> str:
        """Digit-string rendering, members ordered by right endpoint: ``{3,234,6}``."""
        if not self.intervals:
            return "{∅}"
        items = sorted(self.intervals, key=lambda I: (I.b, -I.a))
        return "{" + ",".join(I.digits() for I in items) + "}"

    def to_json(self) -> dict:
        return {"D": self.D, "intervals": [I.to_json() for I in self.intervals]}

    @classmethod
    def from_json(cls, data: dict) -> "IntervalSet":
        try:
            return cls(data["D"], tuple(data["intervals"]))
        except (KeyError, TypeError):
            raise InvalidInput(f"malformed interval set: {data!r}") from None


@dataclass(frozen=True)
class Verdict:
    kind: str = "ok"
    witness: tuple = ()

    @property
    def ok(self) -> bool:
        return self.kind == "ok"

    def __bool__(self) -> bool:
        return self.ok


OK = Verdict()


def validate(B: IntervalSet) -> Verdict:
    """Check (P0) then (P1), returning the lexicographically least violation."""
    items = B.intervals
    for i, I in enumerate(items):
        for J in items[i + 1:]:
            if relate(I, J) == ENTANGLED:
                return Verdict("violates_P0", (I, J))
    for I in items:
        for x in even_interior(I):
            if not any(x in J and precedes(J, I) for J in items):
                return Verdict("violates_P1", (I, x))
    return OK


def is_valid(B: IntervalSet) -> bool:
    return validate(B).ok


def require_valid(B: IntervalSet) -> None:
    verdict = validate(B)
    if not verdict:
        raise InvalidInput(f"{B!r} is not in S_D: {verdict.kind} at {verdict.witness}")


def multiplicity(I: Interval, B: IntervalSet) -> int:
    """Number of members of B containing I, counting I itself."""
    if I not in B:
        raise NotAMember(I)
    return sum(1 for J in B if I.issubset(J))


def multiplicities(B: IntervalSet) -> dict[Interval, int]:
    return {I: sum(1 for J in B if I.issubset(J)) for I in B}


def maximal_members(B: IntervalSet) -> list[Interval]:
    return [I for I in B if not any(precedes(I, J) for J in B)]


def descent_chain(I: Interval, B: IntervalSet) -> tuple[Interval, ...]:
    """Members of B directly below I (one level deeper), as an admissible sequence."""
    if I not in B:
        raise NotAMember(I)
    if I.a == I.b:
        raise InvalidInput(f"{I!r} has empty even interior")
    mult = multiplicities(B)
    level = mult[I] + 1
    return tuple(J for J in B if precedes(J, I) and mult[J] == level)


def in_reduced(B: IntervalSet) -> bool:
    """Whether B lies in 1S_D: valid, with every maximal member odd."""
    return is_valid(B) and all(kappa(I) == 1 for I in maximal_members(B))


def require_reduced(B: IntervalSet) -> None:
    require_valid(B)
    bad = [I for I in maximal_members(B) if kappa(I) == 0]
    if bad:
        raise InvalidInput(f"{B!r} has even maximal members {bad}")


def reduce_set(B: IntervalSet) -> IntervalSet:
    """Remove the maximal members of even parity."""
    require_valid(B)
    return B.without(I for I in maximal_members(B) if kappa(I) == 0)


@dataclass(frozen=True)
class RunDecomposition:
    runs: tuple[tuple[Interval, ...], ...] = ()
    gaps: tuple[int, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.runs)


def maximal_runs(intervals: Iterable[Interval]) -> RunDecomposition:
    """Group pairwise apart odd intervals into maximal admissible runs."""
    items = sorted(intervals)
    for I in items:
        if kappa(I) != 1:
            raise InvalidInput(f"{I!r} is not odd")
    for I, J in zip(items, items[1:]):
        if not apart(I, J):
            raise InvalidInput(f"{I!r} and {J!r} are not apart")
    runs: list[list[Interval]] = []
    gaps: list[int] = []
    for I in items:
        if runs and I.a - runs[-1][-1].b == 2:
            runs[-1].append(I)
        else:
            if runs:
                gaps.append(I.a - runs[-1][-1].b)
            runs.append([I])
    for run in runs:
        assert admissible_kappa(run) == 1
    return RunDecomposition(tuple(tuple(r) for r in runs), tuple(gaps))


def fill_between(children: Sequence[Interval], lo: int, hi: int) -> list[Interval]:
    """Even intervals completing odd ``children`` inside the open range (lo, hi).

    Each run of children is wrapped by its hull widened by one on both sides
    (skipped if that would reach ``lo``), and every even point left uncovered
    by a hull, and not adjacent to a run, becomes a singleton.
    """
    runs = maximal_runs(children).runs
    out: list[Interval] = []
    for run in runs:
        if run[0].a - 1 > lo:
            out.append(Interval(run[0].a - 1, run[-1].b + 1))
    bounds = [lo] + [x for run in runs for x in (run[0].a - 1, run[-1].b + 1)] + [hi]
    # bounds pairs (left, right): singletons u with left < u < right, u even
    for left, right in zip(bounds[::2], bounds[1::2]):
        start = left + 1 if left % 2 else left + 2
        out.extend(Interval(u, u) for u in range(start, right, 2))
    return sorted(out)


def growth_set(B: IntervalSet) -> list[Interval]:
    """The set Z(B) of even intervals that may be added to a reduced B."""
    require_reduced(B)
    return fill_between(maximal_members(B), 0, B.D + 1)


def fibre(B: IntervalSet) -> list[IntervalSet]:
    """All sets reducing to B: B together with any subset of Z(B)."""
    Z = growth_set(B)
    out = []
    for mask in range(1 << len(Z)):
        out.append(B.union(Z[k] for k in range(len(Z)) if mask >> k & 1))
    return sorted(out, key=lambda S: S.intervals)


def saturate(B: IntervalSet) -> IntervalSet:
    """The unique member of S_D of size D/2 that reduces to B."""
    return B.union(growth_set(B))


def has_half_shape(B: IntervalSet) -> bool:
    """Shape test for |B| = D/2 read off the maximal members alone.

    The maximal members ``[a1,b1], ..., [ar,br]`` must have consecutive gaps
    all equal to 2, and either ``a1 = 1, br = D`` with exactly one gap raised
    to 3, or ``a1 = 1, br = D - 1``, or ``a1 = 2, br = D``.
    """
    top = sorted(maximal_members(B))
    if not top:
        return B.D == 0
    gaps = [J.a - I.b for I, J in zip(top, top[1:])]
    a1, br = top[0].a, top[-1].b
    if all(g == 2 for g in gaps):
        return (a1, br) in ((1, B.D - 1), (2, B.D))
    one_wide = gaps.count(3) == 1 and all(g in (2, 3) for g in gaps)
    return one_wide and (a1, br) == (1, B.D)


def catalan(n: int) -> int:
    from math import comb

    return comb(2 * n, n) // (n + 1)


def _check_enumeration_d(D: int, ceiling: Optional[int]) -> None:
    check_d(D)
    limit = d_ceiling() if ceiling is None else ceiling
    if D > limit:
        raise ResourceLimit(f"D={D} exceeds the enumeration ceiling {limit}")


@functools.lru_cache(maxsize=None)
def _reduced(D: int) -> tuple[IntervalSet, ...]:
    from .tableaux import dotted_sets, undot

    return tuple(sorted((undot(C) for C in dotted_sets(D)), key=lambda S: S.intervals))


@functools.lru_cache(maxsize=None)
def _all(D: int) -> tuple[IntervalSet, ...]:
    out = [S for B in _reduced(D) for S in fibre(B)]
    return tuple(sorted(out, key=lambda S: S.intervals))


@functools.lru_cache(maxsize=None)
def _half(D: int) -> tuple[IntervalSet, ...]:
    return tuple(sorted((saturate(B) for B in _reduced(D)), key=lambda S: S.intervals))


def enumerate_sets(D: int, which: str = "all", ceiling: Optional[int] = None) -> list[IntervalSet]:
    """List S_D (``all``), its members of size D/2 (``half``) or 1S_D (``reduced``).

    Generated from the forests of pairwise compatible odd intervals, lifted
    through :func:`almost_special.tableaux.undot` and expanded over fibres.
    The result is sorted by member list.
    """
    _check_enumeration_d(D, ceiling)
    if which not in FILTERS:
        raise InvalidInput(f"unknown filter {which!r}; expected one of {FILTERS}")
    source = {"all": _all, "half": _half, "reduced": _reduced}[which]
    return list(source(D))


def enumerate_by_search(D: int) -> list[IntervalSet]:
    """Depth-first search over all same-parity intervals with (P0) pruning.

    Independent of the forest route; used to cross-check it for small D.
    """
    check_d(D)
    items = parity_intervals(D)
    n = len(items)
    clash = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and relate(items[i], items[j]) == ENTANGLED:
                clash[i] |= 1 << j
    out: list[IntervalSet] = []

    def covered(chosen: list[Interval]) -> bool:
        for I in chosen:
            for x in even_interior(I):
                if not any(x in J and precedes(J, I) for J in chosen):
                    return False
        return True

    def walk(start: int, mask: int, chosen: list[Interval]) -> None:
        if covered(chosen):
            out.append(IntervalSet(D, tuple(chosen)))
        for k in range(start, n):
            if not mask & clash[k]:
                chosen.append(items[k])
                walk(k + 1, mask | 1 << k, chosen)
                chosen.pop()

    walk(0, 0, [])
    return sorted(out, key=lambda S: S.intervals)


def brute_force_enumerate(D: int) -> list[IntervalSet]:
    """Filter the full power set of same-parity intervals by (P0) and (P1).

    The subsets are encoded as integers and both axioms are evaluated as
    vectorised bit tests over all ``2**n`` of them at once.
    """
    check_d(D)
    if D > BRUTE_FORCE_MAX_D:
        raise ResourceLimit(f"power-set enumeration is limited to D <= {BRUTE_FORCE_MAX_D}")
    items = parity_intervals(D)
    n = len(items)
    subsets = np.arange(1 << n, dtype=np.int64)
    keep = np.ones(subsets.shape, dtype=bool)
    for i in range(n):
        for j in range(i + 1, n):
            if relate(items[i], items[j]) == ENTANGLED:
                pair = (1 << i) | (1 << j)
                keep &= (subsets & pair) != pair
    for i, I in enumerate(items):
        has_I = (subsets >> i) & 1 == 1
        for x in even_interior(I):
            cover = 0
            for j, J in enumerate(items):
                if x in J and precedes(J, I):
                    cover |= 1 << j
            keep &= ~has_I | ((subsets & cover) != 0)
    out = []
    for s in subsets[keep].tolist():
        out.append(IntervalSet(D, tuple(items[k] for k in range(n) if s >> k & 1)))
    return sorted(out, key=lambda S: S.intervals)
