"""Tableau bijections from reduced interval sets to two-row symbols.

The chain is::

    reduced set  --dot-->  odd forest  --shift-->  shifted tableau
                 --pairs-->  (odd top / even bottom)  --symbol-->  symbol

Every arrow has an inverse here.  Tableaux are stored as lists of interval
rows; the column grid is only built by the entry-moving routines
(:func:`shift_by_moving`, :func:`unshift`) and by :func:`render_grid`.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Iterator

from .basis_sets import (
    IntervalSet,
    _check_enumeration_d,
    check_d,
    enumerate_sets,
    fill_between,
    require_reduced,
)
from .errors import InvalidInput
from .intervals import Interval, compatible, interval, kappa, precedes


@dataclass(frozen=True, repr=False)
class DottedSet(IntervalSet):
    """Odd intervals of [1, D] that pairwise nest or are apart."""

    def __post_init__(self):
        super().__post_init__()
        for I in self.intervals:
            if kappa(I) != 1:
                raise InvalidInput(f"{I!r} is not odd")
        items = self.intervals
        for i, I in enumerate(items):
            for J in items[i + 1:]:
                if not compatible(I, J):
                    raise InvalidInput(f"{I!r} and {J!r} are entangled")

    def __repr__(self) -> str:
        return f"DottedSet(D={self.D}, {self.render()})"

    def depth(self) -> dict[Interval, int]:
        """Number of members containing each member (itself included)."""
        return {I: sum(1 for J in self.intervals if I.issubset(J)) for I in self.intervals}

    def levels(self) -> dict[int, list[Interval]]:
        out: dict[int, list[Interval]] = defaultdict(list)
        for I, k in self.depth().items():
            out[k].append(I)
        return dict(out)


@dataclass(frozen=True)
class ShiftedTableau:
    D: int
    rows: tuple[Interval, ...] = ()

    def __post_init__(self):
        check_d(self.D)
        rows = tuple(interval(r) for r in self.rows)
        for r in rows:
            if not (1 <= r.a and r.b <= self.D) or (r.a - r.b) % 2 or kappa(r) != 1:
                raise InvalidInput(f"row {r!r} is not an odd interval of [1,{self.D}]")
        for r, s in zip(rows, rows[1:]):
            if not (r.a < s.a and r.b < s.b):
                raise InvalidInput("row endpoints must increase strictly down the tableau")
        object.__setattr__(self, "rows", rows)

    def __len__(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class PairTableau:
    """Odd top entries over even bottom entries, with top[k] < bottom[k]."""

    D: int
    top: tuple[int, ...] = ()
    bottom: tuple[int, ...] = ()

    def __post_init__(self):
        check_d(self.D)
        top, bottom = tuple(self.top), tuple(self.bottom)
        if len(top) != len(bottom):
            raise InvalidInput("pair tableau rows differ in length")
        if any(c % 2 != 1 or not 1 <= c <= self.D for c in top):
            raise InvalidInput(f"top row {top} must hold odd integers of [1,{self.D}]")
        if any(d % 2 != 0 or not 1 <= d <= self.D for d in bottom):
            raise InvalidInput(f"bottom row {bottom} must hold even integers of [1,{self.D}]")
        if list(top) != sorted(set(top)) or list(bottom) != sorted(set(bottom)):
            raise InvalidInput("pair tableau rows must increase strictly")
        if any(c >= d for c, d in zip(top, bottom)):
            raise InvalidInput(f"column condition top < bottom fails in {top}/{bottom}")
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "bottom", bottom)


@dataclass(frozen=True)
class DistinguishedSymbol:
    """Two increasing rows partitioning [0, D+1] with top[k] < bottom[k]."""

    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def __post_init__(self):
        top, bottom = tuple(self.top), tuple(self.bottom)
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "bottom", bottom)
        if len(top) != len(bottom) or not top:
            raise InvalidInput(f"symbol rows must be nonempty and of equal length: {top}/{bottom}")
        if sorted(top + bottom) != list(range(len(top) + len(bottom))):
            raise InvalidInput(f"symbol rows do not partition [0,{self.D + 1}]")
        if list(top) != sorted(top) or list(bottom) != sorted(bottom):
            raise InvalidInput("symbol rows must be increasing")
        if any(i >= j for i, j in zip(top, bottom)):
            raise InvalidInput(f"entrywise condition top < bottom fails in {top}/{bottom}")

    @property
    def D(self) -> int:
        return len(self.top) + len(self.bottom) - 2

    def render(self) -> str:
        """Inline form ``(0 1 3 6/2 4 5 7)``."""
        return "(" + " ".join(map(str, self.top)) + "/" + " ".join(map(str, self.bottom)) + ")"

    def render_rows(self) -> str:
        return " ".join(map(str, self.top)) + "\n" + " ".join(map(str, self.bottom))

    def to_json(self) -> dict:
        return {"top": list(self.top), "bottom": list(self.bottom)}

    @classmethod
    def from_json(cls, data: dict) -> "DistinguishedSymbol":
        try:
            return cls(tuple(data["top"]), tuple(data["bottom"]))
        except (KeyError, TypeError):
            raise InvalidInput(f"malformed symbol: {data!r}") from None


def dot(B: IntervalSet) -> DottedSet:
    """Keep the odd members of a reduced set."""
    require_reduced(B)
    return DottedSet(B.D, tuple(I for I in B if kappa(I) == 1))


def undot(C: DottedSet) -> IntervalSet:
    """Rebuild the reduced set whose odd members are C.

    Below each odd member, its children one level deeper are completed by
    :func:`almost_special.basis_sets.fill_between`.
    """
    if not isinstance(C, DottedSet):
        C = DottedSet(C.D, C.intervals)
    depth = C.depth()
    extra: list[Interval] = []
    for I, k in depth.items():
        children = [J for J in C if precedes(J, I) and depth[J] == k + 1]
        extra.extend(fill_between(children, I.a, I.b))
    return IntervalSet(C.D, C.intervals + tuple(extra))


def dotted_sets(D: int) -> Iterator[DottedSet]:
    """All sets of pairwise compatible odd intervals of [1, D]."""
    check_d(D)
    items = [Interval(a, b) for a in range(1, D, 2) for b in range(a, D, 2)]
    n = len(items)
    ok = [[compatible(items[i], items[j]) for j in range(n)] for i in range(n)]

    def walk(start: int, chosen: list[int]) -> Iterator[DottedSet]:
        yield DottedSet(D, tuple(items[k] for k in chosen))
        for k in range(start, n):
            if all(ok[k][c] for c in chosen):
                chosen.append(k)
                yield from walk(k + 1, chosen)
                chosen.pop()

    yield from walk(0, [])


def shift(C: DottedSet) -> ShiftedTableau:
    """Shifted tableau of an odd forest.

    Row j runs from the j-th smallest left endpoint to the j-th smallest
    right endpoint; :func:`shift_by_moving` computes the same tableau by
    moving grid entries and serves as its check.
    """
    lefts = sorted(I.a for I in C)
    rights = sorted(I.b for I in C)
    return ShiftedTableau(C.D, tuple(Interval(a, b) for a, b in zip(lefts, rights)))


def _rows_to_intervals(cells: set[int]) -> list[Interval]:
    out: list[Interval] = []
    for s in sorted(cells):
        if out and out[-1].b == s - 1:
            out[-1] = Interval(out[-1].a, s)
        else:
            out.append(Interval(s, s))
    return out


def shift_by_moving(C: DottedSet) -> ShiftedTableau:
    """Entry-moving construction: cell (s, k) moves to row k + #{j : b_j < s}."""
    rights = sorted(I.b for I in C)
    grid: dict[int, set[int]] = defaultdict(set)
    for k, members in C.levels().items():
        for I in members:
            for s in I.points():
                grid[k + sum(1 for b in rights if b < s)].add(s)
    rows = []
    for k in range(1, len(rights) + 1):
        parts = _rows_to_intervals(grid.get(k, set()))
        if len(parts) != 1:
            raise InvalidInput(f"row {k} of the moved tableau is not an interval: {parts}")
        rows.append(parts[0])
    if set(grid) - set(range(1, len(rights) + 1)):
        raise InvalidInput("entries moved below the last row")
    return ShiftedTableau(C.D, tuple(rows))


def unshift(X: ShiftedTableau) -> DottedSet:
    """Inverse of :func:`shift`: cell (s, k) moves to row k - #{j : d_j < s}."""
    rights = [r.b for r in X.rows]
    grid: dict[int, set[int]] = defaultdict(set)
    for k, row in enumerate(X.rows, start=1):
        for s in row.points():
            j = sum(1 for d in rights if d < s)
            if k <= j:
                raise InvalidInput(f"{X!r} is not a shifted tableau")
            grid[k - j].add(s)
    intervals = [I for cells in grid.values() for I in _rows_to_intervals(cells)]
    return DottedSet(X.D, tuple(intervals))


def render_grid(D: int, rows: dict[int, Iterable[int]]) -> str:
    """Column grid with one line per row, blank cells as spaces."""
    width = len(str(D))
    lines = []
    for k in sorted(rows):
        cells = set(rows[k])
        lines.append(" ".join(str(s).rjust(width) if s in cells else " " * width
                              for s in range(1, D + 1)).rstrip())
    return "\n".join(lines)


def dotted_grid(C: DottedSet) -> dict[int, list[int]]:
    return {k: sorted(s for I in members for s in I.points())
            for k, members in sorted(C.levels().items())}


def tableau_grid(X: ShiftedTableau) -> dict[int, list[int]]:
    return {k: list(r.points()) for k, r in enumerate(X.rows, start=1)}


def tableau_to_pairs(X: ShiftedTableau) -> PairTableau:
    return PairTableau(X.D, tuple(r.a for r in X.rows), tuple(r.b + 1 for r in X.rows))


def pairs_to_tableau(mu: PairTableau) -> ShiftedTableau:
    return ShiftedTableau(mu.D, tuple(Interval(c, d - 1) for c, d in zip(mu.top, mu.bottom)))


def symbol_to_pairs(sym: DistinguishedSymbol) -> PairTableau:
    """Odd entries of the top row over even entries of the bottom row."""
    top = tuple(i for i in sym.top if i % 2)
    bottom = tuple(j for j in sym.bottom if j % 2 == 0)
    return PairTableau(sym.D, top, bottom)


def pairs_to_symbol(mu: PairTableau) -> DistinguishedSymbol:
    D = mu.D
    top = sorted(set(mu.top) | (set(range(0, D + 1, 2)) - set(mu.bottom)))
    bottom = sorted(set(mu.bottom) | (set(range(1, D + 2, 2)) - set(mu.top)))
    return DistinguishedSymbol(tuple(top), tuple(bottom))


def symbol_of(B: IntervalSet) -> DistinguishedSymbol:
    """Full combinatorial route from a reduced set to its symbol."""
    return pairs_to_symbol(tableau_to_pairs(shift(dot(B))))


def almost_special_symbols(D: int) -> list[DistinguishedSymbol]:
    """Symbols of all reduced sets of ambient size D, in enumeration order."""
    return [symbol_of(B) for B in enumerate_sets(D, "reduced")]


def distinguished_symbols(D: int) -> list[DistinguishedSymbol]:
    """Every symbol with rows partitioning [0, D+1] and top[k] < bottom[k], generated directly.

    Entries 0, 1, ..., D+1 are placed in turn; an entry may go to the bottom
    row only while the bottom row stays strictly shorter than the top row.
    """
    _check_enumeration_d(D, None)
    half = (D + 2) // 2
    out: list[DistinguishedSymbol] = []

    def place(x: int, top: list[int], bottom: list[int]) -> None:
        if x == D + 2:
            out.append(DistinguishedSymbol(tuple(top), tuple(bottom)))
            return
        if len(top) < half:
            top.append(x)
            place(x + 1, top, bottom)
            top.pop()
        if len(bottom) < len(top):
            bottom.append(x)
            place(x + 1, top, bottom)
            bottom.pop()

    place(0, [], [])
    return out
