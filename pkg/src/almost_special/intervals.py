"""Integer intervals [a, b] and the relations between them.

Intervals are ordered lexicographically by ``(a, b)``; everything downstream
iterates in that order.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import InvalidInput

NESTED_IN = "nested_in"
CONTAINS = "contains"
APART = "apart"
EQUAL = "equal"
ENTANGLED = "entangled"


class Interval(NamedTuple):
    a: int
    b: int

    def __contains__(self, x: object) -> bool:
        return isinstance(x, int) and self.a <= x <= self.b

    @property
    def size(self) -> int:
        return self.b - self.a + 1

    def points(self) -> range:
        return range(self.a, self.b + 1)

    def issubset(self, other: "Interval") -> bool:
        return other.a <= self.a and self.b <= other.b

    def to_json(self) -> list[int]:
        return [self.a, self.b]

    def digits(self) -> str:
        """Render as the concatenated digit string a(a+1)...b."""
        return "".join(str(x) for x in range(self.a, self.b + 1))

    def __repr__(self) -> str:
        return f"[{self.a},{self.b}]"


def interval(x) -> Interval:
    """Coerce an Interval, a pair, or a two-element list to an Interval."""
    if isinstance(x, Interval):
        return x
    try:
        a, b = x
    except (TypeError, ValueError):
        raise InvalidInput(f"not an interval: {x!r}") from None
    if not (isinstance(a, int) and isinstance(b, int)):
        raise InvalidInput(f"interval endpoints must be integers: {x!r}")
    if a > b:
        raise InvalidInput(f"empty interval [{a},{b}]")
    return Interval(a, b)


def in_range(I: Interval, D: int) -> bool:
    return 1 <= I.a <= I.b <= D


def is_parity_interval(I: Interval) -> bool:
    return (I.a - I.b) % 2 == 0


def check_member(I: Interval, D: int) -> None:
    """Raise InvalidInput unless I lies in the set of same-parity intervals of [1, D]."""
    if not in_range(I, D):
        raise InvalidInput(f"{I!r} is not inside [1,{D}]")
    if not is_parity_interval(I):
        raise InvalidInput(f"{I!r} has endpoints of mixed parity")


def kappa(I: Interval) -> int:
    """Parity class of a same-parity interval: 1 for odd endpoints, 0 for even."""
    if not is_parity_interval(I):
        raise InvalidInput(f"{I!r} has endpoints of mixed parity")
    return I.a % 2


def precedes(I: Interval, J: Interval) -> bool:
    """Strict nesting: J.a < I.a <= I.b < J.b."""
    return J.a < I.a and I.b < J.b


def apart(I: Interval, J: Interval) -> bool:
    return J.a - I.b >= 2 or I.a - J.b >= 2


def relate(I: Interval, J: Interval) -> str:
    """Classify the pair (I, J) with exactly one of the five relation tags."""
    if I == J:
        return EQUAL
    if precedes(I, J):
        return NESTED_IN
    if precedes(J, I):
        return CONTAINS
    if apart(I, J):
        return APART
    return ENTANGLED


def compatible(I: Interval, J: Interval) -> bool:
    """True when the pair is equal, nested either way, or apart."""
    return relate(I, J) != ENTANGLED


def even_interior(I: Interval) -> list[int]:
    """Points of I of the opposite parity to its endpoints."""
    return list(range(I.a + 1, I.b, 2))


def admissible_kappa(seq: Sequence[Interval]) -> Optional[int]:
    """Shared parity of an admissible sequence, or None if ``seq`` is not admissible."""
    if not seq:
        raise InvalidInput("admissible sequences are nonempty")
    parity = seq[0].a % 2
    for I in seq:
        if I.a > I.b or I.a % 2 != parity or I.b % 2 != parity:
            return None
    for prev, nxt in zip(seq, seq[1:]):
        if nxt.a - prev.b != 2:
            return None
    return parity


def parity_intervals(D: int) -> list[Interval]:
    """All same-parity intervals inside [1, D], lexicographically ordered."""
    return [Interval(a, b) for a in range(1, D + 1) for b in range(a, D + 1, 2)]


def sort_intervals(intervals: Iterable[Interval]) -> tuple[Interval, ...]:
    return tuple(sorted(intervals))
