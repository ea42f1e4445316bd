"""The F2 space V_D with the adjacency form, and the subspaces spanned by interval sets.

Vectors are stored as integer bitsets (bit ``i - 1`` holds the coordinate of
``e_i``) wrapped in :class:`F2Vector` so that the ambient dimension travels
with them.  Subspaces keep a reduced echelon basis, so two subspaces are equal
exactly when their dataclasses compare equal.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .basis_sets import (
    IntervalSet,
    check_d,
    enumerate_sets,
    multiplicities,
    reduce_set,
    require_valid,
)
from .errors import ConsistencyError, InvalidInput, NotRealizable
from .intervals import Interval, kappa
from .tableaux import DottedSet, ShiftedTableau


def _mask(D: int) -> int:
    return (1 << D) - 1


def parity_mask(D: int, delta: int) -> int:
    """Bits of the coordinates e_i with i = delta (mod 2), i.e. of V^delta."""
    bits = 0
    for i in range(1, D + 1):
        if i % 2 == delta:
            bits |= 1 << (i - 1)
    return bits


@dataclass(frozen=True)
class F2Vector:
    D: int
    bits: int = 0

    def __post_init__(self):
        check_d(self.D)
        if self.bits < 0 or self.bits >> self.D:
            raise InvalidInput(f"bits {self.bits:b} do not fit in dimension {self.D}")

    def __add__(self, other: "F2Vector") -> "F2Vector":
        if other.D != self.D:
            raise InvalidInput("vectors of different dimension")
        return F2Vector(self.D, self.bits ^ other.bits)

    def __getitem__(self, i: int) -> int:
        """Coordinate of e_i, 1-based."""
        if not 1 <= i <= self.D:
            raise IndexError(i)
        return self.bits >> (i - 1) & 1

    def __bool__(self) -> bool:
        return bool(self.bits)

    def support(self) -> list[int]:
        return [i for i in range(1, self.D + 1) if self.bits >> (i - 1) & 1]

    def __str__(self) -> str:
        return "".join(str(self[i]) for i in range(1, self.D + 1))

    @classmethod
    def from_str(cls, text: str) -> "F2Vector":
        if set(text) - {"0", "1"}:
            raise InvalidInput(f"not a bit string: {text!r}")
        return cls(len(text), sum(1 << i for i, ch in enumerate(text) if ch == "1"))


def vector_of(J: Iterable[int], D: int) -> F2Vector:
    """Indicator vector e_J of a subset J of [1, D]."""
    bits = 0
    for j in J:
        if not 1 <= j <= D:
            raise InvalidInput(f"index {j} outside [1,{D}]")
        bits ^= 1 << (j - 1)
    return F2Vector(D, bits)


def _form_bits(x: int, y: int, D: int) -> int:
    adjacent = ((y << 1) ^ (y >> 1)) & _mask(D)
    return bin(x & adjacent).count("1") & 1


def form(x: F2Vector, y: F2Vector) -> int:
    """The alternating form with (e_i, e_j) = 1 exactly when |i - j| = 1."""
    if x.D != y.D:
        raise InvalidInput("vectors of different dimension")
    return _form_bits(x.bits, y.bits, x.D)


def rref(rows: Iterable[int]) -> tuple[int, ...]:
    """Reduced echelon basis of the span of ``rows``.

    Pivots are lowest set bits; rows come out ordered by pivot.
    """
    basis: list[int] = []
    for r in rows:
        for b in basis:
            if r & (b & -b):
                r ^= b
        if r:
            low = r & -r
            basis = [b ^ r if b & low else b for b in basis]
            basis.append(r)
    return tuple(sorted(basis, key=lambda b: b & -b))


@dataclass(frozen=True)
class F2Subspace:
    D: int
    basis: tuple[int, ...] = ()

    def __post_init__(self):
        check_d(self.D)
        for b in self.basis:
            if b < 0 or b >> self.D:
                raise InvalidInput(f"basis vector {b:b} does not fit in dimension {self.D}")
        object.__setattr__(self, "basis", rref(self.basis))

    @classmethod
    def span(cls, D: int, vectors: Iterable) -> "F2Subspace":
        return cls(D, tuple(v.bits if isinstance(v, F2Vector) else v for v in vectors))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        """Number of elements, 2**dim."""
        return 1 << self.dim

    def __contains__(self, v) -> bool:
        bits = v.bits if isinstance(v, F2Vector) else v
        for b in self.basis:
            if bits & (b & -b):
                bits ^= b
        return bits == 0

    def __le__(self, other: "F2Subspace") -> bool:
        return all(b in other for b in self.basis)

    def __add__(self, other: "F2Subspace") -> "F2Subspace":
        return F2Subspace(self.D, self.basis + other.basis)

    def elements(self) -> Iterator[F2Vector]:
        for mask in range(1 << self.dim):
            bits = 0
            for k, b in enumerate(self.basis):
                if mask >> k & 1:
                    bits ^= b
            yield F2Vector(self.D, bits)

    def vectors(self) -> list[F2Vector]:
        return [F2Vector(self.D, b) for b in self.basis]

    def intersect(self, other: "F2Subspace") -> "F2Subspace":
        """Zassenhaus intersection."""
        D = self.D
        # pivots are lowest bits, so the eliminated copy sits in the low D bits
        rows = [b | (b << D) for b in self.basis] + list(other.basis)
        out = [r >> D for r in rref(rows) if not r & _mask(D)]
        return F2Subspace(D, tuple(out))

    def to_json(self) -> list[str]:
        return sorted(str(v) for v in self.vectors())

    def __repr__(self) -> str:
        return f"F2Subspace(D={self.D}, {self.to_json()})"


def zero_space(D: int) -> F2Subspace:
    return F2Subspace(D)


def parity_space(D: int, delta: int) -> F2Subspace:
    return F2Subspace(D, tuple(1 << (i - 1) for i in range(1, D + 1) if i % 2 == delta))


def kernel(constraints: Iterable[int], allowed: int) -> tuple[int, ...]:
    """Basis of {x : support(x) within ``allowed``, popcount(x & c) even for every c}."""
    rows = rref(c & allowed for c in constraints)
    pivots = {r & -r for r in rows}
    out = []
    bit = 1
    while bit <= allowed:
        if allowed & bit and bit not in pivots:
            x = bit
            for r in rows:
                if r & bit:
                    x |= r & -r
            out.append(x)
        bit <<= 1
    return tuple(out)


def shriek(L: F2Subspace, delta: int) -> F2Subspace:
    """Annihilator of L (inside V^delta) taken inside V^(1 - delta)."""
    D = L.D
    if not L <= parity_space(D, delta):
        raise InvalidInput(f"{L!r} is not contained in V^{delta}")
    adjacent = [((b << 1) ^ (b >> 1)) & _mask(D) for b in L.basis]
    return F2Subspace(D, kernel(adjacent, parity_mask(D, 1 - delta)))


def _e(I: Interval, D: int) -> int:
    return vector_of(I.points(), D).bits


def epsilon(B: IntervalSet) -> F2Vector:
    """Coordinate j is |B_j|(|B_j|+1)/2 mod 2, where B_j is the set of members containing j."""
    require_valid(B)
    bits = 0
    for j in range(1, B.D + 1):
        n = sum(1 for I in B if j in I)
        if n * (n + 1) // 2 % 2:
            bits |= 1 << (j - 1)
    return F2Vector(B.D, bits)


def epsilon_by_multiplicity(B: IntervalSet) -> F2Vector:
    """Sum of e_I over the members I contained in an odd number of members."""
    require_valid(B)
    bits = 0
    for I, m in multiplicities(B).items():
        if m % 2:
            bits ^= _e(I, B.D)
    return F2Vector(B.D, bits)


def epsilon_dotted(C: DottedSet) -> F2Vector:
    bits = 0
    for I in C:
        bits ^= _e(I, C.D)
    return F2Vector(C.D, bits)


def epsilon_rows(X: ShiftedTableau) -> F2Vector:
    bits = 0
    for row in X.rows:
        bits ^= _e(row, X.D)
    return F2Vector(X.D, bits)


@dataclass(frozen=True)
class UnorderedSymbol:
    """Unordered pair {A, B} partitioning [0, D+1]; the part holding 0 is stored first."""

    first: tuple[int, ...]
    second: tuple[int, ...]

    def __post_init__(self):
        A, B = tuple(sorted(self.first)), tuple(sorted(self.second))
        if 0 not in A:
            A, B = B, A
        n = len(A) + len(B)
        if sorted(A + B) != list(range(n)) or n < 2:
            raise InvalidInput(f"{A}/{B} does not partition an interval [0, D+1]")
        if (len(A) - len(B)) % 4:
            raise InvalidInput(f"part sizes {len(A)}, {len(B)} differ modulo 4")
        object.__setattr__(self, "first", A)
        object.__setattr__(self, "second", B)

    @property
    def D(self) -> int:
        return len(self.first) + len(self.second) - 2

    def render(self) -> str:
        return "(" + " ".join(map(str, self.first)) + "/" + " ".join(map(str, self.second)) + ")"

    def to_json(self) -> dict:
        return {"top": list(self.first), "bottom": list(self.second)}

    def as_distinguished(self):
        """The same symbol as a DistinguishedSymbol, or None if top[k] < bottom[k] fails."""
        from .tableaux import DistinguishedSymbol

        try:
            return DistinguishedSymbol(self.first, self.second)
        except InvalidInput:
            return None


def f_map(x: F2Vector) -> UnorderedSymbol:
    """Start from (0 2 ... D / 1 3 ... D+1) and toggle {i, i+1} in both parts for each e_i in x."""
    D = x.D
    A = set(range(0, D + 1, 2))
    B = set(range(1, D + 2, 2))
    for i in x.support():
        A ^= {i, i + 1}
        B ^= {i, i + 1}
    return UnorderedSymbol(tuple(A), tuple(B))


def unordered_symbols(D: int) -> list[UnorderedSymbol]:
    """All of Sigma_D, enumerated from the definition."""
    check_d(D)
    out = []
    rest = list(range(1, D + 2))
    for mask in range(1 << len(rest)):
        A = (0,) + tuple(r for k, r in enumerate(rest) if mask >> k & 1)
        if (2 * len(A) - (D + 2)) % 4 == 0:
            B = tuple(r for k, r in enumerate(rest) if not mask >> k & 1)
            out.append(UnorderedSymbol(A, B))
    return out


def span(B: IntervalSet) -> F2Subspace:
    return F2Subspace(B.D, tuple(_e(I, B.D) for I in B))


def span_parts(B: IntervalSet) -> tuple[F2Subspace, F2Subspace, F2Subspace]:
    """(<B>, <B>_0, <B>_1) from the parity-split interval indicators."""
    require_valid(B)
    even, odd = parity_mask(B.D, 0), parity_mask(B.D, 1)
    whole = span(B)
    part0 = F2Subspace(B.D, tuple(_e(I, B.D) & even for I in B if kappa(I) == 0))
    part1 = F2Subspace(B.D, tuple(_e(I, B.D) & odd for I in B if kappa(I) == 1))
    return whole, part0, part1


def span_parts_by_intersection(B: IntervalSet) -> tuple[F2Subspace, F2Subspace]:
    """(<B> meet V^0, <B> meet V^1), computed by subspace intersection."""
    whole = span(B)
    return whole.intersect(parity_space(B.D, 0)), whole.intersect(parity_space(B.D, 1))


def phi(B: IntervalSet) -> tuple[F2Subspace, F2Subspace]:
    _, part0, part1 = span_parts(B)
    return part1, shriek(part0, 0)


@functools.lru_cache(maxsize=None)
def _odd_parts(D: int) -> dict[F2Subspace, tuple[IntervalSet, ...]]:
    out: dict[F2Subspace, list[IntervalSet]] = {}
    for B in enumerate_sets(D, "all"):
        out.setdefault(span_parts(B)[2], []).append(B)
    return {L: tuple(v) for L, v in out.items()}


def cc(D: int, delta: int) -> set[F2Subspace]:
    """Subspaces of V^delta of the form <B>_delta."""
    return {span_parts(B)[1 + delta] for B in enumerate_sets(D, "all")}


def ca(D: int) -> set[tuple[F2Subspace, F2Subspace]]:
    return {phi(B) for B in enumerate_sets(D, "all")}


def ca_lower(D: int) -> set[tuple[F2Subspace, F2Subspace]]:
    """Diagonal pairs (L, L) with L in cc(V^1)."""
    return {(L, L) for L in cc(D, 1)}


def ca_upper(D: int) -> set[tuple[F2Subspace, F2Subspace]]:
    """Pairs (L, L_max) with L in cc(V^1)."""
    return {(L, l_max(L)) for L in cc(D, 1)}


def l_max(L: F2Subspace) -> F2Subspace:
    """Largest L' with (L, L') in ca(V^1).

    Among all B with <B>_1 = L the one minimising dim <B>_0 is found by
    exhaustive search; it must be unique and must be the reduced one.
    """
    D = L.D
    candidates = _odd_parts(D).get(L)
    if not candidates:
        raise NotRealizable(f"{L!r} is not <B>_1 for any B in S_{D}")
    dims = [(span_parts(B)[1].dim, B) for B in candidates]
    low = min(d for d, _ in dims)
    winners = [B for d, B in dims if d == low]
    if len(winners) != 1:
        raise ConsistencyError(f"{len(winners)} sets minimise dim <B>_0 over {L!r}")
    (best,) = winners
    if reduce_set(best) != best:
        raise ConsistencyError(f"minimiser {best!r} is not reduced")
    return shriek(span_parts(best)[1], 0)


def reduced_for(L: F2Subspace) -> Optional[IntervalSet]:
    """The reduced set B with <B>_1 = L, if any."""
    for B in enumerate_sets(L.D, "reduced"):
        if span_parts(B)[2] == L:
            return B
    return None
