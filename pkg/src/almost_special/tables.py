"""Three-column tables: maximal set, its reduction, and the symbol."""

from __future__ import annotations

from typing import NamedTuple

from .basis_sets import IntervalSet, enumerate_sets, reduce_set
from .intervals import kappa
from .tableaux import DistinguishedSymbol, symbol_of

SEPARATOR = "......"


class TableRow(NamedTuple):
    alpha: IntervalSet
    beta: IntervalSet
    gamma: DistinguishedSymbol

    def render(self) -> str:
        return SEPARATOR.join((self.alpha.render(), self.beta.render(), self.gamma.render()))


def row_key(beta: IntervalSet):
    """Rows of singletons first; then by number of odd members, total odd length, members."""
    odd = [I for I in beta if kappa(I) == 1]
    return (any(I.a < I.b for I in odd), len(odd), sum(I.size for I in odd), tuple(odd))


def table_rows(D: int) -> list[TableRow]:
    rows = []
    for alpha in enumerate_sets(D, "half"):
        beta = reduce_set(alpha)
        rows.append(TableRow(alpha, beta, symbol_of(beta)))
    return sorted(rows, key=lambda r: row_key(r.beta))


def render_table(D: int) -> str:
    return "".join(row.render() + "\n" for row in table_rows(D))
