"""
From a reduced set to a symbol
==============================

Follow one set through each bijection, printing the tableaux as column grids.
"""

from almost_special import IntervalSet
from almost_special.tableaux import (
    DottedSet,
    dot,
    dotted_grid,
    pairs_to_symbol,
    render_grid,
    shift,
    tableau_grid,
    tableau_to_pairs,
    unshift,
)

B = IntervalSet(6, ((3, 3), (2, 4), (1, 5)))
C = dot(B)
print("reduced set  ", B.render())
print("odd members  ", C.render())
print(render_grid(C.D, dotted_grid(C)))

X = shift(C)
print("\nshifted:")
print(render_grid(X.D, tableau_grid(X)))

mu = tableau_to_pairs(X)
print("\npairs", mu.top, "/", mu.bottom)
print("symbol", pairs_to_symbol(mu).render())

# the larger worked example with three nested levels
C = DottedSet(10, ((1, 9), (3, 7), (5, 5)))
print()
print(render_grid(10, dotted_grid(C)))
print("  becomes")
print(render_grid(10, tableau_grid(shift(C))))
assert unshift(shift(C)) == C
