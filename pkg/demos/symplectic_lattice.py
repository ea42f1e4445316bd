"""
Vectors, the adjacency form and the subspace lattice
====================================================
"""

from almost_special import IntervalSet, enumerate_sets
from almost_special.symplectic import cc, epsilon, f_map, l_max, phi, shriek, span_parts

D = 4

# epsilon sends each set to a vector of F_2^D, injectively
for B in enumerate_sets(D):
    print(f"{B.render():<12} eps = {epsilon(B)}   f(eps) = {f_map(epsilon(B)).render()}")

# the even and odd parts of the span, and the annihilator of the even part
B = IntervalSet(D, ((3, 3), (2, 4)))
whole, even, odd = span_parts(B)
print("\n<B>_0 =", even.to_json(), " <B>_1 =", odd.to_json())
print("<B>_0^! =", shriek(even, 0).to_json())
print("phi(B) =", [L.to_json() for L in phi(B)])

# each odd subspace in cc has a unique largest partner
for L in sorted(cc(D, 1), key=lambda L: (L.dim, L.basis)):
    print(f"L = {L.to_json()!s:<18} L_max = {l_max(L).to_json()}")
