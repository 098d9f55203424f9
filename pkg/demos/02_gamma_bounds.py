"""
Gamma-hyperelliptic semigroups and their weight bounds
======================================================

Certify a semigroup, build the extremal constructions, and print the
observed K-weight range next to its bounds for a few genera.
"""

from semiweight import certify, check_bounds, k_weight, make_maximizer, make_minimizer
from semiweight.gamma import k_lower_bound, k_upper_bound
from semiweight.tree import iter_semigroups

cert = certify(make_maximizer(3, 20), 3)
print(cert)

gamma = 2
print(f"\ngamma = {gamma}")
print(" g   pop  min  max   [lower, upper]")
population = {}
for s in iter_semigroups(16, gamma=gamma):
    population.setdefault(s.genus, []).append(k_weight(s))
for g, ws in sorted(population.items()):
    print(f"{g:>2} {len(ws):>5} {min(ws):>4} {max(ws):>4}   [{k_lower_bound(gamma, g)}, {k_upper_bound(gamma, g)}]")

# the staircase attains the lower bound and <4, 4gamma+2, 2g-4gamma+1> the upper one
g = 14
print(check_bounds(make_minimizer(gamma, g), gamma))
print(check_bounds(make_maximizer(gamma, g), gamma))

# for gamma = 1 both bounds coincide, so every member sits on the maximum
g = 9
tied = [list(s.gaps) for s in iter_semigroups(g, gamma=1) if s.genus == g]
print(f"\ngamma = 1, g = {g}: {len(tied)} semigroups, all with W_K = {k_upper_bound(1, g)}")
for gl in tied:
    print("  ", gl)
