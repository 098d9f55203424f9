"""
Multiplicity four
=================

Every gamma-hyperelliptic semigroup of multiplicity 4 turns out to be one of
the four-generator semigroups <4, 4gamma+2, 2g-2gamma-2k+3, 2g-2gamma+2k+1>;
compare the enumerated weights with the predicted list.
"""

from semiweight import k_weight, make_mult4_member, minimal_generators, mult4_spectrum
from semiweight.errors import ConstructionOutOfRange
from semiweight.tree import iter_semigroups

gamma, g = 3, 16
found = [s for s in iter_semigroups(g, gamma=gamma) if s.genus == g and s.multiplicity == 4]
print("enumerated:", sorted((k_weight(s), minimal_generators(s)) for s in found))
print("predicted :", mult4_spectrum(gamma, g))

for k, value in mult4_spectrum(gamma, g):
    try:
        s = make_mult4_member(gamma, g, k)
    except ConstructionOutOfRange as exc:
        print(k, "out of range:", exc)
        continue
    print(k, minimal_generators(s), k_weight(s), value)
