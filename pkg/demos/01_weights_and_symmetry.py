"""
Weights of a numerical semigroup
================================

Build a few semigroups, look at their gaps, and compare the two weights.
They agree exactly on the symmetric semigroups.
"""

from semiweight import (
    from_gaps,
    from_generators,
    gaps,
    is_symmetric,
    k_weight,
    s_weight,
    total_ramification,
)

# a semigroup is given by generators or by its gap set
hyperelliptic = from_generators([2, 11])
print(list(gaps(hyperelliptic)), hyperelliptic.genus, hyperelliptic.frobenius)

# the same object from the other direction
assert from_gaps([1, 3, 5, 7, 9]) == hyperelliptic

for gens in ([2, 11], [4, 6, 11, 13], [4, 14, 29], [3, 7], [5, 6, 7, 8, 9]):
    s = from_generators(gens)
    g = s.genus
    print(
        f"<{', '.join(map(str, gens))}>".ljust(18),
        f"g={g:<3} F={s.frobenius:<3} W_S={s_weight(s):<4} W_K={k_weight(s):<4}",
        f"symmetric={is_symmetric(s)}",
    )
    # W_K exceeds W_S by how far the Frobenius number falls short of 2g - 1
    assert k_weight(s) == s_weight(s) + 2 * g - 1 - s.frobenius
    # weight and ramification split the g x g square
    assert s_weight(s) + total_ramification(s) == g * g
