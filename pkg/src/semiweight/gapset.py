"""Numerical semigroups stored as a membership bitmask up to the conductor.

Bit ``i`` of :attr:`Semigroup.bits` is set iff ``i`` is a member.  Only the
range ``[0, conductor]`` is stored; every integer past the conductor is a
member by definition, so queries there never touch the mask.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import NotASemigroup, NotCofinite, NotMember, SemigroupError

__all__ = [
    "GapList",
    "Semigroup",
    "apery_set",
    "check_invariants",
    "from_bits",
    "from_gaps",
    "from_generators",
    "gaps",
    "is_symmetric",
    "is_symmetric_mirror",
    "natural_numbers",
]


@dataclass(frozen=True, slots=True)
class Semigroup:
    """A numerical semigroup together with its cheap invariants.

    Instances are immutable and compare equal iff they describe the same
    subset of the naturals.  Build them with :func:`from_generators`,
    :func:`from_gaps` or :func:`from_bits` rather than directly.
    """

    bits: int
    genus: int
    frobenius: int
    multiplicity: int

    @property
    def conductor(self) -> int:
        return self.frobenius + 1

    def __contains__(self, x: object) -> bool:
        if not isinstance(x, int) or x < 0:
            return False
        if x > self.frobenius:
            return True
        return (self.bits >> x) & 1 == 1

    def members(self, stop: int) -> Iterator[int]:
        """Members in ``[0, stop)`` in increasing order."""
        bits, frob = self.bits, self.frobenius
        for x in range(stop):
            if x > frob or (bits >> x) & 1:
                yield x

    def small_members(self, count: int, start: int = 1) -> list[int]:
        """The ``count`` smallest members that are ``>= start``."""
        out: list[int] = []
        x = start
        bits, frob = self.bits, self.frobenius
        while len(out) < count:
            if x > frob or (bits >> x) & 1:
                out.append(x)
            x += 1
        return out

    @property
    def gaps(self) -> "GapList":
        return gaps(self)

    def __repr__(self) -> str:
        return (
            f"Semigroup(gaps={list(gaps(self))}, genus={self.genus}, "
            f"frobenius={self.frobenius}, multiplicity={self.multiplicity})"
        )


class GapList(tuple):
    """Strictly increasing tuple of positive integers with an additively
    closed complement.  Construction validates both conditions."""

    __slots__ = ()

    def __new__(cls, values: Iterable[int] = ()):
        items = tuple(int(v) for v in values)
        for a, b in zip(items, items[1:]):
            if b <= a:
                raise SemigroupError(f"gaps must be strictly increasing: {a}, {b}")
        if items and items[0] < 1:
            raise SemigroupError(f"gaps must be positive, got {items[0]}")
        witness = _closure_witness(items)
        if witness is not None:
            a, b = witness
            raise NotASemigroup(
                f"complement not closed: {a} + {b} = {a + b} is a gap", witness
            )
        return tuple.__new__(cls, items)

    @classmethod
    def _trusted(cls, items: tuple[int, ...]) -> "GapList":
        return tuple.__new__(cls, items)

    @property
    def genus(self) -> int:
        return len(self)


def _closure_witness(items: tuple[int, ...]) -> tuple[int, int] | None:
    gapset = set(items)
    for ell in items:
        for a in range(1, ell // 2 + 1):
            if a not in gapset and ell - a not in gapset:
                return a, ell - a
    return None


def natural_numbers() -> Semigroup:
    """The trivial semigroup, genus 0, the root of the semigroup tree."""
    return Semigroup(bits=1, genus=0, frobenius=-1, multiplicity=1)


def from_bits(bits: int) -> Semigroup:
    """Semigroup from a membership mask whose highest unset bit is the Frobenius.

    Bits above the conductor are ignored.  Closure is not rechecked; use
    :func:`check_invariants` when the mask comes from an untrusted source.
    """
    if not bits & 1:
        raise SemigroupError("0 must be a member")
    length = bits.bit_length()
    full = (1 << length) - 1
    missing = full & ~bits
    frob = missing.bit_length() - 1
    if frob < 0:
        return natural_numbers()
    bits &= (1 << (frob + 2)) - 1
    genus = frob + 1 - (bits & ((1 << (frob + 1)) - 1)).bit_count()
    mult = 1
    while mult <= frob and not (bits >> mult) & 1:
        mult += 1
    return Semigroup(bits=bits | (1 << (frob + 1)), genus=genus, frobenius=frob, multiplicity=mult)


def from_generators(gens: Iterable[int]) -> Semigroup:
    """Smallest additive submonoid of the naturals containing ``gens``.

    Members are sieved in increasing order; once ``min(gens)`` consecutive
    integers are members every later integer is too, which fixes the
    conductor.

    Raises
    ------
    NotCofinite
        If ``gcd(gens) != 1``.
    """
    gens = sorted({int(g) for g in gens})
    if not gens:
        raise SemigroupError("at least one generator is required")
    if gens[0] < 1:
        raise SemigroupError(f"generators must be positive, got {gens[0]}")
    if math.gcd(*gens) != 1:
        raise NotCofinite(f"gcd{tuple(gens)} = {math.gcd(*gens)}; complement is infinite")

    m = gens[0]
    bits = 1
    run = 1
    x = 0
    while run < m:
        x += 1
        if any(g <= x and (bits >> (x - g)) & 1 for g in gens):
            bits |= 1 << x
            run += 1
        else:
            run = 0
    # the last non-member before the run is the Frobenius number
    return from_bits(bits)


def from_gaps(values: Iterable[int]) -> Semigroup:
    """Semigroup whose gap set is exactly ``values``.

    Raises
    ------
    NotASemigroup
        With a witnessing pair if the complement is not additively closed.
    """
    gl = values if isinstance(values, GapList) else GapList(values)
    if not gl:
        return natural_numbers()
    frob = gl[-1]
    bits = (1 << (frob + 2)) - 1
    for ell in gl:
        bits &= ~(1 << ell)
    s = from_bits(bits)
    assert s.genus == len(gl)
    return s


def gaps(s: Semigroup) -> GapList:
    bits = s.bits
    return GapList._trusted(
        tuple(i for i in range(1, s.frobenius + 1) if not (bits >> i) & 1)
    )


def apery_set(s: Semigroup, n: int) -> list[int]:
    """Least member of each residue class modulo ``n``, indexed by residue.

    Raises
    ------
    NotMember
        If ``n`` is not a positive member of ``s``.
    """
    if n < 1 or n not in s:
        raise NotMember(f"{n} is not a positive member")
    out = [-1] * n
    found = 0
    x = 0
    while found < n:
        if x in s and out[x % n] < 0:
            out[x % n] = x
            found += 1
        x += 1
    return out


def is_symmetric(s: Semigroup) -> bool:
    """True iff the Frobenius number equals ``2 * genus - 1``."""
    return s.frobenius == 2 * s.genus - 1


def is_symmetric_mirror(s: Semigroup) -> bool:
    """Symmetry via ``x in S <=> frobenius - x not in S`` on ``[0, frobenius]``."""
    f = s.frobenius
    return all((x in s) != ((f - x) in s) for x in range(f + 1))


def check_invariants(s: Semigroup) -> None:
    """Raise ``AssertionError`` if ``s`` violates any structural invariant."""
    f = s.frobenius
    assert s.bits & 1, "0 must be a member"
    assert s.bits >> (f + 2) == 0, "bits stored past the conductor"
    assert s.conductor == f + 1
    assert f == -1 or not (s.bits >> f) & 1, "frobenius must be a gap"
    assert s.genus == sum(1 for x in range(1, f + 1) if x not in s)
    assert f <= 2 * s.genus - 1, "frobenius bound violated"
    assert s.multiplicity == s.small_members(1)[0]
    mem = [x for x in range(1, f + 1) if x in s]
    for i, a in enumerate(mem):
        for b in mem[i:]:
            if a + b > f:
                break
            assert a + b in s, f"{a} + {b} not a member"
