"""Gamma-hyperelliptic semigroups: certificates, extremal constructions and
the weight bounds they are expected to satisfy.

A semigroup is gamma-hyperelliptic when it has exactly ``gamma`` even
members in ``[2, 4*gamma]`` and its ``(gamma+1)``-st positive member is
``4*gamma + 2``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import comb

from .errors import ConstructionOutOfRange, NotGammaHyperelliptic
from .gapset import Semigroup, from_gaps, from_generators
from .weights import k_weight, s_weight

__all__ = [
    "BoundCheck",
    "GammaCertificate",
    "certify",
    "check_bounds",
    "detect_gammas",
    "k_lower_bound",
    "k_upper_bound",
    "make_maximizer",
    "make_minimizer",
    "make_mult4_member",
    "mult4_spectrum",
    "mult4_value",
]


@dataclass(frozen=True)
class GammaCertificate:
    gamma: int
    even_count_ok: bool
    pivot_ok: bool
    even_elements_in_window: list[int]
    pivot_element: int

    @property
    def affirmative(self) -> bool:
        return self.even_count_ok and self.pivot_ok

    def to_dict(self) -> dict:
        d = asdict(self)
        d["affirmative"] = self.affirmative
        return d


def certify(s: Semigroup, gamma: int) -> GammaCertificate:
    """Evaluate both defining conditions literally.

    For ``gamma == 0`` the even window ``[2, 0]`` is empty, so the first
    condition holds vacuously.
    """
    if gamma < 0:
        raise ValueError(f"gamma must be non-negative, got {gamma}")
    evens = [x for x in range(2, 4 * gamma + 1, 2) if x in s]
    pivot = s.small_members(gamma + 1)[-1]
    return GammaCertificate(
        gamma=gamma,
        even_count_ok=len(evens) == gamma,
        pivot_ok=pivot == 4 * gamma + 2,
        even_elements_in_window=evens,
        pivot_element=pivot,
    )


def detect_gammas(s: Semigroup, gamma_max: int) -> list[int]:
    return [c for c in range(gamma_max + 1) if certify(s, c).affirmative]


def k_lower_bound(gamma: int, g: int) -> int:
    return comb(g - 2 * gamma, 2) + 2 * gamma


def k_upper_bound(gamma: int, g: int) -> int:
    return comb(g - 2 * gamma, 2) + 2 * gamma * gamma


def _checked(s: Semigroup, gamma: int, g: int, what: str) -> Semigroup:
    if s.genus != g:
        raise ConstructionOutOfRange(f"{what}: genus {s.genus} != {g}")
    cert = certify(s, gamma)
    if not cert.affirmative:
        raise ConstructionOutOfRange(
            f"{what}: not {gamma}-hyperelliptic "
            f"(evens {cert.even_elements_in_window}, pivot {cert.pivot_element})"
        )
    return s


def make_maximizer(gamma: int, g: int) -> Semigroup:
    """``<4, 4*gamma + 2, 2g - 4*gamma + 1>``, verified to have genus ``g``
    and to be ``gamma``-hyperelliptic."""
    if g < 2 * gamma + 1:
        raise ConstructionOutOfRange(f"g={g} < 2*gamma+1={2 * gamma + 1}")
    s = from_generators([4, 4 * gamma + 2, 2 * g - 4 * gamma + 1])
    return _checked(s, gamma, g, f"maximizer({gamma}, {g})")


def make_minimizer(gamma: int, g: int) -> Semigroup:
    """Staircase semigroup: members are 0, every even ``>= 2*gamma + 2`` and
    every odd ``>= 2(g - gamma) + 1``.  Requires ``g >= 3*gamma + 1``."""
    if g < 3 * gamma + 1:
        raise ConstructionOutOfRange(f"g={g} < 3*gamma+1={3 * gamma + 1}")
    gap_set = sorted(
        list(range(2, 2 * gamma + 1, 2)) + list(range(1, 2 * (g - gamma), 2))
    )
    s = from_gaps(gap_set)
    return _checked(s, gamma, g, f"minimizer({gamma}, {g})")


def make_mult4_member(gamma: int, g: int, k: int) -> Semigroup:
    """Four-generator multiplicity-4 semigroup
    ``<4, 4*gamma + 2, 2g - 2*gamma - 2k + 3, 2g - 2*gamma + 2k + 1>``.

    Genus, Frobenius number ``2g - 2*gamma + 2k - 3``, multiplicity and the
    certificate are all checked; any mismatch raises
    :class:`ConstructionOutOfRange`.
    """
    if gamma < 1 or not 1 <= k <= gamma + 1:
        raise ConstructionOutOfRange(f"need gamma >= 1 and 1 <= k <= gamma+1, got {gamma}, {k}")
    if g < 3 * gamma:
        raise ConstructionOutOfRange(f"g={g} < 3*gamma={3 * gamma}")
    gens = [4, 4 * gamma + 2, 2 * g - 2 * gamma - 2 * k + 3, 2 * g - 2 * gamma + 2 * k + 1]
    what = f"mult4_member({gamma}, {g}, {k})"
    s = _checked(from_generators(gens), gamma, g, what)
    if s.frobenius != 2 * g - 2 * gamma + 2 * k - 3:
        raise ConstructionOutOfRange(f"{what}: frobenius {s.frobenius}")
    if s.multiplicity != 4:
        raise ConstructionOutOfRange(f"{what}: multiplicity {s.multiplicity}")
    return s


def mult4_value(gamma: int, g: int, k: int) -> int:
    return comb(g - 2 * gamma, 2) + gamma * gamma + gamma + k * k - 3 * k + 2


def mult4_spectrum(gamma: int, g: int) -> list[tuple[int, int]]:
    """Expected K-weights ``(k, value)`` of multiplicity-4 members, ``k = 1..gamma+1``."""
    if gamma < 1 or g < 3 * gamma:
        raise ValueError(f"need gamma >= 1 and g >= 3*gamma, got {gamma}, {g}")
    return [(k, mult4_value(gamma, g, k)) for k in range(1, gamma + 2)]


@dataclass(frozen=True)
class BoundCheck:
    lower_k: int
    upper_k: int
    lower_s: int
    upper_s: int
    w_k: int
    w_s: int
    within_k: bool
    within_s: bool
    attains_min_k: bool
    attains_max_k: bool

    def to_dict(self) -> dict:
        return asdict(self)


def check_bounds(s: Semigroup, gamma: int) -> BoundCheck:
    """Compare both weights of a gamma-hyperelliptic semigroup with their
    conjectured (K) and classical (S) bounds.

    Raises
    ------
    NotGammaHyperelliptic
        If the certificate fails or the genus is below ``2*gamma + 1``.
    """
    g = s.genus
    if not certify(s, gamma).affirmative:
        raise NotGammaHyperelliptic(f"not {gamma}-hyperelliptic: {s!r}")
    if g < 2 * gamma + 1:
        raise NotGammaHyperelliptic(f"genus {g} < 2*{gamma}+1")
    base = comb(g - 2 * gamma, 2)
    lo_k, hi_k = base + 2 * gamma, base + 2 * gamma * gamma
    lo_s, hi_s = base, base + 2 * gamma * gamma
    wk, ws = k_weight(s), s_weight(s)
    return BoundCheck(
        lower_k=lo_k,
        upper_k=hi_k,
        lower_s=lo_s,
        upper_s=hi_s,
        w_k=wk,
        w_s=ws,
        within_k=lo_k <= wk <= hi_k,
        within_s=lo_s <= ws <= hi_s,
        attains_min_k=wk == lo_k,
        attains_max_k=wk == hi_k,
    )

