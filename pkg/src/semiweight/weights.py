"""Weights and ramification invariants of numerical semigroups."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from math import comb

from .errors import MalformedOddList, NotGammaHyperelliptic
from .gapset import Semigroup, gaps

__all__ = [
    "WeightReport",
    "even_heads",
    "k_ramification",
    "k_weight",
    "odd_members_below_2g",
    "odd_tail_count",
    "s_weight",
    "total_ramification",
    "weight_report",
]


def s_weight(s: Semigroup) -> int:
    """Sum of ``gap_i - i`` over all gaps (1-based index)."""
    return sum(ell - i for i, ell in enumerate(gaps(s), start=1))


def k_weight(s: Semigroup) -> int:
    """Like :func:`s_weight` but skipping the Frobenius number, plus ``g - 1``.

    Zero for genus 0 and genus 1.
    """
    g = s.genus
    if g == 0:
        return 0
    gl = gaps(s)
    return sum(gl[i - 1] - i for i in range(1, g)) + g - 1


def total_ramification(s: Semigroup) -> int:
    """``sum(m_i - i)`` over the ``g`` smallest nonzero members."""
    g = s.genus
    if g == 0:
        return 0
    return sum(s.small_members(g)) - comb(g + 1, 2)


def odd_tail_count(s: Semigroup) -> int:
    """Odd members in ``[conductor, 2g)``.

    The upper cutoff ``2g`` keeps the count finite; it is the same window
    the odd list of :func:`odd_members_below_2g` lives in.
    """
    g = s.genus
    if g == 0:
        return 0
    lo = s.conductor | 1
    return len(range(lo, 2 * g, 2))


def odd_members_below_2g(s: Semigroup) -> list[int]:
    """Odd nonzero members below ``2g``, largest first."""
    return [x for x in range(2 * s.genus - 1, 0, -2) if x in s]


def even_heads(s: Semigroup, gamma: int) -> list[int]:
    """The ``gamma`` smallest nonzero even members, increasing."""
    out: list[int] = []
    x = 2
    while len(out) < gamma:
        if x in s:
            out.append(x)
        x += 2
    return out


def k_ramification(s: Semigroup, gamma: int) -> int:
    """K-ramification of a ``gamma``-hyperelliptic semigroup of genus ``>= 2*gamma + 1``.

    Computed from its even heads ``n_i``, its odd members ``u_i`` below
    ``2g`` and the odd tail count ``k``::

        sum(n_i + u_i) + sum_{i=1}^{g-2gamma-1} (4gamma + 2i) - C(g, 2) - 2k

    Raises
    ------
    NotGammaHyperelliptic
        If the certificate fails or ``g < 2*gamma + 1``.
    MalformedOddList
        If the number of odd members below ``2g`` is not ``gamma``.
    """
    from .gamma import certify

    g = s.genus
    if not certify(s, gamma).affirmative:
        raise NotGammaHyperelliptic(f"not {gamma}-hyperelliptic: {s!r}")
    if g < 2 * gamma + 1:
        raise NotGammaHyperelliptic(f"genus {g} < 2*{gamma}+1")
    u = odd_members_below_2g(s)
    if len(u) != gamma:
        raise MalformedOddList(
            f"{len(u)} odd members below 2g={2 * g}, expected {gamma}: {u}"
        )
    n = even_heads(s, gamma)
    tail = sum(4 * gamma + 2 * i for i in range(1, g - 2 * gamma))
    return sum(n) + sum(u) + tail - comb(g, 2) - 2 * odd_tail_count(s)


@dataclass(frozen=True)
class WeightReport:
    w_s: int
    w_k: int
    ramification: int
    k_odd_tail: int
    odd_members_below_2g: list[int] = field(default_factory=list)
    even_heads: list[int] | None = None
    r_k: int | None = None

    def to_dict(self) -> dict:
        return asdict(self)


def weight_report(s: Semigroup, gamma: int | None = None) -> WeightReport:
    """Bundle every weight invariant of ``s``.

    The gamma-dependent fields are filled only when ``gamma`` is given; the
    errors of :func:`k_ramification` propagate.
    """
    heads = r_k = None
    if gamma is not None:
        r_k = k_ramification(s, gamma)
        heads = even_heads(s, gamma)
    return WeightReport(
        w_s=s_weight(s),
        w_k=k_weight(s),
        ramification=total_ramification(s),
        k_odd_tail=odd_tail_count(s),
        odd_members_below_2g=odd_members_below_2g(s),
        even_heads=heads,
        r_k=r_k,
    )
