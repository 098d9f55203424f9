"""JSON-ready reports for single semigroups and their published schemas."""

from __future__ import annotations

import json
from importlib import resources

from .errors import SemigroupError
from .gamma import certify, check_bounds, detect_gammas
from .gapset import Semigroup, gaps, is_symmetric
from .tree import minimal_generators
from .weights import weight_report

__all__ = ["ANALYZE_SCHEMA_ID", "analyze", "load_schema"]

ANALYZE_SCHEMA_ID = "semiweight.analyze/1"


def load_schema(name: str) -> dict:
    """Load one of the bundled JSON schemas: ``analyze``, ``sweep`` or ``count``."""
    text = resources.files("semiweight").joinpath("schemas", f"{name}.schema.json").read_text("utf-8")
    return json.loads(text)


def analyze(s: Semigroup, gamma: int | None = None) -> dict:
    """Every invariant of ``s`` as a plain dict.

    When ``gamma`` is not given and exactly one gamma certifies, that one is
    used for the gamma-dependent fields (``r_k``, ``bounds``, ``flags``).
    """
    g = s.genus
    found = detect_gammas(s, max(g, 0))
    resolved = gamma if gamma is not None else (found[0] if len(found) == 1 else None)
    certificates = [certify(s, c).to_dict() for c in sorted(set(found) | ({gamma} if gamma is not None else set()))]

    r_k = bounds = flags = None
    errors = []
    if resolved is not None:
        try:
            wr = weight_report(s, resolved)
            r_k = wr.r_k
            bc = check_bounds(s, resolved)
        except SemigroupError as exc:
            errors.append(f"{type(exc).__name__}: {exc}")
            wr = weight_report(s)
        else:
            bounds = {k: getattr(bc, k) for k in ("lower_k", "upper_k", "lower_s", "upper_s")}
            flags = {k: getattr(bc, k) for k in ("within_k", "within_s", "attains_min_k", "attains_max_k")}
    else:
        wr = weight_report(s)

    return {
        "schema": ANALYZE_SCHEMA_ID,
        "semigroup": {"generators": minimal_generators(s), "gaps": list(gaps(s))},
        "genus": g,
        "frobenius": s.frobenius,
        "conductor": s.conductor,
        "multiplicity": s.multiplicity,
        "symmetric": is_symmetric(s),
        "gammas": found,
        "gamma": resolved,
        "certificates": certificates,
        "w_s": wr.w_s,
        "w_k": wr.w_k,
        "r": wr.ramification,
        "r_k": r_k,
        "k_odd_tail": wr.k_odd_tail,
        "odd_members_below_2g": wr.odd_members_below_2g,
        "bounds": bounds,
        "flags": flags,
        "errors": errors,
    }
