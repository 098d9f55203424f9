"""Bound-verification campaigns over gamma-hyperelliptic populations.

For each ``gamma <= gamma_max`` and each genus in ``[2*gamma, genus_max]``
the full gamma-hyperelliptic population is enumerated and every member is
checked against:

* the K-weight bounds ``C(g-2gamma, 2) + 2gamma <= W_K <= C(g-2gamma, 2) + 2gamma^2``
  and the S-weight bounds ``C(g-2gamma, 2) <= W_S <= C(g-2gamma, 2) + 2gamma^2``
  (genus ``>= 2*gamma + 1``);
* the weight identities ``W_K = W_S + 2g - 1 - frobenius``, ``W_S + R = g^2``,
  ``W_K = W_S <=> symmetric`` and ``W_K + R_K = g(g - 1)``;
* the multiplicity-4 spectrum and its four-generator attainers (genus
  ``>= 3*gamma``).

Per-genus extremes, their attainers and the extremal constructions are
recorded.  Claims that may legitimately fail at small genus (uniqueness of
the maximizer) are reported as anomalies rather than violations.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass, field
from math import comb

from .errors import ConstructionOutOfRange, SemigroupError
from .gamma import (
    k_lower_bound,
    k_upper_bound,
    make_maximizer,
    make_minimizer,
    make_mult4_member,
    mult4_spectrum,
)
from .gapset import Semigroup, gaps, is_symmetric
from .tree import enumerate_gamma_hyperelliptic
from .weights import k_ramification, k_weight, odd_tail_count, s_weight, total_ramification

__all__ = ["CSV_COLUMNS", "SweepResult", "SweepVisitor", "run_sweep", "sweep_csv"]

SCHEMA_ID = "semiweight.sweep/1"

CSV_COLUMNS = [
    "gamma",
    "genus",
    "frobenius",
    "multiplicity",
    "symmetric",
    "w_s",
    "w_k",
    "r",
    "r_k",
    "k_odd_tail",
    "lower_k",
    "upper_k",
    "lower_s",
    "upper_s",
    "within_k",
    "within_s",
    "attains_min_k",
    "attains_max_k",
    "gaps",
]


@dataclass
class _Cell:
    population: int = 0
    wk_min: int | None = None
    wk_max: int | None = None
    ws_min: int | None = None
    ws_max: int | None = None
    min_attainers: list[tuple[int, ...]] = field(default_factory=list)
    max_attainers: list[tuple[int, ...]] = field(default_factory=list)
    mult4: dict[tuple[int, ...], int] = field(default_factory=dict)

    def add(self, gl: tuple[int, ...], wk: int, ws: int, multiplicity: int) -> None:
        self.population += 1
        if self.wk_min is None or wk < self.wk_min:
            self.wk_min, self.min_attainers = wk, [gl]
        elif wk == self.wk_min:
            self.min_attainers.append(gl)
        if self.wk_max is None or wk > self.wk_max:
            self.wk_max, self.max_attainers = wk, [gl]
        elif wk == self.wk_max:
            self.max_attainers.append(gl)
        self.ws_min = ws if self.ws_min is None else min(self.ws_min, ws)
        self.ws_max = ws if self.ws_max is None else max(self.ws_max, ws)
        if multiplicity == 4:
            self.mult4[gl] = wk

    def merge(self, other: "_Cell") -> None:
        if other.population == 0:
            return
        if self.population == 0:
            self.__dict__.update(
                {k: (list(v) if isinstance(v, list) else dict(v) if isinstance(v, dict) else v)
                 for k, v in other.__dict__.items()}
            )
            return
        self.population += other.population
        for attr, better in (("wk_min", lambda a, b: a < b), ("wk_max", lambda a, b: a > b)):
            mine, theirs = getattr(self, attr), getattr(other, attr)
            lst = "min_attainers" if attr == "wk_min" else "max_attainers"
            if better(theirs, mine):
                setattr(self, attr, theirs)
                setattr(self, lst, list(getattr(other, lst)))
            elif theirs == mine:
                getattr(self, lst).extend(getattr(other, lst))
        self.ws_min = min(self.ws_min, other.ws_min)
        self.ws_max = max(self.ws_max, other.ws_max)
        self.mult4.update(other.mult4)


class SweepVisitor:
    """Mergeable per-genus accumulator for one gamma."""

    def __init__(self, gamma: int, genus_lo: int, genus_hi: int, collect_rows: bool = False):
        self.gamma = gamma
        self.genus_lo = genus_lo
        self.genus_hi = genus_hi
        self.cells = {g: _Cell() for g in range(genus_lo, genus_hi + 1)}
        self.violations: list[dict] = []
        self.identity_checks = 0
        self.collect_rows = collect_rows
        self.rows: list[dict] = []

    def _violation(self, kind: str, s: Semigroup, detail: str) -> None:
        self.violations.append(
            {"gamma": self.gamma, "genus": s.genus, "kind": kind,
             "gaps": list(gaps(s)), "detail": detail}
        )

    def __call__(self, s: Semigroup) -> None:
        g, c = s.genus, self.gamma
        if g not in self.cells:
            return
        gl = tuple(gaps(s))
        ws, wk = s_weight(s), k_weight(s)
        r = total_ramification(s)
        sym = is_symmetric(s)
        self.cells[g].add(gl, wk, ws, s.multiplicity)

        self.identity_checks += 1
        if g >= 1 and wk != ws + 2 * g - 1 - s.frobenius:
            self._violation("identity_wk_ws", s, f"w_k={wk} w_s={ws} frobenius={s.frobenius}")
        if ws + r != g * g:
            self._violation("identity_pairing", s, f"w_s={ws} r={r}")
        if (wk == ws) != sym:
            self._violation("identity_symmetric", s, f"w_k={wk} w_s={ws} symmetric={sym}")

        row = None
        r_k = None
        if g >= 2 * c + 1:
            try:
                r_k = k_ramification(s, c)
            except SemigroupError as exc:
                self._violation("k_ramification", s, f"{type(exc).__name__}: {exc}")
            else:
                if wk + r_k != g * (g - 1):
                    self._violation("identity_complement_area", s, f"w_k={wk} r_k={r_k}")
            base = comb(g - 2 * c, 2)
            lo_k, hi_k = base + 2 * c, base + 2 * c * c
            lo_s, hi_s = base, base + 2 * c * c
            if not lo_k <= wk <= hi_k:
                self._violation("bound_k", s, f"w_k={wk} not in [{lo_k}, {hi_k}]")
            if not lo_s <= ws <= hi_s:
                self._violation("bound_s", s, f"w_s={ws} not in [{lo_s}, {hi_s}]")
            if self.collect_rows:
                row = dict(lower_k=lo_k, upper_k=hi_k, lower_s=lo_s, upper_s=hi_s,
                           within_k=lo_k <= wk <= hi_k, within_s=lo_s <= ws <= hi_s,
                           attains_min_k=wk == lo_k, attains_max_k=wk == hi_k)
        if self.collect_rows:
            base_row = dict(
                gamma=c, genus=g, frobenius=s.frobenius, multiplicity=s.multiplicity,
                symmetric=sym, w_s=ws, w_k=wk, r=r, r_k=r_k, k_odd_tail=odd_tail_count(s),
                gaps=" ".join(map(str, gl)),
            )
            base_row.update(row or {})
            self.rows.append(base_row)

    def fork(self) -> "SweepVisitor":
        return SweepVisitor(self.gamma, self.genus_lo, self.genus_hi, self.collect_rows)

    def merge(self, other: "SweepVisitor") -> None:
        for g, cell in other.cells.items():
            self.cells[g].merge(cell)
        self.violations.extend(other.violations)
        self.identity_checks += other.identity_checks
        self.rows.extend(other.rows)


def _try(fn, *args) -> Semigroup | None:
    try:
        return fn(*args)
    except ConstructionOutOfRange:
        return None


def _record(gamma: int, g: int, cell: _Cell, violations: list, anomalies: list) -> dict:
    rec: dict = {
        "gamma": gamma,
        "genus": g,
        "population": cell.population,
        "vacuous": cell.population == 0,
        "w_k_min": cell.wk_min,
        "w_k_max": cell.wk_max,
        "w_s_min": cell.ws_min,
        "w_s_max": cell.ws_max,
        "min_attainers": [list(x) for x in sorted(cell.min_attainers)],
        "max_attainers": [list(x) for x in sorted(cell.max_attainers)],
        "bounds": None,
        "lower_attained": None,
        "minimizer_attains": None,
        "maximizer_unique": None,
        "small_genus": None,
        "mult4": None,
    }

    def fail(kind: str, detail: str, sink=violations) -> None:
        sink.append({"gamma": gamma, "genus": g, "kind": kind, "gaps": None, "detail": detail})

    if g >= 2 * gamma + 1:
        base = comb(g - 2 * gamma, 2)
        rec["bounds"] = {
            "lower_k": base + 2 * gamma,
            "upper_k": base + 2 * gamma * gamma,
            "lower_s": base,
            "upper_s": base + 2 * gamma * gamma,
        }

    # small-genus minima: 2*gamma at g = 2*gamma+1 and 2*gamma-1 at g = 2*gamma
    if gamma >= 1 and g in (2 * gamma, 2 * gamma + 1):
        expected = g - 1
        rec["small_genus"] = {"expected_min": expected, "observed_min": cell.wk_min,
                         "vacuous": cell.population == 0}
        if cell.population and cell.wk_min != expected:
            fail("small_genus_min", f"min w_k {cell.wk_min} != {expected}")

    if cell.population == 0:
        return rec

    if g >= 2 * gamma + 2:
        lo = k_lower_bound(gamma, g)
        rec["lower_attained"] = cell.wk_min == lo
        if cell.wk_min != lo:
            fail("lower_not_attained", f"min w_k {cell.wk_min} != {lo}")
    if g >= 3 * gamma + 1:
        mz = _try(make_minimizer, gamma, g)
        ok = mz is not None and tuple(gaps(mz)) in set(cell.min_attainers) and cell.wk_min == k_lower_bound(gamma, g)
        rec["minimizer_attains"] = ok
        if not ok:
            fail("minimizer_not_attainer", "staircase minimizer is not among the min attainers")

    hi = k_upper_bound(gamma, g)
    attainers = sorted(cell.max_attainers) if cell.wk_max == hi else []
    mx = _try(make_maximizer, gamma, g)
    if g >= 4 * gamma + 1:
        unique = mx is not None and attainers == [tuple(gaps(mx))]
        rec["maximizer_unique"] = unique
        if not unique:
            fail(
                "maximizer_not_unique",
                f"{len(attainers)} attainers of upper bound {hi}",
                sink=anomalies,
            )

    if gamma >= 1 and g >= 3 * gamma:
        rec["mult4"] = _mult4_check(gamma, g, cell, fail)
    return rec


def _mult4_check(gamma: int, g: int, cell: _Cell, fail) -> dict:
    spectrum = mult4_spectrum(gamma, g)
    values = {v for _, v in spectrum}
    family: dict[int, tuple[int, ...]] = {}
    for k, _ in spectrum:
        s = _try(make_mult4_member, gamma, g, k)
        if s is not None:
            family[k] = tuple(gaps(s))
    by_value: dict[int, set] = {}
    for gl, wk in cell.mult4.items():
        by_value.setdefault(wk, set()).add(gl)
    matched = True
    for wk, members in sorted(by_value.items()):
        if wk not in values:
            matched = False
            fail("mult4_spectrum", f"multiplicity-4 w_k {wk} not in {sorted(values)}")
            continue
        expected = {family[k] for k, v in spectrum if v == wk and k in family}
        if expected and members != expected:
            matched = False
            fail("mult4_attainers", f"w_k {wk}: attainers differ from four-generator family")
    hi = k_upper_bound(gamma, g)
    lo_nm = comb(g - 2 * gamma, 2) + gamma * gamma + gamma
    hi_nm = comb(g - 2 * gamma, 2) + 2 * (gamma * gamma - gamma) + 2
    mx = _try(make_maximizer, gamma, g)
    mx_gaps = tuple(gaps(mx)) if mx is not None else None
    for gl, wk in sorted(cell.mult4.items()):
        nonmaximal = gl != mx_gaps if mx_gaps is not None else wk < hi
        if nonmaximal and not lo_nm <= wk <= hi_nm:
            matched = False
            fail("mult4_nonmaximal", f"w_k {wk} not in [{lo_nm}, {hi_nm}]")
    for k, gl in family.items():
        if gl not in cell.mult4:
            matched = False
            fail("mult4_family_missing", f"family member k={k} not in the population")
    return {
        "spectrum": [list(p) for p in spectrum],
        "population": len(cell.mult4),
        "observed": sorted(set(cell.mult4.values())),
        "family_in_range": sorted(family),
        "match": matched,
    }


@dataclass
class SweepResult:
    gamma_max: int
    genus_max: int
    threads: int
    records: list[dict]
    violations: list[dict]
    anomalies: list[dict]
    identity_checks: int
    runtime: float
    rows: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def record(self, gamma: int, genus: int) -> dict:
        for rec in self.records:
            if rec["gamma"] == gamma and rec["genus"] == genus:
                return rec
        raise KeyError((gamma, genus))

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_ID,
            "params": {"gamma_max": self.gamma_max, "genus_max": self.genus_max},
            "ok": self.ok,
            "population": sum(r["population"] for r in self.records),
            "identity_checks": self.identity_checks,
            "records": self.records,
            "violations": self.violations,
            "anomalies": self.anomalies,
            "runtime": self.runtime,
        }


def _vkey(v: dict):
    return (v["gamma"], v["genus"], v["kind"], v["gaps"] or [], v["detail"])


def run_sweep(
    gamma_max: int,
    genus_max: int,
    *,
    threads: int = 1,
    genus_cap: dict[int, int] | None = None,
    collect_rows: bool = False,
) -> SweepResult:
    """Run the campaign for every ``gamma <= gamma_max``.

    ``genus_cap`` optionally lowers the top genus per gamma (used to sweep
    ``g <= 2*gamma + 12`` without enumerating past it).
    """
    if gamma_max < 0 or genus_max < 1:
        raise ValueError("need gamma_max >= 0 and genus_max >= 1")
    start = time.perf_counter()
    records, violations, anomalies, rows = [], [], [], []
    checks = 0
    for gamma in range(gamma_max + 1):
        hi = genus_max if genus_cap is None else min(genus_max, genus_cap.get(gamma, genus_max))
        lo = 2 * gamma
        if lo > hi:
            continue
        visitor = SweepVisitor(gamma, lo, hi, collect_rows=collect_rows)
        enumerate_gamma_hyperelliptic(gamma, hi, visitor, workers=threads, genus_min=lo)
        checks += visitor.identity_checks
        violations.extend(visitor.violations)
        rows.extend(sorted(visitor.rows, key=lambda r: (r["genus"], r["gaps"])))
        for g in range(lo, hi + 1):
            records.append(_record(gamma, g, visitor.cells[g], violations, anomalies))
    violations.sort(key=_vkey)
    anomalies.sort(key=_vkey)
    return SweepResult(
        gamma_max=gamma_max,
        genus_max=genus_max,
        threads=threads,
        records=records,
        violations=violations,
        anomalies=anomalies,
        identity_checks=checks,
        runtime=time.perf_counter() - start,
        rows=rows,
    )


def sweep_csv(result: SweepResult) -> str:
    """One row per visited population member, columns in ``CSV_COLUMNS`` order."""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n", extrasaction="ignore")
    writer.writeheader()
    for row in result.rows:
        writer.writerow({k: ("" if row.get(k) is None else row.get(k)) for k in CSV_COLUMNS})
    return buf.getvalue()
