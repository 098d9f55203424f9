"""Command-line front end.

Commands: ``analyze``, ``verify``, ``count``, ``render`` and ``enumerate``.
Exit status is 0 on success, 1 when a verification campaign records
violations, and 2 on invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .errors import SemigroupError
from .gamma import detect_gammas, make_minimizer
from .gapset import Semigroup, from_gaps, from_generators, gaps
from .report import analyze
from .tableau import cell_diff, path_of, render_ascii, render_svg
from .tree import DEFAULT_SPLIT_DEPTH, enumerate_semigroups, iter_semigroups
from .verify import run_sweep, sweep_csv

EXIT_OK, EXIT_VIOLATIONS, EXIT_INPUT = 0, 1, 2


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _semigroup(args) -> Semigroup:
    if args.gens is not None and args.gaps is not None:
        raise SemigroupError("give either --gens or --gaps, not both")
    if args.gens is not None:
        return from_generators(args.gens)
    if args.gaps is not None:
        return from_gaps(args.gaps)
    raise SemigroupError("one of --gens or --gaps is required")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


ANALYZE_CSV_COLUMNS = [
    "generators", "gaps", "genus", "frobenius", "multiplicity", "symmetric", "gammas",
    "w_s", "w_k", "r", "r_k", "k_odd_tail", "lower_k", "upper_k", "lower_s", "upper_s",
    "within_k", "within_s", "attains_min_k", "attains_max_k",
]


def cmd_analyze(args) -> int:
    s = _semigroup(args)
    rep = analyze(s, args.gamma)
    if args.json:
        _emit(_dump(rep), args.out)
    elif args.csv:
        row = {k: rep.get(k) for k in ANALYZE_CSV_COLUMNS}
        row["generators"] = " ".join(map(str, rep["semigroup"]["generators"]))
        row["gaps"] = " ".join(map(str, rep["semigroup"]["gaps"]))
        row["gammas"] = " ".join(map(str, rep["gammas"]))
        row.update(rep["bounds"] or {})
        row.update(rep["flags"] or {})
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=ANALYZE_CSV_COLUMNS, lineterminator="\n")
        w.writeheader()
        w.writerow({k: "" if row.get(k) is None else row[k] for k in ANALYZE_CSV_COLUMNS})
        _emit(buf.getvalue(), args.out)
    else:
        lines = [
            f"generators   {rep['semigroup']['generators']}",
            f"gaps         {rep['semigroup']['gaps']}",
            f"genus        {rep['genus']}   frobenius {rep['frobenius']}   "
            f"multiplicity {rep['multiplicity']}   symmetric {rep['symmetric']}",
            f"gammas       {rep['gammas']}",
            f"W_S {rep['w_s']}   W_K {rep['w_k']}   R {rep['r']}   R_K {rep['r_k']}   "
            f"k {rep['k_odd_tail']}",
        ]
        if rep["bounds"]:
            b, f = rep["bounds"], rep["flags"]
            lines.append(
                f"K bounds     [{b['lower_k']}, {b['upper_k']}]  within={f['within_k']}  "
                f"min={f['attains_min_k']}  max={f['attains_max_k']}"
            )
            lines.append(f"S bounds     [{b['lower_s']}, {b['upper_s']}]  within={f['within_s']}")
        for e in rep["errors"]:
            lines.append(f"error        {e}")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    cap = None
    if args.genus_span is not None:
        cap = {c: 2 * c + args.genus_span for c in range(args.gamma_max + 1)}
    result = run_sweep(
        args.gamma_max, args.genus_max, threads=args.threads, genus_cap=cap,
        collect_rows=bool(args.csv),
    )
    if args.csv:
        _emit(sweep_csv(result), args.out)
    elif args.json:
        _emit(_dump(result.to_dict()), args.out)
    else:
        out = []
        for rec in result.records:
            if rec["vacuous"]:
                out.append(f"gamma={rec['gamma']:<2} g={rec['genus']:<3} vacuous")
                continue
            b = rec["bounds"]
            span = f"[{b['lower_k']}, {b['upper_k']}]" if b else "-"
            out.append(
                f"gamma={rec['gamma']:<2} g={rec['genus']:<3} n={rec['population']:<5} "
                f"W_K {rec['w_k_min']}..{rec['w_k_max']} bounds {span}"
            )
        out.append(
            f"population {result.to_dict()['population']}, "
            f"{len(result.violations)} violations, {len(result.anomalies)} anomalies, "
            f"{result.runtime:.2f}s"
        )
        for v in result.violations:
            out.append(f"VIOLATION {v['kind']} gamma={v['gamma']} g={v['genus']}: {v['detail']}")
        for a in result.anomalies:
            out.append(f"anomaly   {a['kind']} gamma={a['gamma']} g={a['genus']}: {a['detail']}")
        _emit("\n".join(out) + "\n", args.out)
    return EXIT_OK if result.ok else EXIT_VIOLATIONS


def cmd_count(args) -> int:
    stats = enumerate_semigroups(
        args.genus_max, workers=args.threads, split_depth=args.split_depth,
        gammas=tuple(args.gamma or ()),
    )
    if args.json:
        d = stats.to_dict()
        d["throughput"] = min(d["throughput"], 1e300)
        _emit(_dump({"schema": "semiweight.count/1", "genus_max": args.genus_max, **d}), args.out)
    else:
        lines = [f"{g:>3} {n}" for g, n in enumerate(stats.counts)]
        for c, row in sorted(stats.gamma_counts.items()):
            lines.append(f"gamma={c}: {row}")
        lines.append(
            f"total {stats.nodes} in {stats.wall_time:.2f}s "
            f"({stats.throughput:,.0f} semigroups/s, {stats.workers} workers, {stats.tasks} tasks)"
        )
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_render(args) -> int:
    s = _semigroup(args)
    t = path_of(s)
    diff = None
    if args.diff_min:
        gamma = args.gamma
        if gamma is None:
            found = detect_gammas(s, s.genus)
            if len(found) != 1:
                raise SemigroupError(f"--diff-min needs --gamma (certified gammas: {found})")
            gamma = found[0]
        diff = path_of(make_minimizer(gamma, s.genus))
    if args.format == "svg":
        text = render_svg(t, args.mode, diff)
    else:
        text = render_ascii(t, args.mode, diff)
    _emit(text, args.out)
    if diff is not None:
        d = cell_diff(t, diff, args.mode)
        print(f"red cells: {d.only_in_first} (cells only in the minimizer: {d.only_in_second})",
              file=sys.stderr)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    lo = args.genus if args.genus is not None else 0
    hi = args.genus if args.genus is not None else args.genus_max
    if hi is None:
        raise SemigroupError("one of --genus or --genus-max is required")
    rows = (s for s in iter_semigroups(hi, gamma=args.gamma) if s.genus >= lo)
    stream = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        if args.csv:
            w = csv.writer(stream, lineterminator="\n")
            w.writerow(["genus", "frobenius", "multiplicity", "gaps"])
            for s in rows:
                w.writerow([s.genus, s.frobenius, s.multiplicity, " ".join(map(str, gaps(s)))])
        else:
            for s in rows:
                stream.write(" ".join(map(str, gaps(s))) + "\n")
    finally:
        if args.out:
            stream.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="semiweight",
        description="Weights of numerical semigroups and gamma-hyperelliptic bound checks.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add_input(sp):
        sp.add_argument("--gens", type=_int_list, help="generators, e.g. 4,14,29")
        sp.add_argument("--gaps", type=_int_list, help="gap set, e.g. 1,3,5,7,9")
        sp.add_argument("--gamma", type=int)

    def add_out(sp, formats=("json", "csv")):
        for f in formats:
            sp.add_argument(f"--{f}", action="store_true", help=f"{f.upper()} output")
        sp.add_argument("--out", help="write to this file instead of stdout")

    a = sub.add_parser("analyze", help="invariants of one semigroup")
    add_input(a)
    add_out(a)
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="bound-verification campaign")
    v.add_argument("--gamma-max", type=int, required=True)
    v.add_argument("--genus-max", type=int, required=True)
    v.add_argument("--genus-span", type=int, help="cap genus at 2*gamma + SPAN per gamma")
    v.add_argument("--threads", type=int, default=1)
    add_out(v)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("count", help="per-genus counts from the semigroup tree")
    c.add_argument("--genus-max", type=int, required=True)
    c.add_argument("--threads", type=int, default=1)
    c.add_argument("--split-depth", type=int, default=DEFAULT_SPLIT_DEPTH)
    c.add_argument("--gamma", type=int, action="append", help="also count gamma-hyperelliptic (repeatable)")
    add_out(c, ("json",))
    c.set_defaults(func=cmd_count)

    r = sub.add_parser("render", help="draw the tableau of a semigroup")
    add_input(r)
    r.add_argument("--mode", choices=["S", "K"], default="S")
    r.add_argument("--diff-min", action="store_true", help="paint cells missing from the staircase minimizer red")
    r.add_argument("--format", choices=["ascii", "svg"], default="ascii")
    r.add_argument("--out")
    r.set_defaults(func=cmd_render)

    e = sub.add_parser("enumerate", help="stream gap sets")
    e.add_argument("--genus", type=int, help="exact genus")
    e.add_argument("--genus-max", type=int)
    e.add_argument("--gamma", type=int, help="only gamma-hyperelliptic semigroups")
    add_out(e, ("csv",))
    e.set_defaults(func=cmd_enumerate)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SemigroupError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
