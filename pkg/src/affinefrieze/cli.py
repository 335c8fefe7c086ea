"""Command line front end.

Subcommands:
  verify   run the exact check battery for one family (or the whole sweep)
  tables   print the summary tables of gaps, periods and recurrence offsets
  frieze   print a frieze table from the all-ones seed
  reduce   print the reduced system data and a short reduced orbit

Exit status is 0 when no check FAILs; INCONCLUSIVE and EVIDENCE never flip
the exit status.
"""

import argparse
import csv
import io
import json
import os
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .exact import DivisionNotExact, SymbolicBudgetExceeded
from .frieze import FriezeTable, a_type_sequence
from .quiver import build_affine_quiver
from . import relations as rel
from . import reduction as red


SEED_NUM_RANGE = (1, 50)

# the smallest table depth each verify bundle can be run at; --n-max below
# this is refused rather than silently deepened
MIN_DEPTH = {"D": lambda N: 6 * (N - 2) + 16,
             "E6": lambda _: 40, "E7": lambda _: 60, "E8": lambda _: 135}

SYMBOLIC_DEPTH = {("D", 4): 8, ("D", 5): 6, ("E6", None): 6}


@dataclass
class RunConfig:
    family: str
    N: int = None
    p: int = None
    q: int = None
    mode: str = "rational"
    seeds: int = 20
    n_max: int = None
    checks: str = None
    rng_seed: int = 20260816

    def validate(self):
        assert self.mode in ("rational", "symbolic")
        if self.family == "D":
            if self.N is None or self.N < 4:
                raise SystemExit("family D needs --N of at least 4")
        elif self.family == "A":
            if not self.p or not self.q:
                raise SystemExit("family A needs --p and --q, both positive")
        elif self.family not in ("E6", "E7", "E8"):
            raise SystemExit(f"unknown family {self.family!r}")
        if self.n_max is not None and self.family != "A":
            floor = MIN_DEPTH[self.family](self.N)
            if self.mode == "rational" and self.n_max < floor:
                raise SystemExit(
                    f"--n-max {self.n_max} is below the minimal depth "
                    f"{floor} the {self.family} checks need")
        return self

    def wanted(self, check_id):
        if not self.checks:
            return True
        return any(tok.strip() and tok.strip() in check_id
                   for tok in self.checks.split(","))


def random_rational_seed(rng, n):
    lo, hi = SEED_NUM_RANGE
    return [Fraction(rng.randint(lo, hi), rng.randint(lo, hi))
            for _ in range(n)]


def build_tables(quiver, count, rng_seed):
    rng = random.Random(rng_seed)
    return [FriezeTable(quiver, x0=random_rational_seed(rng, quiver.n))
            for _ in range(count)]


def _reduced_points(rng, dim, count):
    return [random_rational_seed(rng, dim) for _ in range(count)]


def run_verify(cfg):
    """All checks for one configured family, as a list of CheckReports."""
    cfg.validate()
    if cfg.family == "A":
        return _verify_a(cfg)
    if cfg.mode == "symbolic":
        return _verify_symbolic(cfg)
    quiver = build_affine_quiver(cfg.family, N=cfg.N, p=cfg.p, q=cfg.q)
    tables = build_tables(quiver, cfg.seeds, cfg.rng_seed)
    out = []

    for name, qd in rel.quantities_for(quiver).items():
        if cfg.wanted(f"period/{rel.family_key(quiver)}/{name}"):
            out.append(rel.check_period(quiver, qd, tables))
    if cfg.wanted(f"trace/{rel.family_key(quiver)}"):
        out.append(rel.trace_invariant(quiver, tables)[1])
    if cfg.wanted(f"linear/{rel.family_key(quiver)}"):
        out.append(rel.check_constant_linear_relation(quiver, tables))
    for spec in rel.recurrence_specs(quiver):
        cid = f"recurrence/{rel.family_key(quiver)}/{spec['name']}"
        if cfg.wanted(cid):
            out.append(rel.check_recurrence(quiver, spec, tables))
    if cfg.wanted(f"identity/{rel.family_key(quiver)}"):
        out.extend(rel.check_auxiliary_identities(quiver, tables))
    if cfg.wanted(f"kernel/{rel.family_key(quiver)}"):
        out.extend(rel.check_kernel_matrices(quiver, tables))
    for spec in rel.conjecture_specs(quiver):
        cid = f"probe/{rel.family_key(quiver)}/{spec['name']}"
        if cfg.wanted(cid):
            out.append(rel.probe_conjecture(quiver, spec, tables))

    rng = random.Random(cfg.rng_seed + 1)
    try:
        rs, block_rep = red.block_identity_check(quiver)
    except red.ReductionUnsupported:
        rs, block_rep = None, None
    if rs is not None and cfg.wanted(f"reduction/{rel.family_key(quiver)}"):
        out.append(block_rep)
        out.append(red.check_printed_C(rs))
        pts = _reduced_points(rng, rs.dim, max(3, cfg.seeds // 4))
        fpts = _reduced_points(rng, quiver.n, max(3, cfg.seeds // 4))
        out.append(red.bracket_axioms_check(rs, pts[:2]))
        out.extend(red.printed_bracket_checks(rs, pts[:3]))
        out.append(red.reduced_map_poisson_check(rs, pts[:2]))
        out.append(red.commuting_square_check(rs, fpts))
        out.append(red.lift_project_check(rs, pts))
        out.append(red.integrability_battery(rs, pts[:3]))
        sc = red.scaling_invariance_check(rs, fpts[:3])
        if sc is not None:
            out.append(sc)
    if (cfg.wanted(f"presymplectic/{rel.family_key(quiver)}")
            and (cfg.family == "E6"
                 or (cfg.family == "D" and cfg.N == 4))):
        pts = _reduced_points(rng, quiver.n, max(3, cfg.seeds // 4))
        out.append(red.presymplectic_check(quiver, pts))
    return [r for r in out if r is not None]


def _verify_a(cfg):
    p, q = cfg.p, cfg.q
    m = (p * q) // gcd(p, q)
    depth = cfg.n_max or (4 * m + 3 * (p + q) + 20)
    floor = 2 * (2 * m) + m + q + 2
    if depth < floor:
        raise SystemExit(f"--n-max {depth} is below the minimal depth {floor} "
                         f"the A({p},{q}) checks need")
    rng = random.Random(cfg.rng_seed)
    seqs = [a_type_sequence(p, q, random_rational_seed(rng, p + q), depth)
            for _ in range(cfg.seeds)]
    fam = f"A({p},{q})"
    out = []
    for name, qd in rel.a_quantities(p, q).items():
        if cfg.wanted(f"period/{fam}/{name}"):
            out.append(rel.a_check_period(p, q, qd, seqs))
    if cfg.wanted(f"trace/{fam}"):
        out.append(rel.a_check_transfer(p, q, seqs))
    if cfg.wanted(f"linear/{fam}"):
        out.append(rel.a_check_linear_relation(p, q, seqs))
    if cfg.wanted(f"recurrence/{fam}"):
        out.append(rel.a_check_recurrence(p, q, seqs))
    return out


def _verify_symbolic(cfg):
    key = (cfg.family, cfg.N if cfg.family == "D" else None)
    if key not in SYMBOLIC_DEPTH:
        raise SystemExit(
            "symbolic verification stays within budget only for the two "
            "smallest fork quivers (N=4, N=5) and the six-vertex three-armed "
            "one; run those, or use --mode rational")
    depth = SYMBOLIC_DEPTH[key]
    if cfg.n_max is not None:
        depth = max(depth, min(cfg.n_max, depth + 2))
    quiver = build_affine_quiver(cfg.family, N=cfg.N)
    tb = FriezeTable(quiver)
    fam = rel.family_key(quiver)
    out = []
    try:
        tb.extend(depth)
        tb.extend_source_tips()
    except (DivisionNotExact, SymbolicBudgetExceeded) as ex:
        return [rel.CheckReport(
            f"symbolic/{fam}", fam, "symbolic", 1, 0,
            rel.Verdict.INCONCLUSIVE,
            f"{fam}: symbolic expansion stopped early ({ex})")]
    for name, qd in rel.quantities_for(quiver).items():
        if cfg.wanted(f"symperiod/{fam}/{name}"):
            out.append(rel.symbolic_period_check(tb, qd))
    pos = all(v.all_coefficients_positive() for v in tb.column(depth))
    out.append(rel.CheckReport(
        f"symbolic/{fam}/expansion", fam, "symbolic", 1, depth,
        rel.Verdict.PASS,
        f"{fam}: every division along {depth} symbolic steps was exact; "
        f"depth-{depth} numerator coefficients all positive: {pos}"))
    return out


# ---------------------------------------------------------------------------
# summary tables

def gap_table():
    return {
        "title": "linear relation gaps",
        "columns": ["family", "gap"],
        "rows": [
            ["A(p,q)", "lcm(p,q)"],
            ["D, N even", "N-2"],
            ["D, N odd", "2N-4"],
            ["E6", "6"],
            ["E7", "12"],
            ["E8", "30"],
        ],
    }


def period_table():
    return {
        "title": "periodic quantities",
        "columns": ["family", "quantity", "period"],
        "rows": [
            ["A(p,q)", "fwd", "p"],
            ["A(p,q)", "rev", "q"],
            ["D", "tips", "N-2"],
            ["D", "ratio_left / ratio_right", "2"],
            ["E6", "span4 / span4_rev", "3"],
            ["E6", "gap3", "2"],
            ["E7", "span6 / span6_rev", "4"],
            ["E7", "gap4", "3"],
            ["E7", "cross7", "2"],
            ["E8", "gap6", "5"],
            ["E8", "gap10", "3"],
            ["E8", "gap15", "2?"],
        ],
    }


def recurrence_table():
    return {
        "title": "product recurrence offsets",
        "columns": ["family", "offsets (a, p)"],
        "rows": [
            ["A(p,q)", "(p, q)"],
            ["D, N even", "(1, N-2)"],
            ["D, N odd", "(1, 2N-4)"],
            ["E6", "(3, 2)"],
            ["E7", "(4, 3)"],
            ["E8", "(6, 5), (10, 3), (15?, 2?)"],
        ],
    }


# ---------------------------------------------------------------------------
# rendering

def _open_output(path):
    if path is None:
        return sys.stdout, False
    base = os.environ.get("AFFINEFRIEZE_OUTPUT_DIR")
    if base and not os.path.isabs(path):
        os.makedirs(base, exist_ok=True)
        path = os.path.join(base, path)
    return open(path, "w"), True


def render_reports(reports, fmt, fh):
    if fmt == "json":
        fh.write(rel.reports_json(reports) + "\n")
        return
    if fmt == "csv":
        w = csv.writer(fh)
        w.writerow(["id", "family", "mode", "trials", "n_window",
                    "verdict", "citation", "witness"])
        for r in reports:
            d = r.to_dict()
            w.writerow([d["id"], d["family"], d["mode"], d["trials"],
                        d["n_window"], d["verdict"], d["citation"],
                        json.dumps(d.get("witness")) if "witness" in d else ""])
        return
    for r in reports:
        d = r.to_dict()
        line = (f"{d['verdict']:12s} {d['id']}  "
                f"(trials={d['trials']}, window={d['n_window']})")
        if "witness" in d:
            line += f"  witness={json.dumps(d['witness'])}"
        fh.write(line + "\n")
        fh.write(f"             {d['citation']}\n")


def render_tables(tabs, fmt, fh):
    if fmt == "json":
        fh.write(json.dumps(tabs, sort_keys=True, separators=(",", ":"))
                 + "\n")
        return
    if fmt == "csv":
        w = csv.writer(fh)
        for tab in tabs:
            w.writerow([tab["title"]])
            w.writerow(tab["columns"])
            for row in tab["rows"]:
                w.writerow(row)
        return
    for tab in tabs:
        fh.write(tab["title"] + "\n")
        widths = [max(len(str(r[i])) for r in [tab["columns"]] + tab["rows"])
                  for i in range(len(tab["columns"]))]
        header = "  ".join(c.ljust(w) for c, w in zip(tab["columns"], widths))
        fh.write(header + "\n")
        fh.write("-" * len(header) + "\n")
        for row in tab["rows"]:
            fh.write("  ".join(str(c).ljust(w)
                               for c, w in zip(row, widths)) + "\n")
        fh.write("\n")


def render_frieze(quiver, table, depth, fmt, fh):
    labels = list(quiver.labels)
    cols = [[str(table.value(v, n)) for v in range(quiver.n)]
            for n in range(depth + 1)]
    if fmt == "json":
        fh.write(json.dumps(
            {"family": quiver.family, "params": quiver.params,
             "labels": labels, "columns": cols},
            sort_keys=True, separators=(",", ":")) + "\n")
        return
    if fmt == "csv":
        w = csv.writer(fh)
        w.writerow(["vertex"] + [f"n={n}" for n in range(depth + 1)])
        for i, lab in enumerate(labels):
            w.writerow([lab] + [cols[n][i] for n in range(depth + 1)])
        return
    widths = [max(len(cols[n][i]) for i in range(quiver.n))
              for n in range(depth + 1)]
    lw = max(len(l) for l in labels)
    for i, lab in enumerate(labels):
        cells = "  ".join(cols[n][i].rjust(widths[n])
                          for n in range(depth + 1))
        fh.write(f"{lab.ljust(lw)}  {cells}\n")


def render_reduce(rs, orbit, fmt, fh):
    data = {
        "family": rel.family_key(rs.quiver),
        "rank": rs.m,
        "coordinates": rs.names,
        "image_basis": rs.image,
        "kernel_basis": rs.kernel,
        "two_form_block": [[str(v) for v in row] for row in rs.Bhat],
        "poisson_matrix": [[str(v) for v in row] for row in rs.C],
        "orbit": [[str(v) for v in y] for y in orbit],
    }
    if fmt == "json":
        fh.write(json.dumps(data, sort_keys=True, separators=(",", ":"))
                 + "\n")
        return
    if fmt == "csv":
        w = csv.writer(fh)
        w.writerow(["coordinate"] + [f"step {i}" for i in range(len(orbit))])
        for i, name in enumerate(rs.names):
            w.writerow([name] + [orbit[k][i] for k in range(len(orbit))])
        return
    fh.write(f"family {data['family']}: {rs.m} commuting integrals on "
             f"{rs.dim} reduced coordinates\n")
    fh.write("coordinates: " + ", ".join(rs.names) + "\n")
    fh.write("kernel basis rows: " + str(rs.kernel) + "\n")
    fh.write("two-form block:\n")
    for row in rs.Bhat:
        fh.write("  [" + ", ".join(str(v) for v in row) + "]\n")
    fh.write("poisson matrix:\n")
    for row in rs.C:
        fh.write("  [" + ", ".join(str(v) for v in row) + "]\n")
    fh.write("orbit of the all-ones point:\n")
    for k, y in enumerate(orbit):
        fh.write(f"  step {k}: " + ", ".join(str(v) for v in y) + "\n")


# ---------------------------------------------------------------------------
# argument plumbing

def _add_family_flags(sp):
    sp.add_argument("--family", choices=["A", "D", "E6", "E7", "E8"])
    sp.add_argument("--N", type=int, help="fork family size (family D)")
    sp.add_argument("--p", type=int, help="cycle arrows one way (family A)")
    sp.add_argument("--q", type=int, help="cycle arrows the other way")


def make_parser():
    ap = argparse.ArgumentParser(
        prog="affinefrieze",
        description="exact verification of frieze patterns of affine quivers")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the exact check battery")
    _add_family_flags(v)
    v.add_argument("--mode", choices=["rational", "symbolic"],
                   default="rational")
    v.add_argument("--seeds", type=int, default=20,
                   help="number of random rational seeds")
    v.add_argument("--n-max", type=int, dest="n_max",
                   help="table depth cap; refused when too small")
    v.add_argument("--checks", help="comma separated id substrings to keep")
    v.add_argument("--output", help="write here instead of stdout")
    v.add_argument("--format", choices=["json", "csv", "text"],
                   default="text")

    t = sub.add_parser("tables", help="print the three summary tables")
    t.add_argument("--output")
    t.add_argument("--format", choices=["json", "csv", "text"],
                   default="text")

    f = sub.add_parser("frieze", help="print a frieze table (all-ones seed)")
    _add_family_flags(f)
    f.add_argument("--n-max", type=int, dest="n_max", default=8)
    f.add_argument("--output")
    f.add_argument("--format", choices=["json", "csv", "text"],
                   default="text")

    r = sub.add_parser("reduce", help="print the reduced system")
    _add_family_flags(r)
    r.add_argument("--n-max", type=int, dest="n_max", default=4,
                   help="reduced orbit length")
    r.add_argument("--output")
    r.add_argument("--format", choices=["json", "csv", "text"],
                   default="text")
    return ap


DEFAULT_SWEEP = [("D", dict(N=4)), ("D", dict(N=5)), ("D", dict(N=6)),
                 ("D", dict(N=7)), ("E6", {}), ("E7", {}), ("E8", {}),
                 ("A", dict(p=1, q=2)), ("A", dict(p=2, q=2)),
                 ("A", dict(p=2, q=3))]


def main(argv=None):
    args = make_parser().parse_args(argv)
    if args.command == "tables":
        fh, close = _open_output(args.output)
        try:
            render_tables([gap_table(), period_table(), recurrence_table()],
                          args.format, fh)
        finally:
            if close:
                fh.close()
        return 0

    if args.command == "frieze":
        if not args.family:
            raise SystemExit("frieze needs --family")
        quiver = build_affine_quiver(args.family, N=args.N,
                                     p=args.p, q=args.q)
        tb = FriezeTable(quiver, x0=[Fraction(1)] * quiver.n)
        tb.extend(args.n_max)
        fh, close = _open_output(args.output)
        try:
            render_frieze(quiver, tb, args.n_max, args.format, fh)
        finally:
            if close:
                fh.close()
        return 0

    if args.command == "reduce":
        if not args.family:
            raise SystemExit("reduce needs --family")
        quiver = build_affine_quiver(args.family, N=args.N,
                                     p=args.p, q=args.q)
        try:
            rs = red.build_reduction(quiver)
        except red.ReductionUnsupported as ex:
            raise SystemExit(str(ex))
        orbit = red.reduced_orbit(rs, [Fraction(1)] * rs.dim, args.n_max)
        fh, close = _open_output(args.output)
        try:
            render_reduce(rs, orbit, args.format, fh)
        finally:
            if close:
                fh.close()
        return 0

    # verify
    reports = []
    if args.family:
        cfg = RunConfig(family=args.family, N=args.N, p=args.p, q=args.q,
                        mode=args.mode, seeds=args.seeds, n_max=args.n_max,
                        checks=args.checks)
        reports.extend(run_verify(cfg))
    else:
        for fam, kw in DEFAULT_SWEEP:
            cfg = RunConfig(family=fam, N=kw.get("N"), p=kw.get("p"),
                            q=kw.get("q"), mode=args.mode, seeds=args.seeds,
                            n_max=args.n_max, checks=args.checks)
            reports.extend(run_verify(cfg))
    fh, close = _open_output(args.output)
    try:
        render_reports(reports, args.format, fh)
    finally:
        if close:
            fh.close()
    return 1 if any(r.to_dict()["verdict"] == "FAIL" for r in reports) else 0


if __name__ == "__main__":
    sys.exit(main())
