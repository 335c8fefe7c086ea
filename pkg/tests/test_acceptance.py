"""Acceptance gate: twelve exactness criteria, one test per criterion.

Each test prints one CRITERION line (visible with -s, and in the -v listing
through the test name) and fails loudly with the offending check ids.
Everything here is an exact equality over rationals or Laurent polynomials;
there are no tolerances anywhere.
"""

import random
import time
from fractions import Fraction

from affinefrieze import relations as rel
from affinefrieze import reduction as red
from affinefrieze.relations import Verdict


D_RANGE = [4, 5, 6, 7, 8, 9]
E_FAMILIES = ["E6", "E7", "E8"]
A_PAIRS = [(1, 1), (1, 2), (2, 2), (1, 3), (2, 3), (3, 3),
           (1, 4), (2, 4), (1, 5)]
REDUCIBLE = [("D", dict(N=5)), ("D", dict(N=6)), ("D", dict(N=7)),
             ("E6", {}), ("E7", {}), ("E8", {})]

SEEDS = 20


def every_family(bank):
    for N in D_RANGE:
        yield bank.quiver("D", N=N), bank.tables("D", count=SEEDS, N=N)
    for fam in E_FAMILIES:
        yield bank.quiver(fam), bank.tables(fam, count=SEEDS)


def verdict_line(num, desc, bad):
    status = "FAIL" if bad else "PASS"
    line = f"CRITERION {num:2d}: {status} - {desc}"
    print(line)
    assert not bad, f"{line}; offenders: {bad}"


def collect(bad, rep, want=Verdict.PASS):
    if rep.verdict != want:
        bad.append(f"{rep.id}={rep.to_dict()['verdict']}")
    return rep


def rand_pts(rng, dim, count):
    return [[Fraction(rng.randint(1, 30), rng.randint(1, 30))
             for _ in range(dim)] for _ in range(count)]


def test_criterion_01_periodicity(bank, symbolic_d4, symbolic_d5,
                                  symbolic_e6):
    bad = []
    for q, tabs in every_family(bank):
        for name, qd in rel.quantities_for(q).items():
            if qd.conjectured_period:
                continue        # the unproven period is criterion 10's job
            rep = collect(bad, rel.check_period(q, qd, tabs, periods=3))
            assert rep.trials == SEEDS and rep.n_window == 3 * qd.period
    for p, qq in A_PAIRS:
        seqs = bank.a_seqs(p, qq, count=SEEDS)
        for name, qd in rel.a_quantities(p, qq).items():
            collect(bad, rel.a_check_period(p, qq, qd, seqs, periods=3))
    # symbolic runs, as deep as the term budget allows
    for tb in (symbolic_d4, symbolic_d5, symbolic_e6):
        for name, qd in rel.quantities_for(tb.quiver).items():
            rep = rel.symbolic_period_check(tb, qd)
            if rep.verdict == Verdict.FAIL:
                bad.append(f"{rep.id}=FAIL")
    # the smallest fork family must verify outright, not just avoid failing
    for name, qd in rel.quantities_for(symbolic_d4.quiver).items():
        collect(bad, rel.symbolic_period_check(symbolic_d4, qd))
    verdict_line(1, "non-conjectural periods exact, 20 seeds x 3 periods, "
                 "all families, plus symbolic windows", bad)


def test_criterion_02_linear_relations(bank):
    bad = []
    elapsed_e8 = None
    for q, tabs in every_family(bank):
        window = 30 if q.family == "E8" else 6   # depth 134 on the big tree
        t0 = time.monotonic()
        collect(bad, rel.check_constant_linear_relation(q, tabs,
                                                        window=window))
        if q.family == "E8":
            elapsed_e8 = time.monotonic() - t0
            assert tabs[0].depth >= 130
    for p, qq in A_PAIRS:
        collect(bad, rel.a_check_linear_relation(p, qq,
                                                 bank.a_seqs(p, qq, SEEDS)))
    assert elapsed_e8 is not None and elapsed_e8 < 60.0, elapsed_e8
    verdict_line(2, "three-term linear relation at every extending vertex, "
                 "one shared constant per seed (deep table under a minute)",
                 bad)


def test_criterion_03_trace_machinery(bank):
    bad = []
    for q, tabs in every_family(bank):
        K, rep = rel.trace_invariant(q, tabs)
        collect(bad, rep)
    for p, qq in A_PAIRS:
        collect(bad, rel.a_check_transfer(p, qq, bank.a_seqs(p, qq, SEEDS)))
    # the seven-vertex cross identity, restated here on one random seed
    q6 = bank.quiver("E6")
    tb = bank.tables("E6", count=SEEDS)[0]
    K, _ = rel.trace_invariant(q6, [tb])
    V = rel.table_reader(tb)
    gap3 = rel.quantities_for(q6)["gap3"]
    if K != gap3.value(V, 3) * gap3.value(V, 4) - 2:
        bad.append("trace/E6/cross-identity")
    verdict_line(3, "unit monodromy determinant, shift-invariant trace, "
                 "and the middle-gap product identity", bad)


def test_criterion_04_recurrences(bank):
    bad = []
    seen_a = {}
    for q, tabs in every_family(bank):
        fam = rel.family_key(q)
        specs = rel.recurrence_specs(q)
        seen_a[fam] = sorted(s["a"] for s in specs)
        if q.family == "D" and q.params["N"] % 2 == 1:
            assert any(s["twist"] for s in specs), fam   # squared-ratio twist
        for spec in specs:
            collect(bad, rel.check_recurrence(q, spec, tabs))
    for N in D_RANGE:
        assert seen_a[f"D{N}"][0] == 1
    assert seen_a["E6"] == [3] and seen_a["E7"] == [4]
    assert seen_a["E8"] == [6, 10]
    for p, qq in A_PAIRS:
        collect(bad, rel.a_check_recurrence(p, qq, bank.a_seqs(p, qq, SEEDS)))
    verdict_line(4, "product-gap recurrences with the advertised offsets, "
                 "including the twisted short-gap form on odd forks", bad)


def test_criterion_05_auxiliary_identities(bank):
    bad = []
    for q, tabs in every_family(bank):
        for rep in rel.check_auxiliary_identities(q, tabs[:6]):
            collect(bad, rep)
    verdict_line(5, "closed-form identities (corner forms, cubic-type "
                 "relation, forward/backward shift, wide product)", bad)


def test_criterion_06_reduction_suite(bank):
    bad = []
    rng = random.Random(9106)
    for fam, kw in REDUCIBLE:
        q = bank.quiver(fam, **kw)
        rs, rep = red.block_identity_check(q)
        collect(bad, rep)
        if rs is None:
            continue
        collect(bad, red.check_printed_C(rs))
        collect(bad, red.commuting_square_check(rs, rand_pts(rng, q.n, 20)))
    verdict_line(6, "two-form block identity, printed inverse matrices, and "
                 "the commuting square at 20 points per family", bad)


def test_criterion_07_poisson_suite(bank):
    bad = []
    rng = random.Random(9107)
    for fam, kw in REDUCIBLE:
        rs = red.build_reduction(bank.quiver(fam, **kw))
        pts = rand_pts(rng, rs.dim, 20)
        for rep in red.printed_bracket_checks(rs, pts):
            collect(bad, rep)
        collect(bad, red.bracket_axioms_check(rs, pts))
    verdict_line(7, "every printed bracket relation at 20 points, plus "
                 "antisymmetry, Leibniz and Jacobi", bad)


def test_criterion_08_integrability_battery(bank):
    bad = []
    rng = random.Random(9108)
    for fam, kw in REDUCIBLE:
        rs = red.build_reduction(bank.quiver(fam, **kw))
        pts = rand_pts(rng, rs.dim, 10)
        collect(bad, red.integrability_battery(rs, pts))
        collect(bad, red.reduced_map_poisson_check(rs, pts[:5]))
        if (fam, kw.get("N")) in (("E6", None), ("E7", None)):
            assert rs.m == 3
        if fam == "E8":
            assert rs.m == 4 and rs.dim == 8
    verdict_line(8, "invariance, involution and jacobian rank m at 10 points "
                 "per family, and the reduced step preserves the bracket",
                 bad)


def test_criterion_09_presymplectic(bank):
    bad = []
    rng = random.Random(9109)
    for fam, kw in [("D", dict(N=4)), ("E6", {})]:
        q = bank.quiver(fam, **kw)
        collect(bad, red.presymplectic_check(q, rand_pts(rng, q.n, 10)))
    verdict_line(9, "the full map pulls the log two-form back to itself at "
                 "10 points", bad)


def test_criterion_10_conjecture_probes(bank):
    bad = []
    t8 = bank.tables("E8", count=50, rng_seed=9110)
    q8 = bank.quiver("E8")
    names = set()
    for spec in rel.conjecture_specs(q8):
        rep = collect(bad, rel.probe_conjecture(q8, spec, t8, window=20),
                      want=Verdict.EVIDENCE)
        assert rep.trials == 50 and rep.n_window == 20
        names.add(spec["name"])
    t7 = bank.tables("E7", count=50, rng_seed=9110)
    q7 = bank.quiver("E7")
    for spec in rel.conjecture_specs(q7):
        rep = collect(bad, rel.probe_conjecture(q7, spec, t7, window=20),
                      want=Verdict.EVIDENCE)
        assert rep.trials == 50 and rep.n_window == 20
        names.add(spec["name"])
    assert names == {"gap15_period2", "products_gap15", "cross7_closed_form"}
    verdict_line(10, "unproven claims hold on 50 seeds x window 20 and are "
                 "reported as evidence, never as proof", bad)


def test_criterion_11_lift_oracle_equivalence(bank):
    bad = []
    rng = random.Random(9111)
    for fam, kw in REDUCIBLE:
        rs = red.build_reduction(bank.quiver(fam, **kw))
        rep = collect(bad, red.lift_project_check(rs, rand_pts(rng, rs.dim,
                                                               50)))
        assert rep.trials == 50
    verdict_line(11, "lift, one full pass, project equals the closed-form "
                 "reduced step at 50 points per family", bad)


def test_criterion_12_laurent_regression(symbolic_d4, symbolic_d5,
                                         symbolic_e6):
    bad = []
    positivity = {}
    for tb in (symbolic_d4, symbolic_d5, symbolic_e6):
        fam = rel.family_key(tb.quiver)
        # reaching this point means every division along the way was exact;
        # a non-Laurent step would have raised during the session fixture
        if tb.depth < 6:
            bad.append(f"{fam}: depth {tb.depth} < 6")
            continue
        allpos = True
        for n in range(tb.depth + 1):
            for v in tb.column(n):
                if v.is_zero():
                    bad.append(f"{fam}: zero entry at column {n}")
                allpos = allpos and v.all_coefficients_positive()
        positivity[fam] = allpos
    # positivity is outside the verified claims: reported, never asserted
    print(f"positivity survey (informational): {positivity}")
    verdict_line(12, "symbolic friezes to depth 6 divide exactly every time "
                 "(coefficient positivity reported above)", bad)
