"""Symplectic reduction, Poisson structure, first integrals.

Frozen reduced-orbit values come from independent straight evaluations of
the closed-form reduced steps from all-ones starts.
"""

import random
from fractions import Fraction

import pytest

from affinefrieze import build_affine_quiver
from affinefrieze import reduction as red
from affinefrieze.relations import Verdict
from affinefrieze.reduction import (
    mat_inv, mat_mul, mat_rank, mat_T, matrix_kernel,
)


REDUCIBLE = [("D", dict(N=5)), ("D", dict(N=6)), ("D", dict(N=7)),
             ("E6", {}), ("E7", {}), ("E8", {})]


def rand_pts(rng, dim, count, lo=1, hi=30):
    return [[Fraction(rng.randint(lo, hi), rng.randint(lo, hi))
             for _ in range(dim)] for _ in range(count)]


@pytest.fixture(scope="module")
def systems(bank):
    return {rel_key(fam, kw): red.build_reduction(bank.quiver(fam, **kw))
            for fam, kw in REDUCIBLE}


def rel_key(fam, kw):
    return fam + str(kw.get("N", ""))


def test_exact_linalgebra_helpers():
    rng = random.Random(7001)
    for _ in range(25):
        n = rng.randint(1, 5)
        A = [[Fraction(rng.randint(-9, 9), rng.randint(1, 5))
              for _ in range(n)] for _ in range(n)]
        import math
        try:
            Ai = mat_inv(A)
        except AssertionError:
            continue
        ident = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        assert mat_mul(A, Ai) == ident
        assert mat_rank(A) == n
        assert mat_T(mat_T(A)) == A
    # a matrix with a pinned kernel
    B = [[0, 1, -1], [-1, 0, 1], [1, -1, 0]]
    ker = matrix_kernel([[Fraction(v) for v in row] for row in B])
    assert len(ker) == 1
    for row in B:
        assert sum(r * k for r, k in zip(row, ker[0])) == 0


def test_build_reduction_shapes(systems, bank):
    want_m = {"D5": 2, "D6": 2, "D7": 3, "E6": 3, "E7": 3, "E8": 4}
    for key, rs in systems.items():
        assert rs.m == want_m[key], key
        assert rs.dim == 2 * rs.m
        assert len(rs.image) == 2 * rs.m
        assert len(rs.kernel) == rs.quiver.n - 2 * rs.m
        assert len(rs.names) == rs.dim
        # Bhat is skew and invertible
        assert all(rs.Bhat[i][j] == -rs.Bhat[j][i]
                   for i in range(rs.dim) for j in range(rs.dim))
        assert mat_rank([[Fraction(v) for v in row] for row in rs.Bhat]) == rs.dim


def test_unsupported_families(bank):
    with pytest.raises(red.ReductionUnsupported):
        red.build_reduction(bank.quiver("D", N=8))
    with pytest.raises(red.ReductionUnsupported):
        red.build_reduction(bank.quiver("A", p=2, q=2))
    with pytest.raises(red.ReductionUnsupported):
        red.build_reduction(bank.quiver("D", N=4))


def test_frozen_reduced_orbits(systems):
    d6 = red.reduced_orbit(systems["D6"], [Fraction(1)] * 4, 1)
    assert d6[1][0] == 45
    e6 = red.reduced_orbit(systems["E6"], [Fraction(1)] * 6, 1)
    assert e6[1][0] == 4
    assert e6[1][1] == 5


def test_projection_is_monomial_and_lift_sections_it(systems):
    rng = random.Random(7002)
    for key, rs in systems.items():
        for y0 in rand_pts(rng, rs.dim, 5):
            X = rs.lift(list(y0))
            assert len(X) == rs.quiver.n
            assert rs.proj(X) == list(y0), key


def test_printed_c_matrices(systems):
    for key, rs in systems.items():
        rep = red.check_printed_C(rs)
        assert rep.verdict == Verdict.PASS, key
    # the explicit shape for the even chain: two 2x2 rotation blocks
    C6 = systems["D6"].C
    lit, perm = red.printed_C(systems["D6"].quiver, systems["D6"].m)
    assert lit == [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]
    assert perm == [1, 0, 3, 2]
    P = [[1 if perm[i] == j else 0 for j in range(4)] for i in range(4)]
    assert mat_mul(mat_mul(P, C6), mat_T(P)) == lit


def test_block_identity_wrapper(bank):
    rs, rep = red.block_identity_check(bank.quiver("E7"))
    assert rs is not None
    assert rep.verdict == Verdict.PASS
    with pytest.raises(red.ReductionUnsupported):
        red.block_identity_check(bank.quiver("A", p=1, q=2))


def test_bracket_axioms(systems):
    rng = random.Random(7003)
    for key, rs in systems.items():
        rep = red.bracket_axioms_check(rs, rand_pts(rng, rs.dim, 2))
        assert rep.verdict == Verdict.PASS, key


def test_poisson_bracket_values(systems):
    # {y_i, y_j} = C_ij y_i y_j on coordinates, and brackets are derivations
    rs = systems["D5"]
    rng = random.Random(7004)
    for y0 in rand_pts(rng, rs.dim, 3):
        for i in range(rs.dim):
            for j in range(rs.dim):
                br, vi, vj = red.poisson_bracket(
                    rs.C, y0, lambda ys, i=i: ys[i], lambda ys, j=j: ys[j])
                assert br == rs.C[i][j] * y0[i] * y0[j]
                assert vi == y0[i] and vj == y0[j]


def test_printed_bracket_relations(systems):
    rng = random.Random(7005)
    for key, rs in systems.items():
        reports = red.printed_bracket_checks(rs, rand_pts(rng, rs.dim, 3))
        assert reports, key
        for rep in reports:
            assert rep.verdict == Verdict.PASS, (key, rep.id)


def test_reduced_step_is_poisson(systems):
    rng = random.Random(7006)
    for key, rs in systems.items():
        rep = red.reduced_map_poisson_check(rs, rand_pts(rng, rs.dim, 2))
        assert rep.verdict == Verdict.PASS, key


def test_commuting_square(systems):
    rng = random.Random(7007)
    for key, rs in systems.items():
        pts = rand_pts(rng, rs.quiver.n, 4)
        rep = red.commuting_square_check(rs, pts)
        assert rep.verdict == Verdict.PASS, key


def test_lift_project(systems):
    rng = random.Random(7008)
    for key, rs in systems.items():
        rep = red.lift_project_check(rs, rand_pts(rng, rs.dim, 4))
        assert rep.verdict == Verdict.PASS, key


def test_first_integral_counts(systems):
    for key, rs in systems.items():
        fns = red.first_integrals(rs)
        assert len(fns) == rs.m, key
        names = [n for n, _ in fns]
        assert len(set(names)) == rs.m


def test_integrability_battery(systems):
    rng = random.Random(7009)
    for key, rs in systems.items():
        pts = rand_pts(rng, rs.dim, 3)
        rep = red.integrability_battery(rs, pts)
        assert rep.verdict == Verdict.PASS, key


def test_battery_catches_a_broken_integral(systems, monkeypatch):
    # sanity that the battery is not vacuous: a non-invariant function fails
    rs = systems["D5"]
    rng = random.Random(7010)
    pts = rand_pts(rng, rs.dim, 2)
    real = red.first_integrals

    def fake(rs_):
        fns = real(rs_)
        return [(fns[0][0], lambda ys: ys[0]), fns[1]]
    monkeypatch.setattr(red, "first_integrals", fake)
    rep = red.integrability_battery(rs, pts)
    assert rep.verdict == Verdict.FAIL


def test_presymplectic(bank):
    rng = random.Random(7011)
    for fam, kw in [("D", dict(N=4)), ("E6", {})]:
        q = bank.quiver(fam, **kw)
        rep = red.presymplectic_check(q, rand_pts(rng, q.n, 3))
        assert rep.verdict == Verdict.PASS, fam


def test_scaling_invariance(systems):
    rng = random.Random(7012)
    for key in ("D6", "E7"):
        rs = systems[key]
        rep = red.scaling_invariance_check(rs, rand_pts(rng, rs.quiver.n, 2))
        assert rep is not None and rep.verdict == Verdict.PASS, key
    assert red.scaling_invariance_check(
        systems["D5"], rand_pts(rng, systems["D5"].quiver.n, 1)) is None


def test_reduced_orbit_against_lifted_frieze(systems):
    # the closed-form step iterated k times equals project(frieze^k(lift))
    from affinefrieze.frieze import frieze_sequence
    rng = random.Random(7013)
    for key, rs in systems.items():
        y0 = rand_pts(rng, rs.dim, 1)[0]
        orbit = red.reduced_orbit(rs, y0, 3)
        X = rs.lift(list(y0))
        cols = frieze_sequence(rs.quiver, X, 3)
        for k in range(4):
            assert rs.proj(cols[k]) == orbit[k], (key, k)
