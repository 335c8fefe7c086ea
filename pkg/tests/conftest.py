"""Shared fixtures.

Everything expensive is session scoped: the rational table banks are built
lazily per family and reused by the unit tests and the acceptance gate, and
the symbolic tables (slow for the six-vertex three-armed quiver) are built
exactly once.
"""

import random
from fractions import Fraction

import pytest

from affinefrieze import FriezeTable, a_type_sequence, build_affine_quiver


def rational_seed(rng, n, lo=1, hi=50):
    return [Fraction(rng.randint(lo, hi), rng.randint(lo, hi))
            for _ in range(n)]


class Bank:
    """Lazily built, cached banks of random-seed frieze tables and cycle
    sequences.  Tables are shared between tests; they only ever grow."""

    def __init__(self):
        self._tables = {}
        self._quivers = {}
        self._seqs = {}

    def quiver(self, family, **kw):
        key = (family, tuple(sorted(kw.items())))
        if key not in self._quivers:
            self._quivers[key] = build_affine_quiver(family, **kw)
        return self._quivers[key]

    def tables(self, family, count=20, rng_seed=12001, **kw):
        key = (family, tuple(sorted(kw.items())), count, rng_seed)
        if key not in self._tables:
            q = self.quiver(family, **kw)
            rng = random.Random(rng_seed)
            self._tables[key] = [
                FriezeTable(q, x0=rational_seed(rng, q.n))
                for _ in range(count)]
        return self._tables[key]

    def unit_table(self, family, **kw):
        key = (family, tuple(sorted(kw.items())), "unit")
        if key not in self._tables:
            q = self.quiver(family, **kw)
            self._tables[key] = [FriezeTable(q, x0=[Fraction(1)] * q.n)]
        return self._tables[key][0]

    def a_seqs(self, p, q, count=20, rng_seed=12001):
        key = (p, q, count, rng_seed)
        if key not in self._seqs:
            m = p * q  # generous upper bound for lcm
            depth = 6 * m + 2 * (p + q) + 24
            rng = random.Random(rng_seed)
            self._seqs[key] = [
                a_type_sequence(p, q, rational_seed(rng, p + q), depth)
                for _ in range(count)]
        return self._seqs[key]


@pytest.fixture(scope="session")
def bank():
    return Bank()


@pytest.fixture(scope="session")
def symbolic_d4():
    tb = FriezeTable(build_affine_quiver("D", N=4))
    tb.extend(8)
    tb.extend_source_tips()
    return tb


@pytest.fixture(scope="session")
def symbolic_d5():
    tb = FriezeTable(build_affine_quiver("D", N=5))
    tb.extend(6)
    tb.extend_source_tips()
    return tb


@pytest.fixture(scope="session")
def symbolic_e6():
    # several minutes of exact Laurent division; shared by the periodicity
    # criterion and the Laurent-phenomenon regression
    tb = FriezeTable(build_affine_quiver("E6"))
    tb.extend(6)
    tb.extend_source_tips()
    return tb
