"""Frieze dynamics: iterate one full mutation pass over a quiver's canonical
vertex order and collect the cluster variables it produces.

One pass sends the exchange matrix back to itself (checked every time), so the
pass acts as a map on the variables alone.  Columns are indexed by pass count
n = 0, 1, 2, ...; entry (v, n) is the variable at vertex v after n passes.
"""

from fractions import Fraction

from .exact import (LaurentPoly, DualRat, DEFAULT_TERM_BUDGET, Rat)
from .quiver import mutate_matrix


def exchange_products(B, x, k, one):
    """(product over in-arrows, product over out-arrows) at vertex k."""
    pin = one
    pout = one
    for i in range(len(B)):
        if B[i][k] > 0:
            pin = pin * x[i] ** B[i][k]
        if B[k][i] > 0:
            pout = pout * x[i] ** B[k][i]
    return pin, pout


def frieze_step(quiver, x, one=None, check_products=False):
    """One full pass along the quiver's mutation order.  Returns the new
    variable list.  Asserts the exchange matrix returns to itself.

    check_products re-multiplies each quotient against its exchange binomial,
    which re-verifies every division without performing any new ones."""
    if one is None:
        one = Rat(1)
    B = quiver.matrix()
    B0 = [row[:] for row in B]
    x = list(x)
    for k in quiver.mutation_order:
        pin, pout = exchange_products(B, x, k, one)
        old = x[k]
        new = (pin + pout) / old
        if check_products:
            assert new * old == pin + pout, f"exchange relation broke at {k}"
        x[k] = new
        B = mutate_matrix(B, k)
    assert B == B0, "mutation pass did not restore the exchange matrix"
    return x


def verify_pass_products(quiver, col_before, col_after, one=None):
    """Replay a pass multiplicatively: check new * old == in-product +
    out-product at every vertex, using only the two stored columns.  No
    divisions happen here, so it is an independent audit of the step."""
    if one is None:
        one = Rat(1)
    B = quiver.matrix()
    x = list(col_before)
    for k in quiver.mutation_order:
        pin, pout = exchange_products(B, x, k, one)
        if col_after[k] * col_before[k] != pin + pout:
            return False
        x[k] = col_after[k]
        B = mutate_matrix(B, k)
    return True


def frieze_sequence(quiver, x0, depth, one=None, check_products=False):
    """Columns 0..depth of the frieze started at x0."""
    cols = [list(x0)]
    x = list(x0)
    for _ in range(depth):
        x = frieze_step(quiver, x, one=one, check_products=check_products)
        cols.append(x)
    return cols


class FriezeTable:
    """Lazily extended frieze.  mode is either exact rationals (seed given)
    or full symbolic Laurent polynomials in the initial variables."""

    def __init__(self, quiver, x0=None, depth=0, budget=DEFAULT_TERM_BUDGET,
                 check_products=False):
        self.quiver = quiver
        self.budget = budget
        self.check_products = check_products
        if x0 is None:
            self.mode = "symbolic"
            nv = quiver.n
            x0 = [LaurentPoly.variable(i, nv, budget) for i in range(nv)]
            self.one = LaurentPoly.one(nv, budget)
        else:
            self.mode = "rational"
            x0 = [Rat(v) for v in x0]
            self.one = Rat(1)
        self.cols = [list(x0)]
        self._tip_extra = {}
        self.extend(depth)

    @property
    def depth(self):
        return len(self.cols) - 1

    def extend(self, depth):
        while self.depth < depth:
            nxt = frieze_step(self.quiver, self.cols[-1], one=self.one,
                              check_products=self.check_products)
            self.cols.append(nxt)

    def source_tips(self):
        """Vertices with exactly one neighbor, arrow pointing out, that come
        before that neighbor in the mutation order."""
        B = self.quiver.B
        n = self.quiver.n
        pos = {k: i for i, k in enumerate(self.quiver.mutation_order)}
        tips = []
        for v in range(n):
            nbrs = [j for j in range(n) if B[v][j] or B[j][v]]
            if len(nbrs) == 1 and B[v][nbrs[0]] > 0 and pos[v] < pos[nbrs[0]]:
                tips.append(v)
        return tips

    def extend_source_tips(self):
        """Compute column depth+1 at the source tips only.  A source tip v
        with neighbor w mutates before w, so its next value needs nothing but
        the current column: new = (1 + w_value**mult) / old.  This reaches one
        level deeper at the cheap vertices without paying for the interior."""
        d = self.depth
        for v in self.source_tips():
            if (v, d + 1) in self._tip_extra:
                continue
            w = next(j for j in range(self.quiver.n)
                     if self.quiver.B[v][j] or self.quiver.B[j][v])
            mult = self.quiver.B[v][w]
            val = (self.one + self.cols[d][w] ** mult) / self.cols[d][v]
            self._tip_extra[(v, d + 1)] = val
        return sorted(k for k in self._tip_extra if k[1] == d + 1)

    def value(self, v, n):
        """Entry at vertex v (index or label) after n passes."""
        if isinstance(v, str):
            v = self.quiver.label_index(v)
        if n <= self.depth:
            return self.cols[n][v]
        try:
            return self._tip_extra[(v, n)]
        except KeyError:
            raise IndexError(f"column {n} not computed (depth {self.depth})")

    def has_value(self, v, n):
        if isinstance(v, str):
            v = self.quiver.label_index(v)
        return n <= self.depth or (v, n) in self._tip_extra

    def column(self, n):
        return list(self.cols[n])


def a_type_sequence(p, q, x0, count):
    """The single recurrent sequence attached to the two-parameter cycle:
    x[t] * x[t-p-q] = x[t-p] * x[t-q] + 1, seeded by x0 of length p + q."""
    n = p + q
    assert len(x0) == n
    xs = [Rat(v) if not isinstance(v, DualRat) else v for v in x0]
    for t in range(n, count):
        xs.append((xs[t - q] * xs[t - p] + 1) / xs[t - n])
    return xs


def jacobian_of_step(step_fn, point):
    """Exact jacobian matrix of a rational map at a rational point, by
    forward-mode duals.  step_fn takes and returns a list."""
    duals = DualRat.lift_point([Rat(v) for v in point])
    out = step_fn(duals)
    return [[c for c in y.g] for y in out]


def quiver_step_fn(quiver):
    """The frieze pass as a plain callable on variable lists, suitable for
    jacobian_of_step."""
    def fn(x):
        one = x[0] ** 0
        return frieze_step(quiver, x, one=one)
    return fn
