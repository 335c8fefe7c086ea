"""Exact arithmetic kernel: sparse Laurent polynomials over the integers and
forward-mode dual numbers over the rationals.

Laurent monomials are packed into a single Python int, 16 bits per variable,
with exponents stored biased by 2**15 so that negative exponents pack cleanly.
Multiplying two monomials is then one integer addition (minus the bias
constant), which keeps the hot loops free of tuple churn.  The packing is an
internal detail; nothing outside this module should peek at term keys.
"""

from fractions import Fraction

Rat = Fraction

FIELD = 16
MASK = (1 << FIELD) - 1
BIAS = 1 << (FIELD - 1)
EXP_LIMIT = BIAS - 700  # headroom so one multiply can never wrap a field

DEFAULT_TERM_BUDGET = 2_000_000


class DivisionNotExact(ArithmeticError):
    """Polynomial division left a remainder that should not exist."""


class SymbolicBudgetExceeded(RuntimeError):
    """A symbolic intermediate outgrew the configured term budget."""


def _bias_const(nvars):
    c = 0
    for i in range(nvars):
        c |= BIAS << (FIELD * i)
    return c


_BIAS_CACHE = {}


def bias_const(nvars):
    try:
        return _BIAS_CACHE[nvars]
    except KeyError:
        _BIAS_CACHE[nvars] = _bias_const(nvars)
        return _BIAS_CACHE[nvars]


def pack_exponents(exps):
    key = 0
    for i, e in enumerate(exps):
        assert -EXP_LIMIT < e < EXP_LIMIT, "exponent out of packable range"
        key |= (e + BIAS) << (FIELD * i)
    return key


def unpack_exponents(key, nvars):
    return [((key >> (FIELD * i)) & MASK) - BIAS for i in range(nvars)]


def _total_degree(key, nvars):
    d = 0
    for i in range(nvars):
        d += (key >> (FIELD * i)) & MASK
    return d - nvars * BIAS


def _min_exponents(terms, nvars):
    lows = [BIAS] * nvars
    for key in terms:
        for i in range(nvars):
            e = ((key >> (FIELD * i)) & MASK) - BIAS
            if e < lows[i]:
                lows[i] = e
    return lows


def _max_abs_exp(terms, nvars):
    m = 0
    for key in terms:
        for i in range(nvars):
            e = ((key >> (FIELD * i)) & MASK) - BIAS
            if e < 0:
                e = -e
            if e > m:
                m = e
    return m


class LaurentPoly:
    """Sparse Laurent polynomial with integer coefficients.

    terms maps packed monomial key -> nonzero int coefficient.  Construction
    from a raw dict trusts the caller; use the classmethods for anything
    user-facing.
    """

    __slots__ = ("nvars", "terms", "budget", "max_abs_exp")

    def __init__(self, nvars, terms, budget=DEFAULT_TERM_BUDGET, max_abs_exp=None):
        self.nvars = nvars
        self.terms = terms
        self.budget = budget
        if max_abs_exp is None:
            max_abs_exp = _max_abs_exp(terms, nvars)
        self.max_abs_exp = max_abs_exp

    # ---- constructors ----

    @classmethod
    def constant(cls, c, nvars, budget=DEFAULT_TERM_BUDGET):
        c = int(c)
        terms = {bias_const(nvars): c} if c else {}
        return cls(nvars, terms, budget, 0)

    @classmethod
    def variable(cls, i, nvars, budget=DEFAULT_TERM_BUDGET):
        assert 0 <= i < nvars
        key = bias_const(nvars) + (1 << (FIELD * i))
        return cls(nvars, {key: 1}, budget, 1)

    @classmethod
    def one(cls, nvars, budget=DEFAULT_TERM_BUDGET):
        return cls.constant(1, nvars, budget)

    @classmethod
    def from_terms(cls, pairs, nvars, budget=DEFAULT_TERM_BUDGET):
        """pairs: iterable of (exponent tuple, int coefficient)."""
        terms = {}
        for exps, c in pairs:
            c = int(c)
            if not c:
                continue
            key = pack_exponents(exps)
            c0 = terms.get(key, 0) + c
            if c0:
                terms[key] = c0
            else:
                terms.pop(key, None)
        return cls(nvars, terms, budget)

    # ---- inspection ----

    def num_terms(self):
        return len(self.terms)

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {bias_const(self.nvars): 1}

    def all_coefficients_positive(self):
        return all(c > 0 for c in self.terms.values())

    def monomials(self):
        """Yield (exponent list, coefficient), graded-lex descending."""
        nv = self.nvars
        keys = sorted(self.terms, key=lambda k: (_total_degree(k, nv), k),
                      reverse=True)
        for k in keys:
            yield unpack_exponents(k, nv), self.terms[k]

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, int):
            return self == LaurentPoly.constant(other, self.nvars)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        n = len(self.terms)
        return f"LaurentPoly({self.nvars} vars, {n} terms)"

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for exps, c in self.monomials():
            mono = "*".join(f"x{i}^{e}" for i, e in enumerate(exps) if e)
            if mono:
                bits.append(f"{c}*{mono}" if c != 1 else mono)
            else:
                bits.append(str(c))
        return " + ".join(bits)

    # ---- arithmetic ----

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            assert other.nvars == self.nvars
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.nvars, self.budget)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for k, c in b.items():
            c0 = out.get(k, 0) + c
            if c0:
                out[k] = c0
            else:
                del out[k]
        return LaurentPoly(self.nvars, out, max(self.budget, other.budget),
                           max(self.max_abs_exp, other.max_abs_exp))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.nvars, {k: -c for k, c in self.terms.items()},
                           self.budget, self.max_abs_exp)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return laurent_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return laurent_exact_div(self, other)

    def __pow__(self, n):
        assert isinstance(n, int)
        if n < 0:
            # exact only for invertible elements (unit-coefficient monomials)
            return LaurentPoly.one(self.nvars, self.budget) / self ** (-n)
        out = LaurentPoly.one(self.nvars, self.budget)
        for _ in range(n):
            out = out * self
        return out


def laurent_mul(a, b, budget=None):
    """Exact product.  Raises SymbolicBudgetExceeded if the result would hold
    more terms than the budget allows."""
    assert a.nvars == b.nvars
    nv = a.nvars
    if budget is None:
        budget = max(a.budget, b.budget)
    assert a.max_abs_exp + b.max_abs_exp < EXP_LIMIT, "exponent overflow risk"
    ta, tb = a.terms, b.terms
    if len(ta) < len(tb):
        ta, tb = tb, ta
    biasc = bias_const(nv)
    out = {}
    for kb, cb in tb.items():
        shift = kb - biasc
        for ka, ca in ta.items():
            k = ka + shift
            c0 = out.get(k, 0) + ca * cb
            if c0:
                out[k] = c0
            else:
                del out[k]
        if len(out) > budget:
            raise SymbolicBudgetExceeded(
                f"product grew past {budget} terms")
    return LaurentPoly(nv, out, budget, a.max_abs_exp + b.max_abs_exp)


def laurent_exact_div(a, b, budget=None):
    """Exact quotient a / b.  The divisor must divide exactly; anything else
    raises DivisionNotExact.  Heap-driven elimination of the leading term,
    with lazy deletion so stale heap entries cost one pop each."""
    import heapq

    assert a.nvars == b.nvars
    nv = a.nvars
    if budget is None:
        budget = max(a.budget, b.budget)
    if not b.terms:
        raise ZeroDivisionError("laurent_exact_div by zero")
    if not a.terms:
        return LaurentPoly(nv, {}, budget, 0)
    biasc = bias_const(nv)

    # graded-lex leading term of the divisor
    bt = b.terms
    blead = max(bt, key=lambda k: (_total_degree(k, nv), k))
    bc = bt[blead]
    brest = [(k - blead, c) for k, c in bt.items() if k != blead]

    # When the division is exact, per-variable minimum exponents add under
    # multiplication (the bottom slice of a product is the product of the
    # bottom slices), so every quotient monomial is bounded below by
    # min(a) - min(b).  A popped term that would need a quotient monomial
    # outside that box proves inexactness, and the bound also confines the
    # working set to a finite box, which is what makes the loop terminate.
    qlow = [la - lb for la, lb in
            zip(_min_exponents(a.terms, nv), _min_exponents(bt, nv))]

    rem = dict(a.terms)
    heap = [(-_total_degree(k, nv), -k) for k in rem]
    heapq.heapify(heap)
    q = {}
    qmax = 0
    while rem:
        if not heap:
            raise DivisionNotExact("remainder never cleared")
        nd, nk = heapq.heappop(heap)
        k = -nk
        c = rem.get(k)
        if c is None:
            continue  # stale entry
        del rem[k]
        qc, r = divmod(c, bc)
        if r:
            raise DivisionNotExact("leading coefficient does not divide")
        qk = k - blead + biasc
        for i in range(nv):
            if ((qk >> (FIELD * i)) & MASK) - BIAS < qlow[i]:
                raise DivisionNotExact("quotient support left its box")
        q[qk] = qc
        for dk, dc in brest:
            k2 = k + dk
            c0 = rem.get(k2, 0) - qc * dc
            if c0:
                if k2 not in rem:
                    heapq.heappush(heap, (-_total_degree(k2, nv), -k2))
                rem[k2] = c0
            else:
                rem.pop(k2, None)
        if len(rem) > budget or len(q) > budget:
            raise SymbolicBudgetExceeded(
                f"division working set grew past {budget} terms")
        if len(q) > qmax:
            qmax = len(q)
    out = LaurentPoly(nv, q, budget)
    assert out.max_abs_exp < EXP_LIMIT
    return out


def laurent_eval(a, point):
    """Evaluate at a list of nonzero Fractions."""
    assert len(point) == a.nvars
    nv = a.nvars
    tot = Rat(0)
    for key, c in a.terms.items():
        v = Rat(c)
        for i in range(nv):
            e = ((key >> (FIELD * i)) & MASK) - BIAS
            if e:
                v *= point[i] ** e
        tot += v
    return tot


def laurent_partial(a, i):
    """Formal partial derivative with respect to variable i."""
    assert 0 <= i < a.nvars
    out = {}
    step = FIELD * i
    for key, c in a.terms.items():
        e = ((key >> step) & MASK) - BIAS
        if e == 0:
            continue
        out[key - (1 << step)] = c * e
    return LaurentPoly(a.nvars, out, a.budget)


# ---------------------------------------------------------------------------
# dual numbers over the rationals, for exact jacobians and Poisson brackets

class DualRat:
    """value plus a fixed number of infinitesimal slots, all Fractions."""

    __slots__ = ("v", "g")

    def __init__(self, v, g):
        self.v = v
        self.g = g

    @staticmethod
    def const(v, nslots):
        return DualRat(Rat(v), tuple(Rat(0) for _ in range(nslots)))

    @staticmethod
    def var(v, i, nslots):
        return DualRat(Rat(v),
                       tuple(Rat(1) if j == i else Rat(0) for j in range(nslots)))

    @staticmethod
    def lift_point(values):
        n = len(values)
        return [DualRat.var(v, i, n) for i, v in enumerate(values)]

    def _lift(self, o):
        if isinstance(o, DualRat):
            return o
        return DualRat.const(o, len(self.g))

    def __add__(self, o):
        o = self._lift(o)
        return DualRat(self.v + o.v, tuple(a + b for a, b in zip(self.g, o.g)))

    __radd__ = __add__

    def __sub__(self, o):
        o = self._lift(o)
        return DualRat(self.v - o.v, tuple(a - b for a, b in zip(self.g, o.g)))

    def __rsub__(self, o):
        return self._lift(o).__sub__(self)

    def __neg__(self):
        return DualRat(-self.v, tuple(-a for a in self.g))

    def __mul__(self, o):
        o = self._lift(o)
        return DualRat(self.v * o.v,
                       tuple(self.v * b + o.v * a for a, b in zip(self.g, o.g)))

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = self._lift(o)
        iv = 1 / o.v
        q = self.v * iv
        return DualRat(q, tuple((a - q * b) * iv for a, b in zip(self.g, o.g)))

    def __rtruediv__(self, o):
        return self._lift(o).__truediv__(self)

    def __pow__(self, n):
        assert isinstance(n, int)
        if n < 0:
            return DualRat.const(1, len(self.g)) / self.__pow__(-n)
        out = DualRat.const(1, len(self.g))
        base = self
        for _ in range(n):
            out = out * base
        return out

    def __eq__(self, o):
        if isinstance(o, DualRat):
            return self.v == o.v and self.g == o.g
        return self.v == o and all(a == 0 for a in self.g)

    def __repr__(self):
        return f"DualRat({self.v}, {self.g})"


def parse_rational(text):
    """'3/4' or '5' -> Fraction.  Used by the command line and seed files."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return Rat(int(num), int(den))
    return Rat(int(text))
