"""The Laurent phenomenon, unspecialized: running the frieze on actual
polynomial variables shows every entry is a Laurent polynomial in the seed
with integer (in fact positive) coefficients.  Every exchange step performs
one exact polynomial division; a division that fails to be exact raises
immediately, so completing the run is itself the proof.
"""

from fractions import Fraction

from affinefrieze import (DivisionNotExact, FriezeTable, LaurentPoly,
                          build_affine_quiver)
from affinefrieze.exact import laurent_eval

q = build_affine_quiver("D", N=4)
tb = FriezeTable(q)              # no seed: symbolic mode
tb.extend(6)

entry = tb.value("x3", 2)
print("entry (x3, 2) as a Laurent polynomial:")
print(" ", entry)
print("terms:", entry.num_terms(),
      "| all coefficients positive:", entry.all_coefficients_positive())

# term counts grow quickly with depth, which is why deep symbolic runs are
# budgeted: the engine raises SymbolicBudgetExceeded instead of thrashing
print("\nterm growth at the middle vertex:")
for n in range(7):
    print(f"  depth {n}: {tb.value('x3', n).num_terms()} terms")

# specializing the symbols at any rational point reproduces the rational
# frieze exactly, which ties the two modes together
x0 = [Fraction(2), Fraction(1, 3), Fraction(5), Fraction(1), Fraction(7, 2)]
rational = FriezeTable(q, x0=x0)
rational.extend(6)
for n in range(7):
    for v in range(q.n):
        assert laurent_eval(tb.value(v, n), x0) == rational.value(v, n)
print("\nsymbolic table specializes exactly to the rational one at",
      [str(v) for v in x0])

# exact division is strict: dividing by a polynomial that is not a factor
# raises rather than rounding anything
x = LaurentPoly.variable(0, 2)
y = LaurentPoly.variable(1, 2)
try:
    (x * x + y) / (x + y)
except DivisionNotExact as ex:
    print("\nnon-factor division raises:", ex)
