"""Build the affine quivers and watch their friezes grow.

Every entry is produced by the exchange relation new * old = in-product +
out-product, one full pass over the vertex order per column.  From an
all-ones start every entry is a positive integer; that is the Laurent
phenomenon specialized at 1, and demo 04 shows the unspecialized version.
"""

from fractions import Fraction

from affinefrieze import build_affine_quiver, FriezeTable, a_type_sequence

# the smallest fork quiver: five vertices, two tips at each end
q = build_affine_quiver("D", N=4)
print("family:", q.family, q.params)
print("arrows:", q.arrows())
print("mutation order (sinks first):", q.mutation_order)
print("extending vertices (unit null-root coordinate):", q.extending)

tb = FriezeTable(q, x0=[Fraction(1)] * q.n)
tb.extend(8)
print("\nall-ones frieze:")
for lab in q.labels:
    row = [str(tb.value(lab, n)) for n in range(9)]
    print(f"  {lab:3s}", " ".join(f"{v:>7s}" for v in row))

# tips agree from a symmetric start; the middle column grows much faster
assert tb.value("x1", 5) == 1538
assert tb.value("x3", 5) == 493697

# rational seeds work the same way, with exact Fractions all the way down
tb2 = FriezeTable(q, x0=[Fraction(1, 2), Fraction(3), Fraction(2, 5),
                         Fraction(1), Fraction(7, 3)])
tb2.extend(4)
print("\nrational seed, column 4:")
for lab in q.labels:
    print(f"  {lab}: {tb2.value(lab, 4)}")

# the cycle family collapses to a single scalar recurrence
xs = a_type_sequence(1, 1, [Fraction(1), Fraction(1)], 10)
print("\ncycle (1,1) from unit seed:", [str(v) for v in xs])
# interleaving both vertices gives the classic odd-index bisection growth
