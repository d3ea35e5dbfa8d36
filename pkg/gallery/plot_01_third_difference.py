"""
Reading degrees off a Hilbert function
======================================

The third difference of a Hilbert function equals the alternating sum of
graded Betti numbers in each degree.  Its sign pattern alone gives the
initial degree of the ideal and the four degrees n1, n2, N1, N2 that feed
the refined multiplicity bounds.
"""

from mcbounds import HilbertFunction, initial_degree, multiplicity, third_difference, zanello_invariants

h = HilbertFunction.parse("1,3,6,6,3,1")
print("h          ", h.values)
print("socle deg  ", h.socle_degree)
print("e          ", multiplicity(h))

###############################################################################
# The third difference runs over degrees 0 .. c+3.  Negative entries must
# come from generators (or the last module), positive ones from syzygies.

deltas = third_difference(h)
for t, v in enumerate(deltas):
    print(f"t={t}  {v:+d}")

###############################################################################
# The initial degree agrees with the first negative entry, and the last
# entry is minus the top value of h.

z = zanello_invariants(h)
print("initial degree", initial_degree(h), "== n1", z.n1)
print("delta(c+3)", deltas[-1], "== -h_c", -h[h.socle_degree])
print("(n1, n2, N1, N2) =", z.as_tuple())

###############################################################################
# Invalid inputs are rejected with the offending degree.

from mcbounds.hilbert import InvalidHilbertFunction, validate_hilbert

for raw in [(1, 3, 7), (1, 1, 2), (1, 3, 0, 1)]:
    try:
        validate_hilbert(raw)
    except InvalidHilbertFunction as exc:
        print(raw, type(exc).__name__, "at degree", exc.degree)
