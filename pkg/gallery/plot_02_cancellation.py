"""
Generic Gorenstein diagrams and formal cancellation
===================================================

For a symmetric Hilbert function we build the numerically smallest
self-dual Betti diagram, adding one central ghost pair when the number of
generators would otherwise be even.  Cancelling ghost terms from either end
recovers n2 (smallest surviving syzygy) and N1 (largest surviving generator).
"""

from mcbounds import (
    GorensteinPairing,
    cancel_to_extreme,
    formal_multiplicity,
    generic_betti_from_hilbert,
    pairing_from_diagram,
    validate_hilbert,
    zanello_invariants,
)

h = validate_hilbert((1, 3, 6, 6, 3, 1))
d = generic_betti_from_hilbert(h)
print(d.render())
print("formal multiplicity", formal_multiplicity(d))

###############################################################################
# The pairing view: generator degrees Q, syzygy degrees P = s - Q.

gp = pairing_from_diagram(d)
print("s =", gp.s, " Q =", gp.Q, " P =", gp.P)

###############################################################################
# Both sides stop immediately at the central degree-4 pair (Case 2); one
# more numerical cancellation exposes the extremes.

for side in ("min", "max"):
    trace = cancel_to_extreme(gp, side)
    print(side, trace.terminal.value, "centre", trace.central_degree, "extreme", trace.extreme)
print("from the Hilbert function:", zanello_invariants(h).as_tuple())

###############################################################################
# Extra ghost quadruples are cancelled first and change nothing numerically.

ghosted = gp.add_ghost(2).add_ghost(3)
trace = cancel_to_extreme(ghosted, "min")
print("Q =", ghosted.Q)
print("steps", trace.steps, "-> extreme", trace.extreme)
print("formal multiplicity", formal_multiplicity(ghosted.to_diagram()))

###############################################################################
# A Case 2 diagram need not be pure once the central pair is removed: the
# complete intersection of degrees 1, 2, 3 keeps generators in degrees 1, 2.

ci = generic_betti_from_hilbert(validate_hilbert((1, 2, 2, 1)))
trace = cancel_to_extreme(pairing_from_diagram(ci), "min")
print(ci.render())
print("after removing the centre:", trace.reduced.Q, trace.reduced.P)
