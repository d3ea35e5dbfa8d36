"""
Comparing the three bound families
==================================

Classic bounds use the extreme shifts of the resolution, the improved
Gorenstein bounds add correction terms, and the refined bounds use only the
Hilbert function.  All values are exact fractions.
"""

from mcbounds import check_all, sharpness_classify, validate_hilbert
from mcbounds.bounds import BOUND_NAMES, fmt_fraction

for raw in [(1,), (1, 3, 3, 1), (1, 3, 6, 6, 3, 1), (1, 3, 6, 9, 9, 6, 3, 1), (1, 3, 5, 6, 5, 3, 1)]:
    r = check_all(validate_hilbert(raw))
    cells = "  ".join(f"{fmt_fraction(r.bounds[n]):>6}" for n in BOUND_NAMES)
    print(f"{str(r.h):<18} e={r.e:<4} {cells}")

###############################################################################
# The four sharpness conditions for the refined bounds always agree.

for raw in [(1, 3, 6, 6, 3, 1), (1, 3, 6, 9, 9, 6, 3, 1)]:
    print(raw, sharpness_classify(validate_hilbert(raw)).conditions)

###############################################################################
# Reports serialize to JSON and to a CSV row.

r = check_all(validate_hilbert((1, 3, 6, 6, 3, 1)))
print(r.to_json())
print(r.to_csv(header=True))
