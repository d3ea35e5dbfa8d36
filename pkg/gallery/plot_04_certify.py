"""
Certifying every Gorenstein Hilbert function up to a socle degree
=================================================================

The harness enumerates all codimension-3 Gorenstein Hilbert functions with
socle degree at most ``max_socle_degree`` and runs every bound, equivalence
and cancellation check on each.  Violations are collected as data.
"""

from collections import Counter

from mcbounds import CertifyConfig, certify, tightness_census

run = certify(CertifyConfig(max_socle_degree=10))
for key, value in run.counts.items():
    print(f"{key:<28} {value}")

###############################################################################
# Which family is tighter, side by side.

rows = tightness_census(run)
print(Counter((r["lower_tighter"], r["upper_tighter"]) for r in rows))

###############################################################################
# Instances where the refined bounds beat the improved ones on both sides.

for r in rows:
    if r["lower_tighter"] == r["upper_tighter"] == "zanello":
        print(r["h"], r["e"], r["zanello_lower"], r["zanello_upper"])

###############################################################################
# Case 2 instances whose diagram is not pure after removing the central pair.

print(run.as_dict()["case2_reduced_not_pure"])
