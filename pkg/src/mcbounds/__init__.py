"""Multiplicity bounds for codimension-three Gorenstein and level algebras.

Exact (integer and rational) computations on Hilbert functions and Betti
diagrams: third differences, the degrees n1, n2, N1, N2, generic Gorenstein
Betti diagrams, formal cancellation of ghost terms, the classic, improved and
refined multiplicity bounds, and an exhaustive certifier.
"""

from .hilbert import (
    HilbertFunction,
    ZanelloInvariants,
    enumerate_gorenstein_h,
    initial_degree,
    is_symmetric,
    multiplicity,
    third_difference,
    validate_hilbert,
    zanello_invariants,
)
from .betti import (
    BettiDiagram,
    CancellationTrace,
    GorensteinPairing,
    cancel_step,
    cancel_to_extreme,
    degree_matrix,
    extremes,
    find_nondiagonal_zeros,
    formal_multiplicity,
    generic_betti_from_hilbert,
    hilbert_from_betti,
    is_pure,
    is_quasi_pure,
    pairing_from_diagram,
)
from .bounds import (
    BoundsReport,
    check_all,
    classic_mc_bounds,
    gorenstein_improved_bounds,
    purity_sharpness,
    sharpness_classify,
    zanello_bounds,
)
from .harness import CertifyConfig, certify, check_instance, oracle_crosscheck, tightness_census

__version__ = "0.1.0"
