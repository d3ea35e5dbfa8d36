"""Exact evaluation of multiplicity bounds for codimension-3 algebras.

Three families are compared against the multiplicity ``e``:

* classic: ``m1 m2 m3 / 6 <= e <= M1 M2 M3 / 6``
* improved Gorenstein: the classic bounds with the correction terms in
  ``M2 - m2 + M1 - m1``
* refined: ``n1 n2 (c+3) / 6 <= e <= N1 N2 (c+3) / 6`` with the degrees read
  from the third difference of the Hilbert function

Everything is a :class:`fractions.Fraction`; sharpness is an equality test.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction

from .betti import (
    BettiDiagram,
    extremes,
    generic_betti_from_hilbert,
    hilbert_from_betti,
    is_pure,
    pairing_from_diagram,
    DiagramError,
)
from .hilbert import HilbertFunction, multiplicity, third_difference, zanello_invariants

FAMILIES = ("classic", "improved", "zanello")
BOUND_NAMES = tuple(f"{fam}_{side}" for fam in FAMILIES for side in ("lower", "upper"))


class EquivalenceViolation(AssertionError):
    """A set of conditions that must agree did not."""


def fmt_fraction(x: Fraction | None) -> str:
    if x is None:
        return "n/a"
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def classic_mc_bounds(m, M) -> tuple[Fraction, Fraction]:
    m1, m2, m3 = m
    M1, M2, M3 = M
    return Fraction(m1 * m2 * m3, 6), Fraction(M1 * M2 * M3, 6)


def gorenstein_improved_bounds(m, M) -> tuple[Fraction, Fraction]:
    m1, m2, m3 = m
    M1, M2, M3 = M
    spread = M2 - m2 + M1 - m1
    lower = Fraction(m1 * m2 * m3, 6) + Fraction((M3 - M2) ** 2 * spread, 6)
    upper = Fraction(M1 * M2 * M3, 6) - Fraction(M3 * spread, 12)
    return lower, upper


def zanello_bounds(z) -> tuple[Fraction, Fraction]:
    return Fraction(z.n1 * z.n2 * z.socle_shift, 6), Fraction(z.N1 * z.N2 * z.socle_shift, 6)


@dataclass(frozen=True)
class BoundsReport:
    h: HilbertFunction
    e: int
    bounds: dict[str, Fraction | None]
    m: tuple[int, int, int]
    M: tuple[int, int, int]
    z: tuple[int, int, int, int]
    gorenstein: bool

    @property
    def c(self) -> int:
        return self.h.socle_degree

    def holds(self, name: str) -> bool | None:
        value = self.bounds[name]
        if value is None:
            return None
        return value <= self.e if name.endswith("lower") else self.e <= value

    def sharp(self, name: str) -> bool | None:
        value = self.bounds[name]
        return None if value is None else value == self.e

    @property
    def all_hold(self) -> bool:
        return all(self.holds(n) is not False for n in BOUND_NAMES)

    def flag(self, name: str) -> str:
        if self.bounds[name] is None:
            return "n/a"
        if not self.holds(name):
            return "FAILS"
        return "sharp" if self.sharp(name) else "holds"

    def as_dict(self) -> dict:
        return {
            "h": str(self.h),
            "e": self.e,
            "gorenstein": self.gorenstein,
            "bounds": {n: fmt_fraction(self.bounds[n]) for n in BOUND_NAMES},
            "holds": {n: self.holds(n) for n in BOUND_NAMES},
            "sharp": {n: self.sharp(n) for n in BOUND_NAMES},
            "inputs": {"m": list(self.m), "M": list(self.M), "nN": list(self.z), "c": self.c},
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True)

    def csv_row(self) -> list[str]:
        return (
            [str(self.h), str(self.e)]
            + [fmt_fraction(self.bounds[n]) for n in BOUND_NAMES]
            + [self.flag(n) for n in BOUND_NAMES]
        )

    @staticmethod
    def csv_header() -> list[str]:
        return ["h", "e", *BOUND_NAMES, *(f"{n}_flag" for n in BOUND_NAMES)]

    def to_csv(self, header: bool = False) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if header:
            w.writerow(self.csv_header())
        w.writerow(self.csv_row())
        return buf.getvalue()


def check_all(h: HilbertFunction, d: BettiDiagram | None = None) -> BoundsReport:
    """Evaluate all six bounds for ``h``.

    Without ``d`` the generic Gorenstein diagram of ``h`` is used.  A supplied
    diagram must have Hilbert function ``h``; when it is not self-dual (a level
    or arbitrary Cohen-Macaulay diagram) the values are still reported but the
    report is flagged non-Gorenstein so callers do not treat them as theorems.
    Improved bounds are only evaluated when the last module sits in one degree.
    """
    if d is None:
        d = generic_betti_from_hilbert(h)
    elif hilbert_from_betti(d) != h:
        raise DiagramError(f"diagram {d} does not have Hilbert function {h}")
    try:
        pairing_from_diagram(d)
        gorenstein = True
    except DiagramError:
        gorenstein = False
    m, M = extremes(d)
    z = zanello_invariants(h)
    bounds: dict[str, Fraction | None] = {}
    bounds["classic_lower"], bounds["classic_upper"] = classic_mc_bounds(m, M)
    if m[2] == M[2]:
        bounds["improved_lower"], bounds["improved_upper"] = gorenstein_improved_bounds(m, M)
    else:
        bounds["improved_lower"] = bounds["improved_upper"] = None
    bounds["zanello_lower"], bounds["zanello_upper"] = zanello_bounds(z)
    return BoundsReport(h, multiplicity(h), bounds, m, M, z.as_tuple(), gorenstein)


@dataclass(frozen=True)
class PurityVerdict:
    lower_sharp: bool
    upper_sharp: bool
    pure: bool

    @property
    def equivalence_ok(self) -> bool:
        return self.lower_sharp == self.upper_sharp == self.pure


def purity_sharpness(d: BettiDiagram, e: int, strict: bool = True) -> PurityVerdict:
    """Classic bound sharpness on either side versus purity of ``d``."""
    m, M = extremes(d)
    lower, upper = classic_mc_bounds(m, M)
    verdict = PurityVerdict(lower == e, upper == e, is_pure(d))
    if strict and not verdict.equivalence_ok:
        raise EquivalenceViolation(f"{d} with e = {e}: {verdict}")
    return verdict


@dataclass(frozen=True)
class SharpnessVerdict:
    condition_1: bool
    condition_2: bool
    condition_3: bool
    condition_4: bool
    t1: int | None = None
    t2: int | None = None

    @property
    def conditions(self) -> tuple[bool, bool, bool, bool]:
        return (self.condition_1, self.condition_2, self.condition_3, self.condition_4)

    @property
    def equivalence_ok(self) -> bool:
        return len(set(self.conditions)) == 1


def sharpness_classify(h: HilbertFunction, strict: bool = True) -> SharpnessVerdict:
    """Four conditions under which the refined bounds are sharp.

    1. the refined lower bound equals e; 2. the refined upper bound equals e;
    3. ``n1 == N1`` and ``n2 == N2``; 4. on ``1 <= t <= c+2`` the third
    difference has exactly one negative value at ``t1`` and one positive value
    at ``t2`` of equal size, everything else zero, and ``t1 + t2 = c + 3``.
    """
    z = zanello_invariants(h)
    e = multiplicity(h)
    lower, upper = zanello_bounds(z)
    deltas = third_difference(h)
    c = h.socle_degree
    window = {t: deltas[t] for t in range(1, c + 3) if deltas[t]}
    neg = [t for t, v in window.items() if v < 0]
    pos = [t for t, v in window.items() if v > 0]
    t1 = t2 = None
    cond4 = False
    if len(neg) == 1 and len(pos) == 1:
        t1, t2 = neg[0], pos[0]
        cond4 = -window[t1] == window[t2] and t1 + t2 == c + 3
    verdict = SharpnessVerdict(
        lower == e, upper == e, z.n1 == z.N1 and z.n2 == z.N2, cond4, t1, t2
    )
    if strict and not verdict.equivalence_ok:
        raise EquivalenceViolation(f"{h}: {verdict}")
    return verdict
