"""Exhaustive certification over every Gorenstein Hilbert function up to a socle degree.

Each instance is checked independently by :func:`check_instance`; the run
maps it over the enumeration (optionally in a process pool) and reduces the
results in enumeration order, so the report does not depend on the number of
workers.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction

import numpy as np

from .betti import (
    CancellationTrace,
    GorensteinPairing,
    ParityUnrepairable,
    Terminal,
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
    Outcome,
)
from .bounds import check_all, classic_mc_bounds, purity_sharpness, sharpness_classify, zanello_bounds
from .hilbert import (
    HilbertFunction,
    enumerate_gorenstein_h,
    initial_degree,
    is_symmetric,
    multiplicity,
    sum_third_difference,
    third_difference,
    zanello_invariants,
)

log = logging.getLogger(__name__)

JOBS_ENV = "MCBOUNDS_JOBS"
DEFAULT_MAX_SOCLE = 12


def default_jobs() -> int:
    return int(os.environ.get(JOBS_ENV, "1"))


@dataclass(frozen=True)
class CertifyConfig:
    max_socle_degree: int = DEFAULT_MAX_SOCLE
    max_entry: int | None = None
    si_filter: bool = True
    jobs: int = 1
    chunksize: int = 64


@dataclass
class InstanceResult:
    h: str
    e: int
    violations: list[tuple[str, str]] = field(default_factory=list)
    parity_unrepairable: bool = False
    pure: bool = False
    quasi_pure: bool = False
    ghost: bool = False
    case2: bool = False
    case2_reduced_pure: bool | None = None
    zanello_sharp: bool = False
    improved_sharp: bool = False
    lower_tighter: str = ""
    upper_tighter: str = ""
    bounds: dict[str, str] = field(default_factory=dict)


def _tighter(improved: Fraction, zanello: Fraction, lower: bool) -> str:
    if improved == zanello:
        return "tie"
    if lower:
        return "improved" if improved > zanello else "zanello"
    return "improved" if improved < zanello else "zanello"


def _trace_checks(gp: GorensteinPairing, z, label: str, fail) -> dict[str, CancellationTrace]:
    traces = {}
    e0 = formal_multiplicity(gp.to_diagram())
    h0 = hilbert_from_betti(gp.to_diagram())
    for side, expected in (("min", z.n2), ("max", z.N1)):
        trace = cancel_to_extreme(gp, side)
        traces[side] = trace
        if trace.extreme != expected:
            fail("g_trace_extreme", f"{label} {side}-side trace ends at {trace.extreme}, scan gives {expected}")
        current = gp
        for removed in trace.steps:
            current = cancel_step(current, side).pairing
            diagram = current.to_diagram()
            if formal_multiplicity(diagram) != e0 or hilbert_from_betti(diagram) != h0:
                fail("h_cancellation_invariance", f"{label} step {removed} changed e or h")
        if current != trace.final:
            fail("h_cancellation_invariance", f"{label} replayed steps disagree with the trace")
        if trace.terminal is Terminal.CASE2:
            reduced = trace.reduced.to_diagram()
            if formal_multiplicity(reduced) != e0 or hilbert_from_betti(reduced) != h0:
                fail("h_cancellation_invariance", f"{label} central cancellation changed e or h")
            if not is_quasi_pure(trace.final.to_diagram()):
                fail("case2_quasi_pure", f"{label} Case 2 terminal diagram is not quasi-pure")
    return traces


def check_instance(h: HilbertFunction) -> InstanceResult:
    """Run every property and bound check on one Gorenstein Hilbert function."""
    res = InstanceResult(h=str(h), e=multiplicity(h))

    def fail(check: str, detail: str):
        res.violations.append((check, detail))

    c = h.socle_degree
    deltas = third_difference(h)
    oracle = np.convolve(np.array(h.values, dtype=np.int64), [1, -3, 3, -1])
    if tuple(int(v) for v in oracle) != deltas:
        fail("third_difference_oracle", f"{deltas} != {oracle.tolist()}")
    t = np.arange(len(deltas))
    if any(int(np.dot(t**k, deltas)) for k in range(3)):
        fail("moments", "third difference moments do not vanish")
    if is_symmetric(h) and any(deltas[t] != -deltas[c + 3 - t] for t in range(c + 4)):
        fail("antisymmetry", "third difference is not antisymmetric")
    if deltas[c + 3] != -h[c]:
        fail("socle_identity", f"delta(c+3) = {deltas[c + 3]}")
    back = sum_third_difference(deltas)
    if tuple(back[: c + 1]) != h.values or any(back[c + 1:]):
        fail("roundtrip_h", "triple summation does not return h")

    z = zanello_invariants(h)
    if z.n1 != initial_degree(h):
        fail("n1_scan", f"n1 = {z.n1} but initial degree is {initial_degree(h)}")

    try:
        d = generic_betti_from_hilbert(h)
    except ParityUnrepairable:
        res.parity_unrepairable = True
        return res
    e = res.e
    if hilbert_from_betti(d) != h:
        fail("roundtrip_diagram", "generic diagram has a different Hilbert function")
    if formal_multiplicity(d) != e:
        fail("multiplicity_oracle", f"formal multiplicity {formal_multiplicity(d)} != {e}")
    m, M = extremes(d)
    if not (z.n1 == m[0] and z.n2 >= m[1] and z.N1 <= M[0] and z.N2 == M[1]):
        fail("remark_inequalities", f"m={m} M={M} nN={z.as_tuple()}")

    gp = pairing_from_diagram(d)
    if gp.n % 2 == 0:
        fail("odd_generators", f"generic diagram has {gp.n} generators")
    dm = degree_matrix(gp)
    zeros = find_nondiagonal_zeros(dm)
    if len(zeros) % 2 or set(zeros) != {(j, i) for i, j in zeros}:
        fail("dual_zeros", f"non-diagonal zeros {zeros} are not paired")
    if (np.diff(dm, axis=0) > 0).any() or (np.diff(dm, axis=1) > 0).any():
        fail("degree_matrix_monotone", "degree matrix does not decrease down and to the right")

    report = check_all(h, d)
    b = report.bounds
    res.bounds = report.as_dict()["bounds"]
    if not (report.holds("classic_lower") and report.holds("classic_upper")):
        fail("a_classic_bounds", f"{b['classic_lower']} <= {e} <= {b['classic_upper']} fails")
    if not (report.holds("improved_lower") and report.holds("improved_upper")):
        fail("b_improved_bounds", f"{b['improved_lower']} <= {e} <= {b['improved_upper']} fails")
    if not (b["classic_lower"] <= b["improved_lower"] and b["improved_upper"] <= b["classic_upper"]):
        fail("b_improved_bounds", "improved bounds are weaker than classic ones")
    if not (report.holds("zanello_lower") and report.holds("zanello_upper")):
        fail("c_zanello_bounds", f"{b['zanello_lower']} <= {e} <= {b['zanello_upper']} fails")
    if not (b["classic_lower"] <= b["zanello_lower"] <= e <= b["zanello_upper"] <= b["classic_upper"]):
        fail("d_nesting", "classic <= zanello <= e <= zanello <= classic fails")

    pv = purity_sharpness(d, e, strict=False)
    if not pv.equivalence_ok:
        fail("e_purity_equivalence", str(pv))
    sv = sharpness_classify(h, strict=False)
    if not sv.equivalence_ok:
        fail("f_sharpness_equivalence", str(sv))
    if pv.pure and not (report.sharp("classic_lower") and report.sharp("classic_upper")):
        fail("pure_implies_sharp", "pure diagram with non-sharp classic bounds")

    traces = _trace_checks(gp, z, "generic", fail)
    for ghost in range(1, gp.s // 2 + 1):
        _trace_checks(gp.add_ghost(ghost), z, f"ghost@{ghost}", fail)

    if not oracle_crosscheck(h):
        fail("oracle_crosscheck", "independent computation paths disagree")

    res.pure = pv.pure
    res.quasi_pure = is_quasi_pure(d)
    res.ghost = any(d.beta(1, t) and d.beta(2, t) for t in d.degrees(1))
    res.case2 = traces["min"].terminal is Terminal.CASE2
    if res.case2:
        res.case2_reduced_pure = is_pure(traces["min"].reduced.to_diagram())
    res.zanello_sharp = bool(report.sharp("zanello_lower") and report.sharp("zanello_upper"))
    res.improved_sharp = bool(report.sharp("improved_lower") or report.sharp("improved_upper"))
    res.lower_tighter = _tighter(b["improved_lower"], b["zanello_lower"], lower=True)
    res.upper_tighter = _tighter(b["improved_upper"], b["zanello_upper"], lower=False)
    return res


def oracle_crosscheck(h: HilbertFunction) -> bool:
    """Compare quantities that are reachable along two independent routes."""
    d = generic_betti_from_hilbert(h)
    e = multiplicity(h)
    if formal_multiplicity(d) != e:
        return False
    if hilbert_from_betti(d) != h:
        return False
    z = zanello_invariants(h)
    if z.n1 == z.N1 and z.n2 == z.N2 and zanello_bounds(z) != (e, e):
        return False
    gp = pairing_from_diagram(d)
    if cancel_to_extreme(gp, "min").extreme != z.n2 or cancel_to_extreme(gp, "max").extreme != z.N1:
        return False
    m, M = extremes(d)
    if is_pure(d) and classic_mc_bounds(m, M) != (e, e):
        return False
    return True


@dataclass
class CertificationRun:
    config: CertifyConfig
    results: list[InstanceResult]
    complete: bool = True
    timing: dict[str, float] = field(default_factory=dict)

    @property
    def violations(self) -> list[dict]:
        return [{"h": r.h, "check": chk, "detail": det} for r in self.results for chk, det in r.violations]

    @property
    def ok(self) -> bool:
        return self.complete and not self.violations

    @property
    def counts(self) -> dict[str, int]:
        rs = self.results
        return {
            "instances": len(rs),
            "parity_unrepairable": sum(r.parity_unrepairable for r in rs),
            "pure": sum(r.pure for r in rs),
            "quasi_pure": sum(r.quasi_pure for r in rs),
            "ghost_pair": sum(r.ghost for r in rs),
            "zanello_sharp": sum(r.zanello_sharp for r in rs),
            "improved_sharp": sum(r.improved_sharp for r in rs),
            "case2_terminations": sum(r.case2 for r in rs),
            "case2_reduced_pure": sum(r.case2_reduced_pure is True for r in rs),
            "case2_reduced_not_pure": sum(r.case2_reduced_pure is False for r in rs),
            "zanello_tighter_both_sides": sum(
                r.lower_tighter == "zanello" and r.upper_tighter == "zanello" for r in rs
            ),
            "improved_tighter_some_side": sum("improved" in (r.lower_tighter, r.upper_tighter) for r in rs),
            "violations": len(self.violations),
        }

    def as_dict(self) -> dict:
        cfg = asdict(self.config)
        # worker layout does not change results, so it stays out of the report
        del cfg["jobs"], cfg["chunksize"]
        return {
            "config": cfg,
            "complete": self.complete,
            "counts": self.counts,
            "violations": self.violations,
            "parity_unrepairable": [r.h for r in self.results if r.parity_unrepairable],
            "case2_reduced_not_pure": [r.h for r in self.results if r.case2_reduced_pure is False],
            "census": tightness_census(self),
        }

    def report_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=1) + "\n"

    def census_csv(self) -> str:
        rows = tightness_census(self)
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=CENSUS_FIELDS, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue()

    def write(self, outdir: str) -> None:
        os.makedirs(outdir, exist_ok=True)
        with open(os.path.join(outdir, "report.json"), "w") as f:
            f.write(self.report_json())
        with open(os.path.join(outdir, "census.csv"), "w") as f:
            f.write(self.census_csv())


CENSUS_FIELDS = [
    "h", "e", "pure", "ghost", "case2",
    "classic_lower", "improved_lower", "zanello_lower",
    "zanello_upper", "improved_upper", "classic_upper",
    "lower_tighter", "upper_tighter",
]


def tightness_census(run: CertificationRun) -> list[dict]:
    """Per instance, which of the improved and refined families is tighter on each side."""
    rows = []
    for r in run.results:
        if r.parity_unrepairable:
            continue
        row = {"h": r.h, "e": r.e, "pure": r.pure, "ghost": r.ghost, "case2": r.case2}
        row.update({k: r.bounds[k] for k in CENSUS_FIELDS[5:11]})
        row["lower_tighter"] = r.lower_tighter
        row["upper_tighter"] = r.upper_tighter
        rows.append(row)
    return rows


def certify(config: CertifyConfig | None = None, **kwargs) -> CertificationRun:
    """Check every enumerated instance; violations are collected, never raised."""
    config = config or CertifyConfig(**kwargs)
    t0 = time.perf_counter()
    instances = list(enumerate_gorenstein_h(config.max_socle_degree, config.max_entry, config.si_filter))
    t1 = time.perf_counter()
    results: list[InstanceResult] = []
    complete = True
    try:
        if config.jobs > 1:
            with ProcessPoolExecutor(max_workers=config.jobs) as pool:
                for r in pool.map(check_instance, instances, chunksize=config.chunksize):
                    results.append(r)
        else:
            for h in instances:
                results.append(check_instance(h))
    except KeyboardInterrupt:
        complete = False
        log.warning("certification interrupted after %d of %d instances", len(results), len(instances))
    t2 = time.perf_counter()
    run = CertificationRun(config, results, complete, {"enumerate": t1 - t0, "check": t2 - t1})
    for h in run.as_dict()["parity_unrepairable"]:
        log.info("parity unrepairable: %s", h)
    return run
