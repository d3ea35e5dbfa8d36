"""Betti diagrams of codimension-3 quotients and Gorenstein formal cancellation.

Degrees are always the internal degree ``t`` of the twist ``R(-t)``, never the
shifted row index used by most Betti-table printers.
"""

from __future__ import annotations

import enum
import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

import numpy as np

from .hilbert import (
    HilbertFunction,
    InvalidHilbertFunction,
    is_symmetric,
    sum_third_difference,
    third_difference,
    validate_hilbert,
)


class DiagramError(ValueError):
    pass


class MissingHomologicalDegree(DiagramError):
    def __init__(self, i: int):
        super().__init__(f"no Betti numbers in homological degree {i}")
        self.i = i


class MomentCheckFailed(DiagramError):
    def __init__(self, k: int, value: int):
        super().__init__(f"moment {k} of the alternating Betti sum is {value}, not 0")
        self.k = k


class InconsistentDiagram(DiagramError):
    pass


class NotGorensteinShape(DiagramError):
    pass


class MultipleSocleDegrees(NotGorensteinShape):
    pass


class NotSymmetric(DiagramError):
    pass


class ParityUnrepairable(DiagramError):
    """Even generator count but odd socle shift, so no central ghost pair fits."""


class EmptyPairing(DiagramError):
    pass


@dataclass(frozen=True)
class BettiDiagram:
    """Graded Betti numbers ``beta[i, t]`` for ``i = 0..3``, stored sparsely."""

    entries: tuple[tuple[tuple[int, int], int], ...]

    def __post_init__(self):
        for (i, t), mult in self.entries:
            if i not in (0, 1, 2, 3) or t < 0 or mult < 1:
                raise DiagramError(f"bad entry beta[{i},{t}] = {mult}")
        if dict(self.entries).get((0, 0)) != 1 or any(i == 0 and t != 0 for (i, t), _ in self.entries):
            raise DiagramError("beta_0 must be a single R in degree 0")

    @classmethod
    def from_mapping(cls, betas: Mapping[tuple[int, int], int]) -> BettiDiagram:
        betas = dict(betas)
        betas[(0, 0)] = 1
        return cls(tuple(sorted((k, v) for k, v in betas.items() if v)))

    @classmethod
    def from_columns(cls, beta1: Mapping[int, int], beta2: Mapping[int, int], beta3: Mapping[int, int]):
        """Build from ``{degree: multiplicity}`` maps for the three nontrivial modules."""
        betas = {}
        for i, col in ((1, beta1), (2, beta2), (3, beta3)):
            for t, mult in col.items():
                betas[(i, t)] = mult
        return cls.from_mapping(betas)

    def beta(self, i: int, t: int) -> int:
        return self.as_dict().get((i, t), 0)

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.entries)

    def column(self, i: int) -> dict[int, int]:
        return {t: m for (j, t), m in self.entries if j == i}

    def degrees(self, i: int) -> list[int]:
        return sorted(self.column(i))

    def total(self, i: int) -> int:
        return sum(self.column(i).values())

    @property
    def max_degree(self) -> int:
        return max(t for (_, t), _ in self.entries)

    def alternating(self) -> dict[int, int]:
        """``sum_i (-1)^i beta[i, t]`` per degree; equals the third difference of h."""
        out: Counter = Counter()
        for (i, t), m in self.entries:
            out[t] += (-1) ** i * m
        return {t: v for t, v in sorted(out.items()) if v}

    def to_json(self) -> str:
        rows = [{"degree": t, "i": i, "mult": m} for (i, t), m in self.entries]
        return json.dumps({"codim": 3, "entries": rows}, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> BettiDiagram:
        data = json.loads(text)
        if data.get("codim") != 3:
            raise DiagramError("only codimension 3 diagrams are supported")
        betas: dict[tuple[int, int], int] = {}
        for row in data["entries"]:
            key = (int(row["i"]), int(row["degree"]))
            if key in betas:
                raise DiagramError(f"duplicate entry {key}")
            betas[key] = int(row["mult"])
        return cls.from_mapping(betas)

    def render(self) -> str:
        """Text table with one row per internal degree t and one column per module."""
        degrees = sorted({t for (_, t), _ in self.entries})
        header = ["t"] + [str(self.total(i)) for i in range(4)]
        rows = [[str(t)] + [str(self.beta(i, t)) if self.beta(i, t) else "-" for i in range(4)] for t in degrees]
        widths = [max(len(r[k]) for r in [header] + rows) for k in range(5)]

        def fmt(r):
            return f"{r[0]:>{widths[0]}} | " + "  ".join(f"{x:>{widths[k + 1]}}" for k, x in enumerate(r[1:]))

        sep = "-" * len(fmt(header))
        return "\n".join([fmt(header), sep] + [fmt(r) for r in rows])

    def __str__(self) -> str:
        parts = []
        for i in (1, 2, 3):
            col = self.column(i)
            parts.append(f"b{i}: " + ",".join(f"{t}^{m}" for t, m in sorted(col.items())))
        return "{" + "; ".join(parts) + "}"


def extremes(d: BettiDiagram) -> tuple[tuple[int, int, int], tuple[int, int, int]]:
    """Return ``((m1, m2, m3), (M1, M2, M3))``."""
    lo, hi = [], []
    for i in (1, 2, 3):
        degs = d.degrees(i)
        if not degs:
            raise MissingHomologicalDegree(i)
        lo.append(degs[0])
        hi.append(degs[-1])
    return tuple(lo), tuple(hi)


def check_moments(d: BettiDiagram) -> None:
    alt = d.alternating()
    for k in range(3):
        value = sum(t**k * v for t, v in alt.items())
        if value:
            raise MomentCheckFailed(k, value)


def formal_multiplicity(d: BettiDiagram) -> Fraction:
    """Degree computed from the Betti numbers as if the complex were exact."""
    check_moments(d)
    alt = d.alternating()
    return Fraction(-sum(t**3 * v for t, v in alt.items()), 6)


def hilbert_from_betti(d: BettiDiagram) -> HilbertFunction:
    alt = d.alternating()
    top = d.max_degree
    deltas = [alt.get(t, 0) for t in range(top + 3)]
    h = sum_third_difference(deltas)
    # beyond the top degree h is quadratic in t, so three zeros force a zero tail
    if any(h[top:top + 3]):
        raise InconsistentDiagram(f"Hilbert function of {d} does not vanish in high degree")
    try:
        return validate_hilbert(h[:top])
    except InvalidHilbertFunction as exc:
        raise InconsistentDiagram(f"{d} gives an invalid Hilbert function: {exc}") from exc


def generic_betti_from_hilbert(h: HilbertFunction, mode: str = "gorenstein") -> BettiDiagram:
    """Numerically minimal diagram with the third difference of ``h``.

    Negative values of the third difference below ``c + 3`` become generators and
    positive ones become syzygies.  In ``"gorenstein"`` mode the last module is
    ``R(-c-3)`` and a central ghost pair is added when the generator count is even.
    In ``"level"`` mode the last module is ``R(-c-3)^{h_c}`` and nothing is added.
    """
    if mode not in ("gorenstein", "level"):
        raise ValueError(f"unknown mode {mode!r}")
    deltas = third_difference(h)
    s = h.socle_degree + 3
    beta1 = {t: -v for t, v in enumerate(deltas) if 0 < t < s and v < 0}
    beta2 = {t: v for t, v in enumerate(deltas) if 0 < t < s and v > 0}
    if mode == "level":
        return BettiDiagram.from_columns(beta1, beta2, {s: h[h.socle_degree]})
    if not is_symmetric(h):
        raise NotSymmetric(f"{h} is not symmetric")
    if sum(beta1.values()) % 2 == 0:
        if s % 2:
            raise ParityUnrepairable(f"{h}: even number of generators with odd socle shift {s}")
        beta1[s // 2] = beta1.get(s // 2, 0) + 1
        beta2[s // 2] = beta2.get(s // 2, 0) + 1
    return BettiDiagram.from_columns(beta1, beta2, {s: 1})


def is_pure(d: BettiDiagram) -> bool:
    return all(len(d.degrees(i)) <= 1 for i in (1, 2, 3))


def is_quasi_pure(d: BettiDiagram) -> bool:
    """Every module starts no lower than the previous one ends."""
    (m1, m2, m3), (M1, M2, M3) = extremes(d)
    return m2 >= M1 and m3 >= M2


@dataclass(frozen=True)
class GorensteinPairing:
    """Socle shift ``s`` with generator degrees ``Q`` (ascending) and syzygy degrees ``P = s - Q``.

    Even ``n`` is allowed: it only arises inside the numerical cancellation.
    """

    s: int
    Q: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "Q", tuple(sorted(self.Q)))
        if self.Q and (self.Q[0] < 1 or self.Q[-1] > self.s - 1):
            raise NotGorensteinShape(f"generator degrees {self.Q} out of range for s = {self.s}")

    @property
    def P(self) -> tuple[int, ...]:
        return tuple(self.s - q for q in self.Q)

    @property
    def n(self) -> int:
        return len(self.Q)

    def to_diagram(self) -> BettiDiagram:
        return BettiDiagram.from_columns(Counter(self.Q), Counter(self.P), {self.s: 1})

    def add_ghost(self, d: int) -> GorensteinPairing:
        """Add the self-dual ghost quadruple ``R(-d), R(-(s-d))`` to both middle modules."""
        return GorensteinPairing(self.s, self.Q + (d, self.s - d))


def pairing_from_diagram(d: BettiDiagram) -> GorensteinPairing:
    beta3 = d.column(3)
    if len(beta3) != 1:
        raise MultipleSocleDegrees(f"last module of {d} is not concentrated in one degree")
    ((s, mult),) = beta3.items()
    if mult != 1:
        raise NotGorensteinShape(f"last module of {d} has rank {mult}, not 1")
    beta1, beta2 = d.column(1), d.column(2)
    if beta1 != {s - t: m for t, m in beta2.items()}:
        raise NotGorensteinShape(f"{d} is not self-dual")
    return GorensteinPairing(s, tuple(Counter(beta1).elements()))


def degree_matrix(gp: GorensteinPairing) -> np.ndarray:
    """Integer matrix with entry ``p_j - q_i`` in row i, column j."""
    return np.subtract.outer(np.array(gp.P, dtype=np.int64), np.array(gp.Q, dtype=np.int64)).T


def find_nondiagonal_zeros(dm: np.ndarray) -> list[tuple[int, int]]:
    rows, cols = np.nonzero(dm == 0)
    return [(int(i), int(j)) for i, j in zip(rows, cols) if i != j]


class Side(str, enum.Enum):
    MIN = "min"
    MAX = "max"


class Outcome(str, enum.Enum):
    CANCELLED = "cancelled"
    NO_MATCH = "no-match"
    DIAGONAL_ONLY = "diagonal-only"


@dataclass(frozen=True)
class StepResult:
    outcome: Outcome
    pairing: GorensteinPairing
    removed: tuple[int, int] | None = None


def cancel_step(gp: GorensteinPairing, side: Side | str) -> StepResult:
    """Try to cancel one ghost quadruple at the extreme syzygy (min) or generator (max) degree.

    The quadruple is the generators ``d, s - d`` together with the syzygies
    ``d, s - d`` where ``d = min P`` and ``s - d = max Q``; removing it keeps
    the pairing self-dual.  By duality the smallest syzygy meets a generator
    exactly when the largest generator meets a syzygy, so both sides test the
    same condition and differ only in which extreme they report.
    """
    Side(side)
    if not gp.Q:
        raise EmptyPairing("cannot cancel in an empty pairing")
    s = gp.s
    d = s - gp.Q[-1]
    count = gp.Q.count(d)
    if count == 0:
        return StepResult(Outcome.NO_MATCH, gp)
    if 2 * d == s and count == 1:
        return StepResult(Outcome.DIAGONAL_ONLY, gp)
    remaining = list(gp.Q)
    remaining.remove(d)
    remaining.remove(s - d)
    return StepResult(Outcome.CANCELLED, GorensteinPairing(s, tuple(remaining)), (min(d, s - d), max(d, s - d)))


class Terminal(str, enum.Enum):
    CASE1 = "case1"
    CASE2 = "case2"


@dataclass(frozen=True)
class CancellationTrace:
    side: Side
    start: GorensteinPairing
    steps: tuple[tuple[int, int], ...]
    terminal: Terminal
    final: GorensteinPairing
    extreme: int
    central_degree: int | None = None
    a_counts: dict[int, int] = field(default_factory=dict)

    @property
    def reduced(self) -> GorensteinPairing:
        """Pairing after the extra numerical cancellation of the central pair (Case 2)."""
        if self.terminal is Terminal.CASE1:
            return self.final
        q = list(self.final.Q)
        q.remove(self.central_degree)
        return GorensteinPairing(self.final.s, tuple(q))

    def as_dict(self) -> dict:
        return {
            "side": self.side.value,
            "start": {"s": self.start.s, "Q": list(self.start.Q), "P": list(self.start.P)},
            "steps": [list(st) for st in self.steps],
            "terminal": self.terminal.value,
            "central_degree": self.central_degree,
            "final": {"s": self.final.s, "Q": list(self.final.Q), "P": list(self.final.P)},
            "extreme": self.extreme,
        }


def cancel_to_extreme(gp: GorensteinPairing, side: Side | str) -> CancellationTrace:
    """Cancel ghost quadruples until none is left at the chosen extreme.

    Ends in Case 1 when the extreme degree has no partner; it is then ``n_2``
    (min side) or ``N_1`` (max side).  Ends in Case 2 when only the central
    diagonal pair ``s/2`` remains; one more numerical cancellation of that pair
    exposes the extreme.
    """
    side = Side(side)
    steps = []
    current = gp
    while True:
        result = cancel_step(current, side)
        if result.outcome is Outcome.CANCELLED:
            steps.append(result.removed)
            current = result.pairing
            continue
        break
    if result.outcome is Outcome.NO_MATCH:
        extreme = min(current.P) if side is Side.MIN else max(current.Q)
        return CancellationTrace(side, gp, tuple(steps), Terminal.CASE1, current, extreme)
    centre = current.s // 2
    q = list(current.Q)
    q.remove(centre)
    if not q:
        raise InconsistentDiagram(f"nothing survives the central cancellation of {gp}")
    extreme = current.s - max(q) if side is Side.MIN else max(q)
    a_counts = dict(Counter(q))
    return CancellationTrace(side, gp, tuple(steps), Terminal.CASE2, current, extreme, centre, a_counts)
