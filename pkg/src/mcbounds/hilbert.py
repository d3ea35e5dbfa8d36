"""Hilbert functions of Artinian quotients of k[x, y, z].

A Hilbert function is stored as the tuple ``(h_0, ..., h_c)`` with ``c`` the
socle degree.  Indexing outside ``0..c`` is total and returns 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterator, Sequence


class InvalidHilbertFunction(ValueError):
    """Base class for rejected Hilbert function inputs."""

    def __init__(self, message: str, degree: int | None = None):
        super().__init__(message)
        self.degree = degree


class LeadingTermNotOne(InvalidHilbertFunction):
    pass


class NegativeEntry(InvalidHilbertFunction):
    pass


class InternalZero(InvalidHilbertFunction):
    pass


class ExceedsPolynomialRing(InvalidHilbertFunction):
    pass


class MacaulayGrowthViolation(InvalidHilbertFunction):
    pass


class EmptyDefiningSet(ValueError):
    def __init__(self, which: str):
        super().__init__(f"defining set for {which} is empty")
        self.which = which


def macaulay_expansion(a: int, i: int) -> list[tuple[int, int]]:
    """Return the i-binomial expansion of ``a`` as ``[(a_i, i), (a_{i-1}, i-1), ...]``.

    The terms satisfy ``a = sum(comb(a_k, k))`` with ``a_i > a_{i-1} > ... >= j >= 1``.
    """
    if i < 1:
        raise ValueError("Macaulay expansion needs i >= 1")
    terms = []
    k = i
    while a > 0 and k >= 1:
        top = k
        while comb(top + 1, k) <= a:
            top += 1
        terms.append((top, k))
        a -= comb(top, k)
        k -= 1
    return terms


def macaulay_bound(a: int, i: int) -> int:
    """Largest possible value in degree i+1 after value ``a`` in degree i."""
    return sum(comb(top + 1, k + 1) for top, k in macaulay_expansion(a, i))


def is_o_sequence(values: Sequence[int]) -> bool:
    """Macaulay's characterization: starts at 1, nonnegative, bounded growth from degree 1 on."""
    if not values or values[0] != 1:
        return False
    if any(v < 0 for v in values):
        return False
    for i in range(1, len(values) - 1):
        if values[i + 1] > macaulay_bound(values[i], i):
            return False
    return True


@dataclass(frozen=True)
class HilbertFunction:
    """Validated Hilbert function ``(1, h_1, ..., h_c)`` of an Artinian codimension-3 algebra."""

    values: tuple[int, ...]

    def __post_init__(self):
        _check(self.values)

    @classmethod
    def parse(cls, text: str) -> HilbertFunction:
        parts = [p.strip() for p in text.strip().strip("()[]").split(",")]
        try:
            raw = [int(p) for p in parts if p]
        except ValueError as exc:
            raise InvalidHilbertFunction(f"cannot parse Hilbert function {text!r}") from exc
        return validate_hilbert(raw)

    def __str__(self) -> str:
        return ",".join(map(str, self.values))

    def __getitem__(self, t: int) -> int:
        if 0 <= t < len(self.values):
            return self.values[t]
        return 0

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    @property
    def socle_degree(self) -> int:
        return len(self.values) - 1

    @property
    def has_linear_forms(self) -> bool:
        """Warning flag: h_1 < 3, i.e. the ideal contains linear forms."""
        return self[1] < 3


def _check(values: tuple[int, ...]) -> None:
    if not values:
        raise InvalidHilbertFunction("empty Hilbert function")
    if values[0] != 1:
        raise LeadingTermNotOne(f"h_0 must be 1, got {values[0]}", 0)
    for t, v in enumerate(values):
        if v < 0:
            raise NegativeEntry(f"h_{t} = {v} is negative", t)
        if v == 0:
            raise InternalZero(f"h_{t} = 0 before the socle degree", t)
        if v > comb(t + 2, 2):
            raise ExceedsPolynomialRing(f"h_{t} = {v} exceeds binom({t + 2}, 2) = {comb(t + 2, 2)}", t)
    for t in range(1, len(values) - 1):
        bound = macaulay_bound(values[t], t)
        if values[t + 1] > bound:
            raise MacaulayGrowthViolation(
                f"h_{t + 1} = {values[t + 1]} exceeds the Macaulay bound {bound} of h_{t} = {values[t]}",
                t + 1,
            )


def validate_hilbert(raw: Sequence[int]) -> HilbertFunction:
    """Validate a raw integer sequence; trailing zeros are dropped."""
    values = [int(v) for v in raw]
    if not values:
        raise InvalidHilbertFunction("empty Hilbert function")
    while len(values) > 1 and values[-1] == 0:
        values.pop()
    return HilbertFunction(tuple(values))


def third_difference(h: HilbertFunction | Sequence[int]) -> tuple[int, ...]:
    """Values ``h_t - 3h_{t-1} + 3h_{t-2} - h_{t-3}`` for ``t = 0..c+3``."""
    vals = tuple(h)
    c = len(vals) - 1

    def at(t):
        return vals[t] if 0 <= t <= c else 0

    return tuple(at(t) - 3 * at(t - 1) + 3 * at(t - 2) - at(t - 3) for t in range(c + 4))


def sum_third_difference(deltas: Sequence[int]) -> list[int]:
    """Invert the third difference by three running sums."""
    seq = list(deltas)
    for _ in range(3):
        seq = list(itertools.accumulate(seq))
    return seq


def multiplicity(h: HilbertFunction) -> int:
    return sum(h.values)


def initial_degree(h: HilbertFunction) -> int:
    """Smallest degree in which the ideal is nonzero."""
    t = 0
    while h[t] >= comb(t + 2, 2):
        t += 1
    return t


def is_symmetric(h: HilbertFunction) -> bool:
    return h.values == h.values[::-1]


@dataclass(frozen=True)
class ZanelloInvariants:
    n1: int
    n2: int
    N1: int
    N2: int
    socle_shift: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n1, self.n2, self.N1, self.N2)


def zanello_invariants(h: HilbertFunction) -> ZanelloInvariants:
    """Degrees read off the sign pattern of the third difference.

    ``N1`` only looks at degrees ``t <= c + 1``.
    """
    d = third_difference(h)
    c = h.socle_degree
    neg = [t for t, v in enumerate(d) if v < 0]
    pos = [t for t, v in enumerate(d) if v > 0]
    found = {
        "n1": neg[:1],
        "n2": [t for t in pos if t > 0][:1],
        "N1": [t for t in neg if t <= c + 1][-1:],
        "N2": pos[-1:],
    }
    for which, vals in found.items():
        if not vals:
            raise EmptyDefiningSet(which)
    return ZanelloInvariants(
        n1=found["n1"][0], n2=found["n2"][0], N1=found["N1"][0], N2=found["N2"][0], socle_shift=c + 3
    )


def is_si_sequence(h: HilbertFunction) -> bool:
    """Symmetric with an O-sequence as first difference up to the middle degree."""
    if not is_symmetric(h):
        return False
    half = h.socle_degree // 2
    first_diff = [h[t] - h[t - 1] for t in range(half + 1)]
    return is_o_sequence(first_diff)


def _half_o_sequences(length: int, max_first: int) -> Iterator[tuple[int, ...]]:
    # O-sequences (1, g_1, ..., g_{length-1}) with g_1 <= max_first
    def extend(prefix):
        if len(prefix) == length:
            yield tuple(prefix)
            return
        i = len(prefix) - 1
        top = max_first if i == 0 else macaulay_bound(prefix[-1], i)
        for g in range(top + 1):
            yield from extend(prefix + [g])

    yield from extend([1])


def enumerate_gorenstein_h(
    max_socle_degree: int, max_entry: int | None = None, si_filter: bool = True
) -> Iterator[HilbertFunction]:
    """Yield Gorenstein-candidate Hilbert functions in lexicographic order.

    With ``si_filter`` (default) these are the SI-sequences with h_1 <= 3, i.e.
    the Hilbert functions of codimension-3 Gorenstein algebras.  Without it every
    symmetric sequence passing ``validate_hilbert`` is produced.
    """
    if max_socle_degree < 0:
        raise ValueError("max_socle_degree must be >= 0")
    found = []
    for c in range(max_socle_degree + 1):
        half = c // 2
        if si_filter:
            candidates = (tuple(itertools.accumulate(g)) for g in _half_o_sequences(half + 1, 2))
        else:
            ranges = [range(1, 2)] + [range(1, comb(t + 2, 2) + 1) for t in range(1, half + 1)]
            candidates = itertools.product(*ranges)
        for first in candidates:
            if max_entry is not None and max(first) > max_entry:
                continue
            values = first + first[: c + 1 - len(first)][::-1]
            try:
                h = HilbertFunction(values)
            except InvalidHilbertFunction:
                continue
            if si_filter and not is_si_sequence(h):
                continue
            found.append(h)
    found.sort(key=lambda h: h.values)
    yield from found


def random_o_sequence(rng, max_socle_degree: int = 20) -> HilbertFunction:
    """Random Artinian Hilbert function in three variables; ``rng`` is a ``random.Random``."""
    values = [1]
    while len(values) <= max_socle_degree:
        t = len(values) - 1
        top = 3 if t == 0 else macaulay_bound(values[-1], t)
        if t > 0 and rng.random() < 0.15:
            break
        values.append(rng.randint(max(1, top // 3), top))
    return HilbertFunction(tuple(values))


def random_si_sequence(rng, max_socle_degree: int = 20) -> HilbertFunction:
    """Random Gorenstein Hilbert function of socle degree at most ``max_socle_degree``."""
    c = rng.randint(0, max_socle_degree)
    first_diff = [1]
    for t in range(c // 2):
        top = 2 if t == 0 else macaulay_bound(first_diff[-1], t)
        low = 0 if rng.random() < 0.3 else top // 2
        first_diff.append(rng.randint(low, top) if first_diff[-1] else 0)
    first = tuple(itertools.accumulate(first_diff))
    return HilbertFunction(first + first[: c + 1 - len(first)][::-1])
