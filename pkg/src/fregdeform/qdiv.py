"""Q-divisors on P^1: floors, fractional parts, section dimensions.

Only degrees matter on P^1, so h0 and h1 come straight from deg of the
floor.  The canonical divisor is -2 times a base point.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .family import GRADING_NOTE, quotient_S_ideal
from .report import REFUTED, VERIFIED, Run, VerificationReport
from .groebner import hilbert_function

BASE_POINT = "P0"


class DivisorError(ValueError):
    pass


@dataclass(frozen=True)
class QDivisor:
    support: tuple[tuple[str, Fraction], ...]

    def __init__(self, support: Iterable[tuple[str, object]] = ()):
        seen, out = set(), []
        for label, coeff in support:
            if not isinstance(label, str) or not label:
                raise DivisorError(f"bad point label {label!r}")
            if label in seen:
                raise DivisorError(f"point {label} appears twice")
            seen.add(label)
            out.append((label, Fraction(coeff)))
        object.__setattr__(self, "support", tuple(out))

    @classmethod
    def parse(cls, text: str) -> "QDivisor":
        entries = [e.strip() for e in text.split(",") if e.strip()]
        out = []
        for e in entries:
            m = re.fullmatch(r"(-?\d+(?:/\d+)?)\s*@\s*([A-Za-z_][A-Za-z0-9_+]*)", e)
            if not m:
                raise DivisorError(f"cannot read divisor entry {e!r}; expected coeff@label")
            try:
                coeff = Fraction(m.group(1))
            except ZeroDivisionError:
                raise DivisorError(f"zero denominator in {e!r}") from None
            out.append((m.group(2), coeff))
        return cls(out)

    def __str__(self) -> str:
        return ", ".join(f"{c}@{label}" for label, c in self.support) or "0"

    def coefficient(self, label: str) -> Fraction:
        return dict(self.support).get(label, Fraction(0))

    @property
    def degree(self) -> Fraction:
        return sum((c for _, c in self.support), Fraction(0))

    def __add__(self, other: "QDivisor") -> "QDivisor":
        coeffs = dict(self.support)
        for label, c in other.support:
            coeffs[label] = coeffs.get(label, Fraction(0)) + c
        return QDivisor(coeffs.items())

    def scale(self, k) -> "QDivisor":
        k = Fraction(k)
        return QDivisor((label, k * c) for label, c in self.support)

    def __neg__(self) -> "QDivisor":
        return self.scale(-1)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for _, c in self.support)

    def normalized(self) -> dict[str, Fraction]:
        """Nonzero coefficients only, for comparisons."""
        return {label: c for label, c in self.support if c}


class DivisorClassData(NamedTuple):
    floor_degree: int
    h0: int
    h1: int


def floor_divisor(D: QDivisor) -> QDivisor:
    return QDivisor((label, math.floor(c)) for label, c in D.support)


def fractional_part_paper(D: QDivisor) -> QDivisor:
    """(q - 1)/q at each point, q the reduced denominator."""
    return QDivisor((label, Fraction(c.denominator - 1, c.denominator)) for label, c in D.support)


def floor_degree(D: QDivisor) -> int:
    return int(floor_divisor(D).degree)


def h0(D: QDivisor) -> int:
    return max(0, floor_degree(D) + 1)


def h1(D: QDivisor) -> int:
    return max(0, -floor_degree(D) - 1)


def class_data(D: QDivisor) -> DivisorClassData:
    return DivisorClassData(floor_degree(D), h0(D), h1(D))


def section_dims(E: QDivisor, up_to: int) -> list[int]:
    if E.degree <= 0:
        raise DivisorError(f"E has degree {E.degree}; section dimensions need deg E > 0")
    if up_to < 0:
        raise DivisorError("up_to must be nonnegative")
    return [h0(E.scale(i)) for i in range(up_to + 1)]


def floor_identity_holds(E: QDivisor, n: int) -> bool:
    """-[-nE] = [nE + E'] pointwise."""
    lhs = floor_divisor(E.scale(-n)).scale(-1)
    rhs = floor_divisor(E.scale(n) + fractional_part_paper(E))
    return lhs.normalized() == rhs.normalized()


def floor_identity_check(E: QDivisor, lo: int, hi: int) -> bool:
    return all(floor_identity_holds(E, n) for n in range(lo, hi + 1))


def floor_identity_failures(E: QDivisor, lo: int, hi: int) -> list[int]:
    return [n for n in range(lo, hi + 1) if not floor_identity_holds(E, n)]


class HeuristicValue(NamedTuple):
    degree: Fraction
    h1_value: int
    base_degree: Fraction


def canonical_divisor(base: str = BASE_POINT) -> QDivisor:
    return QDivisor([(base, -2)])


def fpurity_degree_heuristic(E: QDivisor, p: int, base: str = BASE_POINT) -> HeuristicValue:
    """deg p(K + E') and h1 of its floor.  Numbers only, no verdict."""
    if p < 2:
        raise DivisorError("p must be a prime")
    D = canonical_divisor(base) + fractional_part_paper(E)
    pD = D.scale(p)
    return HeuristicValue(pD.degree, h1(pD), D.degree)


def section_ring_divisor(n: int) -> QDivisor:
    """1/2 V(X) + 1/2 V(Y) + 1/(2n) V(X+Y)."""
    if n < 1:
        raise DivisorError("n must be positive")
    return QDivisor([("VX", Fraction(1, 2)), ("VY", Fraction(1, 2)), ("VXY", Fraction(1, 2 * n))])


def hilbert_crosscheck(n: int, up_to: int, p: int = 0,
                       budget: int | None = None) -> VerificationReport:
    """Section dimensions of the standard divisor against the Hilbert function of S."""
    run = Run("prop-4.3-section-ring", {"n": n, "up_to": up_to, "p": p or "rational"})
    dims = section_dims(section_ring_divisor(n), up_to)
    hf = hilbert_function(quotient_S_ideal(n, p), up_to, budget=budget)
    mismatch = [i for i, (x, y) in enumerate(zip(dims, hf)) if x != y]
    return run.done(VERIFIED if not mismatch else REFUTED, {
        "divisor": str(section_ring_divisor(n)), "section_dims": dims, "hilbert_function": hf,
        "mismatches": mismatch, "grading": GRADING_NOTE})
