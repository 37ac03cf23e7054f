"""Frobenius-theoretic tests in characteristic p.

Bracket powers, Frobenius-closure and tight-closure witnesses, the Fedder
colon test for F-purity, the Glassbrenner search for strongly F-regular
hypersurfaces, and Jacobian singular-locus ideals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .algebra import AlgebraError, Polynomial
from .groebner import (
    Ideal,
    colon_by_ideal,
    ideal_member,
    radical_member,
)


class FrobeniusError(AlgebraError):
    """Raised when a Frobenius test is asked something it cannot answer."""


class PreconditionFailed(FrobeniusError):
    pass


def _char(ring) -> int:
    p = ring.characteristic
    if not p:
        raise FrobeniusError("Frobenius tests need a prime characteristic, not the rationals")
    return p


def exponent_of(q: int, p: int) -> int:
    """``e`` with ``q == p**e``; raises if ``q`` is not a power of ``p``."""
    if q < 1:
        raise FrobeniusError(f"q = {q} is not a power of {p}")
    e = 0
    while q % p == 0:
        q //= p
        e += 1
    if q != 1:
        raise FrobeniusError(f"q is not a power of the characteristic {p}")
    return e


def prime_powers(p: int, limit: int) -> list[int]:
    """All ``p**e <= limit`` with ``e >= 1``."""
    out, q = [], p
    while q <= limit:
        out.append(q)
        q *= p
    return out


def bracket(f: Polynomial, q: int) -> Polynomial:
    """``f**q`` for ``q`` a power of the characteristic.

    Over F_p the q-th power map fixes coefficients and is additive, so
    every exponent is simply scaled by ``q``.
    """
    exponent_of(q, _char(f.ring))
    return Polynomial(f.ring, {tuple(e * q for e in m): c for m, c in f.terms.items()})


def frobenius_power(I: Ideal, q: int) -> Ideal:
    p = _char(I.ring)
    exponent_of(q, p)
    return Ideal(I.ring, [bracket(g, q) for g in I.generators])


def outside_bracket_maximal(f: Polynomial, q: int) -> tuple[int, ...] | None:
    """A monomial of ``f`` with every exponent below ``q``, if any.

    ``f`` lies outside ``m^[q]`` exactly when such a term exists.
    """
    for m in sorted(f.terms):
        if all(e < q for e in m):
            return m
    return None


@dataclass(frozen=True)
class FrobeniusWitness:
    """Outcome of a Frobenius search.

    ``kind`` is one of ``frobenius-closure``, ``tight-closure``,
    ``strongly-f-regular`` or ``none-up-to``.  ``checked`` maps each tested
    ``q`` to the membership result.  ``none-up-to`` is never a disproof.
    """
    kind: str
    p: int
    e: int | None = None
    e_max: int | None = None
    multiplier: Polynomial | None = None
    checked: dict = field(default_factory=dict)
    monomial: tuple | None = None
    notes: tuple[str, ...] = ()

    @property
    def found(self) -> bool:
        if self.kind == "none-up-to":
            return False
        if self.kind == "tight-closure":
            return bool(self.checked) and all(self.checked.values())
        return True

    @property
    def q(self) -> int | None:
        return None if self.e is None else self.p ** self.e

    def as_dict(self) -> dict:
        out = {"kind": self.kind, "p": self.p, "found": self.found}
        if self.e is not None:
            out["e"] = self.e
            out["q"] = self.q
        if self.e_max is not None:
            out["e_max"] = self.e_max
        if self.multiplier is not None:
            out["multiplier"] = self.multiplier.render()
        if self.checked:
            out["checked"] = {str(q): ok for q, ok in sorted(self.checked.items())}
        if self.monomial is not None:
            out["monomial"] = list(self.monomial)
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _same_ring(*objs):
    rings = {o.ring for o in objs}
    if len(rings) != 1:
        raise AlgebraError("all arguments must live in one ring")


def frobenius_closure_member(x: Polynomial, I: Ideal, I0: Ideal, e_max: int = 4,
                             budget: int | None = None) -> FrobeniusWitness:
    """Smallest ``e <= e_max`` with ``x^q in I^[q] + I0``, ``q = p^e``."""
    _same_ring(x, I, I0)
    p = _char(x.ring)
    if e_max < 0:
        raise FrobeniusError("e_max must be nonnegative")
    checked = {}
    for e in range(e_max + 1):
        q = p ** e
        ok = ideal_member(bracket(x, q), frobenius_power(I, q) + I0, budget=budget)
        checked[q] = ok
        if ok:
            return FrobeniusWitness("frobenius-closure", p, e=e, checked=checked)
    return FrobeniusWitness("none-up-to", p, e_max=e_max, checked=checked,
                            notes=("no witness found; this does not show non-membership",))


RING_CIRCLE_NOTE = ("the multiplier is only checked to be nonzero modulo the defining ideal; "
                    "avoiding every minimal prime rests on the ring being a domain")


def tight_closure_witness_check(x: Polynomial, I: Ideal, I0: Ideal, c: Polynomial,
                                exponents, budget: int | None = None) -> FrobeniusWitness:
    """Checks ``c x^q in I^[q] + I0`` for each listed ``q``.

    Only the listed exponents are certified.
    """
    _same_ring(x, I, I0, c)
    p = _char(x.ring)
    qs = sorted(set(exponents))
    for q in qs:
        exponent_of(q, p)
    if ideal_member(c, I0, budget=budget):
        raise PreconditionFailed("the multiplier c is zero in the quotient ring")
    checked = {}
    for q in qs:
        target = frobenius_power(I, q) + I0
        checked[q] = ideal_member(c * bracket(x, q), target, budget=budget)
    return FrobeniusWitness("tight-closure", p, multiplier=c, checked=checked,
                            notes=(RING_CIRCLE_NOTE,))


@dataclass(frozen=True)
class PurityVerdict:
    p: int
    f_pure: bool
    certificate: Polynomial | None
    colon: Ideal
    truncated_at: int | None = None

    @property
    def verdict(self) -> str:
        return "F-pure" if self.f_pure else "not-F-pure"

    def as_dict(self) -> dict:
        out = {"p": self.p, "verdict": self.verdict,
               "colon_generators": len(self.colon.generators)}
        if self.certificate is not None:
            out["certificate"] = self.certificate.render()
        if self.truncated_at is not None:
            out["colon_degree_bound"] = self.truncated_at
        return out


def fedder_fpurity(I0: Ideal, budget: int | None = None) -> PurityVerdict:
    """F-purity at the irrelevant ideal: is ``(I0^[p] : I0)`` outside ``m^[p]``?

    A polynomial escapes ``m^[p]`` only through a monomial with all
    exponents below ``p``, whose weighted degree is at most
    ``(p - 1) * sum(weights)``.  For homogeneous ``I0`` the colon is
    therefore only needed up to that degree.
    """
    ring = I0.ring
    p = _char(ring)
    if not I0.generators:
        one = ring.one()
        return PurityVerdict(p, True, one, Ideal(ring, [one]))
    if ideal_member(ring.one(), I0, budget=budget):
        raise FrobeniusError("the unit ideal has no F-purity verdict")
    bound = None
    if I0.is_homogeneous():
        bound = (p - 1) * sum(ring.weights)
    colon = colon_by_ideal(frobenius_power(I0, p), I0, budget=budget, max_degree=bound)
    for g in colon.generators:
        if outside_bracket_maximal(g, p) is not None:
            return PurityVerdict(p, True, g, colon, bound)
    return PurityVerdict(p, False, None, colon, bound)


def jacobian_ideal(f: Polynomial) -> Ideal:
    return Ideal(f.ring, [f.derivative(i) for i in range(f.ring.nvars)])


def validate_localization(f: Polynomial, c: Polynomial, budget: int | None = None) -> bool:
    """``c`` lies in the radical of ``(f) + Jacobian(f)``: ``P/(f)`` is regular off ``V(c)``."""
    _same_ring(f, c)
    return radical_member(c, jacobian_ideal(f) + [f], budget=budget)


def glassbrenner_hypersurface(f: Polynomial, c: Polynomial, e_max: int = 3,
                              budget: int | None = None) -> FrobeniusWitness:
    """Smallest ``e`` in ``1..e_max`` with ``c f^(q-1)`` outside ``m^[q]``.

    The caller vouches that ``f`` is irreducible.
    """
    _same_ring(f, c)
    p = _char(f.ring)
    if not c:
        raise PreconditionFailed("c must be nonzero")
    if not validate_localization(f, c, budget=budget):
        raise PreconditionFailed("the hypersurface is not regular after inverting c")
    checked = {}
    g = c
    fp = f ** (p - 1)
    q = 1
    for e in range(1, e_max + 1):
        # c f^(q p - 1) = c f^(q - 1) * (f^(p - 1))^q, built up one e at a time
        g = g * bracket(fp, q) if e > 1 else c * fp
        q *= p
        hit = outside_bracket_maximal(g, q)
        checked[q] = hit is not None
        if hit is not None:
            return FrobeniusWitness("strongly-f-regular", p, e=e, multiplier=c,
                                    checked=checked, monomial=hit)
    return FrobeniusWitness("none-up-to", p, e_max=e_max, multiplier=c, checked=checked,
                            notes=("no witness found; this does not show the ring is not F-regular",))


def _det(rows: list[list[Polynomial]]) -> Polynomial:
    if len(rows) == 1:
        return rows[0][0]
    acc = rows[0][0].ring.zero()
    for j, entry in enumerate(rows[0]):
        if not entry:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = entry * _det(minor)
        acc = acc - term if j % 2 else acc + term
    return acc


def jacobian_minors(I: Ideal, size: int) -> list[Polynomial]:
    ring = I.ring
    jac = [[g.derivative(i) for i in range(ring.nvars)] for g in I.generators]
    out = []
    for rows in itertools.combinations(range(len(jac)), size):
        for cols in itertools.combinations(range(ring.nvars), size):
            d = _det([[jac[r][c] for c in cols] for r in rows])
            if d:
                out.append(d)
    return out


def singular_locus_ideal(I: Ideal, height: int) -> Ideal:
    """``I`` plus the size-``height`` minors of the Jacobian matrix."""
    if height < 0 or height > min(len(I.generators), I.ring.nvars):
        raise FrobeniusError(f"height {height} out of range")
    if height == 0:
        return I + [I.ring.one()]
    return I + jacobian_minors(I, height)


def radical_equal(I: Ideal, J: Ideal, budget: int | None = None) -> bool:
    _same_ring(I, J)
    return (all(radical_member(g, J, budget=budget) for g in I.generators)
            and all(radical_member(g, I, budget=budget) for g in J.generators))
