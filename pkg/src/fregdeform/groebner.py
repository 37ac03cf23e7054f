"""Buchberger's algorithm and the ideal toolkit built on it.

The kernel packs each monomial into one Python int: the rows of the order
matrix occupy the high bits and the exponent vector the low bits, one
guarded field per variable.  Integer comparison is then the monomial order,
integer addition is monomial multiplication, and divisibility is a single
subtraction against the guard mask.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .algebra import (
    AlgebraError,
    MonomialOrder,
    Polynomial,
    RingSignature,
    is_homogeneous,
    weighted_degree,
)

DEFAULT_BUDGET = 10**7

_EXP_BITS = 32
_KEY_BITS = 64
_EXP_LIMIT = 1 << (_EXP_BITS - 2)


class ResourceLimitExceeded(RuntimeError):
    def __init__(self, message: str, stats: dict | None = None):
        super().__init__(message)
        self.stats = stats or {}


class InconclusiveOracle(RuntimeError):
    """The linear-algebra oracle could not decide within its degree cap."""


# -- engine statistics ---------------------------------------------------

class EngineStats:
    """Running totals of kernel work; verifiers diff snapshots of these."""

    def __init__(self):
        self.reductions = 0
        self.pairs = 0
        self.zero_reductions = 0
        self.gb_calls = 0

    def snapshot(self) -> dict:
        return dict(vars(self))


STATS = EngineStats()


def stats_since(before: dict) -> dict:
    now = STATS.snapshot()
    return {k: now[k] - before.get(k, 0) for k in now}


# -- ideals --------------------------------------------------------------

@dataclass(frozen=True)
class Ideal:
    ring: RingSignature
    generators: tuple[Polynomial, ...]

    def __init__(self, ring: RingSignature, generators: Iterable[Polynomial | str] = ()):
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = ring.parse(g)
            if g.ring != ring:
                raise AlgebraError(f"generator {g} lives in {g.ring}, not {ring}")
            if g:
                gens.append(g)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "generators", tuple(gens))

    def __add__(self, other: "Ideal | Iterable[Polynomial]") -> "Ideal":
        if isinstance(other, Ideal):
            if other.ring != self.ring:
                raise AlgebraError("ideals live in different rings")
            return Ideal(self.ring, self.generators + other.generators)
        return Ideal(self.ring, self.generators + tuple(other))

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.generators)

    def __contains__(self, f: Polynomial) -> bool:
        return ideal_member(f, self)

    def is_homogeneous(self) -> bool:
        return all(is_homogeneous(g) for g in self.generators)

    def to_ring(self, ring: RingSignature) -> "Ideal":
        return Ideal(ring, [g.to_ring(ring) for g in self.generators])

    def render(self) -> list[str]:
        return [g.render() for g in self.generators]

    def __str__(self) -> str:
        return "(" + ", ".join(self.render()) + ")"


# -- packed monomials ----------------------------------------------------

class _Packing:
    """Bijection between exponent tuples and packed ints for one (ring, order)."""

    def __init__(self, ring: RingSignature, order: MonomialOrder):
        if order.nvars != ring.nvars:
            raise AlgebraError(f"order {order} has {order.nvars} variables, ring has {ring.nvars}")
        n = ring.nvars
        self.n = n
        self.rows = order.matrix
        self.base = n * _EXP_BITS
        self.expmask = (1 << self.base) - 1
        self.guard = sum(1 << (i * _EXP_BITS + _EXP_BITS - 1) for i in range(n))
        self.fmask = (1 << _EXP_BITS) - 1
        self.exp_shifts = tuple(i * _EXP_BITS for i in range(n))
        self.shifts = [self.base + (len(self.rows) - 1 - r) * _KEY_BITS for r in range(len(self.rows))]

    def encode(self, exps: Sequence[int]) -> int:
        v = 0
        for i, e in enumerate(exps):
            if e >= _EXP_LIMIT:
                raise AlgebraError("exponent too large for the Groebner kernel")
            v |= e << (i * _EXP_BITS)
        for row, s in zip(self.rows, self.shifts):
            v += sum(a * e for a, e in zip(row, exps)) << s
        return v

    def decode(self, m: int) -> tuple[int, ...]:
        fm = self.fmask
        return tuple((m >> s) & fm for s in self.exp_shifts)


@dataclass
class _KPoly:
    lead: int          # packed leading monomial
    terms: list        # [(packed monomial, coeff)] in decreasing order, monic
    lead_exps: tuple
    sugar: int
    tail: list = None

    def __post_init__(self):
        self.tail = self.terms[1:]


class _Kernel:
    """Mutable Buchberger state for one computation."""

    def __init__(self, ring: RingSignature, order: MonomialOrder, budget: int):
        self.ring = ring
        self.order = order
        self.pack = _Packing(ring, order)
        self.p = ring.characteristic
        self.budget = budget
        self.grading = ring.weights
        self.degree = ring.degree
        self.steps = 0
        self.polys: list[_KPoly] = []
        # reducer leads as packed exponent blocks, parallel to self.polys
        self.lead_exps_packed: list[int] = []
        self._hit: dict[int, int] = {}
        self._miss: dict[int, int] = {}

    # conversion
    def to_dict(self, f: Polynomial) -> dict[int, object]:
        enc = self.pack.encode
        return {enc(m): c for m, c in f.terms.items()}

    def to_poly(self, terms: Iterable[tuple[int, object]]) -> Polynomial:
        dec = self.pack.decode
        return Polynomial(self.ring, {dec(m): c for m, c in terms})

    def degree_of(self, m: int) -> int:
        return self.ring.degree(self.pack.decode(m))

    def monic(self, terms: dict[int, object]) -> list[tuple[int, object]]:
        items = sorted(terms.items(), reverse=True)
        lc = items[0][1]
        p = self.p
        if p:
            inv = pow(lc, -1, p)
            return [(m, c * inv % p) for m, c in items]
        return [(m, c / lc) for m, c in items]

    def add(self, terms: list[tuple[int, object]], sugar: int) -> int:
        lead = terms[0][0]
        kp = _KPoly(lead, terms, self.pack.decode(lead), sugar)
        self.polys.append(kp)
        self.lead_exps_packed.append((lead & self.pack.expmask))
        return len(self.polys) - 1

    def find_divisor(self, m: int, active: list[int] | None = None) -> int | None:
        """Index of a reducer whose lead divides ``m`` (first match)."""
        hit = self._hit.get(m)
        if hit is not None:
            return hit
        leads = self.lead_exps_packed
        start = self._miss.get(m, 0)
        mg = (m & self.pack.expmask) | self.pack.guard
        g = self.pack.guard
        for idx in range(start, len(leads)):
            if (mg - leads[idx]) & g == g:
                self._hit[m] = idx
                return idx
        self._miss[m] = len(leads)
        return None

    def reduce(self, f: dict[int, object]) -> dict[int, object]:
        """Normal form of ``f`` (a packed dict) against all registered reducers.

        Over F_p coefficients are reduced lazily, when their monomial is
        popped, so cancelled entries linger in ``h`` as multiples of p.
        """
        p = self.p
        h = dict(f)
        heap = [-m for m in h]
        heapq.heapify(heap)
        rem: dict[int, object] = {}
        polys = self.polys
        leads = self.lead_exps_packed
        nleads = len(leads)
        hits, misses = self._hit, self._miss
        expmask, guard = self.pack.expmask, self.pack.guard
        push, pop = heapq.heappush, heapq.heappop
        get = h.get
        steps = 0
        while heap:
            m = -pop(heap)
            c = h.pop(m, None)
            if c is None:
                continue
            if p:
                c %= p
            if not c:
                continue
            idx = hits.get(m)
            if idx is None:
                start = misses.get(m, 0)
                if start < nleads:
                    mg = (m & expmask) | guard
                    for j in range(start, nleads):
                        if (mg - leads[j]) & guard == guard:
                            idx = j
                            hits[m] = j
                            break
                    else:
                        misses[m] = nleads
            if idx is None:
                rem[m] = c
                continue
            steps += 1
            g = polys[idx]
            shift = m - g.lead
            for gm, gc in g.tail:
                k = gm + shift
                old = get(k)
                if old is None:
                    h[k] = -c * gc
                    push(heap, -k)
                else:
                    h[k] = old - c * gc
        self.steps += steps
        STATS.reductions += steps
        if self.steps > self.budget:
            raise ResourceLimitExceeded(
                f"Groebner computation exceeded its budget of {self.budget} reduction steps",
                {"reductions": self.steps, "basis_size": len(self.polys)},
            )
        return rem


def _lcm(a: tuple, b: tuple) -> tuple:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _coprime(a: tuple, b: tuple) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


@dataclass(frozen=True, eq=False)
class GroebnerBasis:
    """Reduced, monic, sorted by increasing leading monomial.

    ``truncated_at`` is set when only the part of degree at most that bound
    was computed (homogeneous input); such a basis decides normal forms of
    polynomials of degree up to the bound only.
    """

    order: MonomialOrder
    basis: tuple[Polynomial, ...]
    source: Ideal
    truncated_at: int | None = None
    stats: dict = field(default_factory=dict)
    _packed: tuple = field(default=(), repr=False)
    _kcache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def ring(self) -> RingSignature:
        return self.source.ring

    def __len__(self) -> int:
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def leading_monomials(self) -> list[tuple[int, ...]]:
        return [g.leading_term(self.order)[0] for g in self.basis]

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.basis)

    def render(self) -> list[str]:
        return [g.render(self.order) for g in self.basis]

    def _kernel(self) -> _Kernel:
        k = self._kcache.get("k")
        if k is None:
            k = _Kernel(self.ring, self.order, 1 << 62)
            for terms in self._packed:
                k.add(list(terms), 0)
            self._kcache["k"] = k
        return k


def _gm_update(kern: _Kernel, G: list[int], B: list, h: int) -> list[int]:
    """Gebauer-Moeller installation of ``h``: both Buchberger criteria."""
    polys = kern.polys
    he = polys[h].lead_exps
    C = [(g, _lcm(polys[g].lead_exps, he)) for g in G]
    D = []
    for idx, (g, l) in enumerate(C):
        if _coprime(polys[g].lead_exps, he):
            D.append((g, l, True))
            continue
        dominated = any(_divides(l2, l) for _, l2 in C[idx + 1:]) or any(
            _divides(l2, l) for _, l2, _ in D)
        if not dominated:
            D.append((g, l, False))
    E = [(g, l) for g, l, cop in D if not cop]
    newB = []
    for pair in B:
        _, _, i, j, l = pair
        if (not _divides(he, l)
                or _lcm(polys[i].lead_exps, he) == l
                or _lcm(polys[j].lead_exps, he) == l):
            newB.append(pair)
    deg = kern.degree
    enc = kern.pack.encode
    for g, l in E:
        dl = deg(l)
        sugar = max(polys[g].sugar - deg(polys[g].lead_exps), polys[h].sugar - deg(he)) + dl
        newB.append((sugar, enc(l), g, h, l))
    B[:] = newB
    heapq.heapify(B)
    return [g for g in G if not _divides(he, polys[g].lead_exps)] + [h]


def _spoly(kern: _Kernel, i: int, j: int, lcm_packed: int) -> dict:
    p = kern.p
    f, g = kern.polys[i], kern.polys[j]
    out: dict = {}
    sf = lcm_packed - f.lead
    sg = lcm_packed - g.lead
    for m, c in itertools.islice(f.terms, 1, None):
        out[m + sf] = c
    for m, c in itertools.islice(g.terms, 1, None):
        k = m + sg
        v = out.get(k, 0) - c
        if p:
            v %= p
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


_GB_CACHE: dict = {}
_GB_CACHE_MAX = 64


def _homogeneous_for(f: Polynomial, grading: Sequence[int]) -> bool:
    degs = {sum(w * e for w, e in zip(grading, m)) for m in f.terms}
    return len(degs) <= 1


def buchberger(I: Ideal, order: MonomialOrder | None = None, budget: int | None = None,
               max_degree: int | None = None,
               grading: Sequence[int] | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of ``I``.

    ``max_degree`` requests the degree-truncated basis; it is honoured only
    when every generator is homogeneous, otherwise the full basis is
    computed.  ``grading`` overrides the ring weights for sugar and
    truncation; zero entries are allowed there (auxiliary variables).
    """
    ring = I.ring
    order = order or ring.default_order()
    budget = DEFAULT_BUDGET if budget is None else budget
    grading = tuple(grading) if grading is not None else ring.weights
    if any(w < 0 for w in grading) or len(grading) != ring.nvars:
        raise AlgebraError("grading must be one nonnegative weight per variable")
    homogeneous = all(_homogeneous_for(g, grading) for g in I.generators)
    if max_degree is not None and not homogeneous:
        max_degree = None
    key = (I.generators, order, max_degree, grading)
    cached = _GB_CACHE.get(key)
    if cached is not None:
        return cached
    if max_degree is not None:
        # a complete basis or a deeper truncation answers the same questions
        for (gens, o, md, gr), gb in _GB_CACHE.items():
            if (gens == I.generators and o == order and gr == grading
                    and (md is None or md >= max_degree)):
                return gb

    STATS.gb_calls += 1
    kern = _Kernel(ring, order, budget)
    kern.grading = grading

    def deg(m):
        return sum(w * e for w, e in zip(grading, m))

    kern.degree = deg
    inputs = []
    for g in I.generators:
        d = kern.to_dict(g)
        inputs.append((max(deg(m) for m in g.terms), d))
    inputs.sort(key=lambda t: (t[0], max(t[1])))

    G: list[int] = []
    B: list = []
    skipped_above = False
    pairs = 0
    zero = 0

    def install(terms: dict, sugar: int):
        nonlocal G
        monic = kern.monic(terms)
        if monic[0][0] & kern.pack.expmask == 0:
            # unit ideal
            return "unit"
        h = kern.add(monic, sugar)
        G = _gm_update(kern, G, B, h)
        return None

    unit = False
    for sugar, d in inputs:
        r = kern.reduce(d)
        if r:
            if install(r, sugar) == "unit":
                unit = True
                break
    while B and not unit:
        sugar, lp, i, j, l = heapq.heappop(B)
        if max_degree is not None and sugar > max_degree:
            skipped_above = True
            break
        pairs += 1
        STATS.pairs += 1
        s = _spoly(kern, i, j, lp)
        r = kern.reduce(s) if s else {}
        if not r:
            zero += 1
            STATS.zero_reductions += 1
            continue
        if install(r, sugar) == "unit":
            unit = True

    if unit:
        one = ring.one()
        gb = GroebnerBasis(order, (one,), I, None,
                           {"reductions": kern.steps, "pairs": pairs, "zero_reductions": zero},
                           ((( kern.pack.encode((0,) * ring.nvars), 1),),))
        _remember(key, gb)
        return gb

    # interreduce: a lead never divides its own (smaller) tail terms, so every
    # element can stay registered while its tail is reduced
    final = sorted(G, key=lambda g: kern.polys[g].lead)
    inter = _Kernel(ring, order, budget)
    inter.steps = kern.steps
    for g in final:
        inter.add(kern.polys[g].terms, kern.polys[g].sugar)
    out_packed = []
    for g in final:
        terms = kern.polys[g].terms
        tail = inter.reduce(dict(terms[1:]))
        out_packed.append(tuple([terms[0]] + sorted(tail.items(), reverse=True)))
    kern.steps = inter.steps
    basis = tuple(kern.to_poly(t) for t in out_packed)
    stats = {"reductions": kern.steps, "pairs": pairs, "zero_reductions": zero,
             "basis_size": len(basis)}
    gb = GroebnerBasis(order, basis, I, max_degree if skipped_above else None, stats,
                       tuple(out_packed))
    _remember(key, gb)
    return gb


def _remember(key, gb):
    if len(_GB_CACHE) >= _GB_CACHE_MAX:
        _GB_CACHE.pop(next(iter(_GB_CACHE)))
    _GB_CACHE[key] = gb


def clear_cache() -> None:
    _GB_CACHE.clear()


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    if f.ring != G.ring:
        raise AlgebraError(f"ring mismatch: {f.ring} vs {G.ring}")
    if G.truncated_at is not None and f.terms:
        d = weighted_degree(f).degree
        if d > G.truncated_at:
            raise AlgebraError(
                f"basis truncated at degree {G.truncated_at} cannot reduce degree {d}")
    kern = G._kernel()
    r = kern.reduce(kern.to_dict(f))
    return kern.to_poly(r.items())


def ideal_member(f: Polynomial, I: Ideal, budget: int | None = None) -> bool:
    """``f in I``; homogeneous ideals use a basis truncated at the degree of ``f``."""
    if f.ring != I.ring:
        raise AlgebraError("ring mismatch")
    if not f:
        return True
    if not I.generators:
        return False
    bound = None
    if I.is_homogeneous():
        bound = weighted_degree(f).degree
    G = buchberger(I, budget=budget, max_degree=bound)
    return not normal_form(f, G)


def divide(f: Polynomial, divisors: Sequence[Polynomial],
           order: MonomialOrder | None = None) -> tuple[list[Polynomial], Polynomial]:
    """Multivariate division: ``f = sum(q_i * g_i) + r`` with no term of ``r``
    divisible by any leading monomial."""
    ring = f.ring
    order = order or ring.default_order()
    field_ = ring.field
    leads = [g.leading_term(order) for g in divisors]
    sorted_divs = [g.sorted_terms(order) for g in divisors]
    quotients: list[dict] = [{} for _ in divisors]
    h = dict(f.terms)
    rem: dict = {}
    p = ring.characteristic
    key = order.key
    heap = [(tuple(-x for x in key(m)), m) for m in h]
    heapq.heapify(heap)
    while heap:
        _, m = heapq.heappop(heap)
        c = h.pop(m, None)
        if c is None:
            continue
        for i, (lm, lc) in enumerate(leads):
            if _divides(lm, m):
                q = tuple(a - b for a, b in zip(m, lm))
                factor = c * field_.inv(lc)
                if p:
                    factor %= p
                quotients[i][q] = quotients[i].get(q, 0) + factor
                for gm, gc in sorted_divs[i][1:]:
                    k = tuple(a + b for a, b in zip(gm, q))
                    v = h.get(k)
                    if v is None:
                        v = -factor * gc
                        heapq.heappush(heap, (tuple(-x for x in key(k)), k))
                    else:
                        v = v - factor * gc
                    if p:
                        v %= p
                    if v:
                        h[k] = v
                    else:
                        h.pop(k, None)
                break
        else:
            rem[m] = c
    qs = [Polynomial.from_terms(ring, q) for q in quotients]
    return qs, Polynomial(ring, rem)


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """Quotient ``f / g``; raises if ``g`` does not divide ``f``."""
    (q,), r = divide(f, [g])
    if r:
        raise ArithmeticError(f"{g} does not divide {f} exactly")
    return q


# -- linear-algebra membership oracle ----------------------------------------

def monomials_of_degree(weights: Sequence[int], d: int) -> Iterator[tuple[int, ...]]:
    """All exponent vectors of weighted degree exactly ``d``."""
    n = len(weights)
    if n == 0:
        if d == 0:
            yield ()
        return

    def rec(i: int, left: int, prefix: list[int]):
        if i == n - 1:
            w = weights[i]
            if left % w == 0:
                yield tuple(prefix + [left // w])
            return
        w = weights[i]
        for e in range(left // w + 1):
            prefix.append(e)
            yield from rec(i + 1, left - e * w, prefix)
            prefix.pop()

    yield from rec(0, d, [])


def ideal_member_linear_oracle(f: Polynomial, I: Ideal, degree_cap: int) -> bool:
    """Membership by exact linear algebra on one graded piece.

    For homogeneous ``f`` of degree ``D`` the question is whether ``f`` lies in
    the span of ``x^u * g`` over generators ``g`` and monomials ``x^u`` of
    degree ``D - deg g``.  No Groebner machinery is involved.
    """
    ring = I.ring
    if f.ring != ring:
        raise AlgebraError("ring mismatch")
    if not f:
        return True
    info = weighted_degree(f)
    if not info.homogeneous or not I.is_homogeneous():
        raise AlgebraError("linear oracle needs homogeneous input")
    D = info.degree
    if D > degree_cap:
        raise InconclusiveOracle(f"degree {D} exceeds the cap {degree_cap}")
    p = ring.characteristic
    fld = ring.field
    pivots: dict = {}   # pivot monomial -> row (dict), pivot coefficient 1

    def reduce_vec(vec: dict) -> dict:
        vec = dict(vec)
        while vec:
            piv = next((m for m in sorted(vec, reverse=True) if m in pivots), None)
            if piv is None:
                return vec
            c = vec[piv]
            for m, v in pivots[piv].items():
                nv = vec.get(m, 0) - c * v
                if p:
                    nv %= p
                if nv:
                    vec[m] = nv
                else:
                    vec.pop(m, None)
        return vec

    def insert(vec: dict):
        vec = reduce_vec(vec)
        if not vec:
            return
        piv = max(vec)
        inv = fld.inv(vec[piv])
        row = {m: (v * inv % p if p else v * inv) for m, v in vec.items()}
        pivots[piv] = row

    for g in I.generators:
        dg = weighted_degree(g).degree
        if dg > D:
            continue
        for u in monomials_of_degree(ring.weights, D - dg):
            insert(g.shift(u).terms)
    return not reduce_vec(f.terms)


# -- derived ideal operations ----------------------------------------------

def _with_aux(ring: RingSignature, stem: str = "z") -> tuple[RingSignature, int]:
    name = ring.fresh_name(stem)
    return ring.extend([name], [1], front=True), 0


def eliminate(I: Ideal, keep: Iterable[str | int], budget: int | None = None) -> Ideal:
    """Generators of ``I`` intersected with the subring in the kept variables."""
    ring = I.ring
    keep_idx = {k if isinstance(k, int) else ring.index(k) for k in keep}
    drop = [i for i in range(ring.nvars) if i not in keep_idx]
    if not drop:
        return I
    order = MonomialOrder.elimination(ring.weights, drop)
    G = buchberger(I, order, budget=budget)
    kept = [g for g in G.basis if not (g.variables() & set(drop))]
    return Ideal(ring, kept)


def intersect(I: Ideal, J: Ideal, budget: int | None = None,
              max_degree: int | None = None, common: Ideal | None = None) -> Ideal:
    """``I ∩ J`` as the auxiliary-variable elimination of ``zI + (1 - z)J``.

    The auxiliary variable gets grading weight zero, so homogeneous inputs
    stay homogeneous and the computation runs degree by degree.  ``common``
    names an ideal known to lie in both; its generators enter untagged,
    which yields the same elimination ideal with far less work.
    """
    if I.ring != J.ring:
        raise AlgebraError("ring mismatch")
    ring = I.ring
    big, zi = _with_aux(ring)
    z = big.var(zi)
    shared = set(common.generators) if common is not None else set()
    gens = [z * g.to_ring(big) for g in I.generators if g not in shared]
    gens += [(1 - z) * g.to_ring(big) for g in J.generators if g not in shared]
    gens += [g.to_ring(big) for g in (common.generators if common is not None else ())]
    order = MonomialOrder.elimination(big.weights, [zi])
    grading = tuple(0 if i == zi else w for i, w in enumerate(big.weights))
    G = buchberger(Ideal(big, gens), order, budget=budget, grading=grading,
                   max_degree=max_degree)
    kept = [g.to_ring(ring) for g in G.basis if zi not in g.variables()]
    if G.truncated_at is not None:
        kept = [g for g in kept if weighted_degree(g).degree <= max_degree]
    return Ideal(ring, kept)


def colon_ideal(I: Ideal, f: Polynomial, budget: int | None = None,
                max_degree: int | None = None) -> Ideal:
    """``(I : f)`` computed from ``I ∩ (f)``; every generator is spot-checked.

    With ``max_degree`` (homogeneous input) the result generates the colon
    in degrees up to that bound only.
    """
    if not f:
        raise AlgebraError("colon by the zero polynomial")
    ring = I.ring
    bound = None
    if max_degree is not None and I.is_homogeneous() and is_homogeneous(f):
        bound = max_degree + weighted_degree(f).degree
    inter = intersect(I, Ideal(ring, [f]), budget=budget, max_degree=bound)
    gens = [exact_divide(g, f) for g in inter.generators]
    result = Ideal(ring, gens)
    for g in result.generators:
        if not ideal_member(g * f, I, budget=budget):
            raise ArithmeticError(f"colon spot-check failed for {g}")
    return result


def colon_by_ideal(I: Ideal, J: Ideal, budget: int | None = None,
                   max_degree: int | None = None) -> Ideal:
    """``(I : J)``, folding in one generator of ``J`` at a time.

    With ``A`` the colon so far, ``A ∩ (I : g) = (I ∩ gA) / g`` because the
    polynomial ring is a domain; each step therefore intersects with ``I``
    itself, whose generators are usually far smaller than those of ``A``.
    """
    ring = I.ring
    gens = list(J.generators)
    if not gens:
        return Ideal(ring, [ring.one()])
    homog = I.is_homogeneous() and J.is_homogeneous()
    # lowest degree first: measured to keep the intermediate colons smallest
    gens.sort(key=lambda g: (weighted_degree(g).degree, len(g)))
    A = colon_ideal(I, gens[0], budget=budget, max_degree=max_degree)
    for g in gens[1:]:
        bound = None
        if homog and max_degree is not None:
            bound = max_degree + weighted_degree(g).degree
        inter = intersect(I, Ideal(ring, [g * h for h in A.generators]), budget=budget,
                          max_degree=bound)
        A = Ideal(ring, [exact_divide(h, g) for h in inter.generators])
    for h in A.generators:
        for g in gens:
            if not ideal_member(h * g, I, budget=budget):
                raise ArithmeticError(f"colon spot-check failed for {h}")
    return A


def saturate(I: Ideal, f: Polynomial, budget: int | None = None) -> Ideal:
    """``(I : f^oo)`` as the elimination of ``z`` from ``I + (zf - 1)``."""
    ring = I.ring
    big, zi = _with_aux(ring)
    z = big.var(zi)
    gens = [g.to_ring(big) for g in I.generators] + [z * f.to_ring(big) - 1]
    elim = eliminate(Ideal(big, gens), [i for i in range(big.nvars) if i != zi], budget=budget)
    return Ideal(ring, [g.to_ring(ring) for g in elim.generators])


def radical_member(f: Polynomial, I: Ideal, budget: int | None = None) -> bool:
    """``f`` vanishes on ``V(I)``: ``1 in I + (1 - zf)`` in one more variable."""
    if f.ring != I.ring:
        raise AlgebraError("ring mismatch")
    if not f:
        return True
    ring = I.ring
    big, zi = _with_aux(ring)
    z = big.var(zi)
    gens = [g.to_ring(big) for g in I.generators] + [1 - z * f.to_ring(big)]
    return buchberger(Ideal(big, gens), budget=budget).is_unit()


def ideal_contains(I: Ideal, J: Ideal, budget: int | None = None) -> bool:
    """``J ⊆ I``."""
    return all(ideal_member(g, I, budget=budget) for g in J.generators)


def ideal_equal(I: Ideal, J: Ideal, budget: int | None = None) -> bool:
    return ideal_contains(I, J, budget) and ideal_contains(J, I, budget)


def _independent_sets(ring: RingSignature, leads: list[tuple[int, ...]]):
    n = ring.nvars
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in leads]
    for size in range(n, -1, -1):
        for subset in itertools.combinations(range(n), size):
            s = frozenset(subset)
            if not any(sup <= s for sup in supports):
                yield s


def krull_dimension(I: Ideal, budget: int | None = None) -> int:
    """Largest set of variables independent modulo the leading-term ideal."""
    G = buchberger(I, budget=budget)
    if G.is_unit():
        raise AlgebraError("the unit ideal defines the zero ring, which has no dimension")
    if not G.basis:
        return I.ring.nvars
    return len(next(_independent_sets(I.ring, G.leading_monomials())))


def hilbert_function(I: Ideal, up_to: int, budget: int | None = None) -> list[int]:
    """Number of standard monomials in each weighted degree ``0..up_to``."""
    if not I.is_homogeneous():
        raise AlgebraError("Hilbert function needs homogeneous generators")
    ring = I.ring
    if I.generators:
        G = buchberger(I, budget=budget, max_degree=up_to)
        leads = G.leading_monomials()
    else:
        leads = []
    out = []
    for d in range(up_to + 1):
        count = 0
        for m in monomials_of_degree(ring.weights, d):
            if not any(_divides(l, m) for l in leads):
                count += 1
        out.append(count)
    return out
