"""Exact coefficients, weighted rings, monomial orders and sparse polynomials.

Polynomials are stored as a dict from exponent tuples to nonzero
coefficients. Coefficients of a prime field are ints in ``[0, p)``;
coefficients over the rationals are :class:`fractions.Fraction`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Sequence, Union

MAX_EXPONENT = 10**6

Coefficient = Union[int, Fraction]


class AlgebraError(ValueError):
    """Base error for malformed algebraic input."""


class PolynomialSyntaxError(AlgebraError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


class ExponentOverflow(AlgebraError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


@dataclass(frozen=True)
class CoefficientField:
    """The prime field F_p (``characteristic == p``) or the rationals (``0``)."""

    characteristic: int

    def __post_init__(self):
        c = self.characteristic
        if c != 0 and not is_prime(c):
            raise AlgebraError(f"characteristic {c} is not prime")

    @classmethod
    def prime(cls, p: int) -> "CoefficientField":
        return cls(int(p))

    @classmethod
    def rationals(cls) -> "CoefficientField":
        return cls(0)

    @property
    def is_prime_field(self) -> bool:
        return self.characteristic != 0

    def __call__(self, value) -> Coefficient:
        p = self.characteristic
        if p:
            if isinstance(value, Fraction):
                if value.denominator % p == 0:
                    raise AlgebraError(f"{value} is not defined in F_{p}")
                return value.numerator * pow(value.denominator, -1, p) % p
            return int(value) % p
        return Fraction(value)

    def inv(self, c: Coefficient) -> Coefficient:
        p = self.characteristic
        if p:
            c %= p
            if c == 0:
                raise ZeroDivisionError(f"0 has no inverse in F_{p}")
            return pow(c, -1, p)
        if c == 0:
            raise ZeroDivisionError("0 has no inverse in Q")
        return 1 / Fraction(c)

    def signed(self, c: Coefficient) -> Coefficient:
        """Representative of smallest absolute value, used only for display."""
        p = self.characteristic
        if p and c > p // 2:
            return c - p
        return c

    def __str__(self) -> str:
        return f"GF({self.characteristic})" if self.characteristic else "QQ"


@dataclass(frozen=True)
class RingSignature:
    """Ordered variables with positive integer weights over a coefficient field."""

    names: tuple[str, ...]
    weights: tuple[int, ...]
    field: CoefficientField

    def __post_init__(self):
        names = tuple(self.names)
        weights = tuple(int(w) for w in self.weights)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "weights", weights)
        if len(names) != len(weights):
            raise AlgebraError("one weight per variable is required")
        folded = [n.lower() for n in names]
        if len(set(folded)) != len(folded):
            raise AlgebraError(f"variable names are not distinct: {names}")
        for n in names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", n):
                raise AlgebraError(f"bad variable name {n!r}")
        if any(w <= 0 for w in weights):
            raise AlgebraError("weights must be positive")

    @classmethod
    def make(cls, names: Sequence[str] | str, weights: Sequence[int] | None = None,
             field: CoefficientField | int = 0) -> "RingSignature":
        if isinstance(names, str):
            names = names.replace(",", " ").split()
        if weights is None:
            weights = (1,) * len(names)
        if isinstance(field, int):
            field = CoefficientField(field)
        return cls(tuple(names), tuple(weights), field)

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def characteristic(self) -> int:
        return self.field.characteristic

    def index(self, name: str) -> int:
        low = name.lower()
        for i, n in enumerate(self.names):
            if n.lower() == low:
                return i
        raise AlgebraError(f"unknown variable {name!r} in ring {self.names}")

    def degree(self, exps: Sequence[int]) -> int:
        return sum(w * e for w, e in zip(self.weights, exps))

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        return Polynomial.from_terms(self, {(0,) * self.nvars: c})

    def var(self, name: str | int) -> "Polynomial":
        i = name if isinstance(name, int) else self.index(name)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field(1)})

    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.var(i) for i in range(self.nvars))

    def monomial(self, exps: Sequence[int], coeff=1) -> "Polynomial":
        return Polynomial.from_terms(self, {tuple(exps): coeff})

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(text, self)

    def with_field(self, field: CoefficientField | int) -> "RingSignature":
        if isinstance(field, int):
            field = CoefficientField(field)
        return RingSignature(self.names, self.weights, field)

    def extend(self, names: Sequence[str], weights: Sequence[int] | None = None,
               front: bool = False) -> "RingSignature":
        """New ring with extra variables appended (or prepended)."""
        names = tuple(names)
        weights = tuple(weights) if weights is not None else (1,) * len(names)
        if front:
            return RingSignature(names + self.names, weights + self.weights, self.field)
        return RingSignature(self.names + names, self.weights + weights, self.field)

    def fresh_name(self, stem: str = "z") -> str:
        taken = {n.lower() for n in self.names}
        name, i = stem, 0
        while name.lower() in taken:
            i += 1
            name = f"{stem}{i}"
        return name

    def default_order(self) -> "MonomialOrder":
        return MonomialOrder.weighted(self.weights)

    def __str__(self) -> str:
        vs = ", ".join(f"{n}:{w}" for n, w in zip(self.names, self.weights))
        return f"{self.field}[{vs}]"


class Monomial(NamedTuple):
    exponents: tuple[int, ...]
    degree: int

    @classmethod
    def of(cls, ring: RingSignature, exps: Sequence[int]) -> "Monomial":
        exps = tuple(exps)
        return cls(exps, ring.degree(exps))


@dataclass(frozen=True)
class MonomialOrder:
    """A matrix order: monomials compare by ``matrix @ exponents`` lexicographically.

    All matrix entries are nonnegative and the matrix has full column rank,
    which makes the order a multiplicative well-order with 1 as minimum.
    """

    name: str
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.matrix)
        object.__setattr__(self, "matrix", rows)
        if not rows:
            return
        n = len(rows[0])
        if any(len(r) != n for r in rows) or any(x < 0 for r in rows for x in r):
            raise AlgebraError("order matrix must be rectangular and nonnegative")
        if _rank(rows) != n:
            raise AlgebraError("order matrix must have full column rank")

    @property
    def nvars(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0

    def key(self, exps: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(a * e for a, e in zip(row, exps)) for row in self.matrix)

    @staticmethod
    def _revlex_rows(n: int) -> list[tuple[int, ...]]:
        return [tuple(1 if j < k else 0 for j in range(n)) for k in range(n - 1, 0, -1)]

    @classmethod
    def lex(cls, n: int) -> "MonomialOrder":
        return cls("lex", tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def grevlex(cls, n: int) -> "MonomialOrder":
        return cls("grevlex", ((1,) * n, *cls._revlex_rows(n)))

    @classmethod
    def weighted(cls, weights: Sequence[int]) -> "MonomialOrder":
        """Weighted degree first, ties broken by reverse lex on the variable order."""
        weights = tuple(weights)
        return cls(f"wgrevlex{weights}", (weights, *cls._revlex_rows(len(weights))))

    @classmethod
    def elimination(cls, weights: Sequence[int], eliminate: Iterable[int]) -> "MonomialOrder":
        """Block order: weighted degree in the eliminated variables first."""
        weights = tuple(weights)
        elim = set(eliminate)
        first = tuple(w if i in elim else 0 for i, w in enumerate(weights))
        base = cls.weighted(weights)
        return cls(f"elim{sorted(elim)}/{base.name}", (first, *base.matrix))

    @classmethod
    def named(cls, name: str, ring: RingSignature) -> "MonomialOrder":
        name = name.lower()
        if name == "lex":
            return cls.lex(ring.nvars)
        if name == "grevlex":
            return cls.grevlex(ring.nvars)
        if name in ("wgrevlex", "weighted", "default"):
            return cls.weighted(ring.weights)
        raise AlgebraError(f"unknown monomial order {name!r}")

    def __str__(self) -> str:
        return self.name


def _rank(rows) -> int:
    m = [[Fraction(x) for x in r] for r in rows]
    rank, ncols = 0, len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col] / m[rank][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


class DegreeInfo(NamedTuple):
    degree: int
    homogeneous: bool


class Polynomial:
    """Sparse polynomial; treat instances as immutable."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: RingSignature, terms: dict):
        # trusted constructor: terms must be canonical and nonzero
        self.ring = ring
        self.terms = terms
        self._hash = None

    @classmethod
    def from_terms(cls, ring: RingSignature, terms: Mapping | Iterable) -> "Polynomial":
        items = terms.items() if isinstance(terms, Mapping) else terms
        field = ring.field
        out: dict = {}
        n = ring.nvars
        for exps, c in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != n:
                raise AlgebraError(f"exponent vector {exps} has wrong length for {ring.names}")
            if any(e < 0 for e in exps):
                raise AlgebraError("negative exponent")
            if any(e > MAX_EXPONENT for e in exps):
                raise ExponentOverflow(f"exponent above {MAX_EXPONENT}")
            c = field(c) + out.get(exps, 0)
            if field.characteristic:
                c %= field.characteristic
            if c:
                out[exps] = c
            else:
                out.pop(exps, None)
        return cls(ring, out)

    # -- basic protocol -------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({self.render()!r})"

    def __str__(self) -> str:
        return self.render()

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise AlgebraError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    # -- arithmetic ------------------------------------------------------
    def _combine(self, other: "Polynomial", sign: int) -> "Polynomial":
        p = self.ring.characteristic
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + sign * c
            if p:
                v %= p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out)

    def __add__(self, other) -> "Polynomial":
        return self._combine(self._coerce(other), 1)

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        return self._combine(self._coerce(other), -1)

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other)._combine(self, -1)

    def __neg__(self) -> "Polynomial":
        p = self.ring.characteristic
        if p:
            return Polynomial(self.ring, {m: p - c for m, c in self.terms.items()})
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        p = self.ring.characteristic
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                out[m] = get(m, 0) + ca * cb
        if p:
            out = {m: c % p for m, c in out.items() if c % p}
        else:
            out = {m: c for m, c in out.items() if c}
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        c = self.ring.field(c)
        if not c:
            return self.ring.zero()
        p = self.ring.characteristic
        if p:
            return Polynomial(self.ring, {m: v * c % p for m, v in self.terms.items()})
        return Polynomial(self.ring, {m: v * c for m, v in self.terms.items()})

    def shift(self, exps: Sequence[int], c=1) -> "Polynomial":
        """Multiply by the monomial ``c * x^exps``."""
        c = self.ring.field(c)
        p = self.ring.characteristic
        out = {}
        for m, v in self.terms.items():
            w = v * c % p if p else v * c
            if w:
                out[tuple(x + y for x, y in zip(m, exps))] = w
        return Polynomial(self.ring, out)

    def __pow__(self, k: int) -> "Polynomial":
        return poly_power(self, k)

    # -- inspection ------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def monomials(self) -> list[Monomial]:
        return [Monomial.of(self.ring, m) for m in self.terms]

    def coefficient(self, exps: Sequence[int]) -> Coefficient:
        return self.terms.get(tuple(exps), self.ring.field(0))

    def max_exponent(self) -> int:
        return max((max(m) for m in self.terms if m), default=0)

    def variables(self) -> set[int]:
        """Indices of the variables occurring in some term."""
        used: set[int] = set()
        for m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        return used

    def sorted_terms(self, order: MonomialOrder | None = None) -> list[tuple[tuple[int, ...], Coefficient]]:
        order = order or self.ring.default_order()
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_term(self, order: MonomialOrder | None = None) -> tuple[tuple[int, ...], Coefficient]:
        if not self.terms:
            raise AlgebraError("zero polynomial has no leading term")
        order = order or self.ring.default_order()
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def monic(self, order: MonomialOrder | None = None) -> "Polynomial":
        if not self.terms:
            return self
        _, c = self.leading_term(order)
        return self.scale(self.ring.field.inv(c))

    def homogeneous_components(self) -> dict[int, "Polynomial"]:
        parts: dict[int, dict] = {}
        deg = self.ring.degree
        for m, c in self.terms.items():
            parts.setdefault(deg(m), {})[m] = c
        return {d: Polynomial(self.ring, t) for d, t in sorted(parts.items())}

    def derivative(self, var: int | str) -> "Polynomial":
        i = var if isinstance(var, int) else self.ring.index(var)
        p = self.ring.characteristic
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e == 0:
                continue
            v = c * e
            if p:
                v %= p
            if v:
                out[m[:i] + (e - 1,) + m[i + 1:]] = v
        return Polynomial(self.ring, out)

    def substitute(self, images: Mapping[str | int, "Polynomial"], target: RingSignature | None = None) -> "Polynomial":
        """Ring map: variables named in ``images`` go to the given polynomials.

        Unnamed variables map to the same-named variable of ``target``.
        """
        target = target or self.ring
        imgs: list[Polynomial] = []
        keyed = {(k if isinstance(k, int) else self.ring.index(k)): v for k, v in images.items()}
        for i, name in enumerate(self.ring.names):
            if i in keyed:
                img = keyed[i]
                if img.ring != target:
                    raise AlgebraError("substitution image lives in the wrong ring")
                imgs.append(img)
            else:
                imgs.append(target.var(name))
        powers: list[dict[int, Polynomial]] = [{0: target.one()} for _ in imgs]

        def power(i: int, e: int) -> Polynomial:
            cache = powers[i]
            if e not in cache:
                cache[e] = poly_power(imgs[i], e)
            return cache[e]

        acc = target.zero()
        for m, c in self.terms.items():
            term = target.constant(c) if target.field == self.ring.field else target.constant(
                self.ring.field.signed(c))
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            acc = acc + term
        return acc

    def to_ring(self, target: RingSignature) -> "Polynomial":
        """Re-express in a ring that contains every variable used here (by name)."""
        idx = [None] * self.ring.nvars
        for i, name in enumerate(self.ring.names):
            try:
                idx[i] = target.index(name)
            except AlgebraError:
                idx[i] = None
        out = {}
        n = target.nvars
        for m, c in self.terms.items():
            e = [0] * n
            for i, k in enumerate(m):
                if k:
                    if idx[i] is None:
                        raise AlgebraError(f"variable {self.ring.names[i]} absent from target ring")
                    e[idx[i]] = k
            out[tuple(e)] = c
        if target.field != self.ring.field:
            return Polynomial.from_terms(target, out)
        return Polynomial(target, out)

    def render(self, order: MonomialOrder | None = None) -> str:
        return render_polynomial(self, order)


def weighted_degree(f: Polynomial) -> DegreeInfo:
    if not f.terms:
        raise AlgebraError("the zero polynomial has no weighted degree")
    degs = {f.ring.degree(m) for m in f.terms}
    return DegreeInfo(max(degs), len(degs) == 1)


def is_homogeneous(f: Polynomial) -> bool:
    return not f.terms or weighted_degree(f).homogeneous


def poly_power(f: Polynomial, k: int) -> Polynomial:
    if k < 0:
        raise AlgebraError("negative power")
    if k == 0:
        return f.ring.one()
    if f.terms and f.max_exponent() * k > MAX_EXPONENT:
        raise ExponentOverflow(f"power {k} would push exponents above {MAX_EXPONENT}")
    if len(f.terms) == 1:
        (m, c), = f.terms.items()
        p = f.ring.characteristic
        c = pow(c, k, p) if p else c ** k
        return Polynomial(f.ring, {tuple(e * k for e in m): c})
    result = None
    base = f
    while k:
        if k & 1:
            result = base if result is None else result * base
        k >>= 1
        if k:
            base = base * base
    return result


# -- text grammar ----------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(text: str):
    toks = []
    pos = 0
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if mt is None or mt.end() == pos:
            break
        if mt.group(1) is not None:
            toks.append(("int", int(mt.group(1)), mt.start(1)))
        elif mt.group(2) is not None:
            toks.append(("id", mt.group(2), mt.start(2)))
        elif mt.group(3) is not None:
            ch = mt.group(3)
            if ch.isspace():
                pos = mt.end()
                continue
            if ch not in "+-*/^()":
                raise PolynomialSyntaxError(f"unexpected character {ch!r}", text, mt.start(3))
            toks.append(("op", ch, mt.start(3)))
        pos = mt.end()
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, ring: RingSignature):
        self.text = text
        self.ring = ring
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, msg: str, tok=None):
        tok = tok or self.peek()
        raise PolynomialSyntaxError(msg, self.text, tok[2])

    def expect(self, op: str):
        t = self.take()
        if t[0] != "op" or t[1] != op:
            self.fail(f"expected {op!r}", t)

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            self.fail("empty polynomial")
        f = self.expr()
        if self.peek()[0] != "end":
            self.fail("unexpected trailing input")
        return f

    def expr(self) -> Polynomial:
        sign = 1
        t = self.peek()
        if t[0] == "op" and t[1] in "+-":
            self.take()
            sign = -1 if t[1] == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in "+-":
                self.take()
                rhs = self.term()
                acc = acc + rhs if t[1] == "+" else acc - rhs
            else:
                return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] == "*":
                self.take()
                acc = acc * self.factor()
            elif t[0] == "op" and t[1] == "/":
                self.take()
                d = self.take()
                if d[0] != "int":
                    self.fail("only division by an integer literal is supported", d)
                try:
                    inv = self.ring.field.inv(self.ring.field(d[1]))
                except ZeroDivisionError:
                    self.fail(f"coefficient {d[1]} is not invertible in {self.ring.field}", d)
                acc = acc.scale(inv)
            else:
                return acc

    def factor(self) -> Polynomial:
        t = self.peek()
        if t[0] == "op" and t[1] == "-":
            self.take()
            return -self.factor()
        base = self.atom()
        t = self.peek()
        if t[0] == "op" and t[1] == "^":
            self.take()
            e = self.take()
            if e[0] != "int":
                self.fail("exponent must be a nonnegative integer literal", e)
            if e[1] > MAX_EXPONENT:
                raise ExponentOverflow(f"exponent {e[1]} exceeds {MAX_EXPONENT}")
            base = poly_power(base, e[1])
        return base

    def atom(self) -> Polynomial:
        t = self.take()
        if t[0] == "int":
            return self.ring.constant(t[1])
        if t[0] == "id":
            try:
                return self.ring.var(self.ring.index(t[1]))
            except AlgebraError:
                self.fail(f"unknown variable {t[1]!r}", t)
        if t[0] == "op" and t[1] == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        self.fail("expected a coefficient, variable or '('", t)


def parse_polynomial(text: str, ring: RingSignature) -> Polynomial:
    return _Parser(text, ring).parse()


def _render_coeff(c: Coefficient) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def render_polynomial(f: Polynomial, order: MonomialOrder | None = None) -> str:
    if not f.terms:
        return "0"
    names = f.ring.names
    field = f.ring.field
    parts = []
    for m, c in f.sorted_terms(order):
        c = field.signed(c)
        neg = c < 0
        c = -c if neg else c
        factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e]
        if not factors:
            body = _render_coeff(c)
        elif c == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_render_coeff(c), *factors])
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)
