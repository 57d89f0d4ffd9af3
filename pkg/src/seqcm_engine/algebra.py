"""Exact arithmetic over a prime field: monomials, polynomials, graded free
modules with twists, and the term orders used throughout the engine.

Monomials are plain tuples of exponents.  Module terms are pairs
``(component, exponents)`` with 0-based components; they are displayed as
``e1, e2, ...``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

DEFAULT_PRIME = 32003


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Ring:
    """Standard graded polynomial ring k[x1..xn] with k the field of p elements."""

    n: int
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"need at least one variable, got n={self.n}")
        if not is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    def var(self, i: int) -> Polynomial:
        """The variable x_i, 1-based as in the input grammar."""
        if not 1 <= i <= self.n:
            raise ValueError(f"variable index {i} out of range 1..{self.n}")
        e = [0] * self.n
        e[i - 1] = 1
        return Polynomial(self, {tuple(e): 1})

    def one(self) -> Polynomial:
        return Polynomial(self, {(0,) * self.n: 1})

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def inv(self, c: int) -> int:
        return pow(c, self.p - 2, self.p)


# ---------------------------------------------------------------------------
# monomials and orders


class Monomial(tuple):
    """Exponent vector with a cached degree."""

    __slots__ = ()

    @property
    def exponents(self) -> tuple:
        return tuple(self)

    @property
    def degree(self) -> int:
        return sum(self)


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def revlex_key(m) -> tuple:
    """Sort key for revlex; larger key means larger monomial."""
    return (sum(m), tuple(-e for e in reversed(m)))


def revlex_compare(a, b) -> int:
    """Degree first; on a tie the monomial whose exponent difference has a
    negative last nonzero entry is greater.  Returns -1, 0 or 1."""
    ka, kb = revlex_key(a), revlex_key(b)
    return (ka > kb) - (ka < kb)


@dataclass(frozen=True)
class WeightVector:
    weights: tuple

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))

    def __len__(self):
        return len(self.weights)

    @classmethod
    def partial_revlex(cls, n: int) -> WeightVector:
        """The weight (0, ..., 0, -1): first row of the matrix realizing revlex."""
        return cls((0,) * (n - 1) + (-1,))


def weight_of(m, w) -> int:
    ws = w.weights if isinstance(w, WeightVector) else tuple(w)
    if len(ws) != len(m):
        raise ValueError("weight and monomial lengths differ")
    return sum(a * b for a, b in zip(ws, m))


@dataclass(frozen=True)
class FreeModule:
    """Graded free module with basis e_1..e_rank; ``twists[i]`` is deg(e_{i+1})."""

    twists: tuple

    def __post_init__(self):
        object.__setattr__(self, "twists", tuple(int(t) for t in self.twists))
        if not self.twists:
            raise ValueError("free module needs positive rank")

    @property
    def rank(self) -> int:
        return len(self.twists)

    @classmethod
    def free(cls, rank: int, twists=None) -> FreeModule:
        return cls(tuple(twists) if twists is not None else (0,) * rank)

    def dual(self) -> FreeModule:
        return FreeModule(tuple(-t for t in self.twists))


def term_key(term, twists, weight=None) -> tuple:
    """Key for module terms; larger key means larger term.

    Twisted degree first, then (optionally) the weight, then reverse
    lexicographic comparison of the exponents read from x_n backwards
    (smaller exponent wins), then the smaller component.  Inside one twisted
    degree no monomial-degree comparison is made, which keeps x_n-divisibility
    of a lead term equivalent to x_n-divisibility of a homogeneous element.
    """
    comp, m = term
    d = sum(m) + twists[comp]
    w = weight_of(m, weight) if weight is not None else 0
    return (d, w, tuple(-e for e in reversed(m)), -comp)


def module_term_compare(s, t, F: FreeModule, weight=None) -> int:
    for c, _ in (s, t):
        if not 0 <= c < F.rank:
            raise ValueError(f"component {c} invalid for rank {F.rank}")
    ks, kt = term_key(s, F.twists, weight), term_key(t, F.twists, weight)
    return (ks > kt) - (ks < kt)


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Element of k[x1..xn] stored as ``{exponents: coefficient}``."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs=None):
        self.ring = ring
        p = ring.p
        clean = {}
        for m, c in (coeffs or {}).items():
            c %= p
            if c:
                m = tuple(m)
                if len(m) != ring.n:
                    raise ValueError("exponent vector length does not match ring")
                clean[m] = c
        self.coeffs = clean

    @classmethod
    def monomial(cls, ring, m, c=1):
        return cls(ring, {tuple(m): c})

    @classmethod
    def constant(cls, ring, c):
        return cls(ring, {(0,) * ring.n: c})

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def terms(self) -> list:
        """(coefficient, Monomial) pairs, strictly descending in revlex."""
        return [(self.coeffs[m], Monomial(m)) for m in sorted(self.coeffs, key=revlex_key, reverse=True)]

    def lead(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no lead term")
        return self.terms[0]

    def degree(self) -> int:
        if not self.coeffs:
            return -1
        return max(sum(m) for m in self.coeffs)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.coeffs}) <= 1

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("ring mismatch")
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.ring, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Vector):
            return other.__rmul__(self)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Polynomial.constant(self.ring, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(self.ring, other)
        return isinstance(other, Polynomial) and self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, frozenset(self.coeffs.items())))

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)})"


def _format_monomial(m) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts)


def _signed(c: int, p: int) -> int:
    return c - p if c > p // 2 else c


def format_terms(pairs, p: int) -> str:
    """Render (coefficient, monomial) pairs with symmetric coefficients."""
    if not pairs:
        return "0"
    out = []
    for c, m in pairs:
        c = _signed(c, p)
        mono = _format_monomial(m)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        out.append((sign, body))
    head = out[0][1] if out[0][0] == "+" else "-" + out[0][1]
    return head + "".join(f" {s} {b}" for s, b in out[1:])


def format_polynomial(f: Polynomial) -> str:
    return format_terms(f.terms, f.ring.p)


# ---------------------------------------------------------------------------
# vectors in graded free modules


class Vector:
    """Element of a graded free module, stored as ``{(comp, exponents): coeff}``."""

    __slots__ = ("ring", "module", "coeffs")

    def __init__(self, ring: Ring, module: FreeModule, coeffs=None):
        self.ring = ring
        self.module = module
        p = ring.p
        clean = {}
        for (comp, m), c in (coeffs or {}).items():
            c %= p
            if c:
                if not 0 <= comp < module.rank:
                    raise ValueError(f"component {comp} outside rank {module.rank}")
                clean[(comp, tuple(m))] = c
        self.coeffs = clean

    @classmethod
    def from_polys(cls, ring, module, polys):
        """Vector whose i-th entry is ``polys[i]``."""
        if len(polys) != module.rank:
            raise ValueError(f"expected {module.rank} entries, got {len(polys)}")
        coeffs = {}
        for comp, f in enumerate(polys):
            if isinstance(f, int):
                f = Polynomial.constant(ring, f)
            for m, c in f.coeffs.items():
                coeffs[(comp, m)] = c
        return cls(ring, module, coeffs)

    @classmethod
    def basis(cls, ring, module, comp):
        return cls(ring, module, {(comp, (0,) * ring.n): 1})

    def is_zero(self) -> bool:
        return not self.coeffs

    def entries(self) -> list:
        """Component polynomials."""
        out = [dict() for _ in range(self.module.rank)]
        for (comp, m), c in self.coeffs.items():
            out[comp][m] = c
        return [Polynomial(self.ring, d) for d in out]

    def sorted_terms(self, weight=None) -> list:
        """(comp, coefficient, Monomial) triples, strictly descending."""
        tw = self.module.twists
        keys = sorted(self.coeffs, key=lambda t: term_key(t, tw, weight), reverse=True)
        return [(comp, self.coeffs[(comp, m)], Monomial(m)) for comp, m in keys]

    @property
    def terms(self) -> list:
        return self.sorted_terms()

    def lead(self, weight=None):
        if not self.coeffs:
            raise ValueError("zero vector has no lead term")
        return self.sorted_terms(weight)[0]

    def degrees(self) -> set:
        tw = self.module.twists
        return {sum(m) + tw[comp] for comp, m in self.coeffs}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        ds = self.degrees()
        if len(ds) != 1:
            raise ValueError("degree is defined for nonzero homogeneous vectors only")
        return next(iter(ds))

    def _check(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        if other.ring != self.ring or other.module != self.module:
            raise ValueError("vectors live in different modules")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for t, c in other.coeffs.items():
            out[t] = out.get(t, 0) + c
        return Vector(self.ring, self.module, out)

    def __neg__(self):
        return Vector(self.ring, self.module, {t: -c for t, c in self.coeffs.items()})

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return Vector(self.ring, self.module, {t: other * c for t, c in self.coeffs.items()})
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("ring mismatch")
            out = {}
            for m1, c1 in other.coeffs.items():
                for (comp, m2), c2 in self.coeffs.items():
                    t = (comp, mono_mul(m1, m2))
                    out[t] = out.get(t, 0) + c1 * c2
            return Vector(self.ring, self.module, out)
        return NotImplemented

    __mul__ = __rmul__

    def __eq__(self, other):
        return (
            isinstance(other, Vector)
            and self.ring == other.ring
            and self.module == other.module
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.module, frozenset(self.coeffs.items())))

    def __repr__(self):
        return f"Vector({format_vector(self)})"


def format_vector(v: Vector) -> str:
    return "[" + ", ".join(format_polynomial(f) for f in v.entries()) + "]"


# ---------------------------------------------------------------------------
# linear substitution


@dataclass(frozen=True)
class _LinearForms:
    ring: Ring
    rows: tuple
    cache: dict = field(default_factory=dict, compare=False, hash=False)

    def power(self, i: int, k: int) -> Polynomial:
        key = (i, k)
        if key not in self.cache:
            if k == 0:
                self.cache[key] = self.ring.one()
            else:
                form = Polynomial(
                    self.ring,
                    {tuple(1 if a == j else 0 for a in range(self.ring.n)): self.rows[i][j] for j in range(self.ring.n)},
                )
                self.cache[key] = self.power(i, k - 1) * form
        return self.cache[key]


@lru_cache(maxsize=64)
def _forms(ring: Ring, rows: tuple) -> _LinearForms:
    return _LinearForms(ring, rows)


def _as_rows(g, n: int, p: int) -> tuple:
    rows = tuple(tuple(int(x) % p for x in row) for row in g)
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f"substitution matrix must be {n}x{n}")
    return rows


def substitute_poly(f: Polynomial, g) -> Polynomial:
    """Apply x_i -> sum_j g[i][j] x_j."""
    ring = f.ring
    forms = _forms(ring, _as_rows(g, ring.n, ring.p))
    acc = {}
    for m, c in f.coeffs.items():
        term = Polynomial.constant(ring, c)
        for i, e in enumerate(m):
            if e:
                term = term * forms.power(i, e)
        for mm, cc in term.coeffs.items():
            acc[mm] = acc.get(mm, 0) + cc
    return Polynomial(ring, acc)


def substitute_linear(v, g):
    """Ring substitution x_i -> sum_j g[i][j] x_j applied entrywise.

    Accepts a Polynomial or a Vector.  The caller is responsible for ``g``
    being invertible.
    """
    if isinstance(v, Polynomial):
        return substitute_poly(v, g)
    ring = v.ring
    return Vector.from_polys(ring, v.module, [substitute_poly(f, g) for f in v.entries()])
