"""Hilbert series of graded quotients F/U, Krull dimension and multiplicity."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .algebra import mono_divides
from .groebner import GroebnerBasis, Submodule, buchberger, initial_module


class NegativeCoefficient(ValueError):
    """A series claimed to describe a module has a negative coefficient."""


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


def _mul(a: dict, b: dict) -> dict:
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return _clean(out)


def _shift(a: dict, k: int) -> dict:
    return {i + k: v for i, v in a.items()}


def _add(a: dict, b: dict, sign: int = 1) -> dict:
    out = dict(a)
    for i, v in b.items():
        out[i] = out.get(i, 0) + sign * v
    return _clean(out)


def _divide_one_minus_t(a: dict) -> dict:
    """Exact quotient a(t) / (1 - t); requires a(1) = 0."""
    if not a:
        return {}
    lo, hi = min(a), max(a)
    out = {}
    acc = 0
    # a = (1 - t) q  =>  q_i = sum_{j <= i} a_j
    for i in range(lo, hi):
        acc += a.get(i, 0)
        if acc:
            out[i] = acc
    if acc + a.get(hi, 0) != 0:
        raise ValueError("numerator does not vanish at t = 1")
    return out


@dataclass(frozen=True)
class HilbertSeries:
    """sum_j HF(M; j) t^j written as numerator(t) / (1 - t)^n.

    ``numerator`` is a sorted tuple of (exponent, coefficient); exponents may
    be negative.  Equality compares the reduced rational functions.
    """

    numerator: tuple
    n: int

    @classmethod
    def from_dict(cls, num: dict, n: int) -> HilbertSeries:
        return cls(tuple(sorted(_clean(num).items())), n)

    @classmethod
    def zero(cls, n: int) -> HilbertSeries:
        return cls((), n)

    @classmethod
    def free(cls, twists, n: int) -> HilbertSeries:
        return cls.from_dict(Counter(twists), n)

    def as_dict(self) -> dict:
        return dict(self.numerator)

    def is_zero(self) -> bool:
        return not self.numerator

    def reduced(self):
        """(Q, d) with self = Q / (1 - t)^d and Q(1) != 0, or ({}, -1) for zero."""
        q = self.as_dict()
        if not q:
            return {}, -1
        d = self.n
        while d > 0 and sum(q.values()) == 0:
            q = _divide_one_minus_t(q)
            d -= 1
        if sum(q.values()) == 0:
            raise ValueError("series has a zero of order exceeding n at t = 1")
        return q, d

    def canonical(self) -> tuple:
        q, d = self.reduced()
        return tuple(sorted(q.items())), d

    def __eq__(self, other):
        return isinstance(other, HilbertSeries) and self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def __add__(self, other):
        return HilbertSeries.from_dict(_add(self._lift(other.n), other._lift(self.n)), max(self.n, other.n))

    def __sub__(self, other):
        return series_subtract(self, other)

    def _lift(self, n: int) -> dict:
        q = self.as_dict()
        for _ in range(n - self.n):
            q = _mul(q, {0: 1, 1: -1})
        return q

    def shift(self, k: int) -> HilbertSeries:
        """Series of M(-k), i.e. multiplied by t^k."""
        return HilbertSeries.from_dict(_shift(self.as_dict(), k), self.n)

    def __call__(self, j: int) -> int:
        return hf_eval(self, j)

    def coefficients(self, lo: int, hi: int) -> list:
        return [hf_eval(self, j) for j in range(lo, hi + 1)]

    def low_degree(self):
        return self.numerator[0][0] if self.numerator else None

    def to_json(self) -> dict:
        q, d = self.reduced()
        return {
            "numerator": [[e, c] for e, c in sorted(q.items())],
            "denominator_exponent": max(d, 0),
        }

    def __repr__(self):
        if not self.numerator:
            return "HilbertSeries(0)"
        terms = " + ".join(f"{c}*t^{e}" for e, c in self.numerator)
        return f"HilbertSeries(({terms}) / (1-t)^{self.n})"


@dataclass(frozen=True)
class DimensionMultiplicity:
    dim: int
    e: int | None

    def e_r(self, r: int) -> int:
        return self.e if self.dim == r and self.e is not None else 0


# ---------------------------------------------------------------------------
# monomial ideals


def _minimalize(gens) -> tuple:
    out = []
    for m in sorted(set(gens), key=lambda m: (sum(m), m)):
        if not any(mono_divides(g, m) for g in out):
            out.append(m)
    return tuple(out)


def monomial_components(U: Submodule) -> list:
    """Split a monomial submodule of sum S e_i into ideals I_i (minimal
    generators, as exponent tuples) with U = sum I_i e_i."""
    comps = [[] for _ in range(U.rank)]
    for g in U.generators:
        if len(g.coeffs) != 1:
            raise ValueError("monomial_components needs a monomial submodule")
        (comp, m), = g.coeffs
        comps[comp].append(m)
    return [_minimalize(c) for c in comps]


def _pairwise_coprime(gens) -> bool:
    seen = set()
    for m in gens:
        supp = {i for i, e in enumerate(m) if e}
        if supp & seen:
            return False
        seen |= supp
    return True


@lru_cache(maxsize=200_000)
def _numerator(gens: tuple) -> tuple:
    if not gens:
        return ((0, 1),)
    if any(sum(m) == 0 for m in gens):
        return ()
    if _pairwise_coprime(gens):
        out = {0: 1}
        for m in gens:
            out = _mul(out, {0: 1, sum(m): -1})
        return tuple(sorted(out.items()))
    n = len(gens[0])
    # pivot: most frequent variable among non-pure-power generators
    mixed = [m for m in gens if sum(1 for e in m if e) > 1]
    freq = [sum(1 for m in mixed if m[i]) for i in range(n)]
    v = max(range(n), key=lambda i: (freq[i], -i))
    a = min(m[v] for m in mixed if m[v])
    pivot = tuple(a if i == v else 0 for i in range(n))
    plus = _minimalize(gens + (pivot,))
    colon = _minimalize(tuple(tuple(max(x - y, 0) for x, y in zip(m, pivot)) for m in gens))
    left = dict(_numerator(plus))
    right = _shift(dict(_numerator(colon)), a)
    return tuple(sorted(_add(left, right).items()))


def hilbert_numerator(ideal, n: int | None = None) -> dict:
    """N(t) with HS(S/I) = N(t)/(1-t)^n for a monomial ideal I."""
    gens = _minimalize(tuple(tuple(m) for m in ideal))
    return dict(_numerator(gens))


def monomial_quotient_series(U: Submodule) -> HilbertSeries:
    total = {}
    for twist, ideal in zip(U.module.twists, monomial_components(U)):
        total = _add(total, _shift(hilbert_numerator(ideal), twist))
    return HilbertSeries.from_dict(total, U.n)


def quotient_series(U) -> HilbertSeries:
    """Exact Hilbert series of F/U, twists included."""
    G = U if isinstance(U, GroebnerBasis) else buchberger(U)
    return monomial_quotient_series(initial_module(G))


def submodule_series(U) -> HilbertSeries:
    """Hilbert series of U itself."""
    G = U if isinstance(U, GroebnerBasis) else buchberger(U)
    return HilbertSeries.free(G.module.twists, G.ring.n) - quotient_series(G)


def dim_mult(H: HilbertSeries) -> DimensionMultiplicity:
    q, d = H.reduced()
    if d < 0:
        return DimensionMultiplicity(-1, None)
    return DimensionMultiplicity(d, sum(q.values()))


def e_r(H: HilbertSeries, r: int) -> int:
    return dim_mult(H).e_r(r)


def hf_eval(H: HilbertSeries, j: int) -> int:
    """Coefficient of t^j in the expansion of H."""
    n = H.n
    total = 0
    for k, c in H.numerator:
        if k <= j:
            total += c * comb(j - k + n - 1, n - 1)
    return total


def series_subtract(A: HilbertSeries, B: HilbertSeries, check_upto: int | None = None) -> HilbertSeries:
    """A - B; with ``check_upto`` the expansion is verified non-negative up to
    that degree (from the lowest exponent present)."""
    if A.n != B.n:
        raise ValueError("series over different rings")
    out = HilbertSeries.from_dict(_add(A.as_dict(), B.as_dict(), -1), A.n)
    if check_upto is not None and out.numerator:
        check_nonnegative(out, check_upto)
    return out


def check_nonnegative(H: HilbertSeries, upto: int):
    if not H.numerator:
        return
    lo = H.numerator[0][0]
    for j in range(lo, max(upto, lo) + 1):
        if hf_eval(H, j) < 0:
            raise NegativeCoefficient(f"negative Hilbert function value in degree {j}")


def regularity_bound(H: HilbertSeries) -> int:
    """Degree from which HF agrees with the Hilbert polynomial (crude)."""
    q, _ = H.reduced()
    return max(q) if q else 0
