"""Random coordinate changes, generic initial modules, filter-regular sequences."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import Polynomial, Ring, substitute_linear
from .groebner import (
    Submodule,
    add_variable,
    buchberger,
    colon_element,
    initial_module,
)
from .hilbert import dim_mult, quotient_series, series_subtract


class GenericityFailure(RuntimeError):
    """Independent random coordinate changes kept disagreeing."""

    def __init__(self, message, seeds):
        super().__init__(message)
        self.seeds = list(seeds)


def child_seed(seed: int, *path: int) -> int:
    """Deterministic 63-bit seed derived from ``seed`` and a path of ints."""
    ss = np.random.SeedSequence([int(seed) & 0xFFFFFFFFFFFFFFFF, *path])
    return int(ss.generate_state(1, np.uint64)[0] >> np.uint64(1))


def det_mod_p(rows, p: int) -> int:
    a = [[x % p for x in r] for r in rows]
    n = len(a)
    det = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det = det * a[c][c] % p
        inv = pow(a[c][c], p - 2, p)
        for r in range(c + 1, n):
            f = a[r][c] * inv % p
            if f:
                a[r] = [(x - f * y) % p for x, y in zip(a[r], a[c])]
    return det % p


def inverse_mod_p(rows, p: int) -> tuple:
    n = len(rows)
    a = [[x % p for x in r] + [int(i == j) for j in range(n)] for i, r in enumerate(rows)]
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        a[c], a[piv] = a[piv], a[c]
        inv = pow(a[c][c], p - 2, p)
        a[c] = [x * inv % p for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [(x - f * y) % p for x, y in zip(a[r], a[c])]
    return tuple(tuple(r[n:]) for r in a)


@dataclass(frozen=True)
class CoordinateChange:
    """x_i -> sum_j matrix[i][j] x_j over the field of p elements."""

    matrix: tuple
    seed: int
    p: int

    def inverse(self) -> CoordinateChange:
        return CoordinateChange(inverse_mod_p(self.matrix, self.p), self.seed, self.p)

    def apply(self, U: Submodule) -> Submodule:
        return Submodule(U.ring, U.module, tuple(substitute_linear(g, self.matrix) for g in U.generators))


def random_change(seed: int, ring: Ring) -> CoordinateChange:
    """Full random invertible matrix, a deterministic function of ``seed``."""
    n, p = ring.n, ring.p
    rng = np.random.default_rng(seed)
    while True:
        m = rng.integers(0, p, size=(n, n))
        rows = tuple(tuple(int(x) for x in r) for r in m)
        if det_mod_p(rows, p):
            return CoordinateChange(rows, seed, p)


@dataclass(frozen=True)
class GinResult:
    module: Submodule        # gin_revlex(U), monomial
    transformed: Submodule   # g U for the accepted change g
    change: CoordinateChange
    stable: bool
    seeds_tried: tuple


def gin_revlex(U: Submodule, seed: int = 0, retries: int = 3) -> GinResult:
    """in_revlex(gU) for a random g, accepted once an independent change g'
    yields the same initial module."""
    tried = []
    for attempt in range(retries + 1):
        s1, s2 = child_seed(seed, attempt, 0), child_seed(seed, attempt, 1)
        tried += [s1, s2]
        g1 = random_change(s1, U.ring)
        gU = g1.apply(U)
        in1 = initial_module(buchberger(gU))
        if not U.generators:
            return GinResult(in1, gU, g1, True, tuple(tried))
        g2 = random_change(s2, U.ring)
        in2 = initial_module(buchberger(g2.apply(U)))
        if set(in1.generators) == set(in2.generators):
            return GinResult(in1, gU, g1, True, tuple(tried))
    raise GenericityFailure(f"generic initial module unstable after {retries + 1} attempts", tried)


@dataclass(frozen=True)
class FilterRegularityReport:
    """Per variable x_i (i from n down to 1): dimension of the colon module
    (U' : x_i)/U' for U' = U + (x_n, ..., x_{i+1})F, and whether x_i is filter
    regular on F/U'.  Dimension -1 means the colon module is zero."""

    entries: tuple   # ((i, dim, verdict), ...)

    @property
    def overall(self) -> bool:
        return all(v for _, _, v in self.entries)

    def first_failure(self):
        return next((i for i, _, v in self.entries if not v), None)

    def to_json(self) -> dict:
        return {
            "overall": self.overall,
            "per_variable": [{"variable": f"x{i}", "colon_dim": d, "filter_regular": v} for i, d, v in self.entries],
        }


def colon_dimension(U: Submodule, f) -> int:
    """Krull dimension of (U : f)/U, i.e. of 0 :_{F/U} f; ``f`` is a
    Polynomial or a 1-based variable index."""
    x = f if isinstance(f, Polynomial) else U.ring.var(f)
    col = colon_element(U, x)
    diff = series_subtract(quotient_series(U), quotient_series(col))
    return dim_mult(diff).dim


def is_filter_regular_sequence(U: Submodule) -> FilterRegularityReport:
    """Test x_n, x_{n-1}, ..., x_1 in this order."""
    entries = []
    cur = U
    for i in range(U.n, 0, -1):
        d = colon_dimension(cur, i)
        entries.append((i, d, d <= 0))
        cur = add_variable(cur, i)
    return FilterRegularityReport(tuple(entries))


def random_linear_form(ring: Ring, seed: int):
    rng = np.random.default_rng(seed)
    coeffs = [int(c) for c in rng.integers(1, ring.p, size=ring.n)]
    out = ring.zero()
    for i, c in enumerate(coeffs):
        out = out + c * ring.var(i + 1)
    return out
