"""Cross-checks of the symbolic engine against brute force and against
structural identities.  Each function returns a small record; the callers
(CLI self-check, test suite) decide what a failure means."""

from __future__ import annotations

from dataclasses import dataclass

from . import bruteforce as bf
from .algebra import WeightVector
from .ext import dualize, ext_profile, free_resolution, cohomology_series
from .genericity import colon_dimension
from .groebner import (
    Submodule,
    add_variable,
    buchberger,
    initial_module,
    saturate_element,
    submodule_equal,
    weight_initial,
)
from .hilbert import quotient_series


@dataclass(frozen=True)
class Mismatch:
    what: str
    degree: int
    engine: int
    oracle: int


def hilbert_oracle(U: Submodule, degree_bound: int = 8) -> list:
    """Compare HF of F/U, F/in_w(U), F/in(U) with rank counting on F/U."""
    bad = []
    w = WeightVector.partial_revlex(U.n)
    series = {
        "F/U": quotient_series(U),
        "F/in_w(U)": quotient_series(weight_initial(U, w)),
        "F/in(U)": quotient_series(initial_module(buchberger(U))),
    }
    lo = min([0] + list(U.module.twists))
    for j in range(lo, degree_bound + 1):
        truth = bf.quotient_hf(U, j)
        for name, H in series.items():
            if H(j) != truth:
                bad.append(Mismatch(name, j, H(j), truth))
    return bad


def ext_oracle(U: Submodule, degree_bound: int = 6, lower: int | None = None) -> list:
    """Compare the Ext series with degreewise ranks of the dual complex."""
    D = dualize(free_resolution(U))
    twists = [t for m in D.modules for t in m.twists]
    lo = lower if lower is not None else min(twists + [0]) - 1
    bad = []
    cache = {}
    for pos in range(U.n + 1):
        H = cohomology_series(D, pos, _images=cache)
        for j in range(lo, degree_bound + 1):
            truth = bf.cohomology_dimension(D, pos, j)
            if H(j) != truth:
                bad.append(Mismatch(f"Ext^{pos}", j, H(j), truth))
    return bad


def dimension_bound(U: Submodule) -> bool:
    """dim Ext^{n-r}(F/U, S) <= r for every r."""
    prof = ext_profile(U)
    return all(e.dm.dim <= e.r for e in prof.entries)


def revlex_commutation(U: Submodule) -> tuple:
    """(in(U + x_n F) == in(U) + x_n F, in(U : x_n^inf) == in(U) : x_n^inf)."""
    n = U.n
    xn = U.ring.var(n)
    V = initial_module(buchberger(U))
    first = submodule_equal(initial_module(buchberger(add_variable(U, n))), add_variable(V, n))
    second = submodule_equal(initial_module(buchberger(saturate_element(U, xn))), saturate_element(V, xn))
    return first, second


def hf_recursion(U: Submodule, window: int = 10):
    """Degreewise check of
        HF(Ext^{n-r+1}(F/(W + x_n F)); j) = HF(Ext^{n-r}(F/U); j+1) - HF(Ext^{n-r}(F/U); j)
    for r > 0, with W = U : x_n^inf (a module of positive depth with the same
    Ext^{n-r}, r > 0).  Returns the list of mismatches, or None when x_n is
    not filter regular on F/U."""
    n = U.n
    if colon_dimension(U, n) > 0:
        return None
    W = saturate_element(U, U.ring.var(n))
    lower = ext_profile(add_variable(W, n))
    upper = ext_profile(U)
    lows = [e.series.low_degree() for e in upper.entries + lower.entries if not e.series.is_zero()]
    highs = [max(dict(e.series.numerator)) for e in upper.entries + lower.entries if not e.series.is_zero()]
    if not lows:
        return []
    bad = []
    for r in range(1, n + 1):
        A = upper[r].series
        B = lower[r - 1].series
        for j in range(min(lows) - window, max(highs) + window + 1):
            lhs, rhs = B(j), A(j + 1) - A(j)
            if lhs != rhs:
                bad.append(Mismatch(f"r={r}", j, lhs, rhs))
    return bad


def matlis_reflection(U: Submodule, window: int = 10):
    """HF(Ext^n(F/U); j) against HF(U^sat/U; -j-n), with U^sat = U : x_n^inf;
    only meaningful when x_n is filter regular.  Returns mismatches or None."""
    n = U.n
    if colon_dimension(U, n) > 0:
        return None
    sat = saturate_element(U, U.ring.var(n))
    local = quotient_series(U) - quotient_series(sat)
    top = ext_profile(U)[0].series
    bad = []
    for j in range(-window - n, window + 1):
        if top(j) != local(-j - n):
            bad.append(Mismatch("Ext^n", j, top(j), local(-j - n)))
    return bad
