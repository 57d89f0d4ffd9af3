"""Sequentially Cohen-Macaulay criteria and their cross-checks.

Three tests are computed independently:

* the Ext test: every Ext^{n-i}(F/U, S) is zero or Cohen-Macaulay of
  dimension i (ground truth, no coordinate hypothesis);
* Hilbert-function equality of all Ext modules of F/U and F/V;
* equality of arithmetic degrees adeg(F/U) = adeg(F/V);

where V is the revlex initial module, either in generic coordinates (gin) or
in the given coordinates when x_n, ..., x_1 is a filter-regular sequence.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import Polynomial, WeightVector
from .ext import ExtProfile, depth, ext_module, ext_profile, is_cohen_macaulay
from .genericity import (
    FilterRegularityReport,
    colon_dimension,
    gin_revlex,
    is_filter_regular_sequence,
)
from .groebner import (
    InternalInconsistency,
    Submodule,
    add_multiples,
    buchberger,
    colon_element,
    initial_module,
    submodule_equal,
    weight_initial,
)
from .hilbert import dim_mult, quotient_series

GENERIC = "generic"
AS_GIVEN = "as-given"
MODES = (GENERIC, AS_GIVEN)


@dataclass(frozen=True)
class Adeg:
    total: int
    per_r: tuple

    def __int__(self):
        return self.total


def adeg(U: Submodule, profile: ExtProfile | None = None) -> Adeg:
    """Arithmetic degree sum_r e_r(Ext^{n-r}(F/U, S)) with its breakdown."""
    prof = profile or ext_profile(U)
    vec = tuple(prof.adeg_vector())
    return Adeg(sum(vec), vec)


@dataclass(frozen=True)
class PeskineResult:
    verdict: bool
    certificates: tuple   # (i, dim, depth) for every nonzero Ext^{n-i}

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "certificates": [
                {"i": i, "ext_index": n_minus_i, "dim": d, "depth": dp, "ok": ok}
                for i, n_minus_i, d, dp, ok in self.certificates
            ],
        }


def peskine_test(U: Submodule, profile: ExtProfile | None = None) -> PeskineResult:
    """Each Ext^{n-i}(F/U, S) is zero or has dimension i and depth i."""
    prof = profile or ext_profile(U)
    n = U.n
    certs = []
    for i in range(n + 1):
        entry = prof[i]
        if entry.series.is_zero():
            continue
        dim = entry.dm.dim
        if dim == 0:
            dp = 0
        else:
            E = ext_module(U, n - i, prof.resolution)
            if E is None:
                raise InternalInconsistency(f"Ext^{n - i} has a nonzero series but an empty presentation")
            dp = depth(E)
        certs.append((i, n - i, dim, dp, dim == i and dp == i))
    return PeskineResult(all(c[-1] for c in certs), tuple(certs))


@dataclass(frozen=True)
class SeriesComparison:
    verdict: bool
    pairs: tuple   # (r, series of Ext^{n-r}(F/U), series of Ext^{n-r}(F/V))

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "per_r": [
                {"r": r, "equal": a == b, "U": a.to_json(), "V": b.to_json()} for r, a, b in self.pairs
            ],
        }


def herzog_sbarra_test(U: Submodule, V: Submodule, pU: ExtProfile | None = None,
                       pV: ExtProfile | None = None) -> SeriesComparison:
    """Exact equality of the Hilbert series of Ext^{n-r}(F/U) and Ext^{n-r}(F/V)."""
    pU = pU or ext_profile(U)
    pV = pV or ext_profile(V)
    pairs = tuple((r, pU[r].series, pV[r].series) for r in range(U.n + 1))
    return SeriesComparison(all(a == b for _, a, b in pairs), pairs)


@dataclass(frozen=True)
class AdegComparison:
    verdict: bool
    U: Adeg
    V: Adeg

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "adeg_U": self.U.total,
            "adeg_V": self.V.total,
            "per_r_U": list(self.U.per_r),
            "per_r_V": list(self.V.per_r),
        }


def adeg_criterion(U: Submodule, V: Submodule, pU: ExtProfile | None = None,
                   pV: ExtProfile | None = None) -> AdegComparison:
    """adeg(F/U) = adeg(F/V); V must be a degeneration of U, so each adeg_r
    can only grow and a decrease is reported as an engine bug."""
    a, b = adeg(U, pU), adeg(V, pV)
    for r, (x, y) in enumerate(zip(a.per_r, b.per_r)):
        if x > y:
            raise InternalInconsistency(f"adeg_{r} dropped under degeneration: {x} > {y}")
    return AdegComparison(a.total == b.total, a, b)


@dataclass
class SeqCMReport:
    mode: str
    seed: int
    n: int
    p: int
    twists: tuple
    peskine: PeskineResult
    filter_regular: FilterRegularityReport
    applicable: bool
    herzog_sbarra: SeriesComparison | None = None
    adeg: AdegComparison | None = None
    gin_stable: bool | None = None
    seeds_tried: tuple = ()
    initial_module: Submodule | None = field(default=None, repr=False)

    @property
    def verdicts(self) -> tuple:
        hs = self.herzog_sbarra.verdict if self.herzog_sbarra else None
        ad = self.adeg.verdict if self.adeg else None
        return self.peskine.verdict, hs, ad

    @property
    def sequentially_cm(self) -> bool:
        return self.peskine.verdict


def _check_agreement(report: SeqCMReport):
    pk, hs, ad = report.verdicts
    if not (pk == hs == ad):
        raise InternalInconsistency(
            f"criteria disagree under applicable hypotheses: ext={pk}, hilbert={hs}, adeg={ad}"
        )


def seqcm_verdict(U: Submodule, mode: str = GENERIC, seed: int = 0, check: bool = True) -> SeqCMReport:
    """Run all three criteria.

    In generic mode U is moved by a random coordinate change and compared with
    its generic initial module.  In as-given mode the revlex initial module in
    the given coordinates is used, and the Hilbert/adeg criteria are only run
    when x_n, ..., x_1 is a filter-regular sequence.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    gin = None
    if mode == GENERIC:
        gin = gin_revlex(U, seed)
        fr = is_filter_regular_sequence(gin.transformed)
        V = gin.module
        applicable = gin.stable
    else:
        fr = is_filter_regular_sequence(U)
        V = initial_module(buchberger(U))
        applicable = fr.overall
    pU = ext_profile(U)
    report = SeqCMReport(
        mode=mode,
        seed=seed,
        n=U.n,
        p=U.ring.p,
        twists=U.module.twists,
        peskine=peskine_test(U, pU),
        filter_regular=fr,
        applicable=applicable,
        gin_stable=gin.stable if gin else None,
        seeds_tried=gin.seeds_tried if gin else (),
        initial_module=V,
    )
    if applicable:
        pV = ext_profile(V)
        report.herzog_sbarra = herzog_sbarra_test(U, V, pU, pV)
        report.adeg = adeg_criterion(U, V, pU, pV)
        if check:
            _check_agreement(report)
    return report


def semicontinuity_chain(U: Submodule, weight: WeightVector | None = None) -> list:
    """Per r: (adeg_r(F/U), adeg_r(F/in_w(U)), adeg_r(F/in_revlex(U)))."""
    w = weight or WeightVector.partial_revlex(U.n)
    a = adeg(U).per_r
    b = adeg(weight_initial(U, w)).per_r
    c = adeg(initial_module(buchberger(U))).per_r
    out = list(zip(a, b, c))
    for r, (x, y, z) in enumerate(out):
        if not x <= y <= z:
            raise InternalInconsistency(f"semicontinuity fails at r={r}: {x}, {y}, {z}")
    return out


@dataclass(frozen=True)
class LemmaCheck:
    applicable: bool
    holds: bool | None


def multiplicity_lemma_check(U: Submodule, ell: Polynomial) -> LemmaCheck:
    """If M = F/U has dim d > 0, M/lM is Cohen-Macaulay of dim d-1 and
    e(M/lM) = e(M), then l is M-regular and M is Cohen-Macaulay."""
    if ell.degree() != 1 or not ell.is_homogeneous():
        raise ValueError("expected a linear form")
    dm = dim_mult(quotient_series(U))
    if dm.dim <= 0:
        return LemmaCheck(False, None)
    Q = add_multiples(U, ell)
    dq = dim_mult(quotient_series(Q))
    if dq.dim != dm.dim - 1 or dq.e != dm.e or not is_cohen_macaulay(Q):
        return LemmaCheck(False, None)
    regular = submodule_equal(colon_element(U, ell), U)
    return LemmaCheck(True, regular and is_cohen_macaulay(U))


def sally_claim_check(U: Submodule, x: Polynomial) -> LemmaCheck:
    """If dim F/U > 1, x is filter regular and depth F/(U + xF) > 0, then x
    is regular and depth drops by exactly one."""
    if x.degree() != 1 or not x.is_homogeneous():
        raise ValueError("expected a linear form")
    if dim_mult(quotient_series(U)).dim <= 1:
        return LemmaCheck(False, None)
    if colon_dimension(U, x) > 0:
        return LemmaCheck(False, None)
    Q = add_multiples(U, x)
    dQ = depth(Q)
    if dQ == 0:
        return LemmaCheck(False, None)
    regular = submodule_equal(colon_element(U, x), U)
    return LemmaCheck(True, regular and depth(U) == dQ + 1)
