"""Free resolutions, their duals, and the modules Ext^j(F/U, S).

Resolutions are built from minimal generators at every step, so they are
minimal whenever the presentation F/U has no unit relations.  Ext is read off
the dual complex; only Hilbert series of images are needed for the series, and
explicit presentations are built only when a module-level question (depth,
Cohen-Macaulayness) is asked about an Ext module.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .algebra import FreeModule, Ring, Vector
from .groebner import (
    InternalInconsistency,
    Submodule,
    _eliminate,
    buchberger,
    kernel_of_map,
    prune,
)
from .hilbert import (
    DimensionMultiplicity,
    HilbertSeries,
    NegativeCoefficient,
    check_nonnegative,
    dim_mult,
    quotient_series,
    regularity_bound,
    submodule_series,
)


@dataclass(frozen=True)
class FreeComplex:
    """Complex of graded free modules.

    ``differentials[j-1]`` is the map between ``modules[j-1]`` and
    ``modules[j]``, stored as the list of images of the source basis.  For a
    chain complex the source is ``modules[j]``; for a cochain complex it is
    ``modules[j-1]``.
    """

    ring: Ring
    modules: tuple
    differentials: tuple
    cochain: bool = False

    @property
    def length(self) -> int:
        return len(self.modules) - 1

    def source_target(self, j: int):
        """(source, target) of the j-th differential, 1 <= j <= length."""
        if self.cochain:
            return self.modules[j - 1], self.modules[j]
        return self.modules[j], self.modules[j - 1]

    def betti(self) -> list:
        return [m.rank for m in self.modules]

    def compose_is_zero(self) -> bool:
        for j in range(1, self.length):
            first, second = self.differentials[j - 1], self.differentials[j]
            if self.cochain:
                # C^{j-1} -> C^j -> C^{j+1}
                outer, inner = second, first
            else:
                # F_{j+1} -> F_j -> F_{j-1}
                outer, inner = first, second
            for v in inner:
                if not apply_map(outer, v).is_zero():
                    return False
        return True


def apply_map(columns, v: Vector) -> Vector:
    """Image of v under the map sending e_i to ``columns[i]``."""
    if not columns:
        raise ValueError("empty map")
    target = columns[0].module
    ring = v.ring
    out = Vector(ring, target, {})
    for comp, f in enumerate(v.entries()):
        if not f.is_zero():
            out = out + f * columns[comp]
    return out


def transpose(columns, source: FreeModule, target: FreeModule, ring: Ring) -> list:
    """Columns of the dual map target* -> source*."""
    sd = source.dual()
    cols = [dict() for _ in range(target.rank)]
    for b, v in enumerate(columns):
        for (a, m), c in v.coeffs.items():
            cols[a][(b, m)] = c
    return [Vector(ring, sd, d) for d in cols]


def free_resolution(U: Submodule, shuffle_seed: int | None = None) -> FreeComplex:
    """Graded free resolution of F/U with F_0 = F, built from minimal
    generators of successive kernels.

    ``shuffle_seed`` permutes the generators at each step; the result is a
    different (isomorphic) resolution, useful for independence checks.
    """
    ring = U.ring
    rng = random.Random(shuffle_seed) if shuffle_seed is not None else None
    gens = list(buchberger(U).minimal_generators)
    modules = [U.module]
    diffs = []
    while gens:
        if rng is not None:
            rng.shuffle(gens)
        Fj = FreeModule(tuple(g.degree() for g in gens))
        modules.append(Fj)
        diffs.append(tuple(gens))
        if len(modules) > ring.n + 2:
            raise InternalInconsistency("resolution longer than the number of variables allows")
        kernel, _ = kernel_of_map(ring, Fj, modules[-2], gens)
        gens = list(kernel)
    return FreeComplex(ring, tuple(modules), tuple(diffs), False)


def dualize(C: FreeComplex) -> FreeComplex:
    """Hom(C, S): transposed maps, negated twists, arrows reversed."""
    mods = tuple(m.dual() for m in C.modules)
    diffs = []
    for j in range(1, C.length + 1):
        src, tgt = C.source_target(j)
        diffs.append(tuple(transpose(C.differentials[j - 1], src, tgt, C.ring)))
    return FreeComplex(C.ring, mods, tuple(diffs), not C.cochain)


def euler_series(C: FreeComplex) -> HilbertSeries:
    """Alternating sum of the Hilbert series of the free modules."""
    n = C.ring.n
    total = HilbertSeries.zero(n)
    for j, m in enumerate(C.modules):
        s = HilbertSeries.free(m.twists, n)
        total = total + s if j % 2 == 0 else total - s
    return total


def _image_series(C: FreeComplex, j: int) -> HilbertSeries:
    """Series of the image of the j-th differential (1 <= j <= length)."""
    _, target = C.source_target(j)
    cols = C.differentials[j - 1]
    gens = tuple(v for v in cols if not v.is_zero())
    if not gens:
        return HilbertSeries.zero(C.ring.n)
    return submodule_series(Submodule(C.ring, target, gens))


def cohomology_series(C: FreeComplex, j: int, check: bool = True, _images=None) -> HilbertSeries:
    """Hilbert series of ker/im at position j of a (co)chain complex."""
    n = C.ring.n
    if j < 0 or j > C.length:
        return HilbertSeries.zero(n)
    images = _images if _images is not None else {}

    def image(k):
        if k not in images:
            images[k] = _image_series(C, k)
        return images[k]

    total = HilbertSeries.free(C.modules[j].twists, n)
    outgoing = j + 1 if C.cochain else j
    incoming = j if C.cochain else j + 1
    if 1 <= outgoing <= C.length:
        total = total - image(outgoing)
    if 1 <= incoming <= C.length:
        total = total - image(incoming)
    if check and not total.is_zero():
        try:
            check_nonnegative(total, max(8, regularity_bound(total) + 2))
        except NegativeCoefficient as exc:
            raise InternalInconsistency(f"cohomology series at position {j}: {exc}") from exc
    return total


@dataclass(frozen=True)
class ExtEntry:
    r: int
    series: HilbertSeries
    dm: DimensionMultiplicity

    @property
    def adeg(self) -> int:
        return self.dm.e_r(self.r)

    @property
    def ext_index(self) -> int:
        return self.series.n - self.r


@dataclass(frozen=True)
class ExtProfile:
    """For r = 0..n: the Hilbert series, dimension and multiplicity of
    Ext^{n-r}(F/U, S), with adeg_r = e_r."""

    n: int
    entries: tuple
    resolution: FreeComplex = field(repr=False, compare=False, default=None)

    def __getitem__(self, r: int) -> ExtEntry:
        return self.entries[r]

    def adeg_vector(self) -> list:
        return [e.adeg for e in self.entries]

    @property
    def adeg(self) -> int:
        return sum(self.adeg_vector())

    def series(self) -> list:
        return [e.series for e in self.entries]


def ext_series(U: Submodule, resolution: FreeComplex | None = None) -> list:
    """Hilbert series of Ext^j(F/U, S) for j = 0..n."""
    res = resolution or free_resolution(U)
    D = dualize(res)
    cache = {}
    return [cohomology_series(D, j, _images=cache) for j in range(U.n + 1)]


def ext_profile(U: Submodule) -> ExtProfile:
    n = U.n
    res = free_resolution(U)
    series = ext_series(U, res)
    entries = []
    for r in range(n + 1):
        s = series[n - r]
        dm = dim_mult(s)
        if dm.dim > r:
            raise InternalInconsistency(f"dim Ext^{n - r} = {dm.dim} exceeds {r}")
        entries.append(ExtEntry(r, s, dm))
    return ExtProfile(n, tuple(entries), res)


def ext_module(U: Submodule, j: int, resolution: FreeComplex | None = None):
    """Presentation G/R of Ext^j(F/U, S) as a Submodule R of G, pruned.
    Returns None for the zero module."""
    ring = U.ring
    res = resolution or free_resolution(U)
    if j > res.length:
        return None
    D = dualize(res)
    Cj = D.modules[j]
    if j < D.length:
        kernel, _ = kernel_of_map(ring, Cj, D.modules[j + 1], D.differentials[j])
    else:
        kernel = [Vector.basis(ring, Cj, i) for i in range(Cj.rank)]
    if not kernel:
        return None
    G = FreeModule(tuple(v.degree() for v in kernel))
    rows = [(v, Vector.basis(ring, G, k)) for k, v in enumerate(kernel)]
    if j >= 1:
        rows += [(v, None) for v in D.differentials[j - 1] if not v.is_zero()]
    el = _eliminate(ring, Cj, G, rows)
    return prune(Submodule(ring, G, tuple(el.bottom_gb)))


def projective_dimension(U: Submodule) -> int:
    P = prune(U)
    if P is None:
        raise ValueError("projective dimension of the zero module")
    return free_resolution(P).length


def depth(U: Submodule) -> int:
    """depth(F/U) = n - max{j : Ext^j(F/U, S) != 0}.

    After pruning, the resolution is minimal, so the top Ext is the one at
    its length and the formula reduces to n - pd (Auslander-Buchsbaum).
    """
    return U.n - projective_dimension(U)


def module_dimension(U: Submodule) -> int:
    return dim_mult(quotient_series(U)).dim


def is_cohen_macaulay(U: Submodule) -> bool:
    """depth = dim; the zero module counts as Cohen-Macaulay."""
    P = prune(U)
    if P is None:
        return True
    return P.n - free_resolution(P).length == module_dimension(P)
