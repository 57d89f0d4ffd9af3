"""Reproducible test instances: a few hand-picked modules and a seeded
random family of small homogeneous submodules."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import DEFAULT_PRIME, FreeModule, Ring, Vector
from .bruteforce import random_vector
from .groebner import Submodule


@dataclass(frozen=True)
class Instance:
    name: str
    U: Submodule


def ideal(n: int, polys, p: int = DEFAULT_PRIME) -> Submodule:
    """Submodule of S^1 from a callable taking the list [None, x1, ..., xn]."""
    R = Ring(n, p)
    x = [None] + [R.var(i) for i in range(1, n + 1)]
    F = FreeModule((0,))
    return Submodule(R, F, tuple(Vector.from_polys(R, F, [f]) for f in polys(x)))


def module(n: int, twists, rows, p: int = DEFAULT_PRIME) -> Submodule:
    R = Ring(n, p)
    x = [None] + [R.var(i) for i in range(1, n + 1)]
    F = FreeModule(tuple(twists))
    return Submodule(R, F, tuple(Vector.from_polys(R, F, r) for r in rows(x)))


def curated() -> list:
    return [
        Instance("zero", ideal(2, lambda x: [])),
        Instance("edge_and_vertex", ideal(3, lambda x: [x[1] * x[2], x[1] * x[3]])),
        Instance("two_planes", ideal(4, lambda x: [x[1] * x[3], x[1] * x[4], x[2] * x[3], x[2] * x[4]])),
        Instance("binomial_hypersurface", ideal(3, lambda x: [x[1] * x[2] + x[2] * x[3]])),
        Instance("double_line", ideal(2, lambda x: [x[1] ** 2])),
        Instance("embedded_point", ideal(2, lambda x: [x[1] ** 2, x[1] * x[2]])),
        Instance("line_and_point", ideal(3, lambda x: [x[1] * x[2], x[1] * x[3], x[2] * x[3] - x[3] ** 2])),
        Instance("twisted_rank2", module(2, (0, 1), lambda x: [[x[2] ** 2, x[1]]])),
        Instance("rank2_mixed", module(3, (0, 0), lambda x: [[x[1], x[2]], [x[3] ** 2, 0]])),
    ]


def random_instance(seed: int, p: int = DEFAULT_PRIME) -> Instance:
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 5))
    rank = int(rng.integers(1, 3))
    twists = tuple(int(t) for t in rng.integers(0, 2, size=rank)) if rank > 1 else (0,)
    R = Ring(n, p)
    F = FreeModule(twists)
    gens = []
    for _ in range(int(rng.integers(1, 5))):
        d = int(rng.integers(1, 4))
        v = random_vector(R, F, d + min(twists), rng, terms=int(rng.integers(1, 4)))
        if not v.is_zero():
            gens.append(v)
    return Instance(f"random_{seed}", Submodule(R, F, tuple(gens)))


def random_arrangement(seed: int, p: int = DEFAULT_PRIME) -> Instance:
    """(l1, l2^a)(l3, l4^b) for random linear forms in four variables: two
    planes (possibly thickened) that typically meet in a single point."""
    rng = np.random.default_rng(seed)
    R = Ring(4, p)
    forms = []
    for _ in range(4):
        f = R.zero()
        for i, c in enumerate(rng.integers(0, p, size=4)):
            f = f + int(c) * R.var(i + 1)
        forms.append(f)
    a, b = (int(e) for e in rng.integers(1, 3, size=2))
    F = FreeModule((0,))
    gens = [u * v for u in (forms[0], forms[1] ** a) for v in (forms[2], forms[3] ** b)]
    return Instance(f"arrangement_{seed}", Submodule(R, F, tuple(Vector.from_polys(R, F, [g]) for g in gens)))


def random_corpus(count: int = 50, base_seed: int = 20240611) -> list:
    return [random_instance(base_seed + k) for k in range(count)]


def full_corpus(count: int = 50, arrangements: int = 10) -> list:
    extra = [random_arrangement(base) for base in range(31_000, 31_000 + arrangements)]
    return curated() + random_corpus(count) + extra
