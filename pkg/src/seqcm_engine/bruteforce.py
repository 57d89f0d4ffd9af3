"""Degree-by-degree linear algebra, independent of Gröbner bases.

These routines only expand polynomials into coordinate vectors of a fixed
graded piece and take ranks mod p.  They serve as oracles for the symbolic
engine and are exponential in the degree, so keep degrees small.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product

import numpy as np

from .algebra import FreeModule, Vector


@lru_cache(maxsize=None)
def monomials_of_degree(n: int, d: int) -> tuple:
    if d < 0:
        return ()
    if n == 1:
        return ((d,),)
    return tuple((a,) + rest for a in range(d, -1, -1) for rest in monomials_of_degree(n - 1, d - a))


def rank_mod_p(rows, p: int) -> int:
    """Rank of an integer matrix over the field with p elements."""
    a = np.array(rows, dtype=np.int64) % p
    if a.size == 0:
        return 0
    nr, nc = a.shape
    rank = 0
    for c in range(nc):
        if rank == nr:
            break
        nz = np.nonzero(a[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, c]), p - 2, p)
        a[rank] = a[rank] * inv % p
        below = a[rank + 1:, c].copy()
        mask = below != 0
        if mask.any():
            a[rank + 1:][mask] = (a[rank + 1:][mask] - np.outer(below[mask], a[rank])) % p
        rank += 1
    return rank


def _basis_index(module: FreeModule, n: int, j: int) -> dict:
    idx = {}
    for comp, t in enumerate(module.twists):
        for m in monomials_of_degree(n, j - t):
            idx[(comp, m)] = len(idx)
    return idx


def _rows(vectors, module: FreeModule, n: int, j: int, idx: dict) -> list:
    """Coordinate rows spanning the degree-j part of the submodule generated
    by ``vectors``."""
    rows = []
    for v in vectors:
        if v.is_zero():
            continue
        d = v.degree()
        for m in monomials_of_degree(n, j - d):
            row = [0] * len(idx)
            for (comp, e), c in v.coeffs.items():
                row[idx[(comp, tuple(a + b for a, b in zip(e, m)))]] = c
            rows.append(row)
    return rows


def submodule_dimension(generators, module: FreeModule, n: int, p: int, j: int) -> int:
    idx = _basis_index(module, n, j)
    rows = _rows(generators, module, n, j, idx)
    return rank_mod_p(rows, p) if rows else 0


def quotient_hf(U, j: int) -> int:
    """dim_k (F/U)_j by linear algebra."""
    n, p = U.n, U.ring.p
    total = sum(len(monomials_of_degree(n, j - t)) for t in U.module.twists)
    return total - submodule_dimension(U.generators, U.module, n, p, j)


def map_rank(columns, source: FreeModule, n: int, p: int, j: int) -> int:
    """Rank of the degree-j component of the map e_i -> columns[i]."""
    if not columns:
        return 0
    target = columns[0].module
    idx = _basis_index(target, n, j)
    rows = []
    for comp, col in enumerate(columns):
        for m in monomials_of_degree(n, j - source.twists[comp]):
            row = [0] * len(idx)
            for (c2, e), c in col.coeffs.items():
                row[idx[(c2, tuple(a + b for a, b in zip(e, m)))]] = c
            rows.append(row)
    return rank_mod_p(rows, p) if rows and idx else 0


def cohomology_dimension(C, pos: int, j: int) -> int:
    """dim_k of the degree-j piece of ker/im at position ``pos`` of a complex."""
    if pos < 0 or pos > C.length:
        return 0
    n, p = C.ring.n, C.ring.p
    M = C.modules[pos]
    total = sum(len(monomials_of_degree(n, j - t)) for t in M.twists)
    outgoing = pos + 1 if C.cochain else pos
    incoming = pos if C.cochain else pos + 1
    if 1 <= outgoing <= C.length:
        src, _ = C.source_target(outgoing)
        total -= map_rank(C.differentials[outgoing - 1], src, n, p, j)
    if 1 <= incoming <= C.length:
        src, _ = C.source_target(incoming)
        total -= map_rank(C.differentials[incoming - 1], src, n, p, j)
    return total


def standard_pairs(ideal, n: int) -> list:
    """Standard pairs (m, sigma) of a monomial ideal given by generators."""
    gens = [tuple(g) for g in ideal]
    if any(sum(g) == 0 for g in gens):
        return []
    bound = [max((g[i] for g in gens), default=0) for i in range(n)]

    def admissible(m, sigma):
        return not any(all(g[i] <= m[i] for i in range(n) if i not in sigma) for g in gens)

    pairs = []
    for k in range(n + 1):
        for sigma in combinations(range(n), k):
            ranges = [range(1) if i in sigma else range(bound[i] + 1) for i in range(n)]
            for m in product(*ranges):
                if admissible(m, set(sigma)):
                    pairs.append((m, frozenset(sigma)))

    def below(a, b):
        (m, s), (m2, t) = a, b
        return (s <= t and all(m2[i] <= m[i] for i in range(n))
                and all(m[i] == m2[i] or i in t for i in range(n)))

    return [a for a in pairs if not any(b != a and below(a, b) for b in pairs)]


def monomial_adeg(ideal, n: int) -> int:
    """adeg(S/I) of a monomial ideal: the number of its standard pairs."""
    return len(standard_pairs(ideal, n))


def random_vector(ring, module: FreeModule, degree: int, rng, terms: int = 3) -> Vector:
    """Sparse homogeneous vector of the given degree (may be zero)."""
    n, p = ring.n, ring.p
    coeffs = {}
    slots = [(c, m) for c, t in enumerate(module.twists) for m in monomials_of_degree(n, degree - t)]
    if not slots:
        return Vector(ring, module, {})
    for k in rng.choice(len(slots), size=min(terms, len(slots)), replace=False):
        coeffs[slots[int(k)]] = int(rng.integers(1, p))
    return Vector(ring, module, coeffs)
