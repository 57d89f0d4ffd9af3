"""Buchberger's algorithm for homogeneous submodules of graded free modules.

Internally a module element is a dict mapping a *key* to a coefficient.  A
key is the flat tuple

    (block, -twisted_degree, -weight, e_n, ..., e_1, component)

so that the usual tuple order sorts terms from largest to smallest: the
lead term of an element is ``min(element)``.  Multiplying by a monomial
adds a fixed tuple, and the quotient of two keys is their difference.  The
``block`` slot implements elimination: every term of block 0 is larger than
every term of block 1.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from heapq import heapify, heappop, heappush
from operator import add, le, sub

from .algebra import FreeModule, Polynomial, Ring, Vector, WeightVector, format_vector


class InternalInconsistency(RuntimeError):
    """An invariant that the mathematics guarantees has been violated."""


# ---------------------------------------------------------------------------
# key space


class _Space:
    def __init__(self, n, twists, weight=None, blocks=None):
        self.n = n
        self.twists = tuple(twists)
        self.weight = tuple(weight) if weight is not None else None
        self.blocks = tuple(blocks) if blocks is not None else (0,) * len(self.twists)
        self.top_block = max(self.blocks)

    def key(self, comp, m):
        w = sum(a * b for a, b in zip(self.weight, m)) if self.weight else 0
        return (self.blocks[comp], -(sum(m) + self.twists[comp]), -w) + tuple(reversed(m)) + (comp,)

    @staticmethod
    def term(k):
        return k[-1], tuple(reversed(k[3:-1]))

    def encode(self, v: Vector, offset=0) -> dict:
        return {self.key(comp + offset, m): c for (comp, m), c in v.coeffs.items()}

    def decode(self, d, ring, module, offset=0) -> Vector:
        out = {}
        for k, c in d.items():
            comp, m = self.term(k)
            out[(comp - offset, m)] = c
        return Vector(ring, module, out)

    def lcm(self, a, b):
        exps = tuple(reversed(tuple(map(max, a[3:-1], b[3:-1]))))
        return self.key(a[-1], exps)


def _divides(a, b) -> bool:
    return a[-1] == b[-1] and all(map(le, a[3:-1], b[3:-1]))


def _coprime(a, b) -> bool:
    return not any(x and y for x, y in zip(a[3:-1], b[3:-1]))


def _degree(d) -> int:
    return -next(iter(d))[1]


class _Elt:
    __slots__ = ("lead", "tail", "exps", "index", "degree", "block")

    def __init__(self, poly: dict, index: int):
        lead = min(poly)
        self.lead = lead
        self.tail = [(k, c) for k, c in poly.items() if k != lead]
        self.exps = lead[3:-1]
        self.index = index
        self.degree = -lead[1]
        self.block = lead[0]

    def as_dict(self) -> dict:
        d = dict(self.tail)
        d[self.lead] = 1
        return d


class _Basis:
    """Elements kept monic, searchable by lead term."""

    def __init__(self, p):
        self.p = p
        self.elts = []
        self.by_comp = defaultdict(list)

    def add(self, poly: dict) -> _Elt:
        lead = min(poly)
        c = poly[lead]
        if c != 1:
            inv = pow(c, self.p - 2, self.p)
            poly = {k: v * inv % self.p for k, v in poly.items()}
        e = _Elt(poly, len(self.elts))
        self.elts.append(e)
        self.by_comp[lead[-1]].append(e)
        return e

    def find(self, k):
        ke = k[3:-1]
        for e in self.by_comp.get(k[-1], ()):
            if all(map(le, e.exps, ke)):
                return e
        return None


def _reduce(f: dict, basis: _Basis, p: int, quotients=None) -> dict:
    """Full normal form of ``f`` with respect to ``basis``.

    Always divides by the first applicable element (lowest degree, then
    insertion order).  If ``quotients`` is a dict, the multipliers used are
    accumulated there as ``{(element index, shift): coeff}``.
    """
    f = dict(f)
    heap = list(f)
    heapify(heap)
    rem = {}
    while heap:
        k = heappop(heap)
        c = f.pop(k, None)
        if c is None:
            continue
        g = basis.find(k)
        if g is None:
            rem[k] = c
            continue
        shift = tuple(map(sub, k, g.lead))
        if quotients is not None:
            qk = (g.index, shift)
            quotients[qk] = (quotients.get(qk, 0) + c) % p
        for gk, gc in g.tail:
            nk = tuple(map(add, gk, shift))
            v = f.get(nk)
            if v is None:
                f[nk] = (-c * gc) % p
                heappush(heap, nk)
            else:
                v = (v - c * gc) % p
                if v:
                    f[nk] = v
                else:
                    del f[nk]
    return rem


def _spoly(a: _Elt, b: _Elt, L, p) -> dict:
    sa = tuple(map(sub, L, a.lead))
    sb = tuple(map(sub, L, b.lead))
    out = {}
    for k, c in a.tail:
        out[tuple(map(add, k, sa))] = c
    for k, c in b.tail:
        nk = tuple(map(add, k, sb))
        v = (out.get(nk, 0) - c) % p
        if v:
            out[nk] = v
        else:
            out.pop(nk, None)
    return out


@dataclass
class _Run:
    basis: _Basis
    minimal: list = field(default_factory=list)
    minimal_inputs: list = field(default_factory=list)
    reduced: list = field(default_factory=list)


def _run_buchberger(gens, space: _Space, p: int, product_criterion: bool) -> _Run:
    """Homogeneous Buchberger with the normal selection strategy.

    Works degree by degree.  Inside a degree, pairs between elements whose
    leads lie in the last block are handled first, then the remaining pairs,
    then the input generators.  New last-block elements found in the second
    and third phase are minimal generators of the last-block submodule (for a
    plain run: minimal generators of the input module).
    """
    basis = _Basis(p)
    run = _Run(basis)
    top = space.top_block
    pending = defaultdict(list)
    for idx, g in enumerate(gens):
        if g:
            pending[_degree(g)].append(idx)
    pairs = {}

    def update(h: _Elt):
        comp = h.lead[-1]
        cands = [(e, space.lcm(h.lead, e.lead)) for e in basis.by_comp[comp] if e is not h]
        kept = []
        for i, (e, L) in enumerate(cands):
            if product_criterion and _coprime(h.lead, e.lead):
                kept.append((e, L, True))
                continue
            if any(_divides(L2, L) for _, L2 in cands[i + 1:]):
                continue
            if any(_divides(L2, L) for _, L2, _ in kept):
                continue
            kept.append((e, L, False))
        dead = []
        for (i, j), L in pairs.items():
            if _divides(h.lead, L):
                a, b = basis.elts[i], basis.elts[j]
                if space.lcm(a.lead, h.lead) != L and space.lcm(b.lead, h.lead) != L:
                    dead.append((i, j))
        for ij in dead:
            del pairs[ij]
        for e, L, cop in kept:
            if not cop:
                pairs[(e.index, h.index)] = L

    def insert(r, flag, origin=None):
        e = basis.add(r)
        if e.block == top and flag:
            run.minimal.append(e.as_dict())
            if origin is not None:
                run.minimal_inputs.append(origin)
        update(e)

    while pending or pairs:
        degs = [d for d in pending]
        degs += [-L[1] for L in pairs.values()]
        d = min(degs)
        todo = sorted(((L, ij) for ij, L in pairs.items() if -L[1] == d))
        for _, ij in todo:
            del pairs[ij]
        first = [(L, ij) for L, ij in todo if basis.elts[ij[0]].block == top and basis.elts[ij[1]].block == top]
        second = [(L, ij) for L, ij in todo if not (basis.elts[ij[0]].block == top and basis.elts[ij[1]].block == top)]
        for phase, group in ((False, first), (True, second)):
            for L, (i, j) in group:
                s = _spoly(basis.elts[i], basis.elts[j], L, p)
                if not s:
                    continue
                r = _reduce(s, basis, p)
                if r:
                    insert(r, phase)
        for idx in pending.pop(d, []):
            r = _reduce(gens[idx], basis, p)
            if r:
                insert(r, True, idx)

    # interreduce tails
    for e in basis.elts:
        tail = _reduce(dict(e.tail), basis, p) if e.tail else {}
        d = dict(tail)
        d[e.lead] = 1
        run.reduced.append(d)
    return run


# ---------------------------------------------------------------------------
# public types


@dataclass(frozen=True)
class Submodule:
    """Homogeneous submodule U of a graded free module F, given by generators."""

    ring: Ring
    module: FreeModule
    generators: tuple = ()

    def __post_init__(self):
        gens = tuple(g for g in self.generators if not g.is_zero())
        for g in gens:
            if g.module != self.module or g.ring != self.ring:
                raise ValueError("generator lives in a different module")
            if not g.is_homogeneous():
                raise ValueError(f"generator {format_vector(g)} is not homogeneous")
        object.__setattr__(self, "generators", gens)

    @property
    def n(self) -> int:
        return self.ring.n

    @property
    def rank(self) -> int:
        return self.module.rank

    def is_monomial(self) -> bool:
        return all(len(g.coeffs) == 1 for g in self.generators)

    def __repr__(self):
        gens = ", ".join(format_vector(g) for g in self.generators)
        return f"Submodule(n={self.n}, twists={self.module.twists}, gens=[{gens}])"


SubmoduleBasis = Submodule


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Gröbner basis; ``weight`` is None for revlex-TOP, otherwise the
    order refines the given weight first."""

    ring: Ring
    module: FreeModule
    elements: tuple
    weight: WeightVector | None = None
    minimal_generators: tuple = ()

    @property
    def order(self) -> str:
        return "revlex-TOP" if self.weight is None else "weight-refined"

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def leads(self) -> list:
        """Lead terms as (comp, monomial) pairs."""
        return [(c, m) for c, _, m in (v.lead(self._wvec()) for v in self.elements)]

    def _wvec(self):
        return self.weight

    def submodule(self) -> Submodule:
        return Submodule(self.ring, self.module, self.elements)


def _space_for(ring, module, weight=None, blocks=None):
    w = weight.weights if isinstance(weight, WeightVector) else weight
    if w is not None and len(w) != ring.n:
        raise ValueError("weight length does not match ring")
    return _Space(ring.n, module.twists, w, blocks)


def _check(U: Submodule):
    if not isinstance(U, Submodule):
        raise TypeError("expected a Submodule")


def buchberger(U: Submodule, weight: WeightVector | None = None) -> GroebnerBasis:
    """Reduced Gröbner basis of U for revlex-TOP, or for the order refining
    ``weight`` first when one is given."""
    _check(U)
    space = _space_for(U.ring, U.module, weight)
    gens = [space.encode(g) for g in U.generators]
    run = _run_buchberger(gens, space, U.ring.p, product_criterion=U.rank == 1)
    elements = tuple(space.decode(d, U.ring, U.module) for d in run.reduced)
    minimal = tuple(U.generators[i] for i in run.minimal_inputs)
    return GroebnerBasis(U.ring, U.module, elements, weight, minimal)


def _encoded_basis(G: GroebnerBasis):
    space = _space_for(G.ring, G.module, G.weight)
    basis = _Basis(G.ring.p)
    for v in G.elements:
        basis.add(space.encode(v))
    return space, basis


def normal_form(v: Vector, G: GroebnerBasis) -> Vector:
    """Remainder of v on division by G; zero iff v lies in the submodule."""
    if v.module != G.module or v.ring != G.ring:
        raise ValueError("vector and basis live in different modules")
    space, basis = _encoded_basis(G)
    return space.decode(_reduce(space.encode(v), basis, G.ring.p), G.ring, G.module)


def contains(G: GroebnerBasis, v: Vector) -> bool:
    return normal_form(v, G).is_zero()


def minimal_generators(U: Submodule) -> tuple:
    return buchberger(U).minimal_generators


def initial_module(G: GroebnerBasis) -> Submodule:
    """Monomial submodule spanned by lead terms (minimal generating set)."""
    ring, F = G.ring, G.module
    gens = []
    for comp, m in G.leads():
        gens.append(Vector(ring, F, {(comp, m): 1}))
    return Submodule(ring, F, tuple(gens))


def weight_initial(U: Submodule, weight: WeightVector) -> Submodule:
    """in_w(U): w-initial forms of a Gröbner basis for an order refining w."""
    G = buchberger(U, weight)
    w = weight.weights
    gens = []
    for v in G.elements:
        best = max(sum(a * b for a, b in zip(w, m)) for _, m in v.coeffs)
        part = {t: c for t, c in v.coeffs.items() if sum(a * b for a, b in zip(w, t[1])) == best}
        gens.append(Vector(U.ring, U.module, part))
    return Submodule(U.ring, U.module, tuple(gens))


def syzygies(G: GroebnerBasis) -> Submodule:
    """Schreyer syzygies of the elements of G.

    The syzygies live in the free module whose twists are the degrees of the
    basis elements; each one comes from reducing an S-vector to zero.
    """
    ring, p = G.ring, G.ring.p
    elts = G.elements
    if not elts:
        raise ValueError("syzygies of the empty basis are undefined")
    target = FreeModule(tuple(v.degree() for v in elts))
    space, basis = _encoded_basis(G)
    out = []
    bel = basis.elts
    for j in range(len(bel)):
        for i in range(j):
            a, b = bel[i], bel[j]
            if a.lead[-1] != b.lead[-1]:
                continue
            L = space.lcm(a.lead, b.lead)
            q = {}
            r = _reduce(_spoly(a, b, L, p), basis, p, quotients=q)
            if r:
                raise InternalInconsistency("S-vector of a Gröbner basis did not reduce to zero")
            syz = {}
            for idx, sh, sign in ((i, tuple(map(sub, L, a.lead)), 1), (j, tuple(map(sub, L, b.lead)), -1)):
                m = tuple(reversed(sh[3:-1]))
                syz[(idx, m)] = (syz.get((idx, m), 0) + sign) % p
            for (idx, sh), c in q.items():
                m = tuple(reversed(sh[3:-1]))
                syz[(idx, m)] = (syz.get((idx, m), 0) - c) % p
            out.append(Vector(ring, target, syz))
    return Submodule(ring, target, tuple(out))


# ---------------------------------------------------------------------------
# elimination


@dataclass
class _Elimination:
    top_gb: list      # elements with a top-block lead, restricted to the top part
    bottom_gb: list   # Gröbner basis of the bottom-block submodule
    bottom_minimal: list


def _eliminate(ring: Ring, top: FreeModule, bottom: FreeModule, rows) -> _Elimination:
    """Gröbner basis of the submodule of top ⊕ bottom generated by ``rows``.

    Each row is a pair (top part, bottom part), either of which may be None.
    Elements with no top part form the intersection with the bottom summand.
    """
    r = top.rank
    space = _Space(ring.n, top.twists + bottom.twists, None, (0,) * r + (1,) * bottom.rank)
    gens = []
    for a, b in rows:
        d = {}
        if a is not None:
            d.update(space.encode(a))
        if b is not None:
            d.update(space.encode(b, offset=r))
        gens.append(d)
    run = _run_buchberger(gens, space, ring.p, product_criterion=False)
    top_gb, bottom_gb = [], []
    for d in run.reduced:
        if min(d)[0] == 0:
            part = {k: c for k, c in d.items() if k[0] == 0}
            top_gb.append(space.decode(part, ring, top))
        else:
            bottom_gb.append(space.decode(d, ring, bottom, offset=r))
    bottom_minimal = [space.decode(d, ring, bottom, offset=r) for d in run.minimal]
    return _Elimination(top_gb, bottom_gb, bottom_minimal)


def kernel_of_map(ring: Ring, source: FreeModule, target: FreeModule, images) -> tuple:
    """Minimal generators and Gröbner basis of the kernel of the map
    source -> target sending e_i to ``images[i]`` (degree preserving)."""
    rows = []
    for i, v in enumerate(images):
        rows.append((v if not v.is_zero() else None, Vector.basis(ring, source, i)))
    el = _eliminate(ring, target, source, rows)
    return el.bottom_minimal, el.bottom_gb


def colon_element(U: Submodule, f: Polynomial) -> Submodule:
    """U :_F f = {v in F : f v in U}, computed from syzygies of
    U's generators together with f e_1, ..., f e_r."""
    if f.is_zero():
        raise ValueError("colon by the zero polynomial")
    if not f.is_homogeneous():
        raise ValueError("colon requires a homogeneous polynomial")
    ring, F = U.ring, U.module
    df = f.degree()
    shifted = FreeModule(tuple(t + df for t in F.twists))
    rows = []
    for j in range(F.rank):
        rows.append((f * Vector.basis(ring, F, j), Vector.basis(ring, shifted, j)))
    for g in U.generators:
        rows.append((g, None))
    el = _eliminate(ring, F, shifted, rows)
    gens = tuple(Vector(ring, F, v.coeffs) for v in el.bottom_gb)
    return Submodule(ring, F, gens)


def submodule_equal(A: Submodule, B: Submodule) -> bool:
    """Equality of generated submodules, via uniqueness of reduced bases."""
    if A.module != B.module or A.ring != B.ring:
        raise ValueError("submodules live in different free modules")
    ga, gb = buchberger(A), buchberger(B)
    return set(ga.elements) == set(gb.elements)


def saturate_element(U: Submodule, f: Polynomial, max_steps: int = 200) -> Submodule:
    """U : f^infinity by iterated colons."""
    cur = Submodule(U.ring, U.module, buchberger(U).elements)
    for _ in range(max_steps):
        nxt = colon_element(cur, f)
        if submodule_equal(nxt, cur):
            return cur
        cur = nxt
    raise InternalInconsistency("saturation did not stabilize")


def add_multiples(U: Submodule, f: Polynomial) -> Submodule:
    """U + f F."""
    ring, F = U.ring, U.module
    extra = tuple(f * Vector.basis(ring, F, j) for j in range(F.rank))
    return Submodule(ring, F, U.generators + extra)


def add_variable(U: Submodule, i: int) -> Submodule:
    """U + x_i F (1-based variable index)."""
    return add_multiples(U, U.ring.var(i))


def restrict_to_subring(U: Submodule) -> Submodule:
    """Identify F/(U + x_n F) with a module over k[x1..x_{n-1}].

    Requires x_n e_j in U for every j.
    """
    ring, F = U.ring, U.module
    if ring.n < 2:
        raise ValueError("cannot drop the only variable")
    G = buchberger(U)
    xn = ring.var(ring.n)
    for j in range(F.rank):
        if not contains(G, xn * Vector.basis(ring, F, j)):
            raise ValueError("restrict_to_subring needs x_n F inside U; apply add_variable first")
    sub_ring = Ring(ring.n - 1, ring.p)
    gens = []
    for v in G.elements:
        part = {(c, m[:-1]): a for (c, m), a in v.coeffs.items() if m[-1] == 0}
        if part:
            gens.append(Vector(sub_ring, F, part))
    return Submodule(sub_ring, F, tuple(gens))


def prune(U: Submodule) -> Submodule:
    """Isomorphic presentation of F/U with no unit relations.

    Every basis element e_j that lies, up to lower terms, in U is eliminated.
    Returns a submodule of a smaller free module (possibly of the whole
    module when F/U = 0, reported as rank-0 via ``None``).
    """
    G = buchberger(U)
    ring, F = U.ring, U.module
    drop = set()
    keep_elts = []
    for v, (comp, m) in zip(G.elements, G.leads()):
        if sum(m) == 0:
            drop.add(comp)
        else:
            keep_elts.append(v)
    if not drop:
        return Submodule(ring, F, G.elements)
    remaining = [j for j in range(F.rank) if j not in drop]
    if not remaining:
        return None
    renum = {j: i for i, j in enumerate(remaining)}
    F2 = FreeModule(tuple(F.twists[j] for j in remaining))
    gens = []
    for v in keep_elts:
        gens.append(Vector(ring, F2, {(renum[c], m): a for (c, m), a in v.coeffs.items()}))
    return Submodule(ring, F2, tuple(gens))
