"""Graded Betti numbers.

Monomial ideals: beta_{i,b}(I) is the reduced homology H~_{i-1} of the upper
Koszul simplicial complex K^b(I) = {F squarefree : x^(b-F) in I}, summed over
the multidegrees b of the lcm lattice.

Polynomial ideals: a Schreyer resolution (Gröbner syzygies, iterated), then
Tor_i(I, k)_j read off from the constant parts of its differentials.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from ..algebra import QQ, Ideal, sparse_rank
from ..algebra.monomial import divides, mono_div, mono_lcm, mono_mul
from ..multicomplex import MonomialIdeal


class ResourceCapExceeded(RuntimeError):
    pass


@dataclass
class BettiTable:
    """beta_{i,j}: homological index i, internal degree j. Zero entries are dropped."""

    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        self.entries = {k: v for k, v in self.entries.items() if v}

    def __getitem__(self, key) -> int:
        return self.entries.get(tuple(key), 0)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.entries == other.entries

    def totals(self) -> list:
        """Total Betti numbers beta_0, beta_1, ..."""
        if not self.entries:
            return []
        top = max(i for i, _ in self.entries)
        return [sum(v for (i, _), v in self.entries.items() if i == k) for k in range(top + 1)]

    def dominates(self, other: "BettiTable") -> bool:
        return all(self[k] >= v for k, v in other.entries.items())

    def alternating_sum(self) -> dict:
        """{j: sum_i (-1)^i beta_{i,j}}."""
        out: dict = {}
        for (i, j), v in self.entries.items():
            out[j] = out.get(j, 0) + (-1) ** i * v
        return {j: v for j, v in out.items() if v}

    def as_dict(self) -> dict:
        return {f"{i},{j}": v for (i, j), v in sorted(self.entries.items())}

    def __str__(self):
        if not self.entries:
            return "(zero)"
        return ", ".join(f"b[{i},{j}]={v}" for (i, j), v in sorted(self.entries.items()))


# -- monomial ideals ---------------------------------------------------------------------


def lcm_lattice(gens) -> set:
    """All lcms of nonempty subsets of ``gens``."""
    gens = list(gens)
    lattice = set(gens)
    frontier = set(gens)
    while frontier:
        new = set()
        for a in frontier:
            for g in gens:
                L = mono_lcm(a, g)
                if L not in lattice:
                    new.add(L)
        lattice |= new
        frontier = new
    return lattice


def upper_koszul_complex(I: MonomialIdeal, b: tuple) -> list:
    """Faces (as sorted index tuples) of K^b(I), the empty face included when x^b is in I."""
    supp = [i for i, k in enumerate(b) if k]
    faces = []
    for r in range(len(supp) + 1):
        for F in combinations(supp, r):
            a = list(b)
            for i in F:
                a[i] -= 1
            if tuple(a) in I:
                faces.append(F)
    return faces


def reduced_homology_ranks(faces: list, field=QQ) -> dict:
    """{k: dim H~_k} for a simplicial complex listed by its faces (empty face included)."""
    by_dim: dict = {}
    for F in faces:
        by_dim.setdefault(len(F) - 1, []).append(F)
    if not by_dim:
        return {}
    index = {d: {F: n for n, F in enumerate(fs)} for d, fs in by_dim.items()}
    ranks = {}
    for d, fs in by_dim.items():
        if d - 1 not in index:
            ranks[d] = 0
            continue
        cols = []
        lower = index[d - 1]
        for F in fs:
            cols.append({lower[F[:k] + F[k + 1:]]: (-1) ** k for k in range(len(F))})
        ranks[d] = sparse_rank(cols, field)
    out = {}
    for d, fs in by_dim.items():
        h = len(fs) - ranks[d] - ranks.get(d + 1, 0)
        if h:
            out[d] = h
    return out


def betti_monomial(I: MonomialIdeal, field=QQ) -> BettiTable:
    entries: dict = {}
    for b in lcm_lattice(I.generators):
        for d, h in reduced_homology_ranks(upper_koszul_complex(I, b), field).items():
            key = (d + 1, sum(b))
            entries[key] = entries.get(key, 0) + h
    return BettiTable(entries)


# -- polynomial ideals: Schreyer resolution ------------------------------------------------


class Frame:
    """Basis of a free module F_k with its Schreyer order.

    Basis element ``e_u`` maps to a vector whose leading term is
    ``(lead_comp[u], lead_mono[u])`` in the previous frame. A term ``(u, m)``
    of F_k is ordered by the image of ``m * lead(e_u)`` in the previous frame,
    ties broken in favour of the smaller index.
    """

    def __init__(self, prev, lead_comp: list, lead_mono: list, degrees: list):
        self.prev = prev
        self.lead_comp = lead_comp
        self.lead_mono = lead_mono
        self.degrees = degrees
        self.key = lru_cache(maxsize=None)(self._key)

    def _key(self, u: int, m: tuple):
        return (self.prev.key(self.lead_comp[u], mono_mul(m, self.lead_mono[u])), -u)

    @property
    def rank(self) -> int:
        return len(self.degrees)


class _RingFrame:
    """The ring itself, as a rank-one module."""

    def __init__(self, ring):
        self.order_key = ring.order.key

    def key(self, u, m):
        return self.order_key(m)


def _lead(vec: dict, frame) -> tuple:
    return max(vec, key=lambda t: frame.key(*t))


def _vec_reduce(vec: dict, basis: list, frame, field):
    """Divide ``vec`` (terms (comp, mono) -> coeff in ``frame``) by ``basis``.

    Returns (quotients as {index: {mono: coeff}}, remainder).
    """
    zero = field.zero
    leads = [(_lead(b, frame), b) for b in basis]
    quot: dict = {}
    p = dict(vec)
    rem: dict = {}
    while p:
        t = _lead(p, frame)
        c = p[t]
        for k, (lt, b) in enumerate(leads):
            if lt[0] == t[0] and divides(lt[1], t[1]):
                m = mono_div(t[1], lt[1])
                q = c / b[lt]
                qk = quot.setdefault(k, {})
                qk[m] = qk.get(m, zero) + q
                for (u, e), bc in b.items():
                    key = (u, mono_mul(e, m))
                    v = p.get(key, zero) - q * bc
                    if v:
                        p[key] = v
                    else:
                        p.pop(key, None)
                break
        else:
            rem[t] = c
            del p[t]
    return quot, rem


def _syzygies(vectors: list, frame, field):
    """Schreyer syzygies of a monic Gröbner basis ``vectors`` of a submodule of ``frame``.

    One syzygy per pair with a common leading component, as a dict
    ``(index, mono) -> coeff`` over the basis ``vectors``.
    """
    leads = [_lead(v, frame) for v in vectors]
    syz = []
    for i, j in combinations(range(len(vectors)), 2):
        (ci, mi), (cj, mj) = leads[i], leads[j]
        if ci != cj:
            continue
        L = mono_lcm(mi, mj)
        ti, tj = mono_div(L, mi), mono_div(L, mj)
        s: dict = {}
        for (u, e), c in vectors[i].items():
            key = (u, mono_mul(e, ti))
            s[key] = s.get(key, field.zero) + c
        for (u, e), c in vectors[j].items():
            key = (u, mono_mul(e, tj))
            v = s.get(key, field.zero) - c
            s[key] = v
        s = {k: v for k, v in s.items() if v}
        quot, rem = _vec_reduce(s, vectors, frame, field)
        if rem:
            raise ArithmeticError("S-vector did not reduce to zero: input is not a Gröbner basis")
        sig: dict = {(i, ti): field.one}
        key = (j, tj)
        sig[key] = sig.get(key, field.zero) - field.one
        for k, qk in quot.items():
            for m, q in qk.items():
                key = (k, m)
                sig[key] = sig.get(key, field.zero) - q
        sig = {k: v for k, v in sig.items() if v}
        syz.append(sig)
    return syz


@dataclass
class SchreyerResolution:
    """Differentials d_k : F_k -> F_{k-1}; ``d[0]`` maps F_0 onto the ideal's Gröbner basis."""

    differentials: list
    degrees: list

    def ranks(self) -> BettiTable:
        entries: dict = {}
        for i, degs in enumerate(self.degrees):
            for d in degs:
                entries[(i, d)] = entries.get((i, d), 0) + 1
        return BettiTable(entries)


def schreyer_resolution(I: Ideal, max_rank: int = 512) -> SchreyerResolution:
    ring = I.ring
    field = ring.field
    n = ring.nvars
    gb = list(I.gb)
    if any(not g.is_homogeneous() for g in gb):
        raise ValueError("Betti numbers need a homogeneous ideal")
    if not gb or gb[0].is_constant():
        return SchreyerResolution([], [])
    frame = _RingFrame(ring)

    def order_for_next(vecs, leads):
        # Within each component, decreasing exponent of the first variable the leads
        # still involve keeps the resolution length within the number of variables.
        def k(idx):
            c, m = leads[idx]
            return (c, tuple(-x for x in m))
        return sorted(range(len(vecs)), key=k)

    vectors = [{(0, e): c for e, c in g.terms.items()} for g in gb]
    leads = [(0, g.lm) for g in gb]
    perm = order_for_next(vectors, leads)
    vectors = [vectors[p] for p in perm]
    leads = [leads[p] for p in perm]
    degrees = [gb[p].degree() for p in perm]
    differentials = [vectors]
    all_degrees = [degrees]
    if len(vectors) > max_rank:
        raise ResourceCapExceeded(f"rank {len(vectors)} exceeds cap {max_rank}")
    cur = Frame(frame, [c for c, _ in leads], [m for _, m in leads], degrees)
    prev_frame = frame
    level = 0
    while True:
        syz = _syzygies(vectors, prev_frame, field)
        if not syz:
            break
        level += 1
        if level > n:
            raise ResourceCapExceeded(f"resolution longer than {n} steps")
        sleads = [_lead(s, cur) for s in syz]
        # keep one syzygy per minimal leading term; the rest are redundant in the GB
        keep = []
        for k, (u, m) in enumerate(sleads):
            if any(sleads[h][0] == u and divides(sleads[h][1], m) and (sleads[h] != (u, m) or h < k)
                   for h in range(len(syz)) if h != k):
                continue
            keep.append(k)
        syz = [syz[k] for k in keep]
        sleads = [sleads[k] for k in keep]
        if len(syz) > max_rank:
            raise ResourceCapExceeded(f"rank {len(syz)} exceeds cap {max_rank}")
        # monic in the Schreyer order
        syz = [{t: c / s[sl] for t, c in s.items()} for s, sl in zip(syz, sleads)]
        perm = order_for_next(syz, sleads)
        syz = [syz[p] for p in perm]
        sleads = [sleads[p] for p in perm]
        sdeg = [degrees[u] + sum(m) for u, m in sleads]
        differentials.append(syz)
        all_degrees.append(sdeg)
        prev_frame = cur
        vectors = syz
        degrees = sdeg
        cur = Frame(prev_frame, [u for u, _ in sleads], [m for _, m in sleads], sdeg)
    return SchreyerResolution(differentials, all_degrees)


def betti_polynomial(I: Ideal, max_rank: int = 512, return_resolution: bool = False):
    """Minimal graded Betti numbers of a homogeneous ideal via a Schreyer resolution."""
    res = schreyer_resolution(I, max_rank)
    field = I.ring.field
    n = I.ring.nvars
    zero = (0,) * n
    # constant part of d_k (k >= 1), restricted to each degree
    const_rank: dict = {}
    for k in range(1, len(res.differentials)):
        src_deg, tgt_deg = res.degrees[k], res.degrees[k - 1]
        by_deg: dict = {}
        for col, vec in enumerate(res.differentials[k]):
            entries = {u: c for (u, m), c in vec.items() if m == zero and tgt_deg[u] == src_deg[col]}
            by_deg.setdefault(src_deg[col], []).append(entries)
        for d, cols in by_deg.items():
            const_rank[(k, d)] = sparse_rank(cols, field)
    entries: dict = {}
    for i, degs in enumerate(res.degrees):
        for d in set(degs):
            count = degs.count(d)
            b = count - const_rank.get((i, d), 0) - const_rank.get((i + 1, d), 0)
            if b:
                entries[(i, d)] = b
    table = BettiTable(entries)
    if return_resolution:
        return table, res
    return table
