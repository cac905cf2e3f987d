"""Simplicial complexes, exact reduced homology, and squarefree depth.

Index conventions, fixed once and used by every caller and test:

* reduced_homology returns {i: rank of H~_i} for i = -1 .. dim, computed
  from the augmented chain complex (the empty face generates degree -1).
* BettiTable entries are the graded Betti numbers of the *ideal*:
  beta[i, sigma] = dim_k H~_{|sigma| - i - 2}(restriction to sigma), with
  i >= 0.  The resolution of the quotient T/I has the extra beta_{0,()} = 1
  in homological degree 0, so projective_dimension(T/I) = 1 + max i of the
  table (and 0 for the zero ideal, whose table is empty).
* depth(T/I) = n - projective_dimension(T/I).  The independent route
  depth_via_local_cohomology uses vanishing of link homology instead and
  exists so the two can be cross-checked.

The practical input cap is 16 vertices; every shipped family needs at
most 10.
"""

from __future__ import annotations

import csv
import io
from concurrent.futures import ThreadPoolExecutor

from .errors import NotSquarefreeError, UnitIdealError, VoidComplexError
from .linalg import rank
from .monomial import Monomial, MonomialIdeal, VarContext

MAX_VERTICES = 16


def _popcount(m):
    return bin(m).count("1")


def _bits(mask):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def _max_antichain(masks):
    """Maximal elements under inclusion of a set of masks."""
    masks = sorted(set(masks), key=_popcount, reverse=True)
    out = []
    for m in masks:
        if not any(m & f == m for f in out):
            out.append(m)
    return tuple(sorted(out))


class SimplicialComplex:
    """A simplicial complex given by its facet list (an antichain of masks).

    The void complex (no faces at all, empty facet list) and the
    irrelevant complex {()} (single empty facet) are distinct values.
    """

    __slots__ = ("context", "facets")

    def __init__(self, context, facet_masks):
        object.__setattr__(self, "context", context)
        if context.n > MAX_VERTICES:
            raise ValueError(f"at most {MAX_VERTICES} vertices supported")
        object.__setattr__(self, "facets", _max_antichain(facet_masks))

    def __setattr__(self, *a):
        raise AttributeError("SimplicialComplex is immutable")

    @classmethod
    def void(cls, ctx):
        return cls(ctx, ())

    @classmethod
    def irrelevant(cls, ctx):
        return cls(ctx, (0,))

    @classmethod
    def from_vertex_sets(cls, ctx, facets):
        return cls(ctx, [ctx.mask_of(f) for f in facets])

    @classmethod
    def full_simplex(cls, ctx):
        return cls(ctx, ((1 << ctx.n) - 1,))

    def is_void(self):
        return not self.facets

    def dim(self):
        """Dimension; None for the void complex, -1 for {()}."""
        if self.is_void():
            return None
        return max(_popcount(f) for f in self.facets) - 1

    def has_face(self, mask):
        return any(mask & f == mask for f in self.facets)

    def faces(self):
        """All faces as a sorted list of masks (includes 0 if non-void)."""
        seen = set()
        for f in self.facets:
            sub = f
            # enumerate subsets of each facet
            while True:
                if sub not in seen:
                    seen.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & f
        return sorted(seen)

    def faces_by_dim(self):
        """Faces grouped by cardinality: list where entry k holds |face|=k."""
        by = {}
        for f in self.faces():
            by.setdefault(_popcount(f), []).append(f)
        top = max(by) if by else -1
        return [sorted(by.get(k, [])) for k in range(top + 1)]

    def restriction(self, mask):
        """Full subcomplex on the vertex subset mask."""
        if self.is_void():
            return self
        return SimplicialComplex(self.context, [f & mask for f in self.facets])

    def link(self, face_mask):
        """Link of a face: {tau : tau disjoint from sigma, tau + sigma a face}."""
        if not self.has_face(face_mask):
            raise ValueError("link of a non-face")
        return SimplicialComplex(
            self.context,
            [f & ~face_mask for f in self.facets if f & face_mask == face_mask],
        )

    def cone(self, apex_name):
        ctx = VarContext(self.context.names + (apex_name,))
        apex = 1 << self.context.n
        if self.is_void():
            return SimplicialComplex(ctx, (apex,))
        return SimplicialComplex(ctx, [f | apex for f in self.facets])

    def euler_characteristic_reduced(self):
        """Sum of (-1)^dim over all faces, empty face included."""
        return sum((-1) ** (_popcount(f) - 1) for f in self.faces())

    def nonface_ideal(self):
        """Squarefree ideal of minimal non-faces (round trip of complex_of)."""
        n = self.context.n
        nonfaces = [m for m in range(1 << n) if not self.has_face(m)]
        minimal = []
        nonfaces.sort(key=_popcount)
        for m in nonfaces:
            if not any(s & m == s for s in minimal):
                minimal.append(m)
        gens = []
        for m in minimal:
            gens.append(Monomial(tuple(1 if (m >> i) & 1 else 0 for i in range(n))))
        return MonomialIdeal(self.context, gens)

    def to_json(self):
        return {
            "vertices": list(self.context.names),
            "facets": [list(self.context.names_of_mask(f)) for f in self.facets],
        }

    @classmethod
    def from_json(cls, data):
        ctx = VarContext(tuple(data["vertices"]))
        return cls.from_vertex_sets(ctx, data["facets"])

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialComplex)
            and self.context == other.context
            and self.facets == other.facets
        )

    def __hash__(self):
        return hash((self.context, self.facets))

    def __repr__(self):
        if self.is_void():
            return "SimplicialComplex(void)"
        facets = ["{" + ",".join(self.context.names_of_mask(f)) + "}" for f in self.facets]
        return "SimplicialComplex(" + " ".join(facets) + ")"


def complex_of(ideal):
    """The simplicial complex whose faces avoid every generator support.

    Faces are exactly the supports of squarefree monomials outside the
    ideal; facets are the complements of the minimal primes.
    """
    if not ideal.is_squarefree():
        raise NotSquarefreeError("complex_of needs a squarefree ideal")
    if ideal.is_unit():
        raise UnitIdealError("complex_of needs a proper ideal")
    full = (1 << ideal.context.n) - 1
    facets = [full & ~p.mask for p in ideal.minimal_primes()]
    return SimplicialComplex(ideal.context, facets)


def boundary_matrix(lower, upper):
    """Boundary matrix from faces `upper` (size k+1) to faces `lower` (size k).

    Entry signs follow the position of the removed vertex, ascending.
    """
    index = {f: i for i, f in enumerate(lower)}
    rows = [[0] * len(upper) for _ in lower]
    for j, f in enumerate(upper):
        verts = list(_bits(f))
        for pos, v in enumerate(verts):
            sub = f & ~(1 << v)
            rows[index[sub]][j] = (-1) ** pos
    return rows


def reduced_homology(cplx, field):
    """Ranks {i: dim H~_i} for i = -1 .. dim, over the given field."""
    if cplx.is_void():
        raise VoidComplexError("homology of the void complex")
    layers = cplx.faces_by_dim()  # layers[k] = faces of cardinality k
    top = len(layers) - 1
    # rank of each boundary map d_k : C_{k-1-chain...}; use cardinality index:
    # d_k maps span(layers[k]) -> span(layers[k-1]) for k >= 1.
    ranks = {}
    for k in range(1, top + 1):
        m = boundary_matrix(layers[k - 1], layers[k])
        ranks[k] = rank(m, field) if layers[k] else 0
    out = {}
    for k in range(0, top + 1):  # homological degree i = k - 1
        dim_ck = len(layers[k])
        rk_in = ranks.get(k, 0)
        rk_out = ranks.get(k + 1, 0)
        out[k - 1] = dim_ck - rk_in - rk_out
    return out


class BettiTable:
    """Graded Betti numbers of a squarefree monomial ideal (ideal-indexed)."""

    __slots__ = ("context", "field", "entries")

    def __init__(self, context, field, entries):
        object.__setattr__(self, "context", context)
        object.__setattr__(self, "field", field)
        object.__setattr__(
            self, "entries", dict(sorted(entries.items()))
        )

    def __setattr__(self, *a):
        raise AttributeError("BettiTable is immutable")

    def beta(self, i, mask):
        return self.entries.get((i, mask), 0)

    def total(self, i):
        return sum(v for (j, _), v in self.entries.items() if j == i)

    def max_index(self):
        """Largest homological index with a nonzero entry; -1 if empty."""
        return max((i for (i, _) in self.entries), default=-1)

    def projective_dimension_of_quotient(self):
        """pd of T/I: one above the ideal's last Betti index."""
        return self.max_index() + 1

    def to_json(self):
        return {
            "vars": list(self.context.names),
            "field": str(self.field),
            "entries": [
                {
                    "i": i,
                    "sigma": list(self.context.names_of_mask(mask)),
                    "rank": v,
                }
                for (i, mask), v in self.entries.items()
            ],
        }

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["i", "sigma", "rank"])
        for (i, mask), v in self.entries.items():
            w.writerow([i, "|".join(self.context.names_of_mask(mask)), v])
        return buf.getvalue()

    def __repr__(self):
        return f"BettiTable({len(self.entries)} entries, field={self.field})"


def _betti_for_subset(cplx, field, mask):
    sub = cplx.restriction(mask)
    if sub.is_void():
        return []
    size = _popcount(mask)
    out = []
    for j, r in reduced_homology(sub, field).items():
        if r:
            i = size - j - 2
            if i >= 0:
                out.append(((i, mask), r))
    return out


def graded_betti(ideal, field, jobs=1):
    """Betti table of a squarefree proper ideal via subset restrictions.

    The 2^n subsets are independent; with jobs > 1 they are computed in a
    thread pool and merged in a fixed order, so the output is identical
    for any worker count.
    """
    if not ideal.is_squarefree():
        raise NotSquarefreeError("graded_betti needs a squarefree ideal")
    if ideal.is_unit():
        raise UnitIdealError("graded_betti needs a proper ideal")
    cplx = complex_of(ideal)
    n = ideal.context.n
    masks = range(1 << n)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as ex:
            chunks = ex.map(lambda m: _betti_for_subset(cplx, field, m), masks)
            pieces = list(chunks)
    else:
        pieces = [_betti_for_subset(cplx, field, m) for m in masks]
    entries = {}
    for piece in pieces:
        for key, v in piece:
            entries[key] = entries.get(key, 0) + v
    return BettiTable(ideal.context, field, entries)


def projective_dimension(ideal, field, jobs=1):
    """pd of T/I for a monomial ideal (polarizing if not squarefree)."""
    if ideal.is_unit():
        raise UnitIdealError("projective dimension of the zero ring")
    if ideal.is_zero():
        return 0
    sf, _added = ideal.polarize()
    return graded_betti(sf, field, jobs=jobs).projective_dimension_of_quotient()


def depth(ideal, field, jobs=1):
    """depth of T/I over the field, via n - pd (Auslander-Buchsbaum).

    Non-squarefree ideals are polarized first; the added variables join a
    regular sequence, so depth drops back by their count.
    """
    if ideal.is_unit():
        raise UnitIdealError("depth of the zero ring")
    if ideal.is_zero():
        return ideal.context.n
    sf, added = ideal.polarize()
    pd = graded_betti(sf, field, jobs=jobs).projective_dimension_of_quotient()
    return sf.context.n - pd - added


def depth_via_local_cohomology(ideal, field):
    """depth of T/I as the least degree with nonvanishing local cohomology.

    Independent of the Betti route: uses the link formula
    H^i_m nonzero iff some face sigma has H~_{i - |sigma| - 1}(link) != 0.
    """
    if ideal.is_unit():
        raise UnitIdealError("depth of the zero ring")
    if ideal.is_zero():
        return ideal.context.n
    sf, added = ideal.polarize()
    cplx = complex_of(sf)
    best = None
    for face in cplx.faces():
        hom = reduced_homology(cplx.link(face), field)
        size = _popcount(face)
        for j, r in hom.items():
            if r:
                i = j + size + 1
                best = i if best is None else min(best, i)
    return best - added


def dim_of_quotient(ideal):
    """Krull dimension of T/I."""
    if ideal.is_unit():
        return -1
    return ideal.height_and_dim()[1]


def is_cohen_macaulay(cplx, field):
    """Reisner's criterion: every link is homology-connected below its top.

    True iff for every face sigma (the empty face included) the link has
    vanishing reduced homology in all degrees below its dimension.
    """
    if cplx.is_void():
        raise VoidComplexError("Cohen-Macaulay test on the void complex")
    for face in cplx.faces():
        lk = cplx.link(face)
        d = lk.dim()
        for j, r in reduced_homology(lk, field).items():
            if j < d and r:
                return False
    return True


def depth_of_direct_sum(ideals, field, jobs=1):
    """depth of a finite direct sum of quotients: the minimum summand depth."""
    return min(depth(i, field, jobs=jobs) for i in ideals)
