"""Pullback presentations A inside B with exact graded linear algebra.

Two modes:

* intersection: A = T/(P_1 cap ... cap P_l) sitting inside
  B = (+) T/P_i, where the P_i are monomial primes generated by variable
  sets F_i forming an antichain.  Component i of B is the polynomial ring
  on the variables outside F_i.
* congruence: A = {(x, y) in S x S : x == y mod q} inside B = S x S for a
  proper monomial ideal q (the fiber-product construction).

Everything is graded and all linear algebra is exact over Q (the systems
are all defined over the prime field, so the characteristic never enters
here).  Per-degree computations are independent of each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ContextMismatchError, InfiniteLengthError, MethodDisagreementError
from .linalg import QQ, Subspace, nullspace
from .monomial import (
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    VarContext,
    intersect_all,
    monomials_of_degree,
    sum_all,
)
from .polys import (
    p_degree,
    p_in_ideal,
    p_is_zero,
    p_mul,
    p_of_monomial,
    p_scale,
    p_sub,
)

INTERSECTION = "intersection"
CONGRUENCE = "congruence"

_MAX_COKERNEL_DEGREE = 64


class PullbackFamily:
    """A = T/(cap P_i) in (+) T/P_i, or a congruence pullback S x_{S/q} S."""

    __slots__ = ("context", "mode", "primes", "q", "_basis_cache")

    def __init__(self, context, mode, primes=None, q=None):
        object.__setattr__(self, "context", context)
        object.__setattr__(self, "mode", mode)
        object.__setattr__(self, "_basis_cache", {})
        if mode == INTERSECTION:
            primes = tuple(primes)
            # l = 1 is admitted as the degenerate A = B case
            if len(primes) < 1:
                raise ValueError("need at least one component")
            for a in primes:
                if a.context != context:
                    raise ContextMismatchError("prime in wrong context")
                if a.mask == 0:
                    raise ValueError("components must be nonzero primes")
            for a in primes:
                for b in primes:
                    if a is not b and a.mask & b.mask == a.mask:
                        raise ValueError("component supports must form an antichain")
            object.__setattr__(self, "primes", primes)
            object.__setattr__(self, "q", None)
        elif mode == CONGRUENCE:
            if q is None or q.is_unit():
                raise ValueError("congruence mode needs a proper monomial ideal")
            if q.context != context:
                raise ContextMismatchError("q in wrong context")
            object.__setattr__(self, "primes", None)
            object.__setattr__(self, "q", q)
        else:
            raise ValueError(f"unknown mode {mode!r}")

    def __setattr__(self, *a):
        raise AttributeError("PullbackFamily is immutable")

    @classmethod
    def from_supports(cls, ctx, supports):
        """Intersection mode from variable-name subsets F_1..F_l."""
        primes = tuple(MonomialPrime(ctx, ctx.mask_of(f)) for f in supports)
        return cls(ctx, INTERSECTION, primes=primes)

    @classmethod
    def congruence(cls, q):
        return cls(q.context, CONGRUENCE, q=q)

    @classmethod
    def from_json(cls, data):
        if data.get("mode") == "congruence":
            return cls.congruence(
                MonomialIdeal.from_json({"vars": data["vars"], "gens": data["q"]})
            )
        ctx = VarContext(tuple(data["vars"]))
        return cls.from_supports(ctx, data["F"])

    @property
    def ell(self):
        return 2 if self.mode == CONGRUENCE else len(self.primes)

    def full_mask(self):
        return (1 << self.context.n) - 1

    def free_mask(self, i):
        if self.mode == CONGRUENCE:
            return self.full_mask()
        return self.full_mask() & ~self.primes[i].mask

    def defining_ideal(self):
        """cap P_i in intersection mode (the ideal presenting A)."""
        if self.mode != INTERSECTION:
            raise ValueError("no monomial presentation in congruence mode")
        return intersect_all([p.ideal() for p in self.primes])

    def surviving(self, exps):
        """Components in which the monomial is nonzero."""
        mask = 0
        for i, e in enumerate(exps):
            if e:
                mask |= 1 << i
        return [i for i in range(self.ell) if mask & ~self.free_mask(i) == 0]

    def reduce_poly(self, i, poly):
        """Image of a T-polynomial in component i."""
        if self.mode == CONGRUENCE:
            return dict(poly)
        bad = ~self.free_mask(i)
        out = {}
        for m, c in poly.items():
            mask = 0
            for k, e in enumerate(m):
                if e:
                    mask |= 1 << k
            if mask & bad == 0:
                out[m] = c
        return out

    # -- graded bases -------------------------------------------------------

    def basis_B(self, d):
        """Canonical basis of B_d: sorted (component, exponent tuple) pairs."""
        key = ("B", d)
        got = self._basis_cache.get(key)
        if got is None:
            got = []
            for i in range(self.ell):
                for exps in monomials_of_degree(self.context.n, d, self.free_mask(i)):
                    got.append((i, exps))
            got = tuple(got)
            self._basis_cache[key] = got
        return got

    def basis_index(self, d):
        key = ("Bi", d)
        got = self._basis_cache.get(key)
        if got is None:
            got = {pair: k for k, pair in enumerate(self.basis_B(d))}
            self._basis_cache[key] = got
        return got

    def dim_B(self, d):
        return len(self.basis_B(d))

    def dim_A(self, d):
        if self.mode == CONGRUENCE:
            total = len(monomials_of_degree(self.context.n, d))
            in_q = sum(
                1
                for e in monomials_of_degree(self.context.n, d)
                if self.q.contains(Monomial(e))
            )
            return total + in_q
        defn = self.defining_ideal()
        return sum(
            1
            for e in monomials_of_degree(self.context.n, d)
            if not defn.contains(Monomial(e))
        )

    def basis_A_elements(self, d):
        """BElements spanning A_d, in a basis adapted to membership tests."""
        out = []
        if self.mode == CONGRUENCE:
            for e in monomials_of_degree(self.context.n, d):
                p = {e: Fraction(1)}
                if self.q.contains(Monomial(e)):
                    out.append(BElement(self, (p, {})))
                    out.append(BElement(self, ({}, p)))
                else:
                    out.append(BElement.from_T(self, p))
        else:
            defn = self.defining_ideal()
            for e in monomials_of_degree(self.context.n, d):
                if not defn.contains(Monomial(e)):
                    out.append(BElement.from_T(self, {e: Fraction(1)}))
        return out

    def membership_rows(self, d):
        """Rows L with: w in A_d iff L w = 0, over the basis_B(d) coordinates."""
        index = self.basis_index(d)
        width = len(index)
        rows = []
        if self.mode == CONGRUENCE:
            for e in monomials_of_degree(self.context.n, d):
                if not self.q.contains(Monomial(e)):
                    row = [Fraction(0)] * width
                    row[index[(0, e)]] = Fraction(1)
                    row[index[(1, e)]] = Fraction(-1)
                    rows.append(row)
        else:
            for e in monomials_of_degree(self.context.n, d):
                surv = self.surviving(e)
                for other in surv[1:]:
                    row = [Fraction(0)] * width
                    row[index[(surv[0], e)]] = Fraction(1)
                    row[index[(other, e)]] = Fraction(-1)
                    rows.append(row)
        return rows

    def __repr__(self):
        if self.mode == CONGRUENCE:
            return f"PullbackFamily(congruence, q={self.q!r})"
        supp = ", ".join(repr(p) for p in self.primes)
        return f"PullbackFamily({supp})"


class BElement:
    """An element of B: one polynomial per component, already reduced."""

    __slots__ = ("family", "parts")

    def __init__(self, family, parts):
        object.__setattr__(self, "family", family)
        object.__setattr__(
            self,
            "parts",
            tuple(family.reduce_poly(i, p) for i, p in enumerate(parts)),
        )

    def __setattr__(self, *a):
        raise AttributeError("BElement is immutable")

    @classmethod
    def from_T(cls, family, poly):
        """Image of a T-polynomial along the diagonal map."""
        return cls(family, tuple(poly for _ in range(family.ell)))

    @classmethod
    def idempotent(cls, family, i):
        one = {(0,) * family.context.n: Fraction(1)}
        return cls(
            family,
            tuple(one if j == i else {} for j in range(family.ell)),
        )

    @classmethod
    def zero(cls, family):
        return cls(family, tuple({} for _ in range(family.ell)))

    def component(self, i):
        """Multiplication by the idempotent e_i: zero out the other parts."""
        return BElement(
            self.family,
            tuple(p if j == i else {} for j, p in enumerate(self.parts)),
        )

    def mul_T(self, poly):
        return BElement(
            self.family,
            tuple(
                p_mul(part, self.family.reduce_poly(i, poly))
                for i, part in enumerate(self.parts)
            ),
        )

    def __mul__(self, other):
        return BElement(
            self.family,
            tuple(p_mul(a, b) for a, b in zip(self.parts, other.parts)),
        )

    def __add__(self, other):
        from .polys import p_add

        return BElement(
            self.family,
            tuple(p_add(a, b) for a, b in zip(self.parts, other.parts)),
        )

    def scale(self, c):
        return BElement(self.family, tuple(p_scale(p, c) for p in self.parts))

    def is_zero(self):
        return all(p_is_zero(p) for p in self.parts)

    def degree(self):
        """Common degree if homogeneous (None for 0 or inhomogeneous)."""
        degs = {p_degree(p) for p in self.parts if not p_is_zero(p)}
        return degs.pop() if len(degs) == 1 else None

    def vector(self, d):
        """Dense coordinates over basis_B(d); raises if support leaves it."""
        index = self.family.basis_index(d)
        v = [Fraction(0)] * len(index)
        for i, part in enumerate(self.parts):
            for m, c in part.items():
                v[index[(i, m)]] = c
        return v

    def in_A(self):
        """Membership in A, with a lift to T as witness in intersection mode.

        Intersection mode: true iff for every monomial all components in
        which it survives carry equal coefficients; the witness collects
        those common coefficients.  Congruence mode: true iff the
        difference of the two coordinates lies in q (witness None).
        """
        fam = self.family
        if fam.mode == CONGRUENCE:
            return (p_in_ideal(p_sub(self.parts[0], self.parts[1]), fam.q), None)
        candidate = {}
        for part in self.parts:
            for m, c in part.items():
                if candidate.setdefault(m, c) != c:
                    return (False, None)
        for m, c in candidate.items():
            for j in fam.surviving(m):
                if self.parts[j].get(m, Fraction(0)) != c:
                    return (False, None)
        return (True, candidate)

    def __eq__(self, other):
        return (
            isinstance(other, BElement)
            and self.family is other.family
            and self.parts == other.parts
        )

    def __repr__(self):
        from .polys import p_format

        inner = ", ".join(p_format(p, self.family.context) for p in self.parts)
        return f"({inner})"


def image_membership(fam, belt):
    """(is in A, witness lift): the coefficient-compatibility test."""
    return belt.in_A()


def mult_matrix(fam, multiplier, d, e):
    """Matrix of multiplication B_d -> B_{d+e} by a degree-e multiplier.

    The multiplier is a T-polynomial (acting diagonally) or a BElement.
    Columns follow basis_B(d), rows basis_B(d+e).
    """
    target_index = fam.basis_index(d + e)
    cols = []
    for (i, m) in fam.basis_B(d):
        if isinstance(multiplier, BElement):
            part = multiplier.parts[i]
        else:
            part = fam.reduce_poly(i, multiplier)
        col = [Fraction(0)] * len(target_index)
        for mm, c in part.items():
            key = (i, tuple(x + y for x, y in zip(mm, m)))
            col[target_index[key]] = c
        cols.append(col)
    # transpose to rows-major
    rows = [
        [cols[j][r] for j in range(len(cols))] for r in range(len(target_index))
    ]
    return rows


def stable_subspace(fam, d, multipliers):
    """{v in B_d : g v in A for every multiplier g}, as a Subspace."""
    width = fam.dim_B(d)
    constraints = []
    for g in multipliers:
        e = g.degree() if isinstance(g, BElement) else p_degree(g)
        if e is None:
            raise ValueError("multipliers must be homogeneous and nonzero")
        mrows = fam.membership_rows(d + e)
        if not mrows:
            continue
        mat = mult_matrix(fam, g, d, e)
        for lrow in mrows:
            row = [Fraction(0)] * width
            for r, lc in enumerate(lrow):
                if lc:
                    mrow = mat[r]
                    for j in range(width):
                        if mrow[j]:
                            row[j] += lc * mrow[j]
            constraints.append(row)
    return nullspace(constraints, width, QQ)


def conductor(fam, pad=2):
    """The conductor A : B, computed two independent ways.

    Closed path: the sum over i of the intersections of the other
    components (intersection mode) or q itself (congruence mode, where the
    conductor is q B).  Direct path: degree by degree, the span of the
    canonical A-basis vectors b with b e_i in A for every idempotent.
    The two spans must agree on every degree swept; disagreement raises
    MethodDisagreementError (an implementation bug, never swallowed).
    """
    if fam.mode == CONGRUENCE:
        formula = fam.q
    elif fam.ell == 1:
        formula = MonomialIdeal.unit(fam.context)  # degenerate A = B
    else:
        primes = [p.ideal() for p in fam.primes]
        formula = sum_all(
            [
                intersect_all([q for j, q in enumerate(primes) if j != i])
                for i in range(fam.ell)
            ]
        )
    top = formula.max_gen_degree() + pad
    for d in range(top + 1):
        direct = Subspace(QQ, fam.dim_B(d))
        for b in fam.basis_A_elements(d):
            # The e_i-stability conditions are coordinate-local in this
            # basis, so testing basis vectors computes the exact subspace.
            if all(b.component(i).in_A()[0] for i in range(fam.ell)):
                direct.insert(b.vector(d))
        closed = Subspace(QQ, fam.dim_B(d))
        if fam.mode == CONGRUENCE:
            for e in monomials_of_degree(fam.context.n, d):
                if fam.q.contains(Monomial(e)):
                    p = {e: Fraction(1)}
                    closed.insert(BElement(fam, (p, {})).vector(d))
                    closed.insert(BElement(fam, ({}, p)).vector(d))
        else:
            for e in monomials_of_degree(fam.context.n, d):
                if formula.contains(Monomial(e)):
                    belt = BElement.from_T(fam, {e: Fraction(1)})
                    if not belt.is_zero():
                        closed.insert(belt.vector(d))
        if direct != closed:
            raise MethodDisagreementError(
                f"conductor paths disagree in degree {d}: "
                f"direct dim {direct.dim}, closed dim {closed.dim}"
            )
    return formula


def conductor_is_irrelevant_primary(fam, cond=None):
    """Does the conductor cut out only the irrelevant maximal ideal?"""
    cond = conductor(fam) if cond is None else cond
    if fam.mode == CONGRUENCE:
        total = cond
    else:
        total = cond + fam.defining_ideal()
    if total.is_unit():
        return True  # A = B, nothing to support
    primes = total.minimal_primes()
    return len(primes) == 1 and primes[0].mask == fam.full_mask()


@dataclass(frozen=True)
class CokernelProfile:
    """Shape of B/A: per-degree dimensions, total length, socle."""

    length: int
    hilbert: tuple
    socle_dim: int
    annihilator_ok: bool

    def to_json(self):
        return {
            "length": self.length,
            "hilbert": list(self.hilbert),
            "socle_dim": self.socle_dim,
            "annihilator_ok": self.annihilator_ok,
        }


def cokernel_profile(fam):
    """Length, Hilbert function, and socle dimension of B/A.

    Requires the conductor to be primary to the irrelevant maximal ideal
    (otherwise B/A has infinite length).  A single vanishing degree
    certifies stabilization because B is generated over A in degree 0;
    the next degree is still checked at runtime.
    """
    cond = conductor(fam)
    if not conductor_is_irrelevant_primary(fam, cond):
        raise InfiniteLengthError("conductor is not irrelevant-primary")
    n = fam.context.n
    variables = [
        {tuple(1 if k == j else 0 for k in range(n)): Fraction(1)} for j in range(n)
    ]
    hilbert = []
    socle_total = 0
    d = 0
    while True:
        codim = fam.dim_B(d) - fam.dim_A(d)
        if codim == 0 and d > 0:
            nxt = fam.dim_B(d + 1) - fam.dim_A(d + 1)
            if nxt != 0:
                raise MethodDisagreementError(
                    "cokernel failed to stabilize after a zero degree"
                )
            break
        hilbert.append(codim)
        if codim:
            w = stable_subspace(fam, d, variables)
            socle_total += w.dim - fam.dim_A(d)
        d += 1
        if d > _MAX_COKERNEL_DEGREE:
            raise InfiniteLengthError("cokernel did not stabilize in bounded degree")
    while hilbert and hilbert[-1] == 0:
        hilbert.pop()
    # the conductor annihilates B/A by definition; verify on basis elements
    ann_ok = True
    cond_elements = []
    if fam.mode == CONGRUENCE:
        for g in cond.gens:
            p = p_of_monomial(g)
            cond_elements.append(BElement(fam, (p, {})))
            cond_elements.append(BElement(fam, ({}, p)))
    else:
        cond_elements = [BElement.from_T(fam, p_of_monomial(g)) for g in cond.gens]
    for d0, codim in enumerate(hilbert):
        if codim == 0:
            continue
        for c in cond_elements:
            for (i, m) in fam.basis_B(d0):
                unit = BElement(
                    fam,
                    tuple(
                        {m: Fraction(1)} if j == i else {} for j in range(fam.ell)
                    ),
                )
                if not (c * unit).in_A()[0]:
                    ann_ok = False
    return CokernelProfile(
        length=sum(hilbert),
        hilbert=tuple(hilbert),
        socle_dim=socle_total,
        annihilator_ok=ann_ok,
    )


class GradedSubmodule:
    """An A-submodule of B given by homogeneous generators."""

    __slots__ = ("family", "gens", "_pieces")

    def __init__(self, family, gens):
        object.__setattr__(self, "family", family)
        gens = tuple(g for g in gens if not g.is_zero())
        for g in gens:
            if g.degree() is None:
                raise ValueError("generators must be homogeneous")
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "_pieces", {})

    def __setattr__(self, *a):
        raise AttributeError("GradedSubmodule is immutable")

    @classmethod
    def from_ideal(cls, fam, ideal):
        """The submodule (ideal + defining)/defining of A inside B."""
        return cls(
            fam, [BElement.from_T(fam, p_of_monomial(g)) for g in ideal.gens]
        )

    @classmethod
    def unit_A(cls, fam):
        return cls(fam, [BElement.from_T(fam, p_of_monomial(Monomial.one(fam.context.n)))])

    @classmethod
    def all_B(cls, fam):
        return cls(fam, [BElement.idempotent(fam, i) for i in range(fam.ell)])

    def piece(self, d):
        got = self._pieces.get(d)
        if got is not None:
            return got
        fam = self.family
        space = Subspace(QQ, fam.dim_B(d))
        for g in self.gens:
            e = g.degree()
            if e > d:
                continue
            for a in fam.basis_A_elements(d - e):
                space.insert((a * g).vector(d))
        self._pieces[d] = space
        return space


@dataclass(frozen=True)
class ColonResult:
    """Degreewise solution of {b in B : b I <= X}, certified up to `bound`."""

    pieces: dict
    bound: int
    note: str = ""

    def piece(self, d):
        return self.pieces[d]

    def equals_all_of_B(self, fam):
        return all(
            space.dim == fam.dim_B(d) for d, space in self.pieces.items()
        )


def colon_in_B(fam, x_submodule, ideal, bound=None):
    """{b in B : b*I inside X}, degree by degree up to the bound.

    Default bound: max generator degree of I plus the variable count.
    Bound insufficiency is inherent (the result is a window, not a
    presentation) and is recorded in the result metadata.
    """
    if ideal.is_zero():
        raise ValueError("colon by the zero ideal is all of B; not represented")
    if bound is None:
        bound = ideal.max_gen_degree() + fam.context.n
    gens = [p_of_monomial(g) for g in ideal.gens]
    pieces = {}
    for d in range(bound + 1):
        width = fam.dim_B(d)
        constraints = []
        for g in gens:
            e = p_degree(g)
            target = x_submodule.piece(d + e)
            mat = mult_matrix(fam, g, d, e)
            # constraint: residual of (g . v) against X_{d+e} vanishes
            cols = list(zip(*mat)) if mat else [()] * width
            reduced_cols = [target.reduce(list(col)) for col in cols]
            if reduced_cols:
                height = len(reduced_cols[0])
                for r in range(height):
                    row = [reduced_cols[j][r] for j in range(width)]
                    if any(row):
                        constraints.append(row)
        pieces[d] = nullspace(constraints, width, QQ)
    return ColonResult(pieces=pieces, bound=bound, note=f"verified up to degree {bound}")


def verify_generation(fam, cond, elements):
    """Does sum a_i B equal the conductor, as subsets of A?

    Containment <=: every a_i e_j lies in A (membership witness) and the
    witness lies in the conductor ideal.  Containment >=: every conductor
    generator is solved for inside the degree-matched piece of sum a_i B.
    Elements must be homogeneous.
    """
    for a in elements:
        if p_degree(a) is None:
            raise ValueError("generation elements must be homogeneous and nonzero")
    details = {"forward": [], "reverse": []}
    ok = True
    for idx, a in enumerate(elements):
        belt = BElement.from_T(fam, a)
        for j in range(fam.ell):
            piece = belt.component(j)
            inside, witness = piece.in_A()
            if not inside:
                ok = False
                details["forward"].append((idx, j, "not in A"))
                continue
            if fam.mode == CONGRUENCE:
                good = all(p_in_ideal(p, fam.q) for p in piece.parts)
            else:
                good = p_in_ideal(witness, cond)
            if not good:
                ok = False
                details["forward"].append((idx, j, "witness escapes conductor"))
    targets = []
    for g in cond.gens:
        if fam.mode == CONGRUENCE:
            p = p_of_monomial(g)
            targets.append(BElement(fam, (p, {})))
            targets.append(BElement(fam, ({}, p)))
        else:
            belt = BElement.from_T(fam, p_of_monomial(g))
            if not belt.is_zero():
                targets.append(belt)
    for t in targets:
        e = t.degree()
        span = Subspace(QQ, fam.dim_B(e))
        for a in elements:
            da = p_degree(a)
            if da > e:
                continue
            for (i, m) in fam.basis_B(e - da):
                unit = BElement(
                    fam,
                    tuple({m: Fraction(1)} if k == i else {} for k in range(fam.ell)),
                )
                span.insert(unit.mul_T(a).vector(e))
        if not span.contains(t.vector(e)):
            ok = False
            details["reverse"].append((repr(t), "not generated"))
    return ok, details


def regular_sequence_on_B(fam, elements, bound):
    """Are the elements a B-regular sequence, degree-wise up to the bound?

    For each prefix, multiplication by the next element must be injective
    on B / (previous elements) B in every degree <= bound.
    """
    for a in elements:
        if p_degree(a) is None:
            raise ValueError("elements must be homogeneous and nonzero")
    for k, a in enumerate(elements):
        prev_gens = []
        for b in elements[:k]:
            for i in range(fam.ell):
                prev_gens.append(BElement.from_T(fam, b).component(i))
        prev = GradedSubmodule(fam, prev_gens) if prev_gens else None
        e = p_degree(a)
        for d in range(bound + 1):
            width = fam.dim_B(d)
            target = (
                prev.piece(d + e)
                if prev is not None
                else Subspace(QQ, fam.dim_B(d + e))
            )
            mat = mult_matrix(fam, a, d, e)
            cols = list(zip(*mat)) if mat else [()] * width
            reduced_cols = [target.reduce(list(col)) for col in cols]
            constraints = []
            if reduced_cols and reduced_cols[0]:
                height = len(reduced_cols[0])
                for r in range(height):
                    row = [reduced_cols[j][r] for j in range(width)]
                    if any(row):
                        constraints.append(row)
            kernel = nullspace(constraints, width, QQ)
            lower = (
                prev.piece(d) if prev is not None else Subspace(QQ, width)
            )
            # regular iff the kernel of multiplication is exactly prev B
            if kernel.dim != lower.dim or not all(
                lower.contains(r) for r in kernel.rows
            ):
                return False
    return True
