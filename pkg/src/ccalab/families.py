"""Constructors and claim-by-claim verifiers for the shipped ring families.

Each report compares engine-computed invariants against expected values
(normally supplied by the registry) and runs the structural cross-checks
that hold for every instance: the two conductor paths, the height
formulas, depth via two independent routes, and the exact-sequence
bookkeeping between a ring and its pullback model.  Conclusions that are
implied by cited theory but deliberately not recomputed (Gorensteinness
of blowup algebras, canonical-module identifications) are emitted as
informational entries, never as verified claims.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .complexes import depth, depth_via_local_cohomology, dim_of_quotient
from .linalg import QQ
from .monomial import (
    Monomial,
    MonomialIdeal,
    VarContext,
    intersect_all,
    make_context,
    quotient_height,
)
from .polys import p_linear, p_mono
from .pullback import (
    PullbackFamily,
    cokernel_profile,
    conductor,
    conductor_is_irrelevant_primary,
    regular_sequence_on_B,
    verify_generation,
)
from .report import VerificationReport
from .s2 import Verdict, trace_ideal_check


@dataclass(frozen=True)
class FFamilySpec:
    """Subsets F_1..F_l of the variables, nonempty and forming an antichain."""

    context: VarContext
    subsets: tuple

    def __post_init__(self):
        subs = tuple(frozenset(s) for s in self.subsets)
        object.__setattr__(self, "subsets", subs)
        if len(subs) < 2:
            raise ValueError("need at least two subsets")
        for s in subs:
            if not s:
                raise ValueError("subsets must be nonempty")
            for name in s:
                self.context.index(name)
        for i, a in enumerate(subs):
            for j, b in enumerate(subs):
                if i != j and a <= b:
                    raise ValueError("subsets must form an antichain")

    @classmethod
    def from_indices(cls, n, index_sets, prefix="x"):
        """1-based variable indices, variables named prefix1..prefixn."""
        ctx = make_context(n, prefix)
        return cls(ctx, tuple(frozenset(f"{prefix}{i}" for i in s) for s in index_sets))

    def family(self):
        return PullbackFamily.from_supports(self.context, [sorted(s) for s in self.subsets])

    def primes(self):
        return [MonomialIdeal.from_support(self.context, sorted(s)) for s in self.subsets]

    def defining_ideal(self):
        return intersect_all(self.primes())

    def is_unmixed(self):
        return len({len(s) for s in self.subsets}) == 1

    def min_setminus(self):
        return min(
            len(a - b)
            for a, b in itertools.permutations(self.subsets, 2)
        )


def _linear_form(ctx, names):
    return p_linear(ctx.n, [ctx.index(nm) for nm in names])


def f_family_report(
    spec,
    field=QQ,
    expected=None,
    anchors=None,
    parameters=None,
    trace_powers=(),
    bound=None,
    jobs=1,
):
    """Verify every computable claim about A = T/(cap (F_i)) and B = (+) T/(F_i).

    parameters: optional linear forms (lists of variable names) expected
    to generate the conductor over B.  trace_powers: exponents l for
    which the trace test runs on (max ideal)^l.
    """
    expected = expected or {}
    anchors = anchors or {}
    rep = VerificationReport("f-family")

    def anchor(cid, default):
        return anchors.get(cid, default)

    fam = spec.family()
    defining = spec.defining_ideal()
    primes = spec.primes()
    n = spec.context.n

    cond = conductor(fam)  # raises MethodDisagreementError on a path mismatch
    rep.assert_true(
        "conductor.two-path",
        anchor("conductor.two-path", "A:B agrees between sum of J_i and direct solve"),
        True,
    )
    if "conductor_gens" in expected:
        rep.check(
            "conductor.value",
            anchor("conductor.value", "computed conductor generators"),
            sorted(expected["conductor_gens"]),
            sorted(g.format(spec.context) for g in cond.gens),
        )
    if "conductor_is_max_ideal" in expected:
        maxideal = MonomialIdeal.from_support(spec.context, spec.context.names)
        rep.check(
            "conductor.is-max-ideal",
            anchor("conductor.is-max-ideal", "I = m"),
            expected["conductor_is_max_ideal"],
            cond == maxideal,
        )

    ht = quotient_height(cond, defining)
    pair_formula = min(
        quotient_height(p + q, defining)
        for p, q in itertools.combinations(primes, 2)
    )
    rep.check(
        "height.pair-formula",
        anchor("height.pair-formula", "ht_A I = min ht_A(p_i + p_j)"),
        ht,
        pair_formula,
    )
    if spec.is_unmixed():
        rep.check(
            "height.setminus-formula",
            anchor("height.setminus-formula", "ht_A I = min |F_i - F_j|"),
            ht,
            spec.min_setminus(),
        )
    if "ht_I" in expected:
        rep.check("height.I", anchor("height.I", "ht_A I"), expected["ht_I"], ht)

    dim_a = dim_of_quotient(defining)
    rep.check(
        "dim.formula",
        anchor("dim.formula", "dim A = n - min |F_i|"),
        dim_a,
        n - min(len(s) for s in spec.subsets),
    )
    if "dim_A" in expected:
        rep.check("dim.A", anchor("dim.A", "dim A"), expected["dim_A"], dim_a)

    depth_a = depth(defining, field, jobs=jobs)
    rep.check(
        "depth.two-routes",
        anchor("depth.two-routes", "depth via Betti table equals depth via links"),
        depth_a,
        depth_via_local_cohomology(defining, field),
    )
    if "depth_A" in expected:
        rep.check("depth.A", anchor("depth.A", "depth A"), expected["depth_A"], depth_a)

    if spec.is_unmixed():
        depth_b = min(depth(p, field, jobs=jobs) for p in primes)
        rep.check(
            "depth.B",
            anchor("depth.B", "depth_A B = d"),
            dim_a,
            depth_b,
        )
        if spec.min_setminus() >= 2:
            rep.check(
                "theorem.family-bounds",
                anchor("theorem.family-bounds", "ht I >= 2 and 0 < depth A < d"),
                True,
                ht >= 2 and 0 < depth_a < dim_a,
            )
            rep.info(
                "canonical.module",
                anchor("canonical.module", "K_A and B agree as A-modules"),
                "implied by the conductor/depth certificates; not recomputed",
            )

    if "depth_quotients" in expected:
        vals = [depth(cond + p, field, jobs=jobs) for p in primes]
        rep.check(
            "depth.quotients",
            anchor("depth.quotients", "depth A/(I + p_i) per component"),
            expected["depth_quotients"],
            vals,
        )
        rep.check(
            "depth.B-over-I",
            anchor("depth.B-over-I", "depth_A B/I = min over components"),
            expected.get("depth_B_over_I", min(expected["depth_quotients"])),
            min(vals),
        )
    if "depth_A_over_I" in expected:
        rep.check(
            "depth.A-over-I",
            anchor("depth.A-over-I", "depth A/I"),
            expected["depth_A_over_I"],
            depth(cond, field, jobs=jobs),
        )
    if "pairwise_intersection_identity" in expected:
        rhs = intersect_all(
            [p + q for p, q in itertools.combinations(primes, 2)]
        )
        rep.check(
            "conductor.pairwise-intersection",
            anchor(
                "conductor.pairwise-intersection",
                "I equals the intersection of the pairwise prime sums",
            ),
            expected["pairwise_intersection_identity"],
            cond == rhs,
        )
    if "product_form" in expected:
        rhs = _product_form_ideal(spec.context, expected["product_form"])
        rep.check(
            "conductor.product-form",
            anchor("conductor.product-form", "closed product form of I"),
            True,
            cond == rhs,
        )

    if conductor_is_irrelevant_primary(fam, cond):
        prof = cokernel_profile(fam)
        if "cokernel_length" in expected:
            rep.check(
                "cokernel.length",
                anchor("cokernel.length", "length of B/A"),
                expected["cokernel_length"],
                prof.length,
            )
        if "socle_dim" in expected:
            rep.check(
                "cokernel.socle",
                anchor("cokernel.socle", "socle dimension of B/A"),
                expected["socle_dim"],
                prof.socle_dim,
            )
        rep.assert_true(
            "cokernel.annihilated",
            anchor("cokernel.annihilated", "the conductor kills B/A"),
            prof.annihilator_ok,
        )

    tb = bound if bound is not None else cond.max_gen_degree() + 3
    verdict = trace_ideal_check(fam, cond, bound=tb)
    rep.check(
        "trace.conductor",
        anchor("trace.conductor", "the conductor is a trace ideal with I:I = B"),
        True,
        bool(verdict.is_trace) and verdict.endo_ring_is_B is not Verdict.FAIL,
        bound=tb,
        note=verdict.reason,
    )
    maxideal = MonomialIdeal.from_support(spec.context, spec.context.names)
    for ell in trace_powers:
        power = maxideal
        for _ in range(ell - 1):
            power = power * maxideal
        v = trace_ideal_check(fam, power, bound=ell + 3)
        rep.check(
            f"trace.max-ideal-power-{ell}",
            anchor(
                f"trace.max-ideal-power-{ell}",
                f"m^{ell} is a trace ideal and B = m^{ell}:m^{ell}",
            ),
            True,
            bool(v.is_trace) and bool(v.endo_ring_is_B),
            bound=ell + 3,
            note=v.reason,
        )

    if parameters:
        forms = [_linear_form(spec.context, names) for names in parameters]
        ok, _detail = verify_generation(fam, cond, forms)
        rep.check(
            "generation.parameters",
            anchor("generation.parameters", "conductor = sum a_i B"),
            expected.get("generation", True),
            ok,
        )
        rep.check(
            "sequence.B-regular",
            anchor("sequence.B-regular", "the parameters form a B-regular sequence"),
            True,
            regular_sequence_on_B(fam, forms, 3),
            bound=3,
        )
        if ok and expected.get("generation", True):
            rep.info(
                "s2.hull-is-B",
                anchor("s2.hull-is-B", "a_i B = U(a_i A) summed over i"),
                "equivalent to the verified conductor generation identity",
                computed=True,
            )
    return rep


def _product_form_ideal(ctx, form):
    """Build sum-of-products closed forms from the registry description.

    form: {"linear": [names], "products": [[names, names], ...]}
    """
    total = MonomialIdeal.zero(ctx)
    if form.get("linear"):
        total = total + MonomialIdeal.from_support(ctx, form["linear"])
    for left, right in form.get("products", ()):
        total = total + (
            MonomialIdeal.from_support(ctx, left)
            * MonomialIdeal.from_support(ctx, right)
        )
    return total


@dataclass(frozen=True)
class ArtinianQuotient:
    """S/q for a monomial ideal q with dim S/q = 0."""

    context: VarContext
    ideal: MonomialIdeal

    def __post_init__(self):
        if self.ideal.context != self.context:
            raise ValueError("ideal in wrong context")
        if self.ideal.is_unit() or self.ideal.is_zero():
            raise ValueError("need a proper nonzero ideal")
        primes = self.ideal.minimal_primes()
        full = (1 << self.context.n) - 1
        if len(primes) != 1 or primes[0].mask != full:
            raise ValueError("quotient is not Artinian")

    def exponent_caps(self):
        caps = []
        limit = self.ideal.max_gen_degree() + 1
        for i in range(self.context.n):
            e = 1
            while e <= limit and not self.ideal.contains(
                Monomial.variable(self.context.n, i, e)
            ):
                e += 1
            caps.append(e)
        return caps

    def standard_monomials(self):
        caps = self.exponent_caps()
        out = []
        for exps in itertools.product(*(range(c) for c in caps)):
            m = Monomial(exps)
            if not self.ideal.contains(m):
                out.append(m)
        return sorted(out, key=lambda m: (m.degree(), m.exps))


def socle_and_type(q):
    """Length and socle dimension of an Artinian monomial quotient."""
    std = q.standard_monomials()
    n = q.context.n
    socle = [
        m
        for m in std
        if all(q.ideal.contains(m * Monomial.variable(n, i)) for i in range(n))
    ]
    return {"length": len(std), "socle_dim": len(socle)}


def k_plus_q_report(q, expected=None, anchors=None):
    """Hypothesis checks for the subring k + q of S (q a parameter ideal).

    Verifies the colength-two hypothesis, the socle type, and the derived
    colength of the subring; the blowup conclusion itself is recorded as
    implied, never recomputed.
    """
    expected = expected or {}
    anchors = anchors or {}
    rep = VerificationReport("k-plus-q")

    def anchor(cid, default):
        return anchors.get(cid, default)

    n = q.context.n
    rep.check(
        "parameter-shape",
        anchor("parameter-shape", "q is generated by d = dim S elements"),
        True,
        len(q.ideal.gens) == n,
    )
    st = socle_and_type(q)
    if "length" in expected:
        rep.check(
            "length",
            anchor("length", "length of S/q"),
            expected["length"],
            st["length"],
        )
    rep.check(
        "hypothesis.length-two",
        anchor("hypothesis.length-two", "length of S/q equals 2"),
        expected.get("hypothesis_length_two", True),
        st["length"] == 2,
    )
    if "socle_dim" in expected:
        rep.check(
            "socle-type",
            anchor("socle-type", "Cohen-Macaulay type of S/q"),
            expected["socle_dim"],
            st["socle_dim"],
        )
    colength = len([m for m in q.standard_monomials() if m.degree() > 0])
    rep.check(
        "subring-colength",
        anchor("subring-colength", "length of S/A is one less than length of S/q"),
        st["length"] - 1,
        colength,
    )
    if "subring_colength" in expected:
        rep.check(
            "subring-colength.value",
            anchor("subring-colength.value", "length of S/A"),
            expected["subring_colength"],
            colength,
        )
    # q stays an ideal of S: gens times variables stay inside q
    stable = all(
        q.ideal.contains(g * Monomial.variable(n, i))
        for g in q.ideal.gens
        for i in range(n)
    )
    rep.assert_true(
        "conductor-surrogate",
        anchor("conductor-surrogate", "q S = q, so S embeds in m:m"),
        stable,
    )
    rep.info(
        "endo-ring",
        anchor("endo-ring", "m:m = S"),
        "reverse inclusion holds by normality of the ambient ring; not recomputed",
    )
    if st["length"] == 2 and expected.get("hypothesis_length_two", True):
        rep.info(
            "rees.gorenstein",
            anchor("rees.gorenstein", "the blowup of Q^d along k + q is Gorenstein"),
            "implied by the verified hypothesis chain; not recomputed",
        )
    return rep


def fiber_product_report(q, expected=None, anchors=None, parameters=None):
    """Claims for the congruence pullback A = S x_{S/q} S inside B = S x S."""
    expected = expected or {}
    anchors = anchors or {}
    rep = VerificationReport("fiber-product")

    def anchor(cid, default):
        return anchors.get(cid, default)

    fam = PullbackFamily.congruence(q.ideal)
    cond = conductor(fam)
    rep.assert_true(
        "conductor.two-path",
        anchor("conductor.two-path", "A:B = qB, agreed by both computation paths"),
        True,
    )
    rep.check(
        "conductor.equals-qB",
        anchor("conductor.equals-qB", "A:B = Ann_A(S/q) = qB"),
        True,
        cond == q.ideal,
    )
    prof = cokernel_profile(fam)
    st = socle_and_type(q)
    rep.check(
        "cokernel.length-vs-ring",
        anchor("cokernel.length-vs-ring", "length of B/A equals length of S/q"),
        st["length"],
        prof.length,
    )
    if "length" in expected:
        rep.check(
            "cokernel.length",
            anchor("cokernel.length", "length of B/A"),
            expected["length"],
            prof.length,
        )
    rep.check(
        "cokernel.socle-vs-ring",
        anchor("cokernel.socle-vs-ring", "socle of B/A matches the socle of S/q"),
        st["socle_dim"],
        prof.socle_dim,
    )
    if "type_r" in expected:
        rep.check(
            "type.r",
            anchor("type.r", "r_A(B/A) = r(S/q)"),
            expected["type_r"],
            prof.socle_dim,
        )
    rep.check(
        "hypothesis.r-is-one",
        anchor("hypothesis.r-is-one", "r_A(B/A) = 1"),
        expected.get("hypothesis_r_is_one", True),
        prof.socle_dim == 1,
    )
    rep.assert_true(
        "cokernel.annihilated",
        anchor("cokernel.annihilated", "qB kills B/A"),
        prof.annihilator_ok,
    )
    if parameters:
        forms = [p_mono(tuple(e)) for e in parameters]
        ok, _detail = verify_generation(fam, cond, forms)
        rep.check(
            "generation.alphas",
            anchor("generation.alphas", "qB = sum alpha_i B for alpha_i = (a_i, a_i)"),
            expected.get("generation", True),
            ok,
        )
    if prof.socle_dim == 1 and expected.get("hypothesis_r_is_one", True):
        rep.info(
            "rees.gorenstein",
            anchor("rees.gorenstein", "the blowup of Q^d along A is Gorenstein"),
            "implied by the verified hypothesis chain; not recomputed",
        )
    return rep
