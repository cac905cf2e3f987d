"""Seeded random property suites.

Each suite runs a fixed number of trials from a deterministic generator
and reports the failure count; acceptance requires zero failures.  Sizes
are capped so a full run stays fast: ideals on at most 5 variables with
at most 4 generators of degree at most 3, families on at most 8
variables with at most 4 components.
"""

from __future__ import annotations

import random

from .complexes import depth_via_local_cohomology, projective_dimension
from .linalg import QQ
from .monomial import (
    Monomial,
    MonomialIdeal,
    intersect_all,
    make_context,
    sum_all,
)
from .pullback import PullbackFamily, conductor
from .report import VerificationReport
from .s2 import QuotientRing, s2_membership, s2_membership_oracle

DEFAULT_TRIALS = 200


def random_monomial(rng, n, max_deg, min_deg=1):
    d = rng.randint(min_deg, max_deg)
    exps = [0] * n
    for _ in range(d):
        exps[rng.randrange(n)] += 1
    return Monomial(exps)


def random_monomial_ideal(rng, ctx, max_gens=4, max_deg=3):
    k = rng.randint(1, max_gens)
    return MonomialIdeal(ctx, [random_monomial(rng, ctx.n, max_deg) for _ in range(k)])


def random_squarefree_ideal(rng, ctx, max_gens=4):
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        size = rng.randint(1, max(1, ctx.n - 1))
        supp = rng.sample(range(ctx.n), size)
        gens.append(Monomial(tuple(1 if i in supp else 0 for i in range(ctx.n))))
    ideal = MonomialIdeal(ctx, gens)
    return ideal if ideal.is_proper() and not ideal.is_zero() else None


def random_antichain(rng, n, ell):
    for _ in range(50):
        subsets = []
        for _ in range(ell):
            size = rng.randint(1, n - 1)
            subsets.append(frozenset(rng.sample(range(n), size)))
        if len(set(subsets)) != ell:
            continue
        if any(a <= b for a in subsets for b in subsets if a is not b):
            continue
        return subsets
    return None


def lemma_intersection_suite(seed=0, trials=DEFAULT_TRIALS):
    """cap_i (I_i + J_i) = sum_i J_i for J_i the deleted intersections."""
    rng = random.Random(seed)
    rep = VerificationReport("suite-deleted-intersections", config={"seed": seed, "trials": trials})
    failures = []
    for t in range(trials):
        n = rng.randint(2, 5)
        ell = rng.randint(2, 4)
        ctx = make_context(n)
        ideals = [random_monomial_ideal(rng, ctx) for _ in range(ell)]
        js = [
            intersect_all([ideals[j] for j in range(ell) if j != i])
            for i in range(ell)
        ]
        lhs = intersect_all([ideals[i] + js[i] for i in range(ell)])
        rhs = sum_all(js)
        if lhs != rhs:
            failures.append(t)
    rep.check(
        "identity.trials",
        "cap (I_i + J_i) = sum J_i on every random family",
        {"trials": trials, "failures": []},
        {"trials": trials, "failures": failures},
    )
    return rep


def conductor_two_path_suite(seed=0, trials=DEFAULT_TRIALS):
    """The closed-form and direct conductor computations agree."""
    rng = random.Random(seed)
    rep = VerificationReport("suite-conductor-two-path", config={"seed": seed, "trials": trials})
    failures = []
    done = 0
    while done < trials:
        n = rng.randint(3, 8)
        ell = rng.randint(2, 4)
        subsets = random_antichain(rng, n, ell)
        if subsets is None:
            continue
        ctx = make_context(n)
        fam = PullbackFamily.from_supports(
            ctx, [sorted(f"x{i+1}" for i in s) for s in subsets]
        )
        try:
            conductor(fam)
        except Exception:
            failures.append(done)
        done += 1
    rep.check(
        "agreement.trials",
        "sum of J_i equals the degreewise direct conductor on every family",
        {"trials": trials, "failures": []},
        {"trials": trials, "failures": failures},
    )
    return rep


def auslander_buchsbaum_suite(seed=0, trials=DEFAULT_TRIALS, field=QQ):
    """depth + projective dimension = n, with depth from the link route."""
    rng = random.Random(seed)
    rep = VerificationReport("suite-auslander-buchsbaum", config={"seed": seed, "trials": trials})
    failures = []
    done = 0
    while done < trials:
        n = rng.randint(3, 6)
        ctx = make_context(n)
        ideal = random_squarefree_ideal(rng, ctx)
        if ideal is None:
            continue
        pd = projective_dimension(ideal, field)
        dpt = depth_via_local_cohomology(ideal, field)
        if dpt + pd != n:
            failures.append(done)
        done += 1
    rep.check(
        "ab.trials",
        "depth + pd = n on every random squarefree quotient",
        {"trials": trials, "failures": []},
        {"trials": trials, "failures": failures},
    )
    return rep


def s2_oracle_suite(seed=0, trials=DEFAULT_TRIALS):
    """s2_membership agrees with the brute-force conductor-search oracle."""
    rng = random.Random(seed)
    rep = VerificationReport("suite-s2-oracle", config={"seed": seed, "trials": trials})
    failures = []
    done = 0
    while done < trials:
        n = rng.randint(3, 5)
        ctx = make_context(n)
        if rng.random() < 0.25:
            defining = MonomialIdeal.zero(ctx)
            free = list(range(n))
        else:
            ell = rng.randint(1, 2)
            subsets = []
            for _ in range(ell):
                size = rng.randint(1, n - 2) if n > 2 else 1
                subsets.append(frozenset(rng.sample(range(n), size)))
            union = frozenset().union(*subsets)
            free = [i for i in range(n) if i not in union]
            if not free:
                continue
            primes = [
                MonomialIdeal.from_support(ctx, sorted(f"x{i+1}" for i in s))
                for s in subsets
            ]
            defining = intersect_all(primes)
            if defining.is_zero() or defining.is_unit():
                continue
        ring = QuotientRing(ctx, defining)
        a_exps = [0] * n
        for _ in range(rng.randint(1, 2)):
            a_exps[rng.choice(free)] += 1
        a = Monomial(a_exps)
        if not ring.is_nonzerodivisor(a):
            continue
        m = random_monomial(rng, n, 3, min_deg=0)
        if s2_membership(ring, m, a) != s2_membership_oracle(ring, m, a):
            failures.append(done)
        done += 1
    rep.check(
        "oracle.trials",
        "fraction membership agrees with the conductor-search oracle",
        {"trials": trials, "failures": []},
        {"trials": trials, "failures": failures},
    )
    return rep


def run_all_suites(seed=0, trials=DEFAULT_TRIALS, field=QQ):
    return [
        lemma_intersection_suite(seed, trials),
        conductor_two_path_suite(seed, trials),
        auslander_buchsbaum_suite(seed, trials, field),
        s2_oracle_suite(seed, trials),
    ]
