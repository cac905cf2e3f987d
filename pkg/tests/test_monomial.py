import random

import pytest

from ccalab.errors import ContextMismatchError, UnitIdealError, ZeroIdealError
from ccalab.monomial import (
    Monomial,
    MonomialIdeal,
    VarContext,
    intersect_all,
    make_context,
    parse_monomial,
    quotient_dim,
    quotient_height,
)

from oracles import (
    colon_by_membership,
    intersection_by_membership,
    minimal_primes_by_enumeration,
    same_members_up_to,
)

CTX2 = VarContext(("x", "y"))
CTX4 = VarContext(("x", "y", "z", "w"))


def ideal(ctx, *texts):
    return MonomialIdeal.from_strings(ctx, texts)


def random_ideal(rng, ctx, max_gens=4, max_deg=3):
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        exps = [0] * ctx.n
        for _ in range(rng.randint(1, max_deg)):
            exps[rng.randrange(ctx.n)] += 1
        gens.append(Monomial(exps))
    return MonomialIdeal(ctx, gens)


# -- construction and conventions -------------------------------------------


def test_context_invariants():
    with pytest.raises(ValueError):
        VarContext(())
    with pytest.raises(ValueError):
        VarContext(("x", "x"))


def test_minimal_generating_set_is_canonical():
    i = ideal(CTX2, "x", "x^2", "x*y", "y", "y^3")
    assert [g.format(CTX2) for g in i.gens] == ["y", "x"]
    j = MonomialIdeal.from_exponents(CTX2, [[0, 1], [1, 0]])
    assert i == j
    assert hash(i) == hash(j)


def test_zero_and_unit_conventions():
    z = MonomialIdeal.zero(CTX2)
    u = MonomialIdeal.unit(CTX2)
    assert z.is_zero() and not z.is_unit() and z.is_proper()
    assert u.is_unit() and not u.is_proper()
    i = ideal(CTX2, "x*y")
    assert i.intersect(u) == i
    assert i.intersect(z) == z
    assert i.colon(u) == i
    assert i.colon(z) == u
    assert z.colon(i) == z


def test_context_mismatch_raises():
    with pytest.raises(ContextMismatchError):
        ideal(CTX2, "x").intersect(ideal(CTX4, "x"))


# -- intersect ---------------------------------------------------------------


def test_intersect_coprime_variables():
    assert ideal(CTX2, "x").intersect(ideal(CTX2, "y")) == ideal(CTX2, "x*y")


def test_intersect_two_planes_frozen_and_oracle():
    i = ideal(CTX4, "x", "y")
    j = ideal(CTX4, "z", "w")
    got = i.intersect(j)
    # frozen value derived from the degree-2 membership sweep below
    assert got == ideal(CTX4, "x*z", "x*w", "y*z", "y*w")
    assert got == intersection_by_membership(i, j, 2)


def test_intersect_associative_commutative():
    rng = random.Random(1)
    ctx = make_context(3)
    for _ in range(30):
        a, b, c = (random_ideal(rng, ctx) for _ in range(3))
        assert a.intersect(b) == b.intersect(a)
        assert a.intersect(b.intersect(c)) == a.intersect(b).intersect(c)


# -- colon -------------------------------------------------------------------


def test_colon_divide_out():
    assert ideal(CTX2, "x*y").colon(ideal(CTX2, "x")) == ideal(CTX2, "y")


def test_colon_two_planes_by_x_frozen_and_oracle():
    i = ideal(CTX4, "x", "y").intersect(ideal(CTX4, "z", "w"))
    got = i.colon(ideal(CTX4, "x"))
    assert got == ideal(CTX4, "z", "w")
    assert got == colon_by_membership(i, parse_monomial(CTX4, "x"), 2)


def test_colon_intersection_adjunction_random():
    rng = random.Random(2)
    ctx = make_context(5)
    for _ in range(40):
        i, j, k = (random_ideal(rng, ctx) for _ in range(3))
        lhs = i.intersect(j).colon(k)
        rhs = i.colon(k).intersect(j.colon(k))
        assert lhs == rhs


# -- minimal primes ----------------------------------------------------------


def test_minimal_primes_frozen_and_oracle():
    ctx = VarContext(("x", "y", "z"))
    i = ideal(ctx, "x*y", "x*z")
    got = [set(p.variable_names()) for p in i.minimal_primes()]
    assert got == [{"x"}, {"y", "z"}]
    oracle = minimal_primes_by_enumeration(i)
    assert sorted(frozenset(ctx.index(v) for v in p.variable_names()) for p in i.minimal_primes()) == sorted(oracle)


def test_minimal_primes_of_prime_intersection():
    i = ideal(CTX4, "x", "y").intersect(ideal(CTX4, "z", "w"))
    got = [set(p.variable_names()) for p in i.minimal_primes()]
    assert got == [{"x", "y"}, {"z", "w"}]


def test_minimal_primes_unit_rejected():
    with pytest.raises(UnitIdealError):
        MonomialIdeal.unit(CTX2).minimal_primes()


def test_minimal_primes_random_against_enumeration():
    rng = random.Random(3)
    ctx = make_context(4)
    for _ in range(30):
        i = random_ideal(rng, ctx)
        if i.is_unit():
            continue
        got = sorted(
            frozenset(ctx.index(v) for v in p.variable_names())
            for p in i.minimal_primes()
        )
        assert got == sorted(minimal_primes_by_enumeration(i))


def test_minimal_primes_equal_radical_minimal_primes():
    rng = random.Random(4)
    ctx = make_context(4)
    for _ in range(20):
        i = random_ideal(rng, ctx)
        if i.is_unit():
            continue
        assert i.minimal_primes() == i.radical().minimal_primes()


def test_radical_of_squarefree_is_identity():
    i = ideal(CTX4, "x*y", "z")
    assert i.radical() == i


# -- irreducible decomposition ----------------------------------------------


def test_irreducible_decomposition_frozen():
    i = ideal(CTX2, "x^2", "x*y", "y^3")
    comps = i.irreducible_decomposition()
    assert set(comps) == {ideal(CTX2, "x^2", "y"), ideal(CTX2, "x", "y^3")}


def test_irreducible_decomposition_soundness_by_membership():
    i = ideal(CTX2, "x^2", "x*y", "y^3")
    inter = intersect_all(i.irreducible_decomposition())
    assert same_members_up_to(i, inter, 5)


def test_irreducible_decomposition_trivials():
    assert ideal(CTX2, "x^2", "y").irreducible_decomposition() == [
        ideal(CTX2, "x^2", "y")
    ]
    assert set(ideal(CTX2, "x*y").irreducible_decomposition()) == {
        ideal(CTX2, "x"),
        ideal(CTX2, "y"),
    }
    with pytest.raises(UnitIdealError):
        MonomialIdeal.unit(CTX2).irreducible_decomposition()
    with pytest.raises(ZeroIdealError):
        MonomialIdeal.zero(CTX2).irreducible_decomposition()


def test_irreducible_decomposition_random_soundness():
    rng = random.Random(5)
    ctx = make_context(3)
    for _ in range(25):
        i = random_ideal(rng, ctx)
        if i.is_unit() or i.is_zero():
            continue
        comps = i.irreducible_decomposition()
        for c in comps:
            assert all(len(g.support()) == 1 for g in c.gens)
        bound = 1 + i.max_gen_degree()
        assert same_members_up_to(i, intersect_all(comps), bound)
        # irredundance: dropping any component changes the intersection
        if len(comps) > 1:
            for k in range(len(comps)):
                rest = intersect_all(comps[:k] + comps[k + 1 :])
                assert rest != intersect_all(comps)


# -- height and dimension ----------------------------------------------------


def test_height_and_dim_plane():
    ctx = VarContext(("x", "y", "z"))
    assert ideal(ctx, "x", "y").height_and_dim() == (2, 1)


def test_height_in_quotient_families():
    # ht_A I = 2m - n and dim A = n - m for the 6-variable overlap family
    ctx = make_context(6)
    f = [["x1", "x2", "x3", "x4"], ["x3", "x4", "x5", "x6"], ["x5", "x6", "x1", "x2"]]
    primes = [MonomialIdeal.from_support(ctx, s) for s in f]
    defining = intersect_all(primes)
    maxideal = MonomialIdeal.from_support(ctx, ctx.names)
    assert quotient_height(maxideal, defining) == 2
    assert quotient_dim(MonomialIdeal.zero(ctx), defining) == 2


def test_height_unit_rejected():
    with pytest.raises(UnitIdealError):
        MonomialIdeal.unit(CTX2).height_and_dim()


# -- unmixed part -------------------------------------------------------------


def test_unmixed_part_examples():
    assert MonomialIdeal.unit(CTX2).unmixed_part() == MonomialIdeal.unit(CTX2)
    i = ideal(CTX2, "x^2", "x*y")
    assert i.unmixed_part() == ideal(CTX2, "x")
    u = ideal(CTX4, "x", "y").intersect(ideal(CTX4, "z", "w"))
    assert u.unmixed_part() == u
    with pytest.raises(ZeroIdealError):
        MonomialIdeal.zero(CTX2).unmixed_part()


def test_unmixed_part_contains_and_idempotent():
    rng = random.Random(6)
    ctx = make_context(3)
    for _ in range(25):
        i = random_ideal(rng, ctx)
        if i.is_unit() or i.is_zero():
            continue
        u = i.unmixed_part()
        assert u.contains_ideal(i)
        assert u.unmixed_part() == u


# -- polarization --------------------------------------------------------------


def test_polarize_fixed_point_and_single_split():
    i = ideal(CTX2, "x*y")
    assert i.polarize() == (i, 0)
    j = ideal(CTX2, "x^2")
    pj, added = j.polarize()
    assert added == 1
    assert pj.is_squarefree()
    assert pj.context.n == 3


def test_polarize_mixed_example():
    i = ideal(CTX2, "x^2", "x*y", "y^3")
    p, added = i.polarize()
    assert p.context.n == 5 and added == 3
    assert p.is_squarefree()
    assert len(p.gens) == 3


# -- output minimality invariant ----------------------------------------------


def test_outputs_carry_no_divisor_pairs():
    rng = random.Random(7)
    ctx = make_context(4)
    for _ in range(30):
        a = random_ideal(rng, ctx)
        b = random_ideal(rng, ctx)
        for result in (a + b, a * b, a.intersect(b), a.colon(b), a.radical()):
            gens = result.gens
            for p in gens:
                for q in gens:
                    assert p is q or not p.divides(q)


# -- serialization --------------------------------------------------------------


def test_json_round_trip():
    i = ideal(CTX4, "x*z", "y^2")
    data = i.to_json()
    assert data == {"vars": ["x", "y", "z", "w"], "gens": [[1, 0, 1, 0], [0, 2, 0, 0]]}
    assert MonomialIdeal.from_json(data) == i
