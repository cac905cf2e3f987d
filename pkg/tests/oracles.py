"""Independent brute-force oracles used to derive frozen test values.

These deliberately avoid the production code paths they check: membership
sweeps over all monomials up to a degree bound, subset enumeration for
complexes, and exhaustive prime enumeration for minimal primes.
"""

from itertools import combinations

from ccalab.monomial import Monomial, MonomialIdeal, monomials_of_degree


def all_monomials_up_to(n, max_degree):
    out = []
    for d in range(max_degree + 1):
        out.extend(Monomial(e) for e in monomials_of_degree(n, d))
    return out


def same_members_up_to(i, j, max_degree):
    """Two ideals contain exactly the same monomials up to the bound."""
    n = i.context.n
    return all(
        i.contains(m) == j.contains(m) for m in all_monomials_up_to(n, max_degree)
    )


def intersection_by_membership(i, j, max_degree):
    """Minimal generators of I cap J found by a plain membership sweep.

    Correct as long as max_degree reaches the largest generator degree of
    the true intersection.
    """
    members = [
        m
        for m in all_monomials_up_to(i.context.n, max_degree)
        if i.contains(m) and j.contains(m)
    ]
    return MonomialIdeal(i.context, members)


def colon_by_membership(i, g, max_degree):
    """I : (g) by sweeping monomials m with m*g in I."""
    members = [
        m
        for m in all_monomials_up_to(i.context.n, max_degree)
        if i.contains(m * g)
    ]
    return MonomialIdeal(i.context, members)


def minimal_primes_by_enumeration(i):
    """All inclusion-minimal monomial primes containing I, by enumeration."""
    n = i.context.n
    containing = []
    for size in range(n + 1):
        for supp in combinations(range(n), size):
            mask = sum(1 << k for k in supp)
            # I <= (supp) iff every generator has a variable in supp
            if all(g.support_mask() & mask for g in i.gens):
                containing.append(frozenset(supp))
    minimal = [
        s for s in containing if not any(t < s for t in containing)
    ]
    return sorted(minimal, key=lambda s: (len(s), sorted(s)))


def faces_by_membership(ideal):
    """All faces of the complex of a squarefree ideal, by 2^n enumeration."""
    n = ideal.context.n
    faces = []
    for mask in range(1 << n):
        mono = Monomial(tuple(1 if (mask >> k) & 1 else 0 for k in range(n)))
        if not ideal.contains(mono):
            faces.append(mask)
    return sorted(faces)


def sieve_semigroup(gens, limit):
    """Membership table of the numerical semigroup up to the limit."""
    table = [False] * (limit + 1)
    table[0] = True
    for x in range(1, limit + 1):
        table[x] = any(g <= x and table[x - g] for g in gens)
    return table
