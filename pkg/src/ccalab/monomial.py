"""Exact arithmetic on monomial ideals in a polynomial ring k[x1..xn].

An ideal is stored by its unique minimal generating set in a canonical
order (degree, then reverse-lexicographic tiebreak on exponent vectors),
so equal ideals compare and hash equal.  Conventions: the zero ideal has
no generators; the unit ideal is generated by the monomial 1.  Both are
admitted by every operation that does not explicitly exclude them.

Membership and containment use exponent arithmetic only (gcd/lcm and
divisibility); there are no term orders or division algorithms here.

>>> ctx = VarContext(("x", "y", "z"))
>>> I = MonomialIdeal.from_exponents(ctx, [[1, 1, 0], [1, 0, 1]])   # (xy, xz)
>>> [p.variable_names() for p in I.minimal_primes()]
[('x',), ('y', 'z')]
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .errors import ContextMismatchError, UnitIdealError, ZeroIdealError


@dataclass(frozen=True)
class VarContext:
    """An ordered tuple of distinct variable names."""

    names: tuple

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(names) < 1:
            raise ValueError("need at least one variable")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")

    @property
    def n(self):
        return len(self.names)

    def index(self, name):
        return self.names.index(name)

    def mask_of(self, names):
        m = 0
        for name in names:
            m |= 1 << self.index(name)
        return m

    def names_of_mask(self, mask):
        return tuple(nm for i, nm in enumerate(self.names) if (mask >> i) & 1)

    def __str__(self):
        return "k[" + ",".join(self.names) + "]"


def make_context(n, prefix="x"):
    """Context with variables prefix1..prefixn."""
    return VarContext(tuple(f"{prefix}{i}" for i in range(1, n + 1)))


class Monomial:
    """A monomial, stored as its exponent vector."""

    __slots__ = ("exps",)

    def __init__(self, exps):
        object.__setattr__(self, "exps", tuple(int(e) for e in exps))
        if any(e < 0 for e in self.exps):
            raise ValueError("exponents must be non-negative")

    def __setattr__(self, *a):
        raise AttributeError("Monomial is immutable")

    @classmethod
    def one(cls, n):
        return cls((0,) * n)

    @classmethod
    def variable(cls, n, i, power=1):
        e = [0] * n
        e[i] = power
        return cls(e)

    def degree(self):
        return sum(self.exps)

    def support_mask(self):
        m = 0
        for i, e in enumerate(self.exps):
            if e:
                m |= 1 << i
        return m

    def support(self):
        return frozenset(i for i, e in enumerate(self.exps) if e)

    def is_one(self):
        return not any(self.exps)

    def is_squarefree(self):
        return all(e <= 1 for e in self.exps)

    def divides(self, other):
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def __mul__(self, other):
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __floordiv__(self, other):
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exps, other.exps)))

    def gcd(self, other):
        return Monomial(tuple(min(a, b) for a, b in zip(self.exps, other.exps)))

    def lcm(self, other):
        return Monomial(tuple(max(a, b) for a, b in zip(self.exps, other.exps)))

    def radical(self):
        return Monomial(tuple(min(e, 1) for e in self.exps))

    def format(self, ctx):
        if self.is_one():
            return "1"
        parts = []
        for name, e in zip(ctx.names, self.exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self):
        return hash(self.exps)

    def __repr__(self):
        return f"Monomial{self.exps}"


def _canon_key(m):
    # degree first, reverse-lexicographic tiebreak: deterministic output order
    return (m.degree(), tuple(-e for e in reversed(m.exps)))


def parse_monomial(ctx, text):
    """Parse "x*y^2" or "1" into a Monomial over ctx."""
    text = text.replace(" ", "")
    exps = [0] * ctx.n
    if text in ("1", ""):
        return Monomial(exps)
    for factor in text.split("*"):
        if "^" in factor:
            name, e = factor.split("^")
            exps[ctx.index(name)] += int(e)
        else:
            exps[ctx.index(factor)] += 1
    return Monomial(exps)


def monomials_of_degree(n, d, allowed_mask=None):
    """All exponent tuples of total degree d supported on allowed_mask."""
    if allowed_mask is None:
        allowed_mask = (1 << n) - 1
    positions = [i for i in range(n) if (allowed_mask >> i) & 1]
    out = []

    def rec(idx, remaining, acc):
        if idx == len(positions) - 1:
            e = list(acc)
            e[positions[idx]] = remaining
            out.append(tuple(e))
            return
        for v in range(remaining + 1):
            e = list(acc)
            e[positions[idx]] = v
            rec(idx + 1, remaining - v, e)

    if not positions:
        if d == 0:
            out.append((0,) * n)
        return out
    rec(0, d, [0] * n)
    return sorted(out)


def _minimalize(monos):
    """Drop every monomial that is divided by another one in the list."""
    monos = sorted(set(monos), key=_canon_key)
    out = []
    for m in monos:
        if not any(g.divides(m) for g in out):
            out.append(m)
    return tuple(out)


class MonomialIdeal:
    """A monomial ideal, stored by its minimal generators."""

    __slots__ = ("context", "gens")

    def __init__(self, context, gens):
        object.__setattr__(self, "context", context)
        gens = [g if isinstance(g, Monomial) else Monomial(g) for g in gens]
        for g in gens:
            if len(g.exps) != context.n:
                raise ContextMismatchError("generator length != variable count")
        object.__setattr__(self, "gens", _minimalize(gens))

    def __setattr__(self, *a):
        raise AttributeError("MonomialIdeal is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, ())

    @classmethod
    def unit(cls, ctx):
        return cls(ctx, (Monomial.one(ctx.n),))

    @classmethod
    def from_exponents(cls, ctx, rows):
        return cls(ctx, [Monomial(r) for r in rows])

    @classmethod
    def from_strings(cls, ctx, texts):
        return cls(ctx, [parse_monomial(ctx, t) for t in texts])

    @classmethod
    def from_support(cls, ctx, names):
        """The prime ideal generated by the named variables."""
        return cls(ctx, [Monomial.variable(ctx.n, ctx.index(nm)) for nm in names])

    # -- predicates --------------------------------------------------------

    def is_zero(self):
        return not self.gens

    def is_unit(self):
        return len(self.gens) == 1 and self.gens[0].is_one()

    def is_proper(self):
        return not self.is_unit()

    def is_squarefree(self):
        return all(g.is_squarefree() for g in self.gens)

    def max_gen_degree(self):
        return max((g.degree() for g in self.gens), default=0)

    def contains(self, m):
        """Monomial membership: some generator divides m."""
        return any(g.divides(m) for g in self.gens)

    def __contains__(self, m):
        return self.contains(m)

    def contains_ideal(self, other):
        """other is contained in self."""
        self._check(other)
        return all(self.contains(g) for g in other.gens)

    def _check(self, other):
        if self.context != other.context:
            raise ContextMismatchError("ideals live in different contexts")

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.context == other.context
            and self.gens == other.gens
        )

    def __hash__(self):
        return hash((self.context, self.gens))

    def __repr__(self):
        inner = ", ".join(g.format(self.context) for g in self.gens)
        return f"({inner})" if self.gens else "(0)"

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        return MonomialIdeal(self.context, self.gens + other.gens)

    def __mul__(self, other):
        self._check(other)
        return MonomialIdeal(
            self.context, [a * b for a in self.gens for b in other.gens]
        )

    def intersect(self, other):
        """I cap J, by pairwise lcm; associative and commutative.

        >>> ctx = VarContext(("x", "y"))
        >>> I = MonomialIdeal.from_strings(ctx, ["x"])
        >>> J = MonomialIdeal.from_strings(ctx, ["y"])
        >>> I.intersect(J)
        (x*y)
        """
        self._check(other)
        if self.is_zero() or other.is_zero():
            return MonomialIdeal.zero(self.context)
        return MonomialIdeal(
            self.context, [a.lcm(b) for a in self.gens for b in other.gens]
        )

    def colon(self, other):
        """I : J = {f : f*J in I}.

        Conventions: I : (0) is the unit ideal; I : (1) = I; and over a
        domain (0) : J = (0) for J != 0.
        """
        self._check(other)
        if other.is_zero():
            return MonomialIdeal.unit(self.context)
        if self.is_zero():
            return MonomialIdeal.zero(self.context)
        result = None
        for g in other.gens:
            piece = MonomialIdeal(self.context, [m // m.gcd(g) for m in self.gens])
            result = piece if result is None else result.intersect(piece)
        return result

    def radical(self):
        return MonomialIdeal(self.context, [g.radical() for g in self.gens])

    # -- structure ---------------------------------------------------------

    def minimal_primes(self):
        """Inclusion-minimal primes over the ideal, canonically sorted.

        The zero ideal has the zero ideal (empty support) as its unique
        minimal prime; the unit ideal is rejected.
        """
        if self.is_unit():
            raise UnitIdealError("unit ideal has no minimal primes")
        supports = [g.support_mask() for g in self.radical().gens]
        covers = _minimal_covers(tuple(sorted(supports)))
        return [
            MonomialPrime(self.context, c)
            for c in sorted(covers, key=lambda m: (bin(m).count("1"), m))
        ]

    def associated_primes(self):
        """Radicals of the irredundant primary components."""
        if self.is_zero():
            return [MonomialPrime(self.context, 0)]
        return sorted(
            {
                MonomialPrime(self.context, comp.radical_support_mask())
                for comp in self.irreducible_decomposition()
            },
            key=lambda p: (bin(p.mask).count("1"), p.mask),
        )

    def radical_support_mask(self):
        m = 0
        for g in self.gens:
            m |= g.support_mask()
        return m

    def irreducible_decomposition(self):
        """Irredundant irreducible components (pure-power-generated ideals).

        Standard splitting: pick a generator m = x^a * rest with mixed
        support and split I = (I + (x^a)) cap (I + (rest)); recurse.

        >>> ctx = VarContext(("x", "y"))
        >>> MonomialIdeal.from_strings(ctx, ["x*y"]).irreducible_decomposition()
        [(y), (x)]
        """
        if self.is_unit() or self.is_zero():
            raise (UnitIdealError if self.is_unit() else ZeroIdealError)(
                "decomposition needs a proper nonzero ideal"
            )
        components = []
        stack = [self]
        seen = set()
        while stack:
            J = stack.pop()
            if J in seen:
                continue
            seen.add(J)
            split = None
            for g in J.gens:
                supp = sorted(g.support())
                if len(supp) >= 2:
                    i = supp[0]
                    a = g.exps[i]
                    left = Monomial.variable(self.context.n, i, a)
                    right = g // Monomial.variable(self.context.n, i, a)
                    split = (left, right)
                    break
            if split is None:
                components.append(J)
            else:
                left, right = split
                stack.append(MonomialIdeal(self.context, J.gens + (left,)))
                stack.append(MonomialIdeal(self.context, J.gens + (right,)))
        components = sorted(set(components), key=lambda c: tuple(map(_canon_key, c.gens)))
        return _irredundant(components)

    def primary_decomposition(self):
        """Primary components, grouped from the irreducible ones by radical."""
        groups = {}
        for comp in self.irreducible_decomposition():
            groups.setdefault(comp.radical_support_mask(), []).append(comp)
        out = []
        for mask in sorted(groups, key=lambda m: (bin(m).count("1"), m)):
            out.append(
                (
                    MonomialPrime(self.context, mask),
                    reduce(lambda a, b: a.intersect(b), groups[mask]),
                )
            )
        return out

    def unmixed_part(self):
        """Intersection of the primary components at the minimal primes.

        The unit ideal is its own unmixed part (the aM = M branch of the
        definition); the zero ideal is rejected.
        """
        if self.is_zero():
            raise ZeroIdealError("unmixed part of the zero ideal")
        if self.is_unit():
            return self
        minimal = {p.mask for p in self.minimal_primes()}
        parts = [q for p, q in self.primary_decomposition() if p.mask in minimal]
        return reduce(lambda a, b: a.intersect(b), parts)

    def height_and_dim(self):
        """(height, dim) of the ideal in the ambient polynomial ring."""
        if self.is_unit():
            raise UnitIdealError("height of the unit ideal")
        h = min(bin(p.mask).count("1") for p in self.minimal_primes())
        return h, self.context.n - h

    def polarize(self):
        """Standard polarization into a squarefree ideal.

        Returns (squarefree ideal in an enlarged context, number of added
        variables).  Squarefree ideals are fixed points with 0 added.
        """
        if self.is_squarefree():
            return self, 0
        caps = [1] * self.context.n
        for g in self.gens:
            for i, e in enumerate(g.exps):
                caps[i] = max(caps[i], e)
        names = []
        offsets = []
        for i, name in enumerate(self.context.names):
            offsets.append(len(names))
            names.append(name)
            for k in range(2, caps[i] + 1):
                fresh = f"{name}~{k}"
                while fresh in names or fresh in self.context.names:
                    fresh += "'"
                names.append(fresh)
        big = VarContext(tuple(names))
        new_gens = []
        for g in self.gens:
            exps = [0] * big.n
            for i, e in enumerate(g.exps):
                for k in range(e):
                    exps[offsets[i] + k] = 1
            new_gens.append(Monomial(exps))
        added = big.n - self.context.n
        return MonomialIdeal(big, new_gens), added

    # -- serialization -----------------------------------------------------

    def to_json(self):
        return {
            "vars": list(self.context.names),
            "gens": [list(g.exps) for g in self.gens],
        }

    @classmethod
    def from_json(cls, data):
        ctx = VarContext(tuple(data["vars"]))
        return cls.from_exponents(ctx, data["gens"])


@dataclass(frozen=True)
class MonomialPrime:
    """A monomial prime, generated exactly by its support variables."""

    context: VarContext
    mask: int

    def ideal(self):
        n = self.context.n
        return MonomialIdeal(
            self.context,
            [Monomial.variable(n, i) for i in range(n) if (self.mask >> i) & 1],
        )

    def variable_names(self):
        return self.context.names_of_mask(self.mask)

    def size(self):
        return bin(self.mask).count("1")

    def __repr__(self):
        return "(" + ",".join(self.variable_names()) + ")"


def _minimal_covers(supports, _memo=None):
    """Minimal vertex covers (as masks) of a list of support masks."""
    if _memo is None:
        _memo = {}
    if not supports:
        return [0]
    key = supports
    got = _memo.get(key)
    if got is not None:
        return got
    pivot = min(supports, key=lambda s: bin(s).count("1"))
    out = []
    for v in range(pivot.bit_length()):
        if not (pivot >> v) & 1:
            continue
        rest = tuple(s for s in supports if not (s >> v) & 1)
        for c in _minimal_covers(rest, _memo):
            out.append(c | (1 << v))
    result = _minimal_masks(out)
    _memo[key] = result
    return result


def _minimal_masks(masks):
    masks = sorted(set(masks), key=lambda m: bin(m).count("1"))
    out = []
    for m in masks:
        if not any(o & m == o for o in out):
            out.append(m)
    return out


def _irredundant(components):
    """Drop components containing the intersection of the others."""
    comps = list(components)
    changed = True
    while changed and len(comps) > 1:
        changed = False
        for i in range(len(comps)):
            others = comps[:i] + comps[i + 1 :]
            inter = reduce(lambda a, b: a.intersect(b), others)
            if comps[i].contains_ideal(inter):
                comps.pop(i)
                changed = True
                break
    return comps


def intersect_all(ideals):
    """Intersection of a non-empty list of ideals."""
    return reduce(lambda a, b: a.intersect(b), ideals)


def sum_all(ideals):
    return reduce(lambda a, b: a + b, ideals)


def quotient_height(J, ambient):
    """Height of (J + ambient)/ambient in the quotient ring T/ambient.

    The height of a prime p of T/ambient is the longest chain below it,
    i.e. the maximum of |supp p| - |supp q| over minimal primes q of
    ambient contained in p.
    """
    J._check(ambient)
    total = J + ambient
    if total.is_unit():
        raise UnitIdealError("height of the unit ideal")
    amb_min = ambient.minimal_primes()
    best = None
    for p in total.minimal_primes():
        size = p.size()
        ht = max(
            size - q.size() for q in amb_min if q.mask & p.mask == q.mask
        )
        best = ht if best is None else min(best, ht)
    return best


def quotient_dim(J, ambient):
    """Krull dimension of (T/ambient)/(J) = T/(J + ambient)."""
    total = J + ambient
    if total.is_unit():
        return -1
    return total.height_and_dim()[1]
