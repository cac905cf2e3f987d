"""Exact linear algebra over the rationals and prime fields.

No floating point anywhere.  Ranks of integer matrices over Q use
fraction-free (Bareiss) elimination; everything else is plain Gaussian
elimination with Fraction or mod-p scalars.  Subspaces keep a fully
reduced echelon basis, so equal subspaces compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: the rationals (p == 0) or the prime field F_p."""

    p: int = 0

    def __post_init__(self):
        if self.p and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def is_rationals(self):
        return self.p == 0

    def of(self, x):
        """Coerce an int (or Fraction, over Q) into the field."""
        if self.p:
            return int(x) % self.p
        return x if isinstance(x, Fraction) else Fraction(x)

    def zero(self):
        return 0 if self.p else Fraction(0)

    def one(self):
        return 1 if self.p else Fraction(1)

    def add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.p else a * b

    def neg(self, a):
        return (-a) % self.p if self.p else -a

    def inv(self, a):
        if self.p:
            return pow(a, self.p - 2, self.p)
        return Fraction(1) / a

    def __str__(self):
        return "Q" if self.p == 0 else f"F{self.p}"


QQ = FieldSpec(0)


def GF(p):
    return FieldSpec(p)


def parse_field(text):
    """Parse a field flag: "q", "f2", or "fp:2"."""
    t = text.strip().lower()
    if t in ("q", "qq", "rationals"):
        return QQ
    if t.startswith("fp:"):
        return GF(int(t[3:]))
    if t.startswith("f") and t[1:].isdigit():
        return GF(int(t[1:]))
    raise ValueError(f"cannot parse field {text!r}")


def rank_int_bareiss(rows):
    """Rank over Q of an integer matrix, by fraction-free elimination."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nr, nc = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(nc):
        piv = None
        for i in range(r, nr):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        mrc = m[r][c]
        for i in range(r + 1, nr):
            mic = m[i][c]
            if mic:
                row_i, row_r = m[i], m[r]
                for j in range(c + 1, nc):
                    # Bareiss condensation: the division is exact
                    row_i[j] = (mrc * row_i[j] - mic * row_r[j]) // prev
            else:
                row_i = m[i]
                for j in range(c + 1, nc):
                    row_i[j] = (mrc * row_i[j]) // prev
            m[i][c] = 0
        prev = mrc
        r += 1
        if r == nr:
            break
    return r


def rank_mod_p(rows, p):
    """Rank of an integer matrix over F_p."""
    m = [[x % p for x in r] for r in rows]
    if not m or not m[0]:
        return 0
    nr, nc = len(m), len(m[0])
    r = 0
    for c in range(nc):
        piv = None
        for i in range(r, nr):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        row_r = m[r]
        for i in range(r + 1, nr):
            f = m[i][c]
            if f:
                f = (f * inv) % p
                row_i = m[i]
                for j in range(c, nc):
                    row_i[j] = (row_i[j] - f * row_r[j]) % p
        r += 1
        if r == nr:
            break
    return r


def rank(rows, field):
    """Rank of an integer matrix over the given field."""
    if field.p:
        return rank_mod_p(rows, field.p)
    return rank_int_bareiss(rows)


class Subspace:
    """A subspace of field^ambient, kept as a fully reduced echelon basis.

    Basis rows have pivot entry 1, pivots strictly increasing, and every
    pivot column is zero in all other rows, so two Subspace objects are
    equal iff they describe the same subspace.
    """

    __slots__ = ("field", "ambient", "rows", "pivots")

    def __init__(self, field, ambient, vectors=()):
        self.field = field
        self.ambient = ambient
        self.rows = []
        self.pivots = []
        for v in vectors:
            self.insert(v)

    @property
    def dim(self):
        return len(self.rows)

    def reduce(self, v):
        """Residual of v after eliminating all basis pivots."""
        f = self.field
        v = [f.of(x) for x in v]
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c:
                for j in range(p, self.ambient):
                    v[j] = f.sub(v[j], f.mul(c, row[j]))
        return v

    def contains(self, v):
        return not any(self.reduce(v))

    def insert(self, v):
        """Add v to the span; returns True if the dimension grew."""
        f = self.field
        r = self.reduce(v)
        piv = next((j for j, x in enumerate(r) if x), None)
        if piv is None:
            return False
        inv = f.inv(r[piv])
        r = [f.mul(inv, x) for x in r]
        # keep the basis fully reduced
        for row in self.rows:
            c = row[piv]
            if c:
                for j in range(piv, self.ambient):
                    row[j] = f.sub(row[j], f.mul(c, r[j]))
        k = 0
        while k < len(self.pivots) and self.pivots[k] < piv:
            k += 1
        self.rows.insert(k, r)
        self.pivots.insert(k, piv)
        return True

    def contains_subspace(self, other):
        return all(self.contains(r) for r in other.rows)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field == other.field
            and self.ambient == other.ambient
            and self.pivots == other.pivots
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


def nullspace(rows, ncols, field):
    """Solution space of rows * x = 0 as a Subspace of field^ncols."""
    f = field
    m = [[f.of(x) for x in r] for r in rows]
    nr = len(m)
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nr):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        inv = f.inv(m[r][c])
        m[r] = [f.mul(inv, x) for x in m[r]]
        for i in range(nr):
            if i != r and m[i][c]:
                fac = m[i][c]
                m[i] = [f.sub(a, f.mul(fac, b)) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for c in free:
        v = [f.zero()] * ncols
        v[c] = f.one()
        for i, pc in enumerate(pivots):
            v[pc] = f.neg(m[i][c])
        basis.append(v)
    return Subspace(field, ncols, basis)
