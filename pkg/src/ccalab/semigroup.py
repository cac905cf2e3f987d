"""Numerical semigroups and truncated power-series subalgebras.

Power series are replaced by truncations k[t]/(t^N) with an explicit
certified window [0, N - margin): all reported invariants (value
semigroup, conductor exponent, socle dimensions) are statements about
that window, and stabilization of the valuation pattern is what
certifies them.  Defaults N = 40, margin = 10; both configurable.

>>> semigroup_invariants(NumericalSemigroup((3, 4)))["conductor"]
6
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import PrecisionError
from .linalg import QQ, FieldSpec, nullspace

DEFAULT_PRECISION = 40
DEFAULT_MARGIN = 10


class NumericalSemigroup:
    """A cofinite submonoid of N, stored by its minimal generators."""

    __slots__ = ("gens",)

    def __init__(self, generators):
        gens = sorted(set(int(g) for g in generators))
        if not gens or gens[0] < 1:
            raise ValueError("generators must be positive integers")
        g = 0
        for a in gens:
            g = gcd(g, a)
        if g != 1:
            raise ValueError("generators must have gcd 1")
        members = self._sieve(gens, max(gens) + 1)
        minimal = [
            a
            for a in gens
            if not any(members[a - b] for b in gens if 0 < b < a)
        ]
        object.__setattr__(self, "gens", tuple(minimal))

    def __setattr__(self, *a):
        raise AttributeError("NumericalSemigroup is immutable")

    @staticmethod
    def _sieve(gens, limit):
        table = [False] * (limit + 1)
        table[0] = True
        for x in range(1, limit + 1):
            for g in gens:
                if g <= x and table[x - g]:
                    table[x] = True
                    break
        return table

    def _member_table(self):
        # Brauer: the Frobenius number is below min(gens) * max(gens)
        limit = self.gens[0] * self.gens[-1] + self.gens[-1] + 1
        return self._sieve(self.gens, limit)

    def contains(self, x):
        if x < 0:
            return False
        table = self._member_table()
        if x < len(table):
            return table[x]
        return True  # beyond the sieve bound everything is a member

    def gaps(self):
        table = self._member_table()
        return tuple(i for i, ok in enumerate(table) if not ok)

    def frobenius(self):
        """Largest gap; -1 for the full semigroup N."""
        g = self.gaps()
        return g[-1] if g else -1

    def conductor(self):
        return self.frobenius() + 1

    def apery(self, m):
        """Apery set: least member in each residue class mod m."""
        if m < 1 or not self.contains(m):
            raise ValueError("apery needs a nonzero member")
        # every class has its least member below frobenius + m + 1
        limit = self.gens[0] * self.gens[-1] + self.gens[-1] + m + 1
        table = self._sieve(self.gens, limit)
        out = []
        for r in range(m):
            x = r
            while not table[x]:
                x += m
            out.append(x)
        return tuple(out)

    def is_symmetric(self):
        """Gaps pair with members under s -> F - s."""
        f = self.frobenius()
        return all(
            self.contains(s) != self.contains(f - s) for s in range(0, f + 1)
        ) and len(self.gaps()) * 2 == f + 1

    def __repr__(self):
        return "<" + ",".join(map(str, self.gens)) + ">"


def semigroup_invariants(h):
    gaps = h.gaps()
    return {
        "minimal_generators": list(h.gens),
        "gaps": list(gaps),
        "frobenius": h.frobenius(),
        "conductor": h.conductor(),
        "symmetric": h.is_symmetric(),
        "apery": list(h.apery(min(h.gens))),
    }


def parse_t_series(text):
    """Parse "t^2+t^3" / "2t^4 - t" into a {exponent: int coeff} map."""
    text = text.replace(" ", "").replace("-", "+-")
    out = {}
    for term in text.split("+"):
        if not term:
            continue
        sign = 1
        if term.startswith("-"):
            sign = -1
            term = term[1:]
        if "t" not in term:
            exp, coeff = 0, int(term)
        else:
            head, _, tail = term.partition("t")
            coeff = int(head) if head else 1
            exp = int(tail[1:]) if tail.startswith("^") else (1 if tail == "" else int(tail))
        out[exp] = out.get(exp, 0) + sign * coeff
    return {e: c for e, c in out.items() if c}


def series_vector(series, field, precision):
    v = [field.zero()] * precision
    for e, c in series.items():
        if e < precision:
            v[e] = field.of(c)
    return v


class _Echelon:
    """Echelon basis keyed by leading position, fully reduced."""

    __slots__ = ("field", "width", "rows")

    def __init__(self, field, width):
        self.field = field
        self.width = width
        self.rows = {}  # pivot -> row with leading 1

    def reduce(self, v):
        f = self.field
        v = list(v)
        for p in range(self.width):
            if v[p] and p in self.rows:
                c = v[p]
                row = self.rows[p]
                for j in range(p, self.width):
                    v[j] = f.sub(v[j], f.mul(c, row[j]))
        return v

    def insert(self, v):
        """Returns the new pivot position, or None if dependent."""
        f = self.field
        v = self.reduce(v)
        piv = next((j for j, x in enumerate(v) if x), None)
        if piv is None:
            return None
        inv = f.inv(v[piv])
        v = [f.mul(inv, x) for x in v]
        for p, row in self.rows.items():
            if row[piv]:
                c = row[piv]
                self.rows[p] = [
                    f.sub(a, f.mul(c, b)) for a, b in zip(row, v)
                ]
        self.rows[piv] = v
        return piv

    def pivots(self):
        return sorted(self.rows)

    def contains(self, v):
        return not any(self.reduce(v))


def _mul_series(a, b, field, precision):
    out = [field.zero()] * precision
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y and i + j < precision:
                    out[i + j] = field.add(out[i + j], field.mul(x, y))
    return out


class TruncatedSubalgebra:
    """The unital subalgebra of k[t]/(t^N) generated by given series.

    The basis is echelonized by t-valuation, so the pivot set below the
    certified window is exactly the value semigroup pattern v(P).
    """

    __slots__ = ("field", "precision", "margin", "gens", "basis")

    def __init__(self, gens, field, precision=DEFAULT_PRECISION, margin=DEFAULT_MARGIN):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "precision", precision)
        object.__setattr__(self, "margin", margin)
        gen_vecs = [series_vector(g, field, precision) for g in gens]
        object.__setattr__(self, "gens", tuple(tuple(g) for g in gen_vecs))
        basis = _Echelon(field, precision)
        one = [field.zero()] * precision
        one[0] = field.one()
        work = []
        for v in [one] + gen_vecs:
            if basis.insert(v) is not None:
                work.append(v)
        while work:
            v = work.pop()
            for g in gen_vecs:
                prod = _mul_series(v, g, field, precision)
                reduced = basis.reduce(prod)
                if any(reduced):
                    basis.insert(prod)
                    work.append(prod)
        object.__setattr__(self, "basis", basis)

    def __setattr__(self, *a):
        raise AttributeError("TruncatedSubalgebra is immutable")

    @property
    def window(self):
        return self.precision - self.margin

    def valuations(self):
        """Pivot valuations below the certified window."""
        return [p for p in self.basis.pivots() if p < self.window]

    def contains(self, series_or_vec):
        v = (
            series_vector(series_or_vec, self.field, self.precision)
            if isinstance(series_or_vec, dict)
            else list(series_or_vec)
        )
        return self.basis.contains(v)

    def contains_t_power(self, j):
        return self.contains({j: 1})

    def value_pattern_stabilized(self):
        """Least c with [c, window) entirely in v(P), or None."""
        vals = set(self.valuations())
        c = self.window
        while c - 1 >= 0 and (c - 1) in vals:
            c -= 1
        return c if c < self.window else None

    def conductor_exponent(self):
        """Least c with t^j in P for all j in [c, window).

        Certified when the window reaches past 2c + 1 (products of
        in-window powers then cover every higher exponent).  Raises
        PrecisionError when the t-power pattern never stabilizes.
        """
        if self.value_pattern_stabilized() is None:
            raise PrecisionError(
                f"valuation pattern not stabilized below window {self.window}"
            )
        c = self.window
        while c - 1 >= 0 and self.contains_t_power(c - 1):
            c -= 1
        if c == self.window:
            raise PrecisionError("no t-power tail inside the window")
        return c

    def conductor_certified(self):
        c = self.conductor_exponent()
        return self.window >= 2 * c + 2

    def report_data(self):
        return {
            "field": str(self.field),
            "precision": self.precision,
            "margin": self.margin,
            "window": self.window,
            "valuations": self.valuations(),
        }


def subalgebra_closure(gens, field, precision=DEFAULT_PRECISION, margin=DEFAULT_MARGIN):
    """Fixed-point closure of the span under multiplication by generators."""
    max_val = 0
    for g in gens:
        nonzero = [e for e, c in g.items() if c]
        if nonzero:
            max_val = max(max_val, min(nonzero))
    if precision < 2 * max_val + margin:
        raise PrecisionError(
            f"precision {precision} too small for generator valuation {max_val}"
        )
    return TruncatedSubalgebra(gens, field, precision, margin)


def semigroup_ring(h, field, precision=DEFAULT_PRECISION, margin=DEFAULT_MARGIN):
    """The monomial subalgebra k[t^a : a in gens] as a truncated model."""
    return subalgebra_closure([{g: 1} for g in h.gens], field, precision, margin)


# -- quadratic extension models ------------------------------------------


@dataclass(frozen=True)
class QuadraticExtensionModel:
    """k = k0[alpha]/(alpha^2 - v alpha - u) acting on V = k[[t]], n = 1.

    Elements of k are pairs (a, b) = a + b alpha over k0; V is modeled on
    2N coordinates (t^j and alpha t^j).  The extension must be a field:
    x^2 - v x - u has no root in k0.
    """

    base: FieldSpec
    u: int
    v: int
    precision: int = DEFAULT_PRECISION

    def __post_init__(self):
        if self._has_root():
            raise ValueError("alpha lies in the base field: degenerate extension")

    def _has_root(self):
        f = self.base
        if f.p:
            return any(
                (x * x - self.v * x - self.u) % f.p == 0 for x in range(f.p)
            )
        # rational root: discriminant v^2 + 4u must be a rational square
        disc = Fraction(self.v) ** 2 + 4 * Fraction(self.u)
        if disc < 0:
            return False
        num, den = disc.numerator, disc.denominator
        r = int(num**0.5)
        while r * r < num:
            r += 1
        s = int(den**0.5)
        while s * s < den:
            s += 1
        return r * r == num and s * s == den

    def alpha_mul(self, pair):
        """alpha * (a + b alpha) = b*u + (a + b*v) alpha."""
        f = self.base
        a, b = pair
        return (f.mul(b, f.of(self.u)), f.add(a, f.mul(b, f.of(self.v))))


def _quad_vec(model, terms):
    """terms: {(j, part): coeff} with part 0 for t^j, 1 for alpha t^j."""
    f = model.base
    v = [f.zero()] * (2 * model.precision)
    for (j, part), c in terms.items():
        if j < model.precision:
            v[2 * j + part] = f.of(c)
    return v


def _quad_mul_t(model, vec):
    f = model.base
    out = [f.zero()] * len(vec)
    out[2:] = vec[:-2]
    return out


def _quad_mul_alpha(model, vec):
    f = model.base
    out = [f.zero()] * len(vec)
    for j in range(model.precision):
        pair = (vec[2 * j], vec[2 * j + 1])
        a, b = model.alpha_mul(pair)
        out[2 * j] = a
        out[2 * j + 1] = b
    return out


def quadratic_extension_closure(model):
    """The subalgebra P = k0[[t, alpha t]] inside the truncated V."""
    f = model.base
    width = 2 * model.precision
    basis = _Echelon(f, width)
    one = _quad_vec(model, {(0, 0): 1})
    t = _quad_vec(model, {(1, 0): 1})
    at = _quad_vec(model, {(1, 1): 1})
    gens = [t, at]
    work = []
    for v in [one, t, at]:
        if basis.insert(v) is not None:
            work.append(v)
    while work:
        v = work.pop()
        for g_name, g in (("t", t), ("at", at)):
            if g_name == "t":
                prod = _quad_mul_t(model, v)
            else:
                prod = _quad_mul_alpha(model, _quad_mul_t(model, v))
            if any(basis.reduce(prod)):
                basis.insert(prod)
                work.append(prod)
    return basis


def quadratic_extension_checks(model, margin=DEFAULT_MARGIN):
    """The case-(3) verification data: V = P + alpha P, conductor, type."""
    f = model.base
    width = 2 * model.precision
    window = model.precision - margin
    P = quadratic_extension_closure(model)

    # V = P + alpha P on the window
    combined = _Echelon(f, width)
    for row in P.rows.values():
        combined.insert(list(row))
        combined.insert(_quad_mul_alpha(model, list(row)))
    v_equals = all(
        combined.contains(_quad_vec(model, {(j, part): 1}))
        for j in range(window)
        for part in (0, 1)
    )

    # n V <= P for n = (t, alpha t): every t*V and alpha t*V basis vector
    nv_in_p = True
    for j in range(window - 1):
        for part in (0, 1):
            v = _quad_vec(model, {(j, part): 1})
            if not P.contains(_quad_mul_t(model, v)):
                nv_in_p = False
            if not P.contains(_quad_mul_alpha(model, _quad_mul_t(model, v))):
                nv_in_p = False

    alpha_outside = not P.contains(_quad_vec(model, {(0, 1): 1}))

    # degree-0 piece of V/P over k0: V_0 = k (dim 2), P_0 from pivots {0, 1}
    p0_dim = sum(1 for p in P.pivots() if p < 2)
    deg0_cokernel = 2 - p0_dim

    return {
        "v_equals_p_plus_alpha_p": v_equals,
        "maximal_ideal_times_v_in_p": nv_in_p,
        "alpha_not_in_p": alpha_outside,
        "cokernel_degree0_dim": deg0_cokernel,
        "window": window,
    }


# -- the cone model A = P + sB inside B = (k[t]/t^N)[s]/(s^M) ----------------


def cone_model_checks(
    p_gens,
    field,
    precision=24,
    s_precision=3,
    margin=6,
):
    """Verify conductor and socle claims for A = P + sB on the window.

    B is modeled on N*M coordinates t^e s^j.  The conductor of A in B is
    computed by honest linear algebra ({a : a g in A} over the t-power
    module generators g = t^e, multiplication by s lands in sB <= A
    automatically) and compared with the closed form (t^c) + sB coming
    from the conductor exponent of P.  Socle dimensions of B/A and of
    V/P are computed separately and compared.
    """
    P = subalgebra_closure(p_gens, field, precision, margin)
    c = P.conductor_exponent()
    window = P.window
    f = field
    N, M = precision, s_precision

    def idx(e, j):
        return j * N + e

    width = N * M

    # A = P + sB as a subspace
    a_basis = _Echelon(f, width)
    for row in P.basis.rows.values():
        vec = [f.zero()] * width
        vec[:N] = list(row)
        a_basis.insert(vec)
    for j in range(1, M):
        for e in range(N):
            vec = [f.zero()] * width
            vec[idx(e, j)] = f.one()
            a_basis.insert(vec)

    def mul_by_t_power(vec, k):
        out = [f.zero()] * width
        for j in range(M):
            for e in range(N - k):
                x = vec[idx(e, j)]
                if x:
                    out[idx(e + k, j)] = f.add(out[idx(e + k, j)], x)
        return out

    def mul_by_s(vec):
        out = [f.zero()] * width
        for j in range(M - 1):
            for e in range(N):
                x = vec[idx(e, j)]
                if x:
                    out[idx(e, j + 1)] = f.add(out[idx(e, j + 1)], x)
        return out

    # conductor: {a in A : a * t^e in A for all e < window}; multiplication
    # by s lands in sB <= A and adds no constraint.  Columns index A-basis.
    a_rows = [list(r) for r in a_basis.rows.values()]
    cols = a_rows
    constraint_rows = []
    for e in range(window):
        reduced = [a_basis.reduce(mul_by_t_power(acol, e)) for acol in cols]
        for r in range(width):
            row = [reduced[j][r] for j in range(len(cols))]
            if any(row):
                constraint_rows.append(row)
    sol = nullspace(constraint_rows, len(cols), f)

    # closed form: (t^c)V + sB inside A-coordinates
    closed = _Echelon(f, width)
    for e in range(c, N):
        vec = [f.zero()] * width
        vec[idx(e, 0)] = f.one()
        closed.insert(vec)
    for j in range(1, M):
        for e in range(N):
            vec = [f.zero()] * width
            vec[idx(e, j)] = f.one()
            closed.insert(vec)

    computed = _Echelon(f, width)
    for coeffs in sol.rows:
        vec = [f.zero()] * width
        for ci, x in enumerate(coeffs):
            if x:
                for k in range(width):
                    vec[k] = f.add(vec[k], f.mul(x, cols[ci][k]))
        computed.insert(vec)

    # Two-way comparison.  Containment in the closed form is a support
    # condition (s^0 coordinates must sit at exponents >= c), so it is
    # exact for every computed basis vector; the reverse direction is
    # checked on the t-power units below the certified window.
    conductor_matches = True
    for row in computed.rows.values():
        if any(row[idx(e, 0)] for e in range(c)):
            conductor_matches = False
    for e in range(window):
        for j in range(M):
            vec = [f.zero()] * width
            vec[idx(e, j)] = f.one()
            if closed.contains(vec) != computed.contains(vec):
                conductor_matches = False

    # socle of B/A: {b : g b in A for all maximal-ideal generators g}
    gen_vecs = [series_vector(g, f, N) for g in p_gens]
    def mul_by_series(vec, series_vec):
        out = [f.zero()] * width
        for j in range(M):
            seg = vec[j * N : (j + 1) * N]
            prod = _mul_series(seg, series_vec, f, N)
            for e, x in enumerate(prod):
                if x:
                    out[idx(e, j)] = f.add(out[idx(e, j)], x)
        return out

    unit_cols = []
    for k in range(width):
        vec = [f.zero()] * width
        vec[k] = f.one()
        unit_cols.append(vec)
    soc_rows = []
    for g in gen_vecs:
        reduced = [a_basis.reduce(mul_by_series(u, g)) for u in unit_cols]
        for r in range(width):
            row = [reduced[j][r] for j in range(width)]
            if any(row):
                soc_rows.append(row)
    reduced_s = [a_basis.reduce(mul_by_s(u)) for u in unit_cols]
    for r in range(width):
        row = [reduced_s[j][r] for j in range(width)]
        if any(row):
            soc_rows.append(row)
    w_space = nullspace(soc_rows, width, f)
    dim_a = len(a_rows)
    socle_ba = w_space.dim - dim_a

    # socle of V/P in the V-model alone
    v_width = N
    p_rows = [list(r) for r in P.basis.rows.values()]
    v_units = []
    for k in range(v_width):
        vec = [f.zero()] * v_width
        vec[k] = f.one()
        v_units.append(vec)
    vp_rows = []
    for g in gen_vecs:
        reduced = [P.basis.reduce(_mul_series(u, g, f, v_width)) for u in v_units]
        for r in range(v_width):
            row = [reduced[j][r] for j in range(v_width)]
            if any(row):
                vp_rows.append(row)
    wv = nullspace(vp_rows, v_width, f)
    socle_vp = wv.dim - len(p_rows)

    return {
        "conductor_exponent": c,
        "conductor_certified": P.conductor_certified(),
        "conductor_matches_closed_form": conductor_matches,
        "socle_B_over_A": socle_ba,
        "socle_V_over_P": socle_vp,
        "window": window,
        "p_data": P.report_data(),
    }


# -- report builders ---------------------------------------------------------


def subalgebra_report(
    gens_text,
    field,
    precision=DEFAULT_PRECISION,
    margin=DEFAULT_MARGIN,
    expected=None,
    anchors=None,
):
    """Valuation-pattern claims for the subalgebra generated in k[t]/(t^N)."""
    from .report import VerificationReport

    expected = expected or {}
    anchors = anchors or {}
    rep = VerificationReport(
        "subalgebra", config={"field": str(field), "precision": precision, "margin": margin}
    )

    def anchor(cid, default):
        return anchors.get(cid, default)

    gens = [parse_t_series(t) for t in gens_text]
    P = subalgebra_closure(gens, field, precision, margin)
    vals = P.valuations()
    for j in expected.get("valuations_present", ()):
        rep.check(
            f"valuation.{j}-present",
            anchor(f"valuation.{j}-present", f"{j} lies in v(P)"),
            True,
            j in vals,
        )
    for j in expected.get("valuations_absent", ()):
        rep.check(
            f"valuation.{j}-absent",
            anchor(f"valuation.{j}-absent", f"{j} does not lie in v(P)"),
            True,
            j not in vals,
        )
    for j in expected.get("t_powers_present", ()):
        rep.check(
            f"t-power.{j}-present",
            anchor(f"t-power.{j}-present", f"t^{j} lies in P"),
            True,
            P.contains_t_power(j),
            bound=P.window,
        )
    for j in expected.get("t_powers_absent", ()):
        rep.check(
            f"t-power.{j}-absent",
            anchor(f"t-power.{j}-absent", f"t^{j} does not lie in P"),
            True,
            not P.contains_t_power(j),
            bound=P.window,
        )
    if "value_semigroup" in expected:
        h = NumericalSemigroup(expected["value_semigroup"])
        pattern = [x for x in range(P.window) if h.contains(x)]
        rep.check(
            "value-semigroup",
            anchor("value-semigroup", "v(P) matches the stated numerical semigroup"),
            pattern,
            vals,
            bound=P.window,
        )
    if "conductor_exponent" in expected:
        rep.check(
            "conductor-exponent",
            anchor("conductor-exponent", "P:V = t^c V with the stated c"),
            expected["conductor_exponent"],
            P.conductor_exponent(),
            bound=P.window,
            note="window-certified" if P.conductor_certified() else "window too small",
        )
        rep.assert_true(
            "conductor-certified",
            anchor("conductor-certified", "the window certifies the conductor exponent"),
            P.conductor_certified(),
        )
    return rep


def semigroup_cone_report(
    generators,
    field=QQ,
    precision=24,
    s_precision=3,
    margin=6,
    expected=None,
    anchors=None,
    semigroup_gens=None,
):
    """Cone-model claims for A = P + sB: conductor window and socle match.

    When semigroup_gens is given, P is the semigroup ring and the
    numerical-semigroup invariants are verified alongside.
    """
    from .report import VerificationReport

    expected = expected or {}
    anchors = anchors or {}
    rep = VerificationReport(
        "semigroup-cone",
        config={"field": str(field), "precision": precision, "margin": margin},
    )

    def anchor(cid, default):
        return anchors.get(cid, default)

    if semigroup_gens:
        h = NumericalSemigroup(semigroup_gens)
        inv = semigroup_invariants(h)
        if "symmetric" in expected:
            rep.check(
                "semigroup.symmetric",
                anchor("semigroup.symmetric", "the value semigroup is symmetric"),
                expected["symmetric"],
                inv["symmetric"],
            )
        if "semigroup_conductor" in expected:
            rep.check(
                "semigroup.conductor",
                anchor("semigroup.conductor", "conductor of the value semigroup"),
                expected["semigroup_conductor"],
                inv["conductor"],
            )
        direct = all(
            h.contains(s) != h.contains(inv["frobenius"] - s)
            for s in range(0, inv["frobenius"] + 1)
        )
        rep.assert_true(
            "semigroup.symmetry-direct",
            anchor(
                "semigroup.symmetry-direct",
                "s in H iff F - s not in H, checked directly",
            ),
            direct if inv["frobenius"] >= 0 else True,
        )
    res = cone_model_checks(
        [parse_t_series(t) for t in generators],
        field,
        precision,
        s_precision,
        margin,
    )
    if "conductor_exponent" in expected:
        rep.check(
            "cone.conductor-exponent",
            anchor("cone.conductor-exponent", "P:V = t^c V with the stated c"),
            expected["conductor_exponent"],
            res["conductor_exponent"],
            bound=res["window"],
        )
    rep.assert_true(
        "cone.conductor-window",
        anchor(
            "cone.conductor-window",
            "A:B = (t^c) + sB on the certified window",
        ),
        res["conductor_matches_closed_form"],
        bound=res["window"],
    )
    rep.check(
        "cone.socle-match",
        anchor("cone.socle-match", "r_A(B/A) = r_P(V/P)"),
        res["socle_V_over_P"],
        res["socle_B_over_A"],
        bound=res["window"],
    )
    if "type_r" in expected:
        rep.check(
            "cone.type",
            anchor("cone.type", "r_A(B/A)"),
            expected["type_r"],
            res["socle_B_over_A"],
            bound=res["window"],
        )
    rep.assert_true(
        "cone.certified",
        anchor("cone.certified", "the window certifies the conductor exponent"),
        res["conductor_certified"],
    )
    return rep


def quadratic_extension_report(model, margin=DEFAULT_MARGIN, expected=None, anchors=None):
    """Claims for P = k0[[t, alpha t]] inside V = k[[t]], [k : k0] = 2."""
    from .report import VerificationReport

    expected = expected or {}
    anchors = anchors or {}
    rep = VerificationReport(
        "quadratic-extension",
        config={
            "base": str(model.base),
            "alpha_sq": [model.u, model.v],
            "precision": model.precision,
        },
    )

    def anchor(cid, default):
        return anchors.get(cid, default)

    res = quadratic_extension_checks(model, margin)
    rep.assert_true(
        "decomposition",
        anchor("decomposition", "V = P + alpha P"),
        res["v_equals_p_plus_alpha_p"],
        bound=res["window"],
    )
    rep.assert_true(
        "conductor",
        anchor("conductor", "n V lies in P, so the conductor is the maximal ideal"),
        res["maximal_ideal_times_v_in_p"],
        bound=res["window"],
    )
    rep.assert_true(
        "alpha-outside",
        anchor("alpha-outside", "alpha does not lie in P"),
        res["alpha_not_in_p"],
    )
    rep.check(
        "type",
        anchor("type", "r_P(V/P) = 1 from the degree-zero piece of V/P"),
        expected.get("cokernel_degree0_dim", 1),
        res["cokernel_degree0_dim"],
    )
    return rep
