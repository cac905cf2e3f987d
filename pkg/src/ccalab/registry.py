"""The shipped example registry: the single source of expected values.

families.json carries, per instance, the construction parameters, the
expected invariants, and an anchor string per claim (the mathematical
statement the claim verifies).  run_example builds the instance, runs
its verifier, and compares against the registry's expectations.
"""

from __future__ import annotations

import json
from importlib import resources

from .families import (
    ArtinianQuotient,
    FFamilySpec,
    f_family_report,
    fiber_product_report,
    k_plus_q_report,
)
from .linalg import QQ, parse_field
from .monomial import MonomialIdeal, VarContext, make_context
from .semigroup import (
    QuadraticExtensionModel,
    quadratic_extension_report,
    semigroup_cone_report,
    subalgebra_report,
)


class UnknownExampleError(KeyError):
    pass


def load_registry():
    text = resources.files("ccalab.data").joinpath("families.json").read_text()
    return json.loads(text)


def example_ids():
    return [entry["id"] for entry in load_registry()["families"]]


def get_entry(example_id):
    for entry in load_registry()["families"]:
        if entry["id"] == example_id:
            return entry
    raise UnknownExampleError(example_id)


def _f_family_spec(params):
    if "vars" in params:
        ctx = VarContext(tuple(params["vars"]))
        return FFamilySpec(ctx, tuple(frozenset(s) for s in params["subsets"]))
    return FFamilySpec.from_indices(params["n"], params["index_subsets"])


def _artinian(params):
    ctx = make_context(params["n"], params.get("prefix", "X"))
    return ArtinianQuotient(ctx, MonomialIdeal.from_strings(ctx, params["gens"]))


def run_example(example_id, field=QQ, jobs=1, bound=None):
    """Build and verify a registered instance; returns its report."""
    entry = get_entry(example_id)
    kind = entry["kind"]
    params = entry["params"]
    expected = entry.get("expected", {})
    anchors = entry.get("anchors", {})
    if kind == "f_family":
        rep = f_family_report(
            _f_family_spec(params),
            field=field,
            expected=expected,
            anchors=anchors,
            parameters=params.get("parameters"),
            trace_powers=tuple(params.get("trace_powers", ())),
            bound=bound,
            jobs=jobs,
        )
    elif kind == "k_plus_q":
        rep = k_plus_q_report(_artinian(params), expected=expected, anchors=anchors)
    elif kind == "fiber_product":
        rep = fiber_product_report(
            _artinian(params),
            expected=expected,
            anchors=anchors,
            parameters=params.get("parameters"),
        )
        cross = params.get("crosscheck_f_family")
        if cross:
            spec = FFamilySpec(
                VarContext(tuple(cross["vars"])),
                tuple(frozenset(s) for s in cross["subsets"]),
            )
            from .pullback import cokernel_profile

            prof = cokernel_profile(spec.family())
            fiber_length = next(
                c.computed for c in rep.claims if c.claim_id == "cokernel.length-vs-ring"
            )
            rep.check(
                "crosscheck.intersection-presentation",
                anchors.get(
                    "crosscheck.intersection-presentation",
                    "the congruence pullback and the two-component presentation agree",
                ),
                fiber_length,
                prof.length,
            )
    elif kind == "subalgebra":
        rep = subalgebra_report(
            params["gens"],
            parse_field(params["field"]),
            precision=params.get("precision", 40),
            margin=params.get("margin", 10),
            expected=expected,
            anchors=anchors,
        )
    elif kind == "cone":
        rep = semigroup_cone_report(
            params["gens"],
            field=parse_field(params.get("field", "q")),
            precision=params.get("precision", 24),
            s_precision=params.get("s_precision", 3),
            margin=params.get("margin", 6),
            expected=expected,
            anchors=anchors,
            semigroup_gens=params.get("semigroup"),
        )
    elif kind == "quadratic_extension":
        model = QuadraticExtensionModel(
            parse_field(params["base"]),
            u=params["u"],
            v=params["v"],
            precision=params.get("precision", 24),
        )
        rep = quadratic_extension_report(
            model,
            margin=params.get("margin", 6),
            expected=expected,
            anchors=anchors,
        )
    else:
        raise UnknownExampleError(f"unknown kind {kind!r} for {example_id!r}")
    rep.subject = example_id
    for note in entry.get("notes", ()):
        rep.info("registry.note", "", note)
    return rep
