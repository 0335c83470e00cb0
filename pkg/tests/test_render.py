"""Text, LaTeX, and JSON rendering, plus the JSON round trip."""

from __future__ import annotations

import json
from fractions import Fraction

import pytest

from tautchern import (
    DomainError,
    ModuliSpec,
    TautExpr,
    canonical_class,
    ch_cotangent,
    default_labels,
    delta_as_atoms,
    delta_class,
    expr_from_json,
    hodge_component,
    irr_push,
    kappa,
    kappa_tilde,
    marked_psi,
    psi_power_sum,
    render,
    render_json_dict,
    sep_push_sum,
)

SPEC21 = ModuliSpec(2, default_labels(1))


def test_canonical_class_text_golden():
    assert render(canonical_class(SPEC21)) == "13*lambda + psi - 2*delta"
    no_marks = ModuliSpec(2, ())
    assert render(canonical_class(no_marks)) == "13*lambda - 2*delta"


def test_quarter_irr_text_golden():
    e = TautExpr.of(SPEC21, 2, irr_push(1, 0), Fraction(1, 4))
    assert render(e) == "1/4 xi_irr_*(psi_{q1} + psi_{q2})"


def test_zero_and_constant_rendering():
    assert render(TautExpr.zero(SPEC21, 2)) == "0"
    assert render(TautExpr.one(SPEC21, 2).scale(Fraction(3, 2))) == "3/2"
    assert render(TautExpr.one(SPEC21, 2).scale(-2)) == "-2"


def test_coefficient_separator_rules():
    two_delta = TautExpr.of(SPEC21, 1, delta_class(), 2)
    assert render(two_delta) == "2*delta"
    third_kappa = TautExpr.of(SPEC21, 2, kappa(2), Fraction(1, 3))
    assert render(third_kappa) == "1/3 kappa_2"
    unit = TautExpr.of(SPEC21, 2, kappa(2), -1)
    assert render(unit) == "-kappa_2"


def test_generator_spellings():
    assert render(TautExpr.of(SPEC21, 2, kappa_tilde(2))) == "kappa~_2"
    assert render(TautExpr.of(SPEC21, 2, psi_power_sum(2))) == "psi^(2)"
    assert render(TautExpr.of(SPEC21, 1, psi_power_sum(1))) == "psi"
    assert render(TautExpr.of(SPEC21, 3, hodge_component(3))) == "ch_3(E)"
    assert render(TautExpr.of(SPEC21, 1, hodge_component(1))) == "lambda"
    concrete = ModuliSpec(2, default_labels(1), concrete=True)
    assert render(TautExpr.of(concrete, 1, marked_psi("p1"))) == "psi_{p1}"


def test_pushforward_argument_reconstruction():
    cases = [
        (irr_push(0, 0), "xi_irr_*(1)"),
        (irr_push(1, 0), "xi_irr_*(psi_{q1} + psi_{q2})"),
        (irr_push(1, 1), "xi_irr_*(psi_{q1}*psi_{q2})"),
        (irr_push(2, 0), "xi_irr_*(psi_{q1}^2 + psi_{q2}^2)"),
        (irr_push(2, 1), "xi_irr_*(psi_{q1}^2*psi_{q2} + psi_{q1}*psi_{q2}^2)"),
        (sep_push_sum(1, 0), "sum_{h,A} xi_{h,A}_*(psi_{r1} + psi_{r2})"),
    ]
    for gen, text in cases:
        assert render(TautExpr.of(SPEC21, 5, gen)) == text


def test_concrete_sep_atom_text():
    spec = ModuliSpec(3, default_labels(2), concrete=True)
    e = TautExpr.of(spec, 2, spec.sep_push(2, ("p1",), 1, 0))
    assert render(e) == "xi_{1,{p2}}_*(psi_{r1} + psi_{r2})"
    bare = TautExpr.of(spec, 1, spec.sep_push(3, (), 0, 0))
    assert render(bare) == "xi_{0,{p1,p2}}_*(1)"


def test_repeated_factors_collapse_to_powers():
    lam = TautExpr.of(SPEC21, 4, hodge_component(1))
    assert render(lam * lam) == "lambda^2"
    k1 = TautExpr.of(SPEC21, 4, kappa(1))
    d = TautExpr.of(SPEC21, 4, delta_class())
    assert render(k1 * k1 * d) == "kappa_1^2*delta"


def test_display_order_lambda_before_psi_before_delta():
    e = (TautExpr.of(SPEC21, 2, delta_class())
         + TautExpr.of(SPEC21, 2, psi_power_sum(1))
         + TautExpr.of(SPEC21, 2, hodge_component(1))
         + TautExpr.of(SPEC21, 2, kappa(1)))
    assert render(e) == "kappa_1 + lambda + psi + delta"


def test_latex_golden():
    assert render(canonical_class(SPEC21), "latex") == \
        "13\\,\\lambda + \\psi - 2\\,\\delta"
    e = TautExpr.of(SPEC21, 2, irr_push(1, 0), Fraction(1, 4))
    assert render(e, "latex") == \
        "\\tfrac{1}{4}\\,\\xi_{\\mathrm{irr}*}(\\psi_{q_1} + \\psi_{q_2})"
    assert render(TautExpr.of(SPEC21, 2, kappa_tilde(2)), "latex") == \
        "\\tilde{\\kappa}_{2}"
    lam = TautExpr.of(SPEC21, 4, hodge_component(1))
    assert render(lam * lam, "latex") == "\\lambda^{2}"


def test_unknown_format_rejected():
    with pytest.raises(DomainError):
        render(TautExpr.one(SPEC21, 1), "html")


def test_json_document_shape():
    doc = render_json_dict(canonical_class(SPEC21))
    assert list(doc) == ["g", "n", "degree", "mode", "labels", "terms"]
    assert doc["g"] == 2 and doc["n"] == 1
    assert doc["mode"] == "generic"
    assert doc["labels"] == ["p1"]
    assert doc["terms"][0] == {
        "coeff": "13", "monomial": [{"gen": "hodge_ch", "args": [1]}]}


def test_json_concrete_delta_document():
    spec = ModuliSpec(2, (), concrete=True)
    doc = render_json_dict(delta_as_atoms(spec, 1))
    assert doc["mode"] == "concrete"
    assert doc["terms"] == [
        {"coeff": "1/2", "monomial": [{"gen": "irr_push", "args": [0, 0]}]},
        {"coeff": "1/2", "monomial": [{"gen": "sep_push", "args": [1, [], 0, 0]}]},
    ]


@pytest.mark.parametrize("concrete", [False, True])
def test_json_round_trip(concrete):
    spec = ModuliSpec(3, default_labels(2), concrete=concrete)
    e = ch_cotangent(spec, 3)
    assert expr_from_json(render(e, "json")) == e


def test_json_round_trip_preserves_mode_and_labels():
    spec = ModuliSpec(0, ("a", "b", "c", "d"), concrete=True)
    e = delta_as_atoms(spec, 1)
    back = expr_from_json(render(e, "json"))
    assert back.spec == spec
    assert back == e


def test_json_parse_errors():
    with pytest.raises(DomainError):
        expr_from_json("not json at all {")
    with pytest.raises(DomainError):
        expr_from_json(json.dumps({"g": 2}))
    good = render_json_dict(canonical_class(SPEC21))
    bad_labels = dict(good, labels=["p1", "p2"])
    with pytest.raises(DomainError):
        expr_from_json(json.dumps(bad_labels))
    bad_gen = json.loads(json.dumps(good))
    bad_gen["terms"][0]["monomial"][0]["gen"] = "mystery"
    with pytest.raises(DomainError):
        expr_from_json(json.dumps(bad_gen))


def test_rendering_is_deterministic_across_term_order():
    items = [
        ((kappa(1),), Fraction(1)),
        ((delta_class(),), Fraction(-2)),
        ((irr_push(1, 0),), Fraction(1, 4)),
        ((hodge_component(1),), Fraction(13)),
    ]
    a = TautExpr.build(SPEC21, 2, items)
    b = TautExpr.build(SPEC21, 2, list(reversed(items)))
    for fmt in ("text", "latex", "json"):
        assert render(a, fmt) == render(b, fmt)
