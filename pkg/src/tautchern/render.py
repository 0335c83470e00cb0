"""Deterministic text, LaTeX, and JSON rendering of graded expressions.

Formatting rules for text output, chosen to match the usual way these
formulas are written by hand:

* integer coefficients are attached with "*" (13*lambda, 2*delta);
* fractional coefficients are attached with a space (1/3 kappa_2,
  1/4 xi_irr_*(...)), since "1/3*kappa_2" misreads as 1/(3 kappa_2);
* coefficients of magnitude one are omitted;
* the zero expression renders as "0".

Pushforward atoms print with their symmetric psi-polynomial argument
reconstructed from the key: q-variables at the irreducible node,
r-variables at a separating node.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra import (
    BIRR,
    BSEP,
    BSEPA,
    CHE,
    DELTA,
    KAPPA,
    KAPPATILDE,
    PSI,
    PSIPOW,
    Gen,
    ModuliSpec,
    TautExpr,
    default_labels,
    hodge_component,
    irr_push,
    kappa,
    kappa_tilde,
    marked_psi,
    monomial_degree,
    psi_power_sum,
    sep_push_sum,
    delta_class,
)
from .rationals import DomainError, format_rational

FORMATS = ("text", "latex", "json")


def _psi_var_text(stem: str, index: int, power: int) -> str:
    base = f"psi_{{{stem}{index}}}"
    return base if power == 1 else f"{base}^{power}"


def _sym_arg_text(a: int, b: int, stem: str) -> str:
    if (a, b) == (0, 0):
        return "1"
    if a == b:
        return f"{_psi_var_text(stem, 1, a)}*{_psi_var_text(stem, 2, a)}"
    if b == 0:
        return f"{_psi_var_text(stem, 1, a)} + {_psi_var_text(stem, 2, a)}"
    return (f"{_psi_var_text(stem, 1, a)}*{_psi_var_text(stem, 2, b)} + "
            f"{_psi_var_text(stem, 1, b)}*{_psi_var_text(stem, 2, a)}")


def _label_set_text(labels: tuple[str, ...]) -> str:
    return "{" + ",".join(labels) + "}"


def gen_text(g: Gen) -> str:
    k = g.kind
    if k == KAPPA:
        return f"kappa_{g.args[0]}"
    if k == KAPPATILDE:
        return f"kappa~_{g.args[0]}"
    if k == PSIPOW:
        return "psi" if g.args[0] == 1 else f"psi^({g.args[0]})"
    if k == PSI:
        return f"psi_{{{g.args[0]}}}"
    if k == CHE:
        return "lambda" if g.args[0] == 1 else f"ch_{g.args[0]}(E)"
    if k == DELTA:
        return "delta"
    if k == BIRR:
        return f"xi_irr_*({_sym_arg_text(g.args[0], g.args[1], 'q')})"
    if k == BSEPA:
        return f"sum_{{h,A}} xi_{{h,A}}_*({_sym_arg_text(g.args[0], g.args[1], 'r')})"
    if k == BSEP:
        h, lab, a, b = g.args
        return (f"xi_{{{h},{_label_set_text(lab)}}}_*"
                f"({_sym_arg_text(a, b, 'r')})")
    raise DomainError(f"unknown generator kind {k!r}")


def _psi_var_latex(stem: str, index: int, power: int) -> str:
    base = f"\\psi_{{{stem}_{index}}}"
    return base if power == 1 else f"{base}^{{{power}}}"


def _sym_arg_latex(a: int, b: int, stem: str) -> str:
    if (a, b) == (0, 0):
        return "1"
    if a == b:
        return f"{_psi_var_latex(stem, 1, a)}{_psi_var_latex(stem, 2, a)}"
    if b == 0:
        return f"{_psi_var_latex(stem, 1, a)} + {_psi_var_latex(stem, 2, a)}"
    return (f"{_psi_var_latex(stem, 1, a)}{_psi_var_latex(stem, 2, b)} + "
            f"{_psi_var_latex(stem, 1, b)}{_psi_var_latex(stem, 2, a)}")


def gen_latex(g: Gen) -> str:
    k = g.kind
    if k == KAPPA:
        return f"\\kappa_{{{g.args[0]}}}"
    if k == KAPPATILDE:
        return f"\\tilde{{\\kappa}}_{{{g.args[0]}}}"
    if k == PSIPOW:
        return "\\psi" if g.args[0] == 1 else f"\\psi^{{({g.args[0]})}}"
    if k == PSI:
        return f"\\psi_{{{g.args[0]}}}"
    if k == CHE:
        return "\\lambda" if g.args[0] == 1 else f"\\mathrm{{ch}}_{{{g.args[0]}}}(\\mathbb{{E}})"
    if k == DELTA:
        return "\\delta"
    if k == BIRR:
        return f"\\xi_{{\\mathrm{{irr}}*}}({_sym_arg_latex(g.args[0], g.args[1], 'q')})"
    if k == BSEPA:
        return (f"\\sum_{{h,A}} \\xi_{{h,A*}}"
                f"({_sym_arg_latex(g.args[0], g.args[1], 'r')})")
    if k == BSEP:
        h, lab, a, b = g.args
        inner = ",".join(lab)
        return (f"\\xi_{{{h},\\{{{inner}\\}}*}}"
                f"({_sym_arg_latex(a, b, 'r')})")
    raise DomainError(f"unknown generator kind {k!r}")


def _display_terms(e: TautExpr):
    return sorted(e.terms,
                  key=lambda mc: (monomial_degree(mc[0]),
                                  tuple(g.display_key() for g in mc[0])))


def _grouped(mono: tuple[Gen, ...]) -> list[tuple[Gen, int]]:
    """Collapse a sorted monomial into (generator, exponent) runs."""
    out: list[tuple[Gen, int]] = []
    for g in sorted(mono, key=Gen.display_key):
        if out and out[-1][0] == g:
            out[-1] = (g, out[-1][1] + 1)
        else:
            out.append((g, 1))
    return out


def render_text(e: TautExpr) -> str:
    if not e.terms:
        return "0"
    pieces = []
    for mono, coeff in _display_terms(e):
        mag = abs(coeff)
        mono_str = "*".join(
            gen_text(g) if p == 1 else f"{gen_text(g)}^{p}"
            for g, p in _grouped(mono))
        if not mono:
            body = format_rational(mag)
        elif mag == 1:
            body = mono_str
        elif mag.denominator == 1:
            body = f"{format_rational(mag)}*{mono_str}"
        else:
            body = f"{format_rational(mag)} {mono_str}"
        pieces.append((coeff < 0, body))
    first_neg, first_body = pieces[0]
    out = ("-" if first_neg else "") + first_body
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out


def _coeff_latex(q: Fraction) -> str:
    sign = "-" if q < 0 else ""
    mag = abs(q)
    if mag.denominator == 1:
        return f"{sign}{mag.numerator}"
    return f"{sign}\\tfrac{{{mag.numerator}}}{{{mag.denominator}}}"


def render_latex(e: TautExpr) -> str:
    if not e.terms:
        return "0"
    pieces = []
    for mono, coeff in _display_terms(e):
        mag = abs(coeff)
        mono_str = "\\,".join(
            gen_latex(g) if p == 1 else f"{gen_latex(g)}^{{{p}}}"
            for g, p in _grouped(mono))
        if not mono:
            body = _coeff_latex(mag)
        elif mag == 1:
            body = mono_str
        else:
            body = f"{_coeff_latex(mag)}\\,{mono_str}"
        pieces.append((coeff < 0, body))
    first_neg, first_body = pieces[0]
    out = ("-" if first_neg else "") + first_body
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out


def _gen_json(g: Gen) -> dict:
    if g.kind == BSEP:
        h, lab, a, b = g.args
        args = [h, list(lab), a, b]
    else:
        args = list(g.args)
    return {"gen": g.kind, "args": args}


def render_json_dict(e: TautExpr) -> dict:
    spec = e.spec
    return {
        "g": spec.genus,
        "n": spec.n,
        "degree": e.order,
        "mode": "concrete" if spec.concrete else "generic",
        "labels": list(spec.labels),
        "terms": [
            {
                "coeff": format_rational(c),
                "monomial": [_gen_json(g)
                             for g in sorted(m, key=Gen.display_key)],
            }
            for m, c in _display_terms(e)
        ],
    }


def render_json(e: TautExpr) -> str:
    return json.dumps(render_json_dict(e), indent=2)


def render(e: TautExpr, fmt: str = "text") -> str:
    if fmt == "text":
        return render_text(e)
    if fmt == "latex":
        return render_latex(e)
    if fmt == "json":
        return render_json(e)
    raise DomainError(f"unknown output format {fmt!r}; expected one of {FORMATS}")


def _gen_from_json(doc: dict, spec: ModuliSpec) -> Gen:
    kind = doc.get("gen")
    args = doc.get("args", [])
    if kind == KAPPA:
        return kappa(args[0])
    if kind == KAPPATILDE:
        return kappa_tilde(args[0])
    if kind == PSIPOW:
        return psi_power_sum(args[0])
    if kind == PSI:
        return marked_psi(args[0])
    if kind == CHE:
        return hodge_component(args[0])
    if kind == DELTA:
        return delta_class()
    if kind == BIRR:
        return irr_push(args[0], args[1])
    if kind == BSEPA:
        return sep_push_sum(args[0], args[1])
    if kind == BSEP:
        h, lab, a, b = args
        return spec.sep_push(h, tuple(lab), a, b)
    raise DomainError(f"unknown generator name {kind!r} in JSON input")


def expr_from_json_dict(doc: dict) -> TautExpr:
    try:
        g = int(doc["g"])
        n = int(doc["n"])
        order = int(doc["degree"])
        mode = doc.get("mode", "generic")
        labels = tuple(doc.get("labels") or default_labels(n))
        terms = doc["terms"]
    except (KeyError, TypeError) as exc:
        raise DomainError(f"malformed expression document: {exc}") from None
    if len(labels) != n:
        raise DomainError(f"label list has {len(labels)} entries but n = {n}")
    spec = ModuliSpec(g, labels, concrete=(mode == "concrete"))
    items = []
    for t in terms:
        coeff = Fraction(t["coeff"])
        gens = tuple(_gen_from_json(gd, spec) for gd in t["monomial"])
        items.append((gens, coeff))
    return TautExpr.build(spec, order, items)


def expr_from_json(text: str) -> TautExpr:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"invalid JSON: {exc}") from None
    return expr_from_json_dict(doc)
