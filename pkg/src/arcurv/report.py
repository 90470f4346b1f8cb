"""Verification suite: per-edge curvature claims, diameter and eigenvalue bounds.

Builds a structured report for a connected amply regular graph, asserting
every bound that applies to its parameter regime and carrying comparison-only
columns for the literature bounds that are reported but never asserted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import witness as wit
from .curvature import CurvatureTable, curvature_all_edges
from .graph import AmplyParams, AmplyViolation, Graph, GraphError, detect_amply_params
from .matching import konig_decomposition
from .spectral import COMPARISON_TOL, lambda1, second_largest


class ReportError(ValueError):
    """Input fails the verification suite's hypotheses (not an assertion failure)."""


def frac_str(f: Fraction) -> str:
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def parse_frac(s: str) -> Fraction:
    return Fraction(s)


@dataclass(frozen=True)
class EdgeCheck:
    name: str
    relation: str  # "eq" | "ge" | "le"
    bound: Fraction
    passed: bool


@dataclass(frozen=True)
class EdgeRow:
    u: int
    v: int
    kappa: Fraction
    checks: tuple[EdgeCheck, ...]
    passed: bool


@dataclass(frozen=True)
class CompareColumn:
    """Report-only bound from the literature; never asserted."""

    name: str
    applicable: bool
    detail: str


@dataclass(frozen=True)
class DiameterRow:
    value: int
    bound_general: Optional[int]  # <= d when beta >= alpha, beta != 1
    bound_strict: Optional[int]  # <= floor(2d/3) when beta > alpha >= 1
    passed: bool
    comparisons: tuple[CompareColumn, ...]


@dataclass(frozen=True)
class SpectralRow:
    sigma_second: float
    bound: Optional[int]
    bound_passed: Optional[bool]
    lambda_one: float
    kappa_min: Fraction
    lichnerowicz_passed: bool
    passed: bool


@dataclass(frozen=True)
class WitnessSummary:
    edges_checked: int
    regular_pass: int
    class_count_pass: int
    bijection_pass: int
    chain_bound_pass: int
    pi0_bound_pass: int
    lower_bound_pass: int
    passed: bool


@dataclass(frozen=True)
class DenseMatchSummary:
    kappa: Fraction
    edges_certified: int
    passed: bool


@dataclass(frozen=True)
class ConferenceNote:
    """Computed curvature shown against the conjectured conference value; no assertion."""

    gamma: int
    conjectured: Fraction
    computed_min: Fraction
    computed_max: Fraction


@dataclass(frozen=True)
class VerificationReport:
    graph_id: str
    params: AmplyParams
    edge_rows: tuple[EdgeRow, ...]
    diameter: DiameterRow
    spectral: SpectralRow
    witness: Optional[WitnessSummary]
    dense_match: Optional[DenseMatchSummary]
    conference: Optional[ConferenceNote]
    overall_pass: bool


def _edge_checks(kappa: Fraction, params: AmplyParams) -> tuple[EdgeCheck, ...]:
    d, a, b = params.d, params.alpha, params.beta
    checks: list[EdgeCheck] = []
    if b is not None:
        upper = Fraction(2 + a, d)
        checks.append(EdgeCheck("upper-bound", "le", upper, kappa <= upper))
        if a == 0 and b >= 2:
            checks.append(EdgeCheck("girth4-exact", "eq", Fraction(2, d), kappa == Fraction(2, d)))
        if a == 1 and b > a:
            checks.append(EdgeCheck("alpha1-exact", "eq", Fraction(3, d), kappa == Fraction(3, d)))
        if a == b and a > 1:
            checks.append(EdgeCheck("equal-params-lower", "ge", Fraction(2, d), kappa >= Fraction(2, d)))
        if b > a >= 1:
            checks.append(EdgeCheck("main-lower", "ge", Fraction(3, d), kappa >= Fraction(3, d)))
        if 2 * b - a >= d + 1:
            checks.append(EdgeCheck("dense-exact", "eq", upper, kappa == upper))
    return tuple(checks)


def _witness_edge_ok(g: Graph, u: int, v: int, params: AmplyParams) -> dict[str, bool]:
    result = {
        "regular": False,
        "class_count": False,
        "bijection": False,
        "chain_bound": False,
        "pi0_bound": False,
        "lower_bound": False,
    }
    h = wit.build_transport_bipartite(g, u, v, params)
    result["regular"] = wit.check_h_regular(h).ok
    classes = konig_decomposition(h.to_bipartite())
    result["class_count"] = len(classes) == params.beta - 1
    bijective = True
    chains_ok = True
    for m in classes:
        try:
            records = wit.verify_lemma_3_3(g, h, m)
        except wit.WitnessError:
            bijective = False
            chains_ok = False
            break
        chains_ok = chains_ok and all(r.ok for r in records)
    result["bijection"] = bijective
    result["chain_bound"] = chains_ok
    try:
        cert = wit.witness_curvature_bound(g, u, v, params)
    except wit.WitnessError:
        return result
    result["pi0_bound"] = cert.pi0_cost <= Fraction(params.d - 2, params.d + 1)
    result["lower_bound"] = cert.kappa_lb >= Fraction(3, params.d) and cert.kappa_lb <= cert.kappa
    return result


def _diameter_row(g: Graph, params: AmplyParams) -> DiameterRow:
    diam = g.diameter()
    d, a, b = params.d, params.alpha, params.beta
    bound_general = d if (b is not None and b != 1 and b >= a) else None
    bound_strict = (2 * d) // 3 if (b is not None and b > a >= 1) else None
    passed = True
    if bound_general is not None:
        passed = passed and diam <= bound_general
    if bound_strict is not None:
        passed = passed and diam <= bound_strict
    comparisons: list[CompareColumn] = []
    eq3_applicable = b is not None and d >= 3 and b != 1 and b > a
    comparisons.append(
        CompareColumn(
            "distance-regular-linear",
            eq3_applicable,
            f"diam <= d - beta + 2 = {d - b + 2} (distance-regular hypothesis not verified)"
            if eq3_applicable
            else "requires d >= 3 and 1 != beta > alpha",
        )
    )
    eq4_applicable = b is not None and b != 1 and b >= a and diam >= 4
    comparisons.append(
        CompareColumn(
            "two-beta-linear",
            eq4_applicable,
            f"diam <= d - 2*beta + 4 = {d - 2 * b + 4}"
            if eq4_applicable
            else "requires 1 != beta >= alpha and diam >= 4",
        )
    )
    eq5_applicable = b is not None and b >= max(3, a) and diam >= 6
    if eq5_applicable:
        rhs = (3 - Fraction(2, b)) * (b - 3 + diam // 2)
        eq5_detail = f"d >= (3 - 2/beta)(beta - 3 + floor(diam/2)) = {frac_str(Fraction(rhs))}"
    else:
        eq5_detail = "requires beta >= max(3, alpha) and diam >= 6"
    comparisons.append(CompareColumn("degree-lower-nonlinear", eq5_applicable, eq5_detail))
    return DiameterRow(
        value=diam,
        bound_general=bound_general,
        bound_strict=bound_strict,
        passed=passed,
        comparisons=tuple(comparisons),
    )


def _spectral_row(g: Graph, params: AmplyParams, kappa_min: Fraction) -> SpectralRow:
    sigma = second_largest(g)
    lam = lambda1(g)
    d, a, b = params.d, params.alpha, params.beta
    bound: Optional[int] = None
    if b is not None and b > a >= 1:
        bound = d - 3
    elif b is not None and b != 1 and b >= a:
        bound = d - 2
    bound_passed = None if bound is None else sigma <= bound + COMPARISON_TOL
    lich = lam >= float(kappa_min) - COMPARISON_TOL
    passed = (bound_passed is not False) and lich
    return SpectralRow(
        sigma_second=sigma,
        bound=bound,
        bound_passed=bound_passed,
        lambda_one=lam,
        kappa_min=kappa_min,
        lichnerowicz_passed=lich,
        passed=passed,
    )


def _conference_note(params: AmplyParams, table: CurvatureTable) -> Optional[ConferenceNote]:
    d, a, b = params.d, params.alpha, params.beta
    if b is None or d % 2 != 0:
        return None
    gamma = d // 2
    if gamma < 2 or params.n != 4 * gamma + 1 or a != gamma - 1 or b != gamma:
        return None
    return ConferenceNote(
        gamma=gamma,
        conjectured=Fraction(1, 2) + Fraction(1, 2 * gamma),
        computed_min=table.kappa_min,
        computed_max=table.kappa_max,
    )


def verify_graph(g: Graph, graph_id: str, threads: int = 1) -> VerificationReport:
    """Run every applicable check against a connected amply regular graph."""
    if not g.is_connected():
        raise ReportError("verification requires a connected graph")
    params = detect_amply_params(g)
    if isinstance(params, AmplyViolation):
        raise ReportError(
            f"not amply regular: {params.kind} violation at pair {params.pair} "
            f"(found {params.found}, expected {params.expected})"
        )
    table = curvature_all_edges(g, threads=threads)
    edge_rows = []
    for u, v, kappa in table.rows:
        checks = _edge_checks(kappa, params)
        edge_rows.append(
            EdgeRow(u=u, v=v, kappa=kappa, checks=checks, passed=all(c.passed for c in checks))
        )
    witness_summary: Optional[WitnessSummary] = None
    if params.beta is not None and params.beta > params.alpha >= 1:
        counts = {
            "regular": 0,
            "class_count": 0,
            "bijection": 0,
            "chain_bound": 0,
            "pi0_bound": 0,
            "lower_bound": 0,
        }
        edges = g.edges()
        for u, v in edges:
            ok = _witness_edge_ok(g, u, v, params)
            for key in counts:
                counts[key] += ok[key]
        total = len(edges)
        witness_summary = WitnessSummary(
            edges_checked=total,
            regular_pass=counts["regular"],
            class_count_pass=counts["class_count"],
            bijection_pass=counts["bijection"],
            chain_bound_pass=counts["chain_bound"],
            pi0_bound_pass=counts["pi0_bound"],
            lower_bound_pass=counts["lower_bound"],
            passed=all(c == total for c in counts.values()),
        )
    dense_summary: Optional[DenseMatchSummary] = None
    if params.beta is not None and 2 * params.beta - params.alpha >= params.d + 1:
        certified = 0
        ok = True
        for u, v in g.edges():
            try:
                wit.prop_3_1_certificate(g, u, v, params)
                certified += 1
            except wit.WitnessError:
                ok = False
        dense_summary = DenseMatchSummary(
            kappa=Fraction(2 + params.alpha, params.d),
            edges_certified=certified,
            passed=ok,
        )
    diameter_row = _diameter_row(g, params)
    spectral_row = _spectral_row(g, params, table.kappa_min)
    conference = _conference_note(params, table)
    overall = (
        all(r.passed for r in edge_rows)
        and diameter_row.passed
        and spectral_row.passed
        and (witness_summary is None or witness_summary.passed)
        and (dense_summary is None or dense_summary.passed)
    )
    return VerificationReport(
        graph_id=graph_id,
        params=params,
        edge_rows=tuple(edge_rows),
        diameter=diameter_row,
        spectral=spectral_row,
        witness=witness_summary,
        dense_match=dense_summary,
        conference=conference,
        overall_pass=overall,
    )


# --- serialization ---------------------------------------------------------


def report_to_dict(r: VerificationReport) -> dict:
    return {
        "graph_id": r.graph_id,
        "params": {
            "n": r.params.n,
            "d": r.params.d,
            "alpha": r.params.alpha,
            "beta": r.params.beta,
            "girth": r.params.girth,
            "connected": r.params.connected,
        },
        "edges": [
            {
                "u": row.u,
                "v": row.v,
                "kappa": frac_str(row.kappa),
                "checks": [
                    {
                        "name": c.name,
                        "relation": c.relation,
                        "bound": frac_str(c.bound),
                        "passed": c.passed,
                    }
                    for c in row.checks
                ],
                "passed": row.passed,
            }
            for row in r.edge_rows
        ],
        "diameter": {
            "value": r.diameter.value,
            "bound_general": r.diameter.bound_general,
            "bound_strict": r.diameter.bound_strict,
            "passed": r.diameter.passed,
            "comparisons": [
                {"name": c.name, "applicable": c.applicable, "detail": c.detail}
                for c in r.diameter.comparisons
            ],
        },
        "spectral": {
            "sigma_second": r.spectral.sigma_second,
            "bound": r.spectral.bound,
            "bound_passed": r.spectral.bound_passed,
            "lambda_one": r.spectral.lambda_one,
            "kappa_min": frac_str(r.spectral.kappa_min),
            "lichnerowicz_passed": r.spectral.lichnerowicz_passed,
            "passed": r.spectral.passed,
        },
        "witness": None
        if r.witness is None
        else {
            "edges_checked": r.witness.edges_checked,
            "regular_pass": r.witness.regular_pass,
            "class_count_pass": r.witness.class_count_pass,
            "bijection_pass": r.witness.bijection_pass,
            "chain_bound_pass": r.witness.chain_bound_pass,
            "pi0_bound_pass": r.witness.pi0_bound_pass,
            "lower_bound_pass": r.witness.lower_bound_pass,
            "passed": r.witness.passed,
        },
        "dense_match": None
        if r.dense_match is None
        else {
            "kappa": frac_str(r.dense_match.kappa),
            "edges_certified": r.dense_match.edges_certified,
            "passed": r.dense_match.passed,
        },
        "conference": None
        if r.conference is None
        else {
            "gamma": r.conference.gamma,
            "conjectured": frac_str(r.conference.conjectured),
            "computed_min": frac_str(r.conference.computed_min),
            "computed_max": frac_str(r.conference.computed_max),
        },
        "overall_pass": r.overall_pass,
    }


def report_from_dict(data: dict) -> VerificationReport:
    p = data["params"]
    params = AmplyParams(
        n=p["n"], d=p["d"], alpha=p["alpha"], beta=p["beta"],
        girth=p["girth"], connected=p["connected"],
    )
    edge_rows = tuple(
        EdgeRow(
            u=row["u"],
            v=row["v"],
            kappa=parse_frac(row["kappa"]),
            checks=tuple(
                EdgeCheck(
                    name=c["name"],
                    relation=c["relation"],
                    bound=parse_frac(c["bound"]),
                    passed=c["passed"],
                )
                for c in row["checks"]
            ),
            passed=row["passed"],
        )
        for row in data["edges"]
    )
    dd = data["diameter"]
    diameter = DiameterRow(
        value=dd["value"],
        bound_general=dd["bound_general"],
        bound_strict=dd["bound_strict"],
        passed=dd["passed"],
        comparisons=tuple(
            CompareColumn(name=c["name"], applicable=c["applicable"], detail=c["detail"])
            for c in dd["comparisons"]
        ),
    )
    sd = data["spectral"]
    spectral = SpectralRow(
        sigma_second=sd["sigma_second"],
        bound=sd["bound"],
        bound_passed=sd["bound_passed"],
        lambda_one=sd["lambda_one"],
        kappa_min=parse_frac(sd["kappa_min"]),
        lichnerowicz_passed=sd["lichnerowicz_passed"],
        passed=sd["passed"],
    )
    wd = data["witness"]
    witness = (
        None
        if wd is None
        else WitnessSummary(
            edges_checked=wd["edges_checked"],
            regular_pass=wd["regular_pass"],
            class_count_pass=wd["class_count_pass"],
            bijection_pass=wd["bijection_pass"],
            chain_bound_pass=wd["chain_bound_pass"],
            pi0_bound_pass=wd["pi0_bound_pass"],
            lower_bound_pass=wd["lower_bound_pass"],
            passed=wd["passed"],
        )
    )
    md = data["dense_match"]
    dense = (
        None
        if md is None
        else DenseMatchSummary(
            kappa=parse_frac(md["kappa"]),
            edges_certified=md["edges_certified"],
            passed=md["passed"],
        )
    )
    cd = data["conference"]
    conference = (
        None
        if cd is None
        else ConferenceNote(
            gamma=cd["gamma"],
            conjectured=parse_frac(cd["conjectured"]),
            computed_min=parse_frac(cd["computed_min"]),
            computed_max=parse_frac(cd["computed_max"]),
        )
    )
    return VerificationReport(
        graph_id=data["graph_id"],
        params=params,
        edge_rows=edge_rows,
        diameter=diameter,
        spectral=spectral,
        witness=witness,
        dense_match=dense,
        conference=conference,
        overall_pass=data["overall_pass"],
    )


def render_text(r: VerificationReport) -> str:
    p = r.params
    beta = "-" if p.beta is None else p.beta
    lines = [
        f"graph: {r.graph_id}",
        f"params: ({p.n},{p.d},{p.alpha},{beta})  girth={p.girth}",
        "",
        "edge curvature:",
    ]
    for row in r.edge_rows:
        mark = "ok" if row.passed else "FAIL"
        checks = "; ".join(
            f"{c.name} {'=' if c.relation == 'eq' else ('>=' if c.relation == 'ge' else '<=')} "
            f"{frac_str(c.bound)} [{'ok' if c.passed else 'FAIL'}]"
            for c in row.checks
        ) or "no applicable bound"
        lines.append(f"  ({row.u},{row.v})  kappa={frac_str(row.kappa)}  {checks}  [{mark}]")
    d = r.diameter
    lines.append("")
    lines.append(
        f"diameter: {d.value}"
        + (f"  <= d = {d.bound_general}" if d.bound_general is not None else "")
        + (f"  <= floor(2d/3) = {d.bound_strict}" if d.bound_strict is not None else "")
        + f"  [{'ok' if d.passed else 'FAIL'}]"
    )
    for c in d.comparisons:
        tag = "comparison" if c.applicable else "not applicable"
        lines.append(f"  {c.name} ({tag}): {c.detail}")
    s = r.spectral
    lines.append("")
    lines.append(
        f"sigma_(n-1): {s.sigma_second:.12g}"
        + (f"  bound {s.bound}  [{'ok' if s.bound_passed else 'FAIL'}]" if s.bound is not None else "  (no bound applicable)")
    )
    lines.append(
        f"lambda_1: {s.lambda_one:.12g}  >= kappa_min = {frac_str(s.kappa_min)}"
        f"  [{'ok' if s.lichnerowicz_passed else 'FAIL'}]"
    )
    if r.witness is not None:
        w = r.witness
        lines.append("")
        lines.append(
            f"witness pipeline: {w.edges_checked} edges | regular {w.regular_pass}"
            f" | classes {w.class_count_pass} | bijection {w.bijection_pass}"
            f" | chains {w.chain_bound_pass} | pi0 {w.pi0_bound_pass}"
            f" | lower bound {w.lower_bound_pass}  [{'ok' if w.passed else 'FAIL'}]"
        )
    if r.dense_match is not None:
        m = r.dense_match
        lines.append(
            f"dense-matching certificate: kappa = {frac_str(m.kappa)} on "
            f"{m.edges_certified} edges  [{'ok' if m.passed else 'FAIL'}]"
        )
    if r.conference is not None:
        c = r.conference
        lines.append(
            f"conference graph (gamma={c.gamma}): conjectured kappa = {frac_str(c.conjectured)},"
            f" computed in [{frac_str(c.computed_min)}, {frac_str(c.computed_max)}] (not asserted)"
        )
    lines.append("")
    lines.append(f"verdict: {'PASS' if r.overall_pass else 'FAIL'}")
    return "\n".join(lines) + "\n"
