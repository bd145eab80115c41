"""Necessary conditions for a connected multigraph to admit a free period of
prime order p, each returning an evidence-bearing report.

Every check is one-directional: a failing verdict rules the period out, a
passing verdict proves nothing.  Reports therefore read as "excluded" /
"not excluded", never "periodic".

Checks on the graph alone:

* ``thm1.1``  - every monomial of N mod p must have y-exponent divisible by p.
* ``cor1.2``  - every surviving coefficient a_{ij} of the shifted Tutte
  polynomial mod p must satisfy j - i == 1 - r (mod p).
* ``cor1.3``  - for an (asserted) planar self-dual graph, r == 1 (mod p);
  the computable necessary condition T(s,t) = T(t,s) is verified first.

Checks against a quotient witness h (oracle-assisted):

* ``thm3.1``  - N_G == (N_Gbar)^p modulo (p, u^p - u), compared as folded
  canonical forms.
* ``cor3.2``  - the Tutte congruence T_G == (T_Gbar)^p modulo
  (p, s^p - s, t^p - t).  Compared in premultiplied form
  s t^r T_G == (s t^rbar T_Gbar)^p: dividing the specialization identity by
  its monomial is not valid in the quotient ring (the naive folded comparison
  already fails on a p-cycle), while the premultiplied comparison is exactly
  the u -> st, x -> 1, y -> t image of the thm3.1 congruence.
* ``chromatic-remark`` - P_G == (P_Gbar)^p modulo (p, λ^p - λ); when the
  quotient has a loop the right side is zero, so P_G must fold to zero.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .graphs import MultiGraph, component_count, is_connected
from .invariants import (
    CHROMATIC_VARS,
    TUTTE_SHIFTED_VARS,
    chromatic_deletion_contraction,
    negami_polynomial,
    tutte_deletion_contraction,
)
from .polynomials import (
    ModPolynomial,
    Polynomial,
    power_mod,
    reduce_mod_p,
    render_terms,
)
from .symmetry import (
    DEFAULT_VERTEX_LIMIT,
    find_free_period,
    quotient_graph,
    validate_free_period,
)

CRITERION_IDS = (
    "thm1.1",
    "cor1.2",
    "cor1.3",
    "thm3.1",
    "cor3.2",
    "chromatic-remark",
)

REPORT_SCHEMA = {
    "type": "object",
    "required": ["criterion", "graph", "p", "verdict", "violations", "notes"],
    "properties": {
        "criterion": {"type": "string"},
        "graph": {"type": "string"},
        "p": {"type": "integer"},
        "verdict": {"enum": ["pass", "fail"]},
        "violations": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["monomial", "coefficient"],
                "properties": {
                    "monomial": {"type": "string"},
                    "coefficient": {"type": "integer"},
                },
            },
        },
        "notes": {"type": "array", "items": {"type": "string"}},
    },
}


class DisconnectedGraphError(ValueError):
    """The criterion's hypotheses require a connected graph."""


class NotSelfDualError(ValueError):
    """The asserted self-duality is contradicted by T(s,t) != T(t,s)."""


class SoundnessError(RuntimeError):
    """A criterion failed on a graph the oracle proved periodic."""


@dataclass(frozen=True)
class Violation:
    monomial: str
    coefficient: int


@dataclass(frozen=True)
class CriterionReport:
    criterion: str
    graph: str
    p: int
    verdict: str
    violations: tuple = ()
    notes: tuple = ()

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self) -> dict:
        return {
            "criterion": self.criterion,
            "graph": self.graph,
            "p": self.p,
            "verdict": self.verdict,
            "violations": [
                {"monomial": v.monomial, "coefficient": v.coefficient}
                for v in self.violations
            ],
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)


def render_report(report: CriterionReport) -> str:
    lines = [
        f"criterion: {report.criterion}",
        f"graph: {report.graph}",
        f"p: {report.p}",
        f"verdict: {report.verdict}",
    ]
    if report.violations:
        lines.append("violations:")
        lines.extend(
            f"  {v.coefficient} * {v.monomial}" for v in report.violations
        )
    for note in report.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines)


def _default_label(g: MultiGraph) -> str:
    return f"graph-{g.vertex_count}v{g.edge_count}e"


def _require_connected(g: MultiGraph, criterion: str):
    if not is_connected(g):
        raise DisconnectedGraphError(
            f"{criterion} requires a connected graph "
            f"({component_count(g)} components found)"
        )


def _sorted_violations(terms: dict, variables) -> tuple:
    out = []
    for exps in sorted(terms, key=lambda e: tuple(reversed(e))):
        out.append(
            Violation(
                monomial=render_terms(variables, {exps: 1}),
                coefficient=terms[exps],
            )
        )
    return tuple(out)


def _verdict(violations) -> str:
    return "fail" if violations else "pass"


# -- criteria on the graph alone ---------------------------------------------


def check_negami_shape(g, p, *, graph_label=None, negami=None) -> CriterionReport:
    """Surviving monomials of N mod p must have y-exponent == 0 (mod p)."""
    _require_connected(g, "thm1.1")
    if negami is None:
        negami = negami_polynomial(g)
    reduced = reduce_mod_p(negami.polynomial, p)
    bad = {
        exps: coeff
        for exps, coeff in reduced.terms.items()
        if exps[2] % p != 0
    }
    return CriterionReport(
        criterion="thm1.1",
        graph=graph_label or _default_label(g),
        p=p,
        verdict=_verdict(bad),
        violations=_sorted_violations(bad, reduced.variables),
        notes=(f"q = {negami.edge_count}",),
    )


def check_tutte_coefficients(g, p, *, graph_label=None, tutte=None) -> CriterionReport:
    """Surviving a_{ij} of T(s,t) mod p must satisfy j - i == 1 - r (mod p)."""
    _require_connected(g, "cor1.2")
    if tutte is None:
        tutte = tutte_deletion_contraction(g).shifted
    r = g.vertex_count
    reduced = reduce_mod_p(tutte, p)
    bad = {
        exps: coeff
        for exps, coeff in reduced.terms.items()
        if (exps[1] - exps[0] - (1 - r)) % p != 0
    }
    return CriterionReport(
        criterion="cor1.2",
        graph=graph_label or _default_label(g),
        p=p,
        verdict=_verdict(bad),
        violations=_sorted_violations(bad, reduced.variables),
        notes=(f"r = {r}, required j - i == {(1 - r) % p} (mod {p})",),
    )


def check_selfdual_vertex_count(
    g, p, asserted_self_dual, *, graph_label=None, tutte=None
) -> CriterionReport:
    """For planar self-dual graphs, a free period of order p forces
    r == 1 (mod p).

    Self-duality cannot be verified from an abstract graph; the caller
    asserts it and this check verifies the computable necessary condition
    T(s,t) = T(t,s), refusing to report when it fails.
    """
    _require_connected(g, "cor1.3")
    if not asserted_self_dual:
        raise ValueError(
            "cor1.3 applies only to planar self-dual graphs; the caller must "
            "assert self-duality"
        )
    if tutte is None:
        tutte = tutte_deletion_contraction(g).shifted
    swapped = Polynomial(
        tutte.variables, {(j, i): c for (i, j), c in tutte.terms.items()}
    )
    if swapped != tutte:
        raise NotSelfDualError(
            "input not self-dual: T(s,t) != T(t,s), contradicting the "
            "asserted self-duality"
        )
    r = g.vertex_count
    verdict = "pass" if r % p == 1 % p else "fail"
    return CriterionReport(
        criterion="cor1.3",
        graph=graph_label or _default_label(g),
        p=p,
        verdict=verdict,
        violations=(),
        notes=(
            "self-duality asserted by caller; T(s,t) = T(t,s) verified",
            f"r = {r}, r mod {p} = {r % p}",
        ),
    )


# -- quotient-witness criteria ------------------------------------------------


def _difference_violations(lhs: ModPolynomial, rhs: ModPolynomial):
    diff = lhs - rhs
    return _sorted_violations(diff.terms, diff.variables)


def check_negami_quotient_congruence(g, h, p, *, graph_label=None) -> CriterionReport:
    """N_G == (N_Gbar)^p modulo (p, u^p - u), as folded canonical forms."""
    _require_connected(g, "thm3.1")
    validate_free_period(g, h, p)
    quotient = quotient_graph(g, h).quotient
    lhs = reduce_mod_p(negami_polynomial(g).polynomial, p).fold_variable("u")
    rhs = power_mod(
        reduce_mod_p(negami_polynomial(quotient).polynomial, p), p, ("u",)
    )
    violations = _difference_violations(lhs, rhs)
    return CriterionReport(
        criterion="thm3.1",
        graph=graph_label or _default_label(g),
        p=p,
        verdict=_verdict(violations),
        violations=violations,
        notes=(
            f"quotient has {quotient.vertex_count} vertices, "
            f"{quotient.edge_count} edges",
        ),
    )


def check_tutte_quotient_congruence(g, h, p, *, graph_label=None) -> CriterionReport:
    """T_G == (T_Gbar)^p modulo (p, s^p - s, t^p - t), compared after
    premultiplying each side by its specialization monomial:

        fold(s t^r T_G)  ==  fold((s t^rbar T_Gbar)^p)

    which is the u -> st, x -> 1, y -> t image of the thm3.1 congruence and
    the strongest valid form of the Tutte-side statement."""
    _require_connected(g, "cor3.2")
    validate_free_period(g, h, p)
    quotient = quotient_graph(g, h).quotient

    def premultiplied(graph):
        shifted = tutte_deletion_contraction(graph).shifted
        monomial = Polynomial.monomial(
            TUTTE_SHIFTED_VARS, (1, graph.vertex_count)
        )
        return reduce_mod_p(monomial * shifted, p)

    lhs = premultiplied(g).fold(TUTTE_SHIFTED_VARS)
    rhs = power_mod(premultiplied(quotient), p, TUTTE_SHIFTED_VARS)
    violations = _difference_violations(lhs, rhs)
    return CriterionReport(
        criterion="cor3.2",
        graph=graph_label or _default_label(g),
        p=p,
        verdict=_verdict(violations),
        violations=violations,
        notes=(
            "congruence checked in premultiplied form "
            "s*t^r*T(s,t) == (s*t^rbar*Tbar(s,t))^p",
            f"quotient has {quotient.vertex_count} vertices, "
            f"{quotient.edge_count} edges",
        ),
    )


def check_chromatic_vanishing(g, h, p, *, graph_label=None) -> CriterionReport:
    """P_G == (P_Gbar)^p modulo (p, λ^p - λ); a loop in the quotient zeroes
    the right side, so P_G must fold to zero."""
    _require_connected(g, "chromatic-remark")
    validate_free_period(g, h, p)
    quotient = quotient_graph(g, h).quotient
    lam = CHROMATIC_VARS[0]
    lhs = reduce_mod_p(chromatic_deletion_contraction(g), p).fold_variable(lam)
    has_loop = any(u == v for u, v in quotient.endpoints)
    if has_loop:
        rhs = reduce_mod_p(Polynomial.zero(CHROMATIC_VARS), p)
        note = "quotient has a loop, so the quotient chromatic polynomial is 0"
    else:
        rhs = power_mod(
            reduce_mod_p(chromatic_deletion_contraction(quotient), p), p, (lam,)
        )
        note = "quotient is loopless; compared against the p-th power"
    violations = _difference_violations(lhs, rhs)
    return CriterionReport(
        criterion="chromatic-remark",
        graph=graph_label or _default_label(g),
        p=p,
        verdict=_verdict(violations),
        violations=violations,
        notes=(note,),
    )


# -- batch driver --------------------------------------------------------------


def exclusion_report(
    g,
    primes,
    *,
    graph_label=None,
    use_oracle=False,
    oracle_limit=DEFAULT_VERTEX_LIMIT,
):
    """Run cor1.2 and thm1.1 for each prime; a prime is excluded when either
    fails.  With ``use_oracle`` (and the graph under the size limit) the
    exhaustive search cross-checks that no excluded prime actually has a free
    period; a contradiction raises SoundnessError."""
    _require_connected(g, "exclusion report")
    label = graph_label or _default_label(g)
    tutte = tutte_deletion_contraction(g).shifted
    negami = negami_polynomial(g)
    reports = []
    for p in sorted(set(primes)):
        per_prime = [
            check_tutte_coefficients(g, p, graph_label=label, tutte=tutte),
            check_negami_shape(g, p, graph_label=label, negami=negami),
        ]
        excluded = any(r.verdict == "fail" for r in per_prime)
        if use_oracle and g.vertex_count <= oracle_limit:
            witness = find_free_period(g, p, limit=oracle_limit)
            if witness is not None and excluded:
                raise SoundnessError(
                    f"free period of order {p} found although the criteria "
                    f"exclude it: {witness.to_dict()}"
                )
            oracle_note = (
                f"oracle: free period of order {p} "
                + ("found" if witness is not None else "not found")
            )
            per_prime = [
                CriterionReport(
                    criterion=r.criterion,
                    graph=r.graph,
                    p=r.p,
                    verdict=r.verdict,
                    violations=r.violations,
                    notes=r.notes + (oracle_note,),
                )
                for r in per_prime
            ]
        reports.extend(per_prime)
    reports.sort(key=lambda r: (r.graph, r.p, r.criterion))
    return reports


def excluded_primes(reports) -> list:
    """Primes for which at least one report in the batch failed."""
    out = set()
    for report in reports:
        if report.verdict == "fail":
            out.add(report.p)
    return sorted(out)
