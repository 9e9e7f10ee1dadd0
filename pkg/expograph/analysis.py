#!/usr/bin/env python3
"""
Default Analysis Service

Formula values for a graph expression, measured values where the graph fits
the budget, and the checks comparing them.
"""

import logging
import time
from typing import Any, Dict, List, Optional, Tuple

from . import expressions, graph_core
from .connectivity import connectivity_report, is_super, super_edge_predicate
from .errors import BudgetExceededError, ExpoGraphError, InvalidParameterError
from .expo import expo_formulas, formula_checks, magnitude
from .graph_core import Graph
from .hamiltonicity import canonical_hamiltonian_cycle
from .metrics import corollary_cases, expo_diameter
from .models import AnalysisReport, CheckResult, Magnitude
from .settings import (
    HAM_BRUTE_FORCE_LIMIT,
    HAM_DP_LIMIT,
    KAPPA_MAX_VERTICES,
    LAMBDA_PRIME_MAX_VERTICES,
    MAX_VERTICES,
)

logger = logging.getLogger(__name__)

DIAMETER_MODES = ("formula", "bfs", "both")


def _value(x: Any) -> Any:
    return x.value if isinstance(x, Magnitude) else x


class DefaultAnalysisService:
    """Default implementation of AnalysisService."""

    def __init__(self,
                 max_vertices: int = MAX_VERTICES,
                 kappa_max_vertices: int = KAPPA_MAX_VERTICES,
                 lambda_prime_max_vertices: int = LAMBDA_PRIME_MAX_VERTICES,
                 ham_dp_limit: int = HAM_DP_LIMIT,
                 ham_brute_force_limit: int = HAM_BRUTE_FORCE_LIMIT):
        self.max_vertices = max_vertices
        self.kappa_max_vertices = kappa_max_vertices
        self.lambda_prime_max_vertices = lambda_prime_max_vertices
        self.ham_dp_limit = ham_dp_limit
        self.ham_brute_force_limit = ham_brute_force_limit

    # -- formulas ---------------------------------------------------------

    def _family_formulas(self, expr: expressions.Expr, report: AnalysisReport) -> Optional[int]:
        stats = expressions.family_stats(expr, max_vertices=self.max_vertices)
        report.size = stats.size
        report.min_degree, report.max_degree = stats.min_degree, stats.max_degree
        if stats.diameter is not None:
            report.diameter["formula"] = stats.diameter
        else:
            report.diameter["lower"] = stats.diameter_lower
            report.diameter["upper"] = stats.diameter_upper
        return stats.connectivity

    def _expo_formulas(self, G: Graph, H: Graph, report: AnalysisReport) -> int:
        report.min_degree = G.min_degree + H.min_degree
        report.max_degree = G.max_degree + H.max_degree
        if report.order.is_exact:
            report.size = magnitude(expo_formulas(G, H).size)
        if H.n <= self.ham_dp_limit:
            report.diameter["formula"] = expo_diameter(G, H, mode="formula", limit=self.ham_dp_limit)
        else:
            bound = corollary_cases(G, H, limit=self.ham_brute_force_limit)
            report.diameter["lower"], report.diameter["upper"] = bound.lower, bound.upper
            if bound.exact is not None:
                report.diameter["formula"] = bound.exact
        return report.min_degree

    def _factors(self, expr: expressions.Expr) -> Optional[Tuple[Graph, Graph]]:
        if not expressions.is_exponential(expr):
            return None
        try:
            return expressions.factors(expr, max_vertices=self.max_vertices)
        except BudgetExceededError:
            logger.warning("factors of %s are over budget; formulas from family stats only", expr)
            return None

    # -- measurement ------------------------------------------------------

    def _measured_checks(self, expr: expressions.Expr, graph: Graph,
                         pair: Optional[Tuple[Graph, Graph]], report: AnalysisReport) -> None:
        if pair is not None and expr.op == "EXP":
            report.checks.extend(formula_checks(graph, *pair))
            return
        if expr.op in ("OMEGA", "PSI"):
            report.checks.append(CheckResult("order", _value(report.order), graph.n))
            if report.size is not None:
                report.checks.append(CheckResult("size", _value(report.size), graph.m))
            report.checks.extend([
                CheckResult("minDegree", report.min_degree, graph.min_degree),
                CheckResult("maxDegree", report.max_degree, graph.max_degree),
            ])
            return
        report.size = magnitude(graph.m)
        report.min_degree, report.max_degree = graph.min_degree, graph.max_degree

    def _diameter_checks(self, graph: Optional[Graph], diam: str, report: AnalysisReport) -> None:
        if diam == "formula":
            return
        if graph is None:
            report.notes.append("no bfs: graph not materialized, formula values only")
            logger.warning("%s not materialized; skipping BFS diameter", report.spec)
            return
        started = time.perf_counter()
        measured = graph_core.diameter(graph)
        report.timing["bfs"] = time.perf_counter() - started
        report.diameter["bfs"] = measured
        if "formula" in report.diameter:
            report.checks.append(CheckResult("diameter", _value(report.diameter["formula"]), measured))
        elif "lower" in report.diameter:
            low, high = _value(report.diameter["lower"]), _value(report.diameter["upper"])
            window = f"[{low}, {high}]"
            report.checks.append(CheckResult("diameterBounds", window,
                                             window if low <= measured <= high else str(measured)))

    def _connectivity(self, graph: Optional[Graph], expected_kappa: Optional[int],
                      pair: Optional[Tuple[Graph, Graph]], superlambda: bool,
                      report: AnalysisReport) -> None:
        if graph is None:
            raise BudgetExceededError(
                f"{report.spec} has {report.order} vertices; connectivity needs a materialized graph "
                f"(budget {self.max_vertices})")
        started = time.perf_counter()
        result = connectivity_report(graph, super_lambda=superlambda,
                                     kappa_max_vertices=self.kappa_max_vertices,
                                     lambda_prime_max_vertices=self.lambda_prime_max_vertices)
        report.timing["connectivity"] = time.perf_counter() - started
        report.connectivity = result
        report.checks.append(CheckResult("kappa<=lambda<=delta", True,
                                         result.kappa <= result.lam <= result.delta))
        if expected_kappa is not None:
            report.checks.append(CheckResult("kappa", expected_kappa, result.kappa))
        if superlambda and pair is not None and pair[0].n >= 2 and pair[1].n >= 2:
            report.checks.append(CheckResult("superLambda", super_edge_predicate(*pair),
                                             is_super(result.super_lambda)))

    def _hamiltonicity(self, pair: Tuple[Graph, Graph]) -> Dict[str, Any]:
        G, H = pair
        info: Dict[str, Any] = {}
        if H.n <= self.ham_brute_force_limit:
            info["exponentCase"] = corollary_cases(G, H, limit=self.ham_brute_force_limit).case
        try:
            canonical_hamiltonian_cycle(G, limit=self.ham_brute_force_limit)
            base_hamiltonian = True
        except ExpoGraphError:
            base_hamiltonian = False
        info["baseHamiltonian"] = base_hamiltonian
        constructions: List[str] = []
        if base_hamiltonian:
            if H.n == 2 and H.m == 1:
                constructions.append("gk2")
            if G.n % 2 == 0 and G.n >= 4:
                if info.get("exponentCase") == "hamiltonian-connected" or H.is_complete():
                    constructions.append("lift")
                if H.is_complete() and H.n >= 4:
                    constructions.extend(["edhc", "cist"])
        info["constructions"] = constructions
        return info

    # -- public -------------------------------------------------------------

    def analyze(self, expr: str, kappa: bool = False, lam: bool = False,
                superlambda: bool = False, diam: str = "formula") -> AnalysisReport:
        """Analyze an expression; the report's checks compare formula and measurement."""
        if diam not in DIAMETER_MODES:
            raise InvalidParameterError(f"diameter mode must be one of {DIAMETER_MODES}, got {diam!r}")
        started = time.perf_counter()
        parsed = expressions.parse_expression(expr)
        report = AnalysisReport(spec=str(parsed), order=expressions.order(parsed))

        pair = self._factors(parsed)
        expected_kappa: Optional[int] = None
        if parsed.op in ("OMEGA", "PSI"):
            expected_kappa = self._family_formulas(parsed, report)
        elif pair is not None:
            expected_kappa = self._expo_formulas(*pair, report)
        report.timing["formulas"] = time.perf_counter() - started

        graph: Optional[Graph] = None
        if report.order.is_exact and report.order.value <= self.max_vertices:
            built = time.perf_counter()
            graph = expressions.build(parsed, max_vertices=self.max_vertices)
            report.timing["materialize"] = time.perf_counter() - built
            report.materialized = True
            logger.info("materialized %s: %d vertices, %d edges", report.spec, graph.n, graph.m)
            self._measured_checks(parsed, graph, pair, report)
        else:
            report.notes.append(f"stats-only: {report.order} vertices exceeds budget {self.max_vertices}")
            logger.warning("%s has %s vertices; stats-only report", report.spec, report.order)

        self._diameter_checks(graph, diam, report)
        if kappa or lam or superlambda:
            self._connectivity(graph, expected_kappa, pair, superlambda, report)
        if pair is not None:
            report.hamiltonicity = self._hamiltonicity(pair)

        report.timing["total"] = time.perf_counter() - started
        mismatched = report.mismatches
        if mismatched:
            logger.warning("%s: %d check(s) disagree: %s", report.spec, len(mismatched),
                           ", ".join(c.name for c in mismatched))
        return report
