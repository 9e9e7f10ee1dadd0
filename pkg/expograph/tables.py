#!/usr/bin/env python3
"""
Comparison Tables

Desk-scale reproduction of the comparison tables for exponential graphs,
iterated exponential graphs and the DCell network. Every cell carries its
formula value. Cells whose graph fits the budget are materialized and
measured and are labeled verified (or mismatch) instead of formula.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

import pandas as pd

from . import expressions, graph_core
from .connectivity import vertex_connectivity
from .errors import InvalidParameterError
from .expo import mag_affine, magnitude, omega_stats, psi_stats
from .expressions import Expr
from .generators import dcell_diam_bound, dcell_order
from .models import CheckResult, Magnitude
from .settings import HAM_DP_LIMIT, TABLE_FLOW_MAX_VERTICES, TABLE_MAX_VERTICES

logger = logging.getLogger(__name__)

ORDER = "Order"
MIN_DEGREE = "Minimum degree"
MAX_DEGREE = "Maximum degree"
DEGREE = "Degree"
DIAMETER = "Diameter"
CONNECTIVITY = "Connectivity"
HAMILTONICITY = "Hamiltonicity"
EDHC_CIST = "EDHCs & CISTs"

TITLES = {
    1: "K_n^B(d,k) and K_n^K(d,k)",
    2: "D_k,n vs K_n^B(2,k) vs K_n^K(2,k)",
    3: "K_n^(K_n^B(2,k)) and K_n^(K_n^K(2,k))",
    4: "D_k,n vs K_n^MQ_k vs Q_(n-1)^MQ_k",
    5: "D_k,n vs K_n^MQ_k vs Q_(n-1)^MQ_k for small n and k",
    6: "Omega(G,k) and Psi(G,k)",
    7: "D_k,n vs Omega_k vs Psi_k",
    8: "D_k,2 vs Omega_(k+1) vs Psi_(k+1)",
}

# tables laid out one row per instance rather than one column per network
ROW_TABLES = (5, 8)


def _value(x: Any) -> Any:
    return x.value if isinstance(x, Magnitude) else x


@dataclass
class TableCell:
    expected: Any
    measured: Any = None
    bound: bool = False

    @property
    def agreed(self) -> Optional[bool]:
        expected = _value(self.expected)
        if self.measured is None or expected is None:
            return None
        if self.bound:
            return isinstance(self.measured, int) and self.measured <= expected
        return self.measured == expected

    @property
    def status(self) -> str:
        if self.agreed is None:
            return "formula"
        return "verified" if self.agreed else "mismatch"

    def render(self) -> str:
        text = f"≤ {self.expected}" if self.bound else str(self.expected)
        if self.measured is not None and (self.bound or self.agreed is False):
            text = f"{text} ({self.measured})"
        return f"{text} [{self.status}]"

    def check(self, name: str) -> CheckResult:
        if self.bound:
            wanted = f"<= {self.expected}"
            return CheckResult(name, wanted, wanted if self.agreed else str(self.measured))
        expected = _value(self.expected)
        return CheckResult(name, str(self.expected) if expected is None else expected, self.measured)


Column = Dict[str, TableCell]


def _regular_degree(measured: Dict[str, int]) -> Any:
    """The common degree of a regular graph, else the (min, max) pair."""
    if not measured:
        return None
    low, high = measured["minDegree"], measured["maxDegree"]
    return low if low == high else (low, high)


class DefaultTableService:
    """Builds the comparison tables as DataFrames of rendered cells.

    ``frame.attrs["checks"]`` holds one CheckResult per measured cell.
    """

    def __init__(self, max_vertices: int = TABLE_MAX_VERTICES,
                 flow_max_vertices: int = TABLE_FLOW_MAX_VERTICES,
                 ham_dp_limit: int = HAM_DP_LIMIT):
        self.max_vertices = max_vertices
        self.flow_max_vertices = flow_max_vertices
        self.ham_dp_limit = ham_dp_limit
        self._measurements: Dict[str, Dict[str, int]] = {}

    # -- measurement ------------------------------------------------------

    def _measure(self, expr: str, kappa: bool = False) -> Dict[str, int]:
        """Measured order, degrees, diameter (and κ) or {} when over budget."""
        key = expressions.canonical(expr)
        size = expressions.order(key)
        if not size.is_exact or size.value > self.max_vertices:
            return {}
        measured = self._measurements.get(key)
        want_kappa = kappa and size.value <= self.flow_max_vertices
        if measured is not None and (not want_kappa or "kappa" in measured):
            return measured
        graph = expressions.build(key, max_vertices=self.max_vertices)
        if measured is None:
            measured = {
                "order": graph.n,
                "minDegree": graph.min_degree,
                "maxDegree": graph.max_degree,
                "diameter": graph_core.diameter(graph),
            }
        if want_kappa:
            measured["kappa"] = vertex_connectivity(graph, max_vertices=self.flow_max_vertices)
        self._measurements[key] = measured
        logger.debug("measured %s: %s", key, measured)
        return measured

    def _degree_formula(self, expr: Expr) -> Tuple[int, int]:
        """(δ, Δ) from δ(G^H) = δ(G) + δ(H) and Δ(G^H) = Δ(G) + Δ(H); leaves are built."""
        if expr.op == "EXP":
            a = self._degree_formula(expr.args[0])
            b = self._degree_formula(expr.args[1])
            return a[0] + b[0], a[1] + b[1]
        leaf = expressions.build(expr, max_vertices=self.max_vertices)
        return leaf.min_degree, leaf.max_degree

    def _expo_column(self, expr: str, diameter: Any, bound: bool, regular: bool = False) -> Column:
        parsed = expressions.parse_expression(expr)
        m = self._measure(expr, kappa=True)
        low, high = self._degree_formula(parsed)
        column: Column = {ORDER: TableCell(expressions.order(parsed), m.get("order"))}
        if regular:
            column[DEGREE] = TableCell(low, _regular_degree(m))
        else:
            column[MIN_DEGREE] = TableCell(low, m.get("minDegree"))
            column[MAX_DEGREE] = TableCell(high, m.get("maxDegree"))
        column[DIAMETER] = TableCell(diameter, m.get("diameter"), bound=bound)
        column[CONNECTIVITY] = TableCell(low, m.get("kappa"))
        return column

    def _family_column(self, expr: str, diameter: Any, bound: bool) -> Column:
        stats = expressions.family_stats(expr, max_vertices=self.max_vertices)
        m = self._measure(expr, kappa=True)
        return {
            ORDER: TableCell(stats.order, m.get("order")),
            DEGREE: TableCell(stats.min_degree, _regular_degree(m)),
            DIAMETER: TableCell(diameter, m.get("diameter"), bound=bound),
            CONNECTIVITY: TableCell(stats.connectivity, m.get("kappa")),
        }

    @staticmethod
    def _dcell_column(k: int, n: int, regular: bool = True) -> Column:
        degree = n + k - 1
        column: Column = {ORDER: TableCell(magnitude(dcell_order(k, n)))}
        if regular:
            column[DEGREE] = TableCell(degree)
        else:
            column[MIN_DEGREE] = TableCell(degree)
            column[MAX_DEGREE] = TableCell(degree)
        column[DIAMETER] = TableCell(dcell_diam_bound(k), bound=True)
        column[CONNECTIVITY] = TableCell(degree)
        return column

    # -- tables -------------------------------------------------------------

    def _table1(self, n: int = 3, d: int = 2, k: int = 2) -> Dict[str, Column]:
        q_b = d ** k
        q_k = d ** k + d ** (k - 1)
        return {
            f"K{n}^B({d},{k})": self._expo_column(f"EXP(K{n},B({d},{k}))", 2 * q_b + k - 1, True),
            f"K{n}^K({d},{k})": self._expo_column(f"EXP(K{n},KZ({d},{k}))", 2 * q_k + k - 1, True),
        }

    def _table2(self, n: int = 2, k: int = 2) -> Dict[str, Column]:
        dcell = self._dcell_column(k, n, regular=False)
        debruijn = self._expo_column(f"EXP(K{n},B(2,{k}))", 2 ** (k + 1) + k - 1, True)
        kautz = self._expo_column(f"EXP(K{n},KZ(2,{k}))", 3 * 2 ** k + k - 1, True)
        dcell[HAMILTONICITY] = TableCell("Yes")
        debruijn[HAMILTONICITY] = TableCell("-")
        kautz[HAMILTONICITY] = TableCell("-")
        return {f"D({k},{n})": dcell, f"K{n}^B(2,{k})": debruijn, f"K{n}^K(2,{k})": kautz}

    def _table3(self, n: int = 2, k: int = 1) -> Dict[str, Column]:
        columns = {}
        for label, inner in (("B", f"B(2,{k})"), ("K", f"KZ(2,{k})")):
            inner_expr = f"EXP(K{n},{inner})"
            q = expressions.order(inner_expr)
            columns[f"K{n}^(K{n}^{label}(2,{k}))"] = self._expo_column(
                f"EXP(K{n},{inner_expr})", mag_affine(q, 3, -2), True)
        return columns

    def _table4(self, n: int = 4, k: int = 2) -> Dict[str, Column]:
        if n % 2:
            raise InvalidParameterError("table 4 compares even n only")
        columns = {
            f"D({k},{n})": self._dcell_column(k, n),
            f"K{n}^MQ{k}": self._expo_column(f"EXP(K{n},MQ{k})", 2 ** (k + 1), False, regular=True),
            f"Q{n - 1}^MQ{k}": self._expo_column(f"EXP(Q{n - 1},MQ{k})", n * 2 ** k, False, regular=True),
        }
        for column in columns.values():
            column[HAMILTONICITY] = TableCell("Yes")
        return columns

    def _table5(self, n_max: int = 4, k_max: int = 4) -> Dict[str, Column]:
        rows: Dict[str, Column] = {}
        for k in range(1, k_max + 1):
            for n in range(2, n_max + 1):
                kexpr, qexpr = f"EXP(K{n},MQ{k})", f"EXP(Q{n - 1},MQ{k})"
                km, qm = self._measure(kexpr), self._measure(qexpr)
                rows[f"n={n} k={k}"] = {
                    "Deg.": TableCell(n + k - 1, _regular_degree(km)),
                    "D order": TableCell(magnitude(dcell_order(k, n))),
                    "D diam.": TableCell(dcell_diam_bound(k), bound=True),
                    "K order": TableCell(expressions.order(kexpr), km.get("order")),
                    "K diam.": TableCell(2 ** (k + 1), km.get("diameter")),
                    "Q order": TableCell(expressions.order(qexpr), qm.get("order")),
                    "Q diam.": TableCell(n * 2 ** k, qm.get("diameter")),
                }
        return rows

    def _table6(self, base: str = "K2", k: int = 3) -> Dict[str, Column]:
        G = expressions.build(base, max_vertices=self.max_vertices)
        name = expressions.canonical(base)
        columns: Dict[str, Column] = {}
        for family, stats in (("OMEGA", omega_stats(G, k, ham_dp_limit=self.ham_dp_limit)),
                              ("PSI", psi_stats(G, k, ham_dp_limit=self.ham_dp_limit,
                                                max_vertices=self.max_vertices))):
            m = self._measure(f"{family}({name},{k})", kappa=True)
            exact = stats.diameter is not None
            columns[family] = {
                ORDER: TableCell(stats.order, m.get("order")),
                MIN_DEGREE: TableCell(stats.min_degree, m.get("minDegree")),
                MAX_DEGREE: TableCell(stats.max_degree, m.get("maxDegree")),
                DIAMETER: TableCell(stats.diameter if exact else stats.diameter_upper,
                                    m.get("diameter"), bound=not exact),
                CONNECTIVITY: TableCell(stats.connectivity, m.get("kappa")),
            }
        even_ham_connected = (G.n % 2 == 0 and G.n <= self.ham_dp_limit
                              and graph_core.is_hamiltonian_connected(G, limit=self.ham_dp_limit))
        complete_even = G.is_complete() and G.n % 2 == 0 and G.n >= 4
        columns["OMEGA"][HAMILTONICITY] = TableCell("Yes" if even_ham_connected else "-")
        columns["OMEGA"][EDHC_CIST] = TableCell("Yes" if complete_even else "-")
        columns["PSI"][HAMILTONICITY] = TableCell("-")
        columns["PSI"][EDHC_CIST] = TableCell("-")
        return {f"Omega({name},{k})": columns["OMEGA"], f"Psi({name},{k})": columns["PSI"]}

    def _table7(self, n: int = 2, k: int = 3) -> Dict[str, Column]:
        if k < 2:
            raise InvalidParameterError("table 7 needs k >= 2")
        psi_upper = expressions.family_stats(f"PSI({k})", max_vertices=self.max_vertices).diameter_upper
        columns = {
            f"D({k},{n})": self._dcell_column(k, n),
            f"Omega_{k}": self._family_column(f"OMEGA({k})", 3 * 2 ** (k - 1) - 2, bound=False),
            f"Psi_{k}": self._family_column(f"PSI({k})", psi_upper, bound=True),
        }
        for name, ham in zip(columns, ("Yes", "Yes", "-")):
            columns[name][HAMILTONICITY] = TableCell(ham)
        return columns

    def _table8(self, k_max: int = 5) -> Dict[str, Column]:
        rows: Dict[str, Column] = {}
        for k in range(1, k_max + 1):
            psi_upper = expressions.family_stats(f"PSI({k + 1})", max_vertices=self.max_vertices).diameter_upper
            omega = self._family_column(f"OMEGA({k + 1})", 3 * 2 ** k - 2, bound=False)
            psi = self._family_column(f"PSI({k + 1})", psi_upper, bound=True)
            rows[f"k={k}"] = {
                "Deg.": TableCell(k + 1, omega[DEGREE].measured),
                "D order": TableCell(magnitude(dcell_order(k, 2))),
                "D diam.": TableCell(dcell_diam_bound(k), bound=True),
                "Omega order": omega[ORDER],
                "Omega diam.": omega[DIAMETER],
                "Psi order": psi[ORDER],
                "Psi diam.": psi[DIAMETER],
            }
        return rows

    # -- public ---------------------------------------------------------------

    def build_table(self, which: int, **params: Any) -> pd.DataFrame:
        """Build table ``which`` (1..8) with the given size parameters."""
        builder = getattr(self, f"_table{which}", None)
        if builder is None:
            raise InvalidParameterError(f"no table {which}; choose 1..8")
        logger.info("building table %d (%s), budget %d vertices", which, TITLES[which], self.max_vertices)
        try:
            layout = builder(**params)
        except TypeError as e:
            raise InvalidParameterError(f"table {which}: {e}") from e

        checks: List[CheckResult] = []
        for outer, cells in layout.items():
            for inner, cell in cells.items():
                if cell.agreed is not None:
                    checks.append(cell.check(f"table{which}/{outer}/{inner}"))
        rendered = {outer: {inner: cell.render() for inner, cell in cells.items()}
                    for outer, cells in layout.items()}
        frame = pd.DataFrame(rendered)
        if which in ROW_TABLES:
            frame = frame.T
        frame = frame.fillna("")
        frame.attrs["title"] = f"Table {which}: {TITLES[which]}"
        frame.attrs["checks"] = checks
        mismatched = self.mismatches(frame)
        if mismatched:
            logger.warning("table %d: %d cell(s) disagree with their formula", which, len(mismatched))
        return frame

    @staticmethod
    def mismatches(frame: pd.DataFrame) -> List[CheckResult]:
        return [c for c in frame.attrs.get("checks", []) if c.agreed is False]

    def export_csv(self, frame: pd.DataFrame, filepath: str) -> None:
        frame.to_csv(filepath)

    @staticmethod
    def render(frame: pd.DataFrame) -> str:
        return f"{frame.attrs.get('title', '')}\n{frame.to_string()}"
