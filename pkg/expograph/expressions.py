#!/usr/bin/env python3
"""
Graph Expressions

Parser and evaluator for the expression language the CLI accepts:

    K<n> C<n> P<n> Q<k> MQ<k> B(d,k) KZ(d,k)
    OMEGA(k) PSI(k) OMEGA(A,k) PSI(A,k)
    EXP(A,B) CPOW(A,n) CPROD(A,B) POW(A,n)

Expressions nest freely, e.g. ``EXP(K4,EXP(K2,K2))``.
"""

import logging
import re
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from . import expo, graph_core
from .errors import BudgetExceededError, ExpressionParseError, InvalidParameterError
from .generators import build_family, complete
from .graph_core import Graph
from .models import FamilySpec, Magnitude
from .settings import MAX_VERTICES

logger = logging.getLogger(__name__)

ATOMS = {"K": "complete", "C": "cycle", "P": "path", "Q": "hypercube", "MQ": "mobius"}
INT_CALLS = {"B": "debruijn", "KZ": "kautz"}
# operator -> argument shape: "g" graph expression, "i" integer
SIGNATURES = {
    "EXP": "gg",
    "CPROD": "gg",
    "CPOW": "gi",
    "POW": "gi",
}

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z]+)(?P<suffix>\d+)?|(?P<int>\d+)|(?P<punct>[(),]))")

Arg = Union[int, "Expr"]


@dataclass(frozen=True)
class Expr:
    op: str
    args: Tuple[Arg, ...] = ()

    def __str__(self) -> str:
        if self.op in ATOMS:
            return f"{self.op}{self.args[0]}"
        return f"{self.op}({','.join(str(a) for a in self.args)})"

    @property
    def family_spec(self) -> Optional[FamilySpec]:
        """FamilySpec for leaves that a generator builds directly."""
        if self.op in ATOMS:
            return FamilySpec(ATOMS[self.op], self.args)
        if self.op in INT_CALLS:
            return FamilySpec(INT_CALLS[self.op], self.args)
        if self.op in ("OMEGA", "PSI") and len(self.args) == 1:
            return FamilySpec("expo-cube" if self.op == "OMEGA" else "hyper-expo-cube", self.args)
        return None


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: List[Tuple[str, str, int]] = []
        pos = 0
        stripped = text.rstrip()
        while pos < len(stripped):
            match = _TOKEN.match(stripped, pos)
            if not match or match.end() == pos:
                raise ExpressionParseError(f"unexpected character at {pos} in {text!r}")
            if match.group("name"):
                self.tokens.append(("name", match.group("name").upper(), match.start("name")))
                if match.group("suffix"):
                    self.tokens.append(("suffix", match.group("suffix"), match.start("suffix")))
            elif match.group("int"):
                self.tokens.append(("int", match.group("int"), match.start("int")))
            else:
                self.tokens.append(("punct", match.group("punct"), match.start("punct")))
            pos = match.end()
        self.index = 0

    def _peek(self) -> Optional[Tuple[str, str, int]]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def _take(self, kind: str, value: Optional[str] = None) -> Tuple[str, str, int]:
        token = self._peek()
        if token is None or token[0] != kind or (value is not None and token[1] != value):
            where = f"position {token[2]}" if token else "end of input"
            expected = value or kind
            raise ExpressionParseError(f"expected {expected!r} at {where} in {self.text!r}")
        self.index += 1
        return token

    def _int(self) -> int:
        return int(self._take("int")[1])

    def parse(self) -> Expr:
        if not self.tokens:
            raise ExpressionParseError("empty expression")
        expr = self._expr()
        if self._peek() is not None:
            raise ExpressionParseError(f"trailing input at position {self._peek()[2]} in {self.text!r}")
        return expr

    def _expr(self) -> Expr:
        _, name, where = self._take("name")
        nxt = self._peek()
        if name in ATOMS:
            if nxt is None or nxt[0] != "suffix":
                raise ExpressionParseError(f"{name} needs a size, e.g. {name}4")
            return Expr(name, (int(self._take("suffix")[1]),))
        if nxt is not None and nxt[0] == "suffix":
            raise ExpressionParseError(f"unknown graph {name}{nxt[1]!r} at position {where}")
        self._take("punct", "(")
        if name in INT_CALLS:
            args: Tuple[Arg, ...] = (self._int(), self._comma_int())
        elif name in ("OMEGA", "PSI"):
            if self._peek() is not None and self._peek()[0] == "name":
                args = (self._expr(), self._comma_int())
            else:
                args = (self._int(),)
        elif name in SIGNATURES:
            first = self._expr()
            self._take("punct", ",")
            second: Arg = self._expr() if SIGNATURES[name][1] == "g" else self._int()
            args = (first, second)
        else:
            raise ExpressionParseError(f"unknown operator {name!r} at position {where}")
        self._take("punct", ")")
        return Expr(name, args)

    def _comma_int(self) -> int:
        self._take("punct", ",")
        return self._int()


def parse_expression(text: str) -> Expr:
    return _Parser(text).parse()


def _as_expr(expr: Union[str, Expr]) -> Expr:
    return parse_expression(expr) if isinstance(expr, str) else expr


def canonical(expr: Union[str, Expr]) -> str:
    return str(_as_expr(expr))


# ----------------------------------------------------------------------
# Evaluation
# ----------------------------------------------------------------------

def order(expr: Union[str, Expr]) -> Magnitude:
    """|V| of the expression without building it."""
    expr = _as_expr(expr)
    op, args = expr.op, expr.args
    if op in ("K", "C", "P"):
        return expo.magnitude(args[0])
    if op in ("Q", "MQ"):
        return expo.magnitude(2 ** args[0])
    if op == "B":
        return expo.magnitude(args[0] ** args[1])
    if op == "KZ":
        return expo.magnitude((args[0] + 1) * args[0] ** (args[1] - 1))
    if op in ("OMEGA", "PSI"):
        return family_stats(expr).order
    if op == "EXP":
        return expo.expo_order(order(args[0]), order(args[1]))
    if op == "CPROD":
        return expo.mag_mul(order(args[0]), order(args[1]))
    if op == "CPOW":
        return expo.mag_pow(order(args[0]), args[1])
    if op == "POW":
        return order(args[0])
    raise InvalidParameterError(f"no order rule for {op}")


def family_stats(expr: Union[str, Expr], max_vertices: int = MAX_VERTICES) -> expo.IteratedStats:
    """Iterated-family statistics for OMEGA/PSI expressions."""
    expr = _as_expr(expr)
    if expr.op not in ("OMEGA", "PSI"):
        raise InvalidParameterError(f"{expr} is not an OMEGA or PSI expression")
    if len(expr.args) == 1:
        base, k = complete(2), expr.args[0]
    else:
        base, k = build(expr.args[0], max_vertices=max_vertices), expr.args[1]
    if expr.op == "OMEGA":
        return expo.omega_stats(base, k)
    return expo.psi_stats(base, k, max_vertices=max_vertices)


def _check_budget(expr: Expr, max_vertices: int) -> None:
    size = order(expr)
    if size.value is None or size.value > max_vertices:
        raise BudgetExceededError(f"{expr} has {size.text} vertices (budget {max_vertices})")


def build(expr: Union[str, Expr], max_vertices: int = MAX_VERTICES) -> Graph:
    """Materialize the expression; named by its canonical string."""
    expr = _as_expr(expr)
    _check_budget(expr, max_vertices)
    op, args = expr.op, expr.args
    spec = expr.family_spec
    if spec is not None:
        graph = build_family(spec, max_vertices=max_vertices)
    elif op in ("OMEGA", "PSI"):
        base = build(args[0], max_vertices=max_vertices)
        builder = expo.omega if op == "OMEGA" else expo.psi
        graph = builder(base, args[1], max_vertices=max_vertices).graph
    elif op == "EXP":
        graph, _ = expo.exponential(build(args[0], max_vertices), build(args[1], max_vertices),
                                    max_vertices=max_vertices)
    elif op == "CPROD":
        graph = expo.cartesian_product(build(args[0], max_vertices), build(args[1], max_vertices),
                                       max_vertices=max_vertices)
    elif op == "CPOW":
        graph = expo.cartesian_power(build(args[0], max_vertices), args[1], max_vertices=max_vertices)
    elif op == "POW":
        graph = graph_core.power_graph(build(args[0], max_vertices), args[1])
    else:
        raise InvalidParameterError(f"cannot build {op}")
    graph.name = str(expr)
    return graph


def factors(expr: Union[str, Expr], max_vertices: int = MAX_VERTICES) -> Tuple[Graph, Graph]:
    """(G, H) with expr = G^H; OMEGA(k) and PSI(k) unfold one level."""
    expr = _as_expr(expr)
    op, args = expr.op, expr.args
    if op == "EXP":
        return build(args[0], max_vertices), build(args[1], max_vertices)
    if op in ("OMEGA", "PSI") and expr.args[-1] >= 2:
        base = Expr("K", (2,)) if len(args) == 1 else args[0]
        smaller = Expr(op, args[:-1] + (args[-1] - 1,))
        if op == "OMEGA":
            return build(smaller, max_vertices), build(base, max_vertices)
        return build(base, max_vertices), build(smaller, max_vertices)
    raise InvalidParameterError(f"{expr} is not an exponential expression")


def space(expr: Union[str, Expr], max_vertices: int = MAX_VERTICES) -> expo.ExpoSpace:
    """Implicit ExpoSpace for an exponential expression; only the factors are built."""
    G, H = factors(expr, max_vertices=max_vertices)
    result = expo.ExpoSpace(G, H)
    result.name = canonical(expr)
    return result


def is_exponential(expr: Union[str, Expr]) -> bool:
    expr = _as_expr(expr)
    return expr.op == "EXP" or (expr.op in ("OMEGA", "PSI") and expr.args[-1] >= 2)
