#!/usr/bin/env python3
"""
Connectivity

Exact vertex and edge connectivity by unit-capacity max-flow, restricted
edge connectivity and the super edge-connectivity verdict, the two-clause
predicate for exponential graphs and its counterexample cuts.
"""

import itertools
import logging
from typing import List, Optional, Set, Tuple

import networkx as nx
import numpy as np
from networkx.algorithms.connectivity import (
    build_auxiliary_edge_connectivity,
    build_auxiliary_node_connectivity,
    local_edge_connectivity,
    local_node_connectivity,
)
from networkx.algorithms.flow import build_residual_network, edmonds_karp

from . import graph_core
from .errors import (
    BudgetExceededError,
    DisconnectedGraphError,
    InvalidParameterError,
    PreconditionError,
)
from .expo import ExpoSpace, exponential
from .graph_core import Graph
from .models import ConnectivityReport, CutWitness, SuperLambdaVerdict
from .settings import KAPPA_MAX_VERTICES, LAMBDA_PRIME_MAX_VERTICES, MAX_VERTICES

logger = logging.getLogger(__name__)

Terminals = Tuple[Tuple[int, int], Tuple[int, int]]


def _require_flow_budget(G: Graph, limit: int, what: str) -> None:
    if G.n < 2:
        raise InvalidParameterError(f"{what} needs at least two vertices")
    if G.n > limit:
        raise BudgetExceededError(f"{what} on {G.n} vertices exceeds the flow budget of {limit}")


def vertex_connectivity(G: Graph, max_vertices: int = KAPPA_MAX_VERTICES) -> int:
    """κ(G) over the split-vertex network.

    Pairs: a minimum-degree vertex v against each of its non-neighbors, then
    every non-adjacent pair inside N(v).
    """
    _require_flow_budget(G, max_vertices, "vertex connectivity")
    if not graph_core.is_connected(G):
        return 0
    if G.is_complete():
        return G.n - 1
    nx_graph = G.to_networkx()
    aux = build_auxiliary_node_connectivity(nx_graph)
    residual = build_residual_network(aux, "capacity")
    kwargs = dict(flow_func=edmonds_karp, auxiliary=aux, residual=residual)

    v = int(np.argmin(G.degrees))
    best = G.min_degree
    neighbors = G.neighbors(v).tolist()
    others = np.setdiff1d(np.arange(G.n), np.append(G.neighbors(v), v)).tolist()
    logger.debug("kappa sweep on %d vertices: %d non-neighbor pairs", G.n, len(others))
    for w in others:
        best = min(best, local_node_connectivity(nx_graph, v, w, cutoff=best, **kwargs))
    for x, y in itertools.combinations(neighbors, 2):
        if not G.has_edge(x, y):
            best = min(best, local_node_connectivity(nx_graph, x, y, cutoff=best, **kwargs))
    return int(best)


def edge_connectivity(G: Graph, max_vertices: int = KAPPA_MAX_VERTICES) -> int:
    """λ(G): vertex 0 against every other vertex."""
    _require_flow_budget(G, max_vertices, "edge connectivity")
    if not graph_core.is_connected(G):
        return 0
    nx_graph = G.to_networkx()
    aux = build_auxiliary_edge_connectivity(nx_graph)
    residual = build_residual_network(aux, "capacity")
    best = G.min_degree
    for w in range(1, G.n):
        best = min(best, local_edge_connectivity(
            nx_graph, 0, w, flow_func=edmonds_karp, auxiliary=aux, residual=residual, cutoff=best))
    return int(best)


# ----------------------------------------------------------------------
# Restricted edge connectivity
# ----------------------------------------------------------------------

def _unit_digraph(G: Graph) -> nx.DiGraph:
    D = nx.DiGraph()
    D.add_nodes_from(range(G.n))
    for u, v in G.edges().tolist():
        D.add_edge(u, v, capacity=1)
        D.add_edge(v, u, capacity=1)
    return D


def restricted_schedule(G: Graph) -> List[Terminals]:
    """Terminal pairs whose minimum cuts cover every restricted edge cut.

    Fix e0 = xy. A cut keeping e0 on one side separates it from some edge
    disjoint from it; a cut through e0 separates {x, a} from {y, b} with a,
    b further neighbors of x and y on their own sides.
    """
    edges = G.edges().tolist()
    if not edges:
        return []
    x, y = edges[0]
    schedule: List[Terminals] = [((x, y), (a, b)) for a, b in edges
                                 if a not in (x, y) and b not in (x, y)]
    for a in G.neighbors(x).tolist():
        if a == y:
            continue
        for b in G.neighbors(y).tolist():
            if b != x and b != a:
                schedule.append(((x, a), (y, b)))
    return schedule


def _terminal_flow(D: nx.DiGraph, n: int, pair: Terminals, cutoff: Optional[int]) -> int:
    source, sink = n, n + 1
    D.add_edges_from((source, a) for a in pair[0])
    D.add_edges_from((b, sink) for b in pair[1])
    try:
        return int(nx.maximum_flow_value(D, source, sink, flow_func=edmonds_karp, cutoff=cutoff))
    finally:
        D.remove_nodes_from((source, sink))


def _restricted_witness(G: Graph, D: nx.DiGraph, pair: Terminals) -> CutWitness:
    """Minimum cut for one terminal pair, trimmed to a cut with both sides
    connected: the component of the sink side that holds the sink terminals."""
    source, sink = G.n, G.n + 1
    D.add_edges_from((source, a) for a in pair[0])
    D.add_edges_from((b, sink) for b in pair[1])
    try:
        _, (reachable, _) = nx.minimum_cut(D, source, sink, flow_func=edmonds_karp)
    finally:
        D.remove_nodes_from((source, sink))
    far = sorted(set(range(G.n)) - set(reachable))
    sub = graph_core.induced_subgraph(G, far)
    component: Set[int] = set()
    for members in graph_core.connected_components(sub):
        originals = {sub.labels[i] for i in members}
        if pair[1][0] in originals:
            component = originals
            break
    return CutWitness(kind="edge", elements=edges_between(G, component),
                      component_sizes=[G.n - len(component), len(component)], label="min-cut")


def restricted_edge_connectivity(G: Graph, max_vertices: int = LAMBDA_PRIME_MAX_VERTICES,
                                 stop_at: Optional[int] = None) -> Tuple[Optional[int], Optional[Terminals]]:
    """λ′(G) and the first terminal pair attaining it; (None, None) when no
    two edges are vertex-disjoint. The sweep stops early once ``stop_at`` is
    reached."""
    _require_flow_budget(G, max_vertices, "restricted edge connectivity")
    if not graph_core.is_connected(G):
        raise DisconnectedGraphError("restricted edge connectivity needs a connected graph")
    schedule = restricted_schedule(G)
    if not schedule:
        return None, None
    logger.debug("lambda' sweep on %d vertices: %d terminal pairs", G.n, len(schedule))
    D = _unit_digraph(G)
    best: Optional[int] = None
    best_pair: Optional[Terminals] = None
    for pair in schedule:
        value = _terminal_flow(D, G.n, pair, best)
        if best is None or value < best:
            best, best_pair = value, pair
            if stop_at is not None and best <= stop_at:
                break
    return best, best_pair


def _super_lambda(G: Graph, max_vertices: int):
    lam = edge_connectivity(G, max_vertices=max_vertices)
    lam_prime, pair = restricted_edge_connectivity(G, max_vertices=max_vertices, stop_at=lam)
    if lam_prime is None:
        return SuperLambdaVerdict.UNDEFINED, None, lam, None
    if lam_prime > lam:
        return SuperLambdaVerdict.YES, None, lam, lam_prime
    witness = _restricted_witness(G, _unit_digraph(G), pair)
    return SuperLambdaVerdict.NO, witness, lam, lam_prime


def is_super_edge_connected(G: Graph, max_vertices: int = LAMBDA_PRIME_MAX_VERTICES
                            ) -> Tuple[SuperLambdaVerdict, Optional[CutWitness]]:
    """Super-λ verdict: yes iff λ′ > λ; a no carries a minimum cut that
    isolates no vertex. Graphs without two disjoint edges are undefined."""
    verdict, witness, _, _ = _super_lambda(G, max_vertices)
    return verdict, witness


def is_super(verdict: SuperLambdaVerdict) -> bool:
    """Undefined small cases count as super-λ, read literally."""
    return verdict is not SuperLambdaVerdict.NO


def connectivity_report(G: Graph, super_lambda: bool = False,
                        kappa_max_vertices: int = KAPPA_MAX_VERTICES,
                        lambda_prime_max_vertices: int = LAMBDA_PRIME_MAX_VERTICES) -> ConnectivityReport:
    kappa = vertex_connectivity(G, max_vertices=kappa_max_vertices)
    report = ConnectivityReport(kappa=kappa, lam=0, delta=G.min_degree,
                                maximally_connected=kappa == G.min_degree)
    if super_lambda:
        verdict, witness, lam, lam_prime = _super_lambda(G, lambda_prime_max_vertices)
        report.lam, report.super_lambda, report.lambda_prime, report.witness = lam, verdict, lam_prime, witness
    else:
        report.lam = edge_connectivity(G, max_vertices=kappa_max_vertices)
    return report


# ----------------------------------------------------------------------
# Cuts
# ----------------------------------------------------------------------

def cut_components(G: Graph, witness: CutWitness) -> List[int]:
    """Component sizes after removing the witness, largest last."""
    if witness.kind == "vertex":
        removed = set(int(v) for v in witness.elements)
        rest = graph_core.induced_subgraph(G, [v for v in range(G.n) if v not in removed])
        return sorted(len(c) for c in graph_core.connected_components(rest))
    removed_keys = {(min(u, v), max(u, v)) for u, v in witness.elements}
    kept = [(u, v) for u, v in G.edges().tolist() if (u, v) not in removed_keys]
    return sorted(len(c) for c in graph_core.connected_components(Graph.from_edges(G.n, kept)))


def verify_cut(G: Graph, witness: CutWitness, nontrivial: bool = True) -> bool:
    """The witness disconnects G; with ``nontrivial`` no component is a single vertex."""
    if witness.kind == "edge" and not all(G.has_edge(u, v) for u, v in witness.elements):
        return False
    sizes = cut_components(G, witness)
    if len(sizes) < 2:
        return False
    return not nontrivial or sizes[0] >= 2


# ----------------------------------------------------------------------
# Exponential graphs
# ----------------------------------------------------------------------

def _require_nontrivial(G: Graph, H: Graph) -> None:
    if G.n < 2 or H.n < 2:
        raise InvalidParameterError("super edge-connectivity predicate needs two nontrivial factors")
    if not (graph_core.is_connected(G) and graph_core.is_connected(H)):
        raise DisconnectedGraphError("super edge-connectivity predicate needs connected factors")


def failing_clauses(G: Graph, H: Graph) -> List[str]:
    """Names of the predicate clauses that fail: "base" when δ(G) = 1 and H is
    complete, "exponent" when δ(H) = 1 and G is complete."""
    _require_nontrivial(G, H)
    failing = []
    if not (G.min_degree >= 2 or not H.is_complete()):
        failing.append("base")
    if not (H.min_degree >= 2 or not G.is_complete()):
        failing.append("exponent")
    return failing


def super_edge_predicate(G: Graph, H: Graph) -> bool:
    """(δ(G) ≥ 2 or H not complete) and (δ(H) ≥ 2 or G not complete)."""
    return not failing_clauses(G, H)


def _leaf(G: Graph) -> int:
    return int(np.flatnonzero(G.degrees == 1)[0])


def counterexample_cut(space: ExpoSpace) -> CutWitness:
    """Minimum edge cut of G^H isolating no vertex, for a failing predicate.

    F1 (base clause): the q G-edges leaving the fiber over (a,...,a), a a leaf
    of G. F2 (exponent clause): the p H-edges out of the clique that varies
    coordinate a at position w_a, w_a a leaf of H.
    """
    G, H = space.base, space.exponent
    failing = failing_clauses(G, H)
    if not failing:
        raise PreconditionError("predicate holds; no counterexample cut exists")
    p, q = space.p, space.q
    if failing[0] == "base":
        a = _leaf(G)
        b = int(G.neighbors(a)[0])
        u = [a] * q
        edges = []
        for j in range(1, q + 1):
            moved = list(u)
            moved[j - 1] = b
            edges.append((space.encode(u, j), space.encode(moved, j)))
        label, small = "F1", q
    else:
        a = _leaf(H)
        c = int(H.neighbors(a)[0])
        edges = []
        for g in range(p):
            u = [0] * q
            u[a] = g
            edges.append((space.encode(u, a + 1), space.encode(u, c + 1)))
        label, small = "F2", p
    elements = sorted((min(x, y), max(x, y)) for x, y in edges)
    return CutWitness(kind="edge", elements=elements,
                      component_sizes=[small, space.order - small], label=label)


def spacapan_connectivity(G: Graph, H: Graph) -> int:
    """κ(G □ H) = min(κ(G)|V(H)|, κ(H)|V(G)|, δ(G) + δ(H))."""
    return min(vertex_connectivity(G) * H.n, vertex_connectivity(H) * G.n,
               G.min_degree + H.min_degree)


def _materialize(space: ExpoSpace, graph: Optional[Graph], max_vertices: int) -> Graph:
    if graph is not None:
        return graph
    if space.order > max_vertices:
        raise BudgetExceededError(f"{space.name} has {space.order} vertices")
    graph, _ = exponential(space.base, space.exponent, max_vertices=max(max_vertices, MAX_VERTICES))
    return graph


def verify_maxcon_theorem(space: ExpoSpace, graph: Optional[Graph] = None,
                          max_vertices: int = KAPPA_MAX_VERTICES) -> bool:
    """κ(G^H) = δ(G) + δ(H) by max-flow."""
    graph = _materialize(space, graph, max_vertices)
    expected = space.base.min_degree + space.exponent.min_degree
    measured = vertex_connectivity(graph, max_vertices=max_vertices)
    logger.info("kappa(%s): formula %d, flow %d", space.name, expected, measured)
    return measured == expected


def verify_supered_theorem(space: ExpoSpace, graph: Optional[Graph] = None,
                           max_vertices: int = LAMBDA_PRIME_MAX_VERTICES) -> bool:
    """Predicate against the λ′ verdict; a failing predicate also needs its
    counterexample cut to be a nontrivial cut of size δ(G^H)."""
    graph = _materialize(space, graph, max_vertices)
    predicted = super_edge_predicate(space.base, space.exponent)
    verdict, _ = is_super_edge_connected(graph, max_vertices=max_vertices)
    agreed = predicted == is_super(verdict)
    if not predicted:
        cut = counterexample_cut(space)
        agreed = agreed and cut.size == graph.min_degree and verify_cut(graph, cut)
    logger.info("super-lambda(%s): predicate %s, flow verdict %s", space.name, predicted, verdict.value)
    return agreed


def edges_between(G: Graph, side: Set[int]) -> List[Tuple[int, int]]:
    return [(u, v) for u, v in G.edges().tolist() if (u in side) != (v in side)]
