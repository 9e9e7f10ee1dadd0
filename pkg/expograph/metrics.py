#!/usr/bin/env python3
"""
Hamiltonian Distance and Routing

Covering-walk distances dist_H(u,v;S) and diam*(H) by subset dynamic
programming over the metric closure, the constructive covering-walk upper
bound, the diameter formula for G^H and the routing algorithm that realizes
it.
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from . import graph_core
from .errors import (
    DisconnectedGraphError,
    InvalidParameterError,
    SizeLimitExceededError,
    VerificationMismatchError,
)
from .expo import ExpoSpace, exponential
from .graph_core import Graph
from .models import ExpoEdgeKind, RoutePlan, RouteSegment, StepKind, WalkSpec
from .settings import HAM_BRUTE_FORCE_LIMIT, HAM_DP_LIMIT, MAX_VERTICES, UPPER_WALK_ALL_PAIRS_LIMIT

logger = logging.getLogger(__name__)

_INF = np.int64(1 << 40)


def metric_closure(H: Graph) -> np.ndarray:
    table = graph_core.all_pairs_distances(H)
    if np.any(table < 0):
        raise DisconnectedGraphError(f"{H.name or 'graph'} is disconnected")
    return table


def _stitch(H: Graph, stops: Sequence[int]) -> List[int]:
    """Join consecutive stops by BFS shortest paths."""
    walk = [int(stops[0])]
    for a, b in zip(stops[:-1], stops[1:]):
        if a != b:
            walk.extend(graph_core.shortest_path(H, a, b)[1:])
    return walk


def ham_distance(H: Graph, u: int, v: int, S: Optional[Iterable[int]] = None,
                 limit: int = HAM_DP_LIMIT) -> Tuple[int, WalkSpec]:
    """Shortest u-v walk through every vertex of S (all of V(H) by default).

    Held-Karp over the required vertices; segments between consecutive stops
    are shortest paths. Ties go to the lowest-index predecessor.
    """
    u, v = H._check(u), H._check(v)
    required = range(H.n) if S is None else S
    targets = sorted({H._check(s) for s in required} - {u})
    if len(targets) > limit:
        raise SizeLimitExceededError(
            f"covering walk DP limited to {limit} required vertices, got {len(targets)}")
    D = metric_closure(H)
    if not targets:
        return int(D[u, v]), WalkSpec(_stitch(H, [u, v]))
    k = len(targets)
    T = np.asarray(targets, dtype=np.int64)
    inner = D[np.ix_(T, T)]
    full = (1 << k) - 1
    dp = np.full((1 << k, k), _INF, dtype=np.int64)
    parent = np.full((1 << k, k), -1, dtype=np.int64)
    dp[1 << np.arange(k), np.arange(k)] = D[u, T]
    for mask in range(1, full):
        row = dp[mask]
        if row.min() >= _INF:
            continue
        cand = row[:, None] + inner
        best_from = np.argmin(cand, axis=0)
        best = cand[best_from, np.arange(k)]
        missing = np.flatnonzero(((mask >> np.arange(k)) & 1) == 0)
        nxt = mask | (1 << missing)
        better = best[missing] < dp[nxt, missing]
        dp[nxt[better], missing[better]] = best[missing][better]
        parent[nxt[better], missing[better]] = best_from[missing][better]
    closing = dp[full] + D[T, v]
    last = int(np.argmin(closing))
    order = []
    mask, cur = full, last
    while cur >= 0:
        order.append(targets[cur])
        prev = int(parent[mask, cur])
        mask ^= 1 << cur
        cur = prev
    order.reverse()
    walk = _stitch(H, [u] + order + [v])
    return int(closing[last]), WalkSpec(walk)


def ham_distance_table(H: Graph, limit: int = HAM_DP_LIMIT) -> np.ndarray:
    """Matrix of dist_H(u,v;V(H)) for all ordered pairs.

    One pass of subset DP carries every source at once: ``dp[mask]`` is a
    (source x end) matrix, advanced by a min-plus product with the closure.
    """
    q = H.n
    if q > limit:
        raise SizeLimitExceededError(f"Hamiltonian-diameter DP limited to {limit} vertices, got {q}")
    D = metric_closure(H)
    if q == 1:
        return np.zeros((1, 1), dtype=np.int64)
    big = np.int64(1 << 28)
    dp = np.full((1 << q, q, q), big, dtype=np.int64)
    ids = np.arange(q)
    dp[1 << ids, ids, ids] = 0
    for mask in range(1, 1 << q):
        block = dp[mask]
        if block.min() >= big:
            continue
        cand = (block[:, :, None] + D[None, :, :]).min(axis=1)
        missing = np.flatnonzero(((mask >> ids) & 1) == 0)
        if missing.size == 0:
            continue
        nxt = mask | (1 << missing)
        dp[nxt, :, missing] = np.minimum(dp[nxt, :, missing], cand[:, missing].T)
    final = dp[(1 << q) - 1]
    return (final[:, :, None] + D[None, :, :]).min(axis=1)


def ham_diameter(H: Graph, limit: int = HAM_DP_LIMIT) -> int:
    """diam*(H): the largest dist_H(u,v;V(H)) over ordered pairs, u = v included."""
    if not graph_core.is_connected(H):
        raise DisconnectedGraphError(f"{H.name or 'graph'} is disconnected")
    return int(ham_distance_table(H, limit=limit).max())


def covering_walk_upper(H: Graph, u: int, v: int) -> WalkSpec:
    """A u-v walk through all of V(H) of length <= 2|V(H)| - 2.

    Take a shortest u-v path P, contract it, walk around a BFS spanning tree of
    the contracted graph and splice each excursion at the first vertex of P
    adjacent to it.
    """
    if not graph_core.is_connected(H):
        raise DisconnectedGraphError(f"{H.name or 'graph'} is disconnected")
    P = graph_core.shortest_path(H, u, v)
    contracted, block = graph_core.contract_with_mapping(H, [P])
    hub = int(block[P[0]])
    original = np.empty(contracted.n, dtype=np.int64)
    original[block] = np.arange(H.n)
    _, parent = graph_core.bfs_tree(contracted, hub)
    children: Dict[int, List[int]] = {}
    for node in range(contracted.n):
        if node != hub:
            children.setdefault(int(parent[node]), []).append(node)

    def excursion(root: int) -> List[int]:
        walk = [int(original[root])]
        stack = [(root, iter(children.get(root, [])))]
        while stack:
            node, it = stack[-1]
            child = next(it, None)
            if child is None:
                stack.pop()
                if stack:
                    walk.append(int(original[stack[-1][0]]))
                continue
            walk.append(int(original[child]))
            stack.append((child, iter(children.get(child, []))))
        return walk

    position = {x: i for i, x in enumerate(P)}
    spliced: Dict[int, List[List[int]]] = {}
    for child in children.get(hub, []):
        x = int(original[child])
        anchor = min(position[int(w)] for w in H.neighbors(x) if int(w) in position)
        spliced.setdefault(anchor, []).append(excursion(child))
    walk: List[int] = []
    for i, p in enumerate(P):
        walk.append(p)
        for trip in spliced.get(i, []):
            walk.extend(trip)
            walk.append(p)
    return WalkSpec(walk)


def ham_diameter_upper(H: Graph, all_pairs_limit: int = UPPER_WALK_ALL_PAIRS_LIMIT) -> Tuple[int, WalkSpec]:
    """Upper bound on diam*(H) with a witness walk.

    Up to ``all_pairs_limit`` vertices the bound is the longest constructed
    walk over all pairs; beyond that the general 2|V(H)| - 2 bound is
    returned with the walk for vertex 0.
    """
    if H.n == 1:
        return 0, WalkSpec([0])
    if H.n > all_pairs_limit:
        logger.warning("upper covering walk over all pairs skipped for %d vertices", H.n)
        return 2 * H.n - 2, covering_walk_upper(H, 0, 0)
    best: Optional[WalkSpec] = None
    for u in range(H.n):
        for v in range(u, H.n):
            walk = covering_walk_upper(H, u, v)
            if best is None or walk.length > best.length:
                best = walk
    return best.length, best


def is_covering_walk(H: Graph, walk: WalkSpec, u: int, v: int,
                     S: Optional[Iterable[int]] = None) -> bool:
    if not walk.vertices or walk.vertices[0] != u or walk.vertices[-1] != v:
        return False
    if not graph_core.is_valid_walk(H, walk):
        return False
    required = set(range(H.n)) if S is None else set(S)
    return required <= set(walk.vertices)


# ----------------------------------------------------------------------
# Diameter of G^H
# ----------------------------------------------------------------------

def expo_diameter(G: Graph, H: Graph, mode: str = "formula",
                  max_vertices: int = MAX_VERTICES, limit: int = HAM_DP_LIMIT) -> int:
    """diam(G^H) = diam(G) |V(H)| + diam*(H), by formula, by BFS, or both."""
    if mode not in ("formula", "bfs", "both"):
        raise InvalidParameterError(f"unknown diameter mode {mode!r}")
    if G.n == 1:
        return graph_core.diameter(H)
    formula = measured = None
    if mode in ("formula", "both"):
        formula = graph_core.diameter(G) * H.n + ham_diameter(H, limit=limit)
    if mode in ("bfs", "both"):
        graph, _ = exponential(G, H, max_vertices=max_vertices)
        measured = graph_core.diameter(graph)
    if mode == "both" and formula != measured:
        raise VerificationMismatchError(
            f"diameter formula {formula} != BFS {measured} for EXP({G.name},{H.name})",
            expected=formula, measured=measured)
    return formula if formula is not None else measured


def diameter_bounds(G: Graph, H: Graph) -> Tuple[int, int]:
    """(diam G + 1)|V(H)| <= diam(G^H) <= (diam G + 2)|V(H)| - 2."""
    d, q = graph_core.diameter(G), H.n
    if q == 1:
        return d, d
    return (d + 1) * q, (d + 2) * q - 2


@dataclass
class CorollaryBound:
    case: str  # "tree" | "hamiltonian-connected" | "hamiltonian" | "general"
    lower: int
    upper: int
    exact: Optional[int] = None


def corollary_cases(G: Graph, H: Graph, limit: int = HAM_BRUTE_FORCE_LIMIT) -> CorollaryBound:
    """The sandwich bound, specialized when the exponent is a tree or
    (brute-force confirmed) Hamiltonian-connected or Hamiltonian."""
    lower, upper = diameter_bounds(G, H)
    d, q = graph_core.diameter(G), H.n
    if q >= 2 and H.m == q - 1:
        return CorollaryBound("tree", upper, upper, upper)
    if q <= limit:
        if graph_core.is_hamiltonian_connected(H, limit=limit):
            return CorollaryBound("hamiltonian-connected", lower, lower, lower)
        if graph_core.is_hamiltonian(H, limit=limit):
            bound = (d + 1) * q + graph_core.diameter(H) - 1
            return CorollaryBound("hamiltonian", lower, min(upper, bound))
    return CorollaryBound("general", lower, upper)


def log_diameter_ratio(G: Graph, H: Graph, limit: int = HAM_DP_LIMIT) -> float:
    """diam(G^H) / log2 |V(G^H)|, from the formula."""
    order = G.n ** H.n * H.n
    return expo_diameter(G, H, mode="formula", limit=limit) / math.log2(order)


# ----------------------------------------------------------------------
# Routing
# ----------------------------------------------------------------------

def _cycle_walk(H: Graph, cycle: Sequence[int], start: int, end: int,
                required: Sequence[int]) -> List[int]:
    """Follow the Hamiltonian cycle from start until every required vertex is
    seen, then take a shortest path to end. Both directions are tried."""
    q = len(cycle)
    at = list(cycle).index(start)
    best: Optional[List[int]] = None
    for step in (1, -1):
        order = [cycle[(at + step * i) % q] for i in range(q)]
        reach = max((order.index(r) for r in required), default=0)
        walk = order[:reach + 1] + graph_core.shortest_path(H, order[reach], end)[1:]
        if best is None or len(walk) < len(best):
            best = walk
    return [int(w) for w in best]


def route(space: ExpoSpace, x: int, y: int, mode: str = "exact",
          hamiltonian_cycle: Optional[Sequence[int]] = None,
          limit: int = HAM_DP_LIMIT) -> RoutePlan:
    """Route x -> y in G^H through alternating H-paths and G-paths.

    D is the set of exponent positions where the tuples differ. The exponent
    walk W_D starts at w_sigma(x), ends at w_sigma(y) and visits D; at the first
    visit of each w_i in D the route runs a shortest G-path in dimension i.
    """
    G, H = space.base, space.exponent
    if not graph_core.is_connected(G) or not graph_core.is_connected(H):
        raise DisconnectedGraphError("routing needs connected base and exponent")
    u, j = space.decode(x)
    v, k = space.decode(y)
    required = [i for i in range(space.q) if u[i] != v[i]]
    if mode == "exact":
        if len(required) > limit:
            raise SizeLimitExceededError(
                f"exact routing limited to |D| <= {limit}, got {len(required)}")
        _, witness = ham_distance(H, j - 1, k - 1, required, limit=limit)
        exponent_walk = witness.vertices
    elif mode == "hamcycle":
        if hamiltonian_cycle is None:
            hamiltonian_cycle = graph_core.hamiltonian_cycle(H)
        if hamiltonian_cycle is None:
            raise InvalidParameterError("hamcycle routing needs a Hamiltonian exponent")
        exponent_walk = _cycle_walk(H, hamiltonian_cycle, j - 1, k - 1, required)
    else:
        raise InvalidParameterError(f"unknown routing mode {mode!r}")

    pending = set(required)
    segments: List[RouteSegment] = []
    vertices = [int(x)]
    kinds: List[ExpoEdgeKind] = []
    h_run = [int(x)]
    current = int(x)

    def visit(w: int) -> None:
        nonlocal current, h_run
        if w not in pending:
            return
        pending.discard(w)
        segments.append(RouteSegment(StepKind.H_EDGE, None, h_run))
        g_run = [current]
        for value in graph_core.shortest_path(G, u[w], v[w])[1:]:
            current = space.with_coordinate(current, w + 1, value)
            g_run.append(current)
            vertices.append(current)
            kinds.append(ExpoEdgeKind.g_edge(w + 1))
        segments.append(RouteSegment(StepKind.G_EDGE, w + 1, g_run))
        h_run = [current]

    visit(exponent_walk[0])
    for w in exponent_walk[1:]:
        current = space.with_position(current, w + 1)
        vertices.append(current)
        kinds.append(ExpoEdgeKind.h_edge())
        h_run.append(current)
        visit(w)
    segments.append(RouteSegment(StepKind.H_EDGE, None, h_run))
    if current != y:
        raise VerificationMismatchError(f"route ended at {current}, expected {y}")
    return RoutePlan(
        source=int(x), target=int(y), mode=mode, segments=segments,
        total=WalkSpec(vertices, kinds), required=[i + 1 for i in required],
        exponent_walk=[w + 1 for w in exponent_walk],
    )


def measure_route(plan: RoutePlan, graph: Graph) -> RoutePlan:
    """Attach the BFS distance so the plan reports its stretch."""
    plan.bfs_distance = graph_core.distance(graph, plan.source, plan.target)
    return plan


def route_length_formula(space: ExpoSpace, x: int, y: int, limit: int = HAM_DP_LIMIT) -> int:
    """dist_H(w_j, w_k; D) + sum of dist_G over the differing coordinates."""
    u, j = space.decode(x)
    v, k = space.decode(y)
    required = [i for i in range(space.q) if u[i] != v[i]]
    walk_length, _ = ham_distance(space.exponent, j - 1, k - 1, required, limit=limit)
    return walk_length + sum(graph_core.distance(space.base, u[i], v[i]) for i in required)


def verify_route_plan(plan: RoutePlan, space: ExpoSpace) -> bool:
    """The plan's walk runs from source to target along edges of G^H."""
    walk = plan.total.vertices
    if not walk or walk[0] != plan.source or walk[-1] != plan.target:
        return False
    if len(walk) == 1:
        return True
    return bool(np.all(space.step_dimensions(walk[:-1], walk[1:]) >= 0))
