#!/usr/bin/env python3
"""
Distance and Routing Tests

Hamiltonian-distance DP, covering-walk upper bounds, the diameter formula
against BFS, the sandwich bounds and shortest routing in G^H.
"""

import os
import random
import sys
import traceback

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from expograph import graph_core
from expograph.errors import SizeLimitExceededError
from expograph.expo import ExpoSpace, exponential
from expograph.generators import complete, cycle, de_bruijn, hypercube, kautz, mobius_cube, path
from expograph.metrics import (
    corollary_cases,
    covering_walk_upper,
    diameter_bounds,
    expo_diameter,
    ham_diameter,
    ham_diameter_upper,
    ham_distance,
    ham_distance_table,
    is_covering_walk,
    log_diameter_ratio,
    measure_route,
    route,
    route_length_formula,
    verify_route_plan,
)
from expograph.models import StepKind


def _result(ok):
    print(f"  Result: {'✅ PASS' if ok else '❌ FAIL'}")
    print()
    return ok


def test_ham_distance_on_cycles():
    print("Test MET_001: Hamiltonian distance on C8")
    c8 = cycle(8)
    lengths = [ham_distance(c8, 0, v)[0] for v in range(8)]
    length, walk = ham_distance(c8, 0, 4)
    print(f"  dist*(0, v): {lengths}")
    print(f"  walk 0->4: {walk.vertices}")
    ok = (lengths == [8, 7, 8, 9, 10, 9, 8, 7]
          and length == walk.length == 10
          and is_covering_walk(c8, walk, 0, 4)
          and ham_diameter(c8) == 10
          and ham_diameter(complete(2)) == 2
          and ham_diameter(complete(4)) == 4
          and ham_diameter(path(3)) == 4)
    return _result(ok)


def test_ham_distance_subsets():
    print("Test MET_002: covering only a required subset")
    c8 = cycle(8)
    none_required = ham_distance(c8, 1, 3, S=[])[0]
    one_side = ham_distance(c8, 0, 0, S=[2])[0]
    both_sides = ham_distance(c8, 0, 0, S=[2, 6])[0]
    print(f"  S={{}}: {none_required}, S={{2}}: {one_side}, S={{2,6}}: {both_sides}")
    return _result(none_required == 2 and one_side == 4 and both_sides == 8)


def test_ham_distance_table_matches_pairs():
    """The all-sources DP agrees with the per-pair DP."""
    print("Test MET_003: distance table vs per-pair DP")
    ok = True
    for H in (mobius_cube(3), path(4), complete(3)):
        table = ham_distance_table(H)
        pairs = [[ham_distance(H, u, v)[0] for v in range(H.n)] for u in range(H.n)]
        print(f"  {H.name}: max {int(table.max())}")
        ok = ok and table.tolist() == pairs
    try:
        ham_distance_table(cycle(20), limit=15)
        ok = False
    except SizeLimitExceededError:
        pass
    return _result(ok)


def test_covering_walk_upper():
    print("Test MET_004: covering-walk upper bound")
    ok = True
    for H in (cycle(8), path(5), hypercube(3), mobius_cube(3)):
        bound, walk = ham_diameter_upper(H)
        exact = ham_diameter(H)
        u, v = walk.vertices[0], walk.vertices[-1]
        print(f"  {H.name}: exact {exact}, upper {bound} <= {2 * H.n - 2}")
        ok = ok and exact <= bound <= 2 * H.n - 2 and is_covering_walk(H, walk, u, v)
    walk = covering_walk_upper(cycle(6), 0, 3)
    ok = ok and is_covering_walk(cycle(6), walk, 0, 3) and walk.length <= 10
    return _result(ok)


def test_expo_diameter_formula_vs_bfs():
    print("Test MET_005: diameter formula against BFS")
    cases = [
        (complete(2), complete(2), 4),
        (cycle(8), complete(2), 10),
        (complete(2), mobius_cube(2), 8),
        (complete(3), complete(2), 4),
        (hypercube(2), mobius_cube(1), 6),
        (path(3), cycle(4), 2 * 4 + 4),
    ]
    ok = True
    for G, H, expected in cases:
        value = expo_diameter(G, H, mode="both")
        print(f"  diam EXP({G.name},{H.name}) = {value} (expected {expected})")
        ok = ok and value == expected
    return _result(ok)


def test_sandwich_and_cases():
    print("Test MET_006: sandwich bounds and exponent cases")
    low, high = diameter_bounds(cycle(6), path(4))
    tree = corollary_cases(complete(2), path(3))
    connected = corollary_cases(complete(3), complete(4))
    hamiltonian = corollary_cases(complete(2), cycle(6))
    general = corollary_cases(complete(2), graph_core.Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (1, 3)]))
    print(f"  bounds C6^P4: [{low}, {high}]")
    print(f"  cases: {tree.case}, {connected.case}, {hamiltonian.case}, {general.case}")
    measured_tree = expo_diameter(complete(2), path(3), mode="bfs")
    measured_hc = expo_diameter(complete(2), cycle(6), mode="bfs")
    ok = ((low, high) == (16, 18)
          and tree.case == "tree" and tree.exact == 7 == measured_tree
          and connected.case == "hamiltonian-connected" and connected.exact == 8
          and hamiltonian.case == "hamiltonian"
          and hamiltonian.lower <= measured_hc <= hamiltonian.upper
          and general.case == "general" and general.exact is None)
    return _result(ok)


def test_exact_routing_is_shortest():
    """Exact routes match BFS distance from a few sources to every target."""
    print("Test MET_007: exact routing vs BFS")
    ok = True
    for G, H in ((cycle(4), path(3)), (complete(3), cycle(3)), (path(3), complete(2))):
        graph, space = exponential(G, H)
        for x in (0, graph.n // 2, graph.n - 1):
            dist = graph_core.bfs_distances(graph, x)
            for y in range(graph.n):
                plan = route(space, x, y)
                if (plan.length != dist[y] or not verify_route_plan(plan, space)
                        or plan.length != route_length_formula(space, x, y)):
                    print(f"  ❌ {space.name}: {x}->{y} routed {plan.length}, BFS {dist[y]}")
                    ok = False
        print(f"  {space.name}: checked {3 * graph.n} routes")
    return _result(ok)


def test_route_plan_structure():
    print("Test MET_008: route segments and hamcycle mode")
    graph, space = exponential(cycle(4), complete(3))
    x = space.encode((0, 0, 0), 1)
    y = space.encode((2, 0, 1), 2)
    plan = measure_route(route(space, x, y), graph)
    kinds = [s.kind for s in plan.segments]
    g_dims = sorted(s.dimension for s in plan.segments if s.kind == StepKind.G_EDGE)
    print(f"  required {plan.required}, exponent walk {plan.exponent_walk}, length {plan.length}")
    ok = (plan.required == [1, 3] and g_dims == [1, 3]
          and kinds[0] == StepKind.H_EDGE and kinds[-1] == StepKind.H_EDGE
          and plan.stretch == 1.0
          and plan.length == 2 + 1 + 2)
    cyc = measure_route(route(space, x, y, mode="hamcycle", hamiltonian_cycle=[0, 1, 2]), graph)
    print(f"  hamcycle mode: length {cyc.length}, stretch {cyc.stretch}")
    ok = ok and verify_route_plan(cyc, space) and cyc.length >= plan.length
    tampered = route(space, x, y)
    tampered.total.vertices[1] = tampered.total.vertices[1] + space.q * 9
    ok = ok and not verify_route_plan(tampered, space)
    return _result(ok)


def test_random_routes_on_named_instances():
    """100 seeded random pairs per instance: exact routes are shortest and the
    Hamiltonian-cycle heuristic never beats BFS."""
    print("Test MET_009: seeded random routes on C8^K2, K3^P3 and K4^B(2,2)")
    rng = random.Random(20240601)
    instances = [
        (cycle(8), complete(2), [0, 1]),
        (complete(3), path(3), None),
        (complete(4), de_bruijn(2, 2), graph_core.hamiltonian_cycle(de_bruijn(2, 2))),
    ]
    ok = True
    for G, H, ham_cycle in instances:
        graph, space = exponential(G, H)
        worst = 1.0
        for _ in range(100):
            x, y = rng.randrange(graph.n), rng.randrange(graph.n)
            bfs = int(graph_core.bfs_distances(graph, x)[y])
            plan = route(space, x, y)
            ok = ok and plan.length == bfs and verify_route_plan(plan, space)
            if ham_cycle is not None:
                heuristic = measure_route(route(space, x, y, mode="hamcycle",
                                                hamiltonian_cycle=ham_cycle), graph)
                ok = ok and verify_route_plan(heuristic, space) and heuristic.stretch >= 1.0
                worst = max(worst, heuristic.stretch)
        print(f"  {space.name}: 100 exact routes checked, worst heuristic stretch {worst:.2f}")
    return _result(ok)


# connected exponents with at most 10 vertices
SANDWICH_EXPONENTS = [
    complete(2), complete(3), complete(4), complete(5),
    cycle(3), cycle(4), cycle(5), cycle(6), cycle(7), cycle(8), cycle(10),
    path(2), path(3), path(4), path(6),
    hypercube(2), hypercube(3), mobius_cube(2), mobius_cube(3),
    de_bruijn(2, 2), de_bruijn(2, 3), kautz(2, 2),
    graph_core.Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)], name="K1,4"),
    graph_core.power_graph(path(6), 3),
    graph_core.power_graph(cycle(7), 2),
]


def test_ham_diameter_sandwich():
    print("Test MET_010: |V(H)| <= diam*(H) <= 2|V(H)| - 2 over the exponent sweep")
    ok = True
    for H in SANDWICH_EXPONENTS:
        q = H.n
        value = ham_diameter(H)
        tree = H.m == q - 1
        connected = graph_core.is_hamiltonian_connected(H)
        hamiltonian = graph_core.is_hamiltonian(H)
        print(f"  {H.name}: diam* {value} in [{q}, {2 * q - 2}], tree {tree}, "
              f"Hamiltonian-connected {connected}, Hamiltonian {hamiltonian}")
        ok = ok and q <= value <= 2 * q - 2
        if tree:
            ok = ok and value == 2 * q - 2
        if connected:
            ok = ok and value == q
        elif hamiltonian:
            ok = ok and value <= q - 1 + graph_core.diameter(H)
    # the lower bound is also met without Hamiltonian-connectedness
    ok = ok and ham_diameter(cycle(4)) == 4 and not graph_core.is_hamiltonian_connected(cycle(4))
    return _result(ok)


def test_diameter_formula_sweep():
    print("Test MET_011: diameter formula, sandwich and exponent cases against BFS")
    ok = True
    checked = 0
    for H in SANDWICH_EXPONENTS:
        bases = [complete(2)] + ([path(3)] if H.n <= 6 else []) + ([cycle(4)] if H.n <= 5 else [])
        for G in bases:
            measured = expo_diameter(G, H, mode="bfs")
            formula = expo_diameter(G, H, mode="formula")
            low, high = diameter_bounds(G, H)
            bound = corollary_cases(G, H)
            agreed = (formula == measured and low <= measured <= high
                      and bound.lower <= measured <= bound.upper
                      and (bound.exact is None or bound.exact == measured))
            if not agreed:
                print(f"  ❌ EXP({G.name},{H.name}): formula {formula}, BFS {measured}, "
                      f"bounds [{low}, {high}], {bound.case} [{bound.lower}, {bound.upper}]")
            ok = ok and agreed
            checked += 1
    print(f"  {checked} pairs agree with BFS")
    return _result(ok)


# regression bound for diam(B(2,3)^K_q) / log2 |V| with q = 2..5
LOG_DIAMETER_RATIO_BOUND = 1.16


def test_log_diameter_ratio():
    print("Test MET_012: logarithmic diameter of B(2,3)^K_q")
    base = de_bruijn(2, 3)
    ratios = [log_diameter_ratio(base, complete(q)) for q in range(2, 6)]
    print(f"  ratios: {[round(r, 4) for r in ratios]}")
    measured = [expo_diameter(base, complete(q), mode="bfs") for q in range(2, 4)]
    ok = (all(1.0 < r < LOG_DIAMETER_RATIO_BOUND for r in ratios)
          and measured == [8, 12]
          and abs(ratios[0] - 8 / 7) < 1e-9)
    return _result(ok)


def main():
    """Run all distance and routing tests."""
    print("=" * 60)
    print("DISTANCE AND ROUTING TESTS")
    print("=" * 60)
    print()

    tests = [
        test_ham_distance_on_cycles,
        test_ham_distance_subsets,
        test_ham_distance_table_matches_pairs,
        test_covering_walk_upper,
        test_expo_diameter_formula_vs_bfs,
        test_sandwich_and_cases,
        test_exact_routing_is_shortest,
        test_route_plan_structure,
        test_random_routes_on_named_instances,
        test_ham_diameter_sandwich,
        test_diameter_formula_sweep,
        test_log_diameter_ratio,
    ]

    passed = 0
    total = len(tests)

    for test in tests:
        try:
            if test():
                passed += 1
        except Exception as e:
            print(f"  ❌ {test.__name__} raised {e!r}")
            traceback.print_exc()
            print()

    print("=" * 60)
    print(f"RESULTS: {passed}/{total} tests passed")
    if passed == total:
        print("🎉 ALL TESTS PASSED!")
    else:
        print(f"❌ {total - passed} tests failed")
    print("=" * 60)

    return passed == total


if __name__ == "__main__":
    success = main()
    sys.exit(0 if success else 1)
