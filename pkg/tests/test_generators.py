#!/usr/bin/env python3
"""
Topology Generator Tests

Orders, sizes and degrees of the generated families, the Möbius cube
neighbor rule, and the DCell order recurrence.
"""

import os
import sys
import traceback
from fractions import Fraction

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from expograph import graph_core
from expograph.errors import InvalidParameterError
from expograph.generators import (
    build_family,
    complete,
    cycle,
    dcell_diam_bound,
    dcell_order,
    dcell_order_bounds,
    de_bruijn,
    hypercube,
    kautz,
    mobius_cube,
    path,
)
from expograph.models import FamilySpec


def _result(ok):
    print(f"  Result: {'✅ PASS' if ok else '❌ FAIL'}")
    print()
    return ok


def test_basic_families():
    print("Test GEN_001: complete, cycle, path, hypercube")
    rows = [
        (complete(5), 5, 10, 4, 4),
        (cycle(7), 7, 7, 2, 2),
        (path(6), 6, 5, 1, 2),
        (hypercube(4), 16, 32, 4, 4),
    ]
    ok = True
    for G, n, m, lo, hi in rows:
        measured = (G.n, G.m, G.min_degree, G.max_degree)
        print(f"  {G.name}: {measured}")
        ok = ok and measured == (n, m, lo, hi) and graph_core.check_invariants(G) == []
    ok = ok and hypercube(3).labels[5] == "101" and hypercube(3).has_edge(5, 4)
    return _result(ok)


def test_de_bruijn():
    """Loops dropped and doubled shifts merged; the maximum degree is 2d from k = 3 on."""
    print("Test GEN_002: undirected de Bruijn graphs")
    b22 = de_bruijn(2, 2)
    b23 = de_bruijn(2, 3)
    b33 = de_bruijn(3, 3)
    print(f"  B(2,2): n={b22.n} m={b22.m} deg {b22.min_degree}..{b22.max_degree}")
    print(f"  B(2,3): n={b23.n} m={b23.m} deg {b23.min_degree}..{b23.max_degree}")
    print(f"  B(3,3): n={b33.n} deg {b33.min_degree}..{b33.max_degree}")
    ok = (b22.n == 4 and b22.m == 5 and (b22.min_degree, b22.max_degree) == (2, 3)
          and b23.n == 8 and (b23.min_degree, b23.max_degree) == (2, 4)
          and b33.n == 27 and b33.max_degree == 6
          and graph_core.is_connected(b33)
          and b22.labels[1] == (0, 1)
          and de_bruijn(2, 1).is_complete())
    return _result(ok)


def test_kautz():
    print("Test GEN_003: undirected Kautz graphs")
    k22 = kautz(2, 2)
    k23 = kautz(2, 3)
    print(f"  KZ(2,2): n={k22.n} m={k22.m} deg {k22.min_degree}..{k22.max_degree}")
    print(f"  KZ(2,3): n={k23.n} deg {k23.min_degree}..{k23.max_degree}")
    ok = (k22.n == 6 and k22.min_degree == 3 and k22.max_degree == 3
          and k23.n == 12 and k23.max_degree == 4
          and kautz(2, 1).is_complete() and kautz(2, 1).n == 3
          and all(a != b for w in k23.labels for a, b in zip(w, w[1:])))
    return _result(ok)


def test_mobius_cube():
    """0-type rule: along position i flip x_i alone after a 0, else the tail."""
    print("Test GEN_004: 0-type Möbius cubes")
    mq1, mq2, mq3 = mobius_cube(1), mobius_cube(2), mobius_cube(3)
    q3_diam = graph_core.diameter(hypercube(3))
    mq3_diam = graph_core.diameter(mq3)
    print(f"  MQ2 edges: {sorted(mq2.edge_set())}")
    print(f"  diam Q3 = {q3_diam}, diam MQ3 = {mq3_diam}")
    x = mq3.index_of("110")
    ok = (mq1.is_complete() and mq1.n == 2
          and mq2.edge_set() == {(0, 1), (0, 2), (1, 3), (2, 3)}
          and mq3.m == 12 and mq3.min_degree == 3 and mq3.max_degree == 3
          and graph_core.is_connected(mq3)
          and mq3_diam == 2 < q3_diam
          and set(mq3.neighbors(x).tolist()) == {mq3.index_of(s) for s in ("010", "101", "111")})
    return _result(ok)


def test_dcell_orders():
    print("Test GEN_005: DCell order recurrence and bounds")
    orders = [dcell_order(k, 2) for k in range(5)]
    print(f"  t_k,2: {orders}")
    ok = orders == [2, 6, 42, 1806, 3263442]
    ok = ok and dcell_order(5, 2) == 10650056950806
    for n in (2, 3, 4):
        for k in range(7):
            lower, upper = dcell_order_bounds(k, n)
            t = dcell_order(k, n)
            ok = ok and isinstance(lower, Fraction) and lower <= t <= upper
            if k >= 1:
                ok = ok and lower < t < upper
        print(f"  n={n}: t_6 has {len(str(dcell_order(6, n)))} digits, within bounds: {ok}")
    ok = ok and dcell_order_bounds(1, 2) == (Fraction(25, 4) - Fraction(1, 2), 8)
    ok = ok and [dcell_diam_bound(k) for k in range(4)] == [1, 3, 7, 15]
    return _result(ok)


def test_build_family_and_validation():
    print("Test GEN_006: build_family and parameter validation")
    built = build_family(FamilySpec("hypercube", (3,)))
    omega2 = build_family(FamilySpec("expo-cube", (2,)))
    errors = 0
    for bad in (lambda: cycle(2), lambda: de_bruijn(1, 3), lambda: dcell_order(1, 1),
                lambda: build_family(FamilySpec("torus", (3,)))):
        try:
            bad()
        except InvalidParameterError:
            errors += 1
    print(f"  {built!r}, {omega2!r}, rejected {errors}/4")
    ok = (built == hypercube(3)
          and omega2.n == 8 and omega2.m == 8 and set(omega2.degrees.tolist()) == {2}
          and errors == 4)
    return _result(ok)


def main():
    """Run all generator tests."""
    print("=" * 60)
    print("TOPOLOGY GENERATOR TESTS")
    print("=" * 60)
    print()

    tests = [
        test_basic_families,
        test_de_bruijn,
        test_kautz,
        test_mobius_cube,
        test_dcell_orders,
        test_build_family_and_validation,
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
