#!/usr/bin/env python3
"""
Hamiltonian Construction Tests

Cycles of G^{K2}, alternating cycles of Cartesian powers, lifting into G^H,
edge-disjoint cycles and CISTs of G^{Kn}, and the certificate verifiers.
"""

import os
import sys
import traceback

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from expograph import graph_core
from expograph.errors import MalformedCertificateError, PreconditionError
from expograph.expo import ExpoSpace, cartesian_power, exponential
from expograph.generators import complete, cycle, hypercube, mobius_cube, path
from expograph.graph_core import Graph
from expograph.hamiltonicity import (
    canonical_hamiltonian_cycle,
    cist_gkn,
    cp_ham_cycle,
    cp_ham_cycle_pair,
    edges_partition,
    edhc_gkn,
    ham_cycle_gk2,
    kn_path_pair,
    kn_zigzag_paths,
    lift_ham_cycle,
    pivot_vertex,
    relabel_pivot_first,
    split_cycle_pair,
    verify_alternation,
    verify_cist,
    verify_edge_disjoint,
    verify_ham_cycle,
    verify_strong_alternation,
)
from expograph.models import CistPair, HamCycleCert, WalkSpec


def _result(ok):
    print(f"  Result: {'✅ PASS' if ok else '❌ FAIL'}")
    print()
    return ok


def _diamond():
    """K4 minus the edge 01: vertex 0 reaches every other vertex by a
    Hamiltonian path, but 2 and 3 are not joined by one."""
    return Graph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], name="D4")


def test_canonical_cycles():
    print("Test HAM_001: canonical Hamiltonian cycles of the base")
    q3 = hypercube(3)
    gray = canonical_hamiltonian_cycle(q3)
    print(f"  K5: {canonical_hamiltonian_cycle(complete(5))}, Q3: {gray}")
    ok = (canonical_hamiltonian_cycle(complete(5)) == [0, 1, 2, 3, 4]
          and canonical_hamiltonian_cycle(cycle(6)) == list(range(6))
          and len(set(gray)) == 8
          and all(q3.has_edge(gray[i], gray[(i + 1) % 8]) for i in range(8)))
    try:
        canonical_hamiltonian_cycle(path(4))
        ok = False
    except PreconditionError:
        pass
    return _result(ok)


def test_gk2_cycles():
    """Odd bases included: the construction only needs a Hamiltonian base."""
    print("Test HAM_002: Hamiltonian cycles of G^{K2}")
    ok = True
    for G in (cycle(8), complete(5), cycle(5), complete(3), complete(4), hypercube(3)):
        hc = canonical_hamiltonian_cycle(G)
        cert = ham_cycle_gk2(G, hc)
        graph, space = exponential(G, complete(2))
        on_space = verify_ham_cycle(cert, space)
        on_graph = verify_ham_cycle(cert, graph)
        print(f"  {cert.host}: {cert.cycle.length} steps, space {on_space}, graph {on_graph}")
        ok = ok and on_space and on_graph and cert.cycle.length == graph.n
    return _result(ok)


def test_alternating_power_cycles():
    print("Test HAM_003: dimension-alternating cycles of C4^[n]")
    G = cycle(4)
    hc = list(range(4))
    ok = True
    for n in (2, 3, 4):
        walk = cp_ham_cycle(G, hc, n)
        host = cartesian_power(G, n)
        verdict = (verify_ham_cycle(walk, host) and verify_alternation(walk)
                   and verify_strong_alternation(walk))
        print(f"  C4^[{n}]: {walk.length} steps, valid {verdict}")
        ok = ok and verdict
    first, second = cp_ham_cycle_pair(G, hc, 2)
    torus = cartesian_power(G, 2)
    partition = edges_partition(torus, first, second)
    print(f"  C4^[2] pair partitions the edges: {partition}")
    ok = ok and partition and verify_ham_cycle(second, torus)
    try:
        cp_ham_cycle(cycle(5), list(range(5)), 2)
        ok = False
    except PreconditionError:
        pass
    return _result(ok)


def test_split_pair_uses_disjoint_dimensions():
    print("Test HAM_004: split pair with disjoint dimension pairs")
    G = cycle(4)
    first, second = split_cycle_pair(G, list(range(4)), 4)
    host = cartesian_power(G, 4)

    def contacts(walk):
        dims = walk.dimensions()
        tuples = walk.vertices[:-1]
        return {t: {dims[i - 1], dims[i]} for i, t in enumerate(tuples)}

    a, b = contacts(first), contacts(second)
    disjoint_dims = all(not (a[t] & b[t]) for t in a)
    ok = (verify_ham_cycle(first, host) and verify_ham_cycle(second, host)
          and verify_edge_disjoint(first, second)
          and verify_alternation(first) and verify_alternation(second)
          and disjoint_dims)
    print(f"  both Hamiltonian and edge-disjoint, contact dimensions disjoint: {disjoint_dims}")
    return _result(ok)


def test_lifting_with_complete_exponent():
    print("Test HAM_005: lifting into C4^K3")
    G, H = cycle(4), complete(3)
    space = ExpoSpace(G, H)
    cert = lift_ham_cycle(space, cp_ham_cycle(G, list(range(4)), 3))
    graph, _ = exponential(G, H)
    print(f"  {cert.host}: {cert.cycle.length} steps")
    return _result(verify_ham_cycle(cert, space) and verify_ham_cycle(cert, graph))


def test_lifting_through_a_pivot():
    print("Test HAM_006: lifting through a pivot exponent")
    G, H = cycle(4), _diamond()
    pivot = pivot_vertex(H)
    space = ExpoSpace(G, H)
    walk = cp_ham_cycle(G, list(range(4)), 4)
    cert = lift_ham_cycle(space, walk, require="pivot")
    print(f"  pivot {pivot}, lifted {cert.cycle.length} steps")
    ok = pivot == 0 and verify_ham_cycle(cert, space)
    try:
        lift_ham_cycle(space, walk, require="connected")
        ok = False
    except PreconditionError as e:
        print(f"  connected lifting refused: {e}")
    return _result(ok)


def test_kn_path_pairs():
    print("Test HAM_007: edge-disjoint Hamiltonian paths of Kn")
    first, second = kn_zigzag_paths(5)
    print(f"  zigzag K5: {first} / {second}")
    ok = first == [0, 1, 4, 2, 3] and second == [1, 2, 0, 3, 4]
    for n in (4, 5, 7):
        p1, p2 = kn_path_pair(n, 3, 0, 1, 2)
        e1 = {frozenset(e) for e in zip(p1, p1[1:])}
        e2 = {frozenset(e) for e in zip(p2, p2[1:])}
        ok = (ok and sorted(p1) == sorted(p2) == list(range(n))
              and (p1[0], p1[-1], p2[0], p2[-1]) == (3, 0, 1, 2)
              and not (e1 & e2))
    try:
        kn_path_pair(5, 0, 1, 1, 2)
        ok = False
    except PreconditionError:
        pass
    return _result(ok)


def test_edhc_and_cist():
    print("Test HAM_008: EDHC and CISTs of C4^K4")
    G = cycle(4)
    hc = list(range(4))
    space = ExpoSpace(G, complete(4))
    a, b = edhc_gkn(G, hc, 4)
    edhc_ok = verify_ham_cycle(a, space) and verify_ham_cycle(b, space) and verify_edge_disjoint(a, b)
    pair = cist_gkn(G, hc, 4)
    cist_ok = verify_cist(pair, space, samples=60, seed=7)
    print(f"  edhc: {edhc_ok}; cist: {cist_ok} ({len(pair.tree1)} + {len(pair.tree2)} edges)")
    ok = (edhc_ok and cist_ok
          and len(pair.tree1) == len(pair.tree2) == space.order - 1)
    broken = CistPair(pair.tree1, pair.tree1, host=pair.host)
    ok = ok and not verify_cist(broken, space)
    try:
        edhc_gkn(G, hc, 3)
        ok = False
    except PreconditionError:
        pass
    return _result(ok)


def test_cist_exhaustive_small_host():
    """Hosts under the exhaustive limit get every vertex pair checked."""
    print("Test HAM_009: exhaustive CIST check")
    k4 = complete(4)
    good = CistPair([(0, 1), (1, 2), (2, 3)], [(0, 2), (0, 3), (1, 3)])
    shared_edge = CistPair([(0, 1), (0, 2), (0, 3)], [(1, 2), (2, 3), (3, 0)])
    shared_inner = CistPair([(0, 1), (1, 2), (2, 3), (3, 4)], [(0, 2), (2, 4), (1, 4), (1, 3)])
    not_spanning = CistPair([(0, 1), (1, 2), (0, 2)], [(0, 3), (1, 3), (2, 3)])
    ok = (verify_cist(good, k4)
          and not verify_cist(shared_edge, k4)
          and not verify_cist(shared_inner, complete(5))
          and not verify_cist(not_spanning, k4))
    print(f"  K4 pair accepted, three broken pairs rejected: {ok}")
    return _result(ok)


def test_verifier_rejections():
    print("Test HAM_010: verifier rejects broken certificates")
    G = cycle(6)
    cert = ham_cycle_gk2(G, list(range(6)))
    space = ExpoSpace(G, complete(2))
    vs = list(cert.cycle.vertices)
    vs[3], vs[7] = vs[7], vs[3]
    swapped = WalkSpec(vs, [], closed=True)
    short = WalkSpec(cert.cycle.vertices[:-2] + [cert.cycle.vertices[0]], [], closed=True)
    ok = not verify_ham_cycle(swapped, space) and not verify_ham_cycle(short, space)
    document = cert.to_dict()
    document["cycle"]["closed"] = False
    try:
        HamCycleCert.from_dict(document)
        ok = False
    except MalformedCertificateError as e:
        print(f"  open cycle rejected: {e}")
    try:
        verify_ham_cycle(WalkSpec([], []), space)
        ok = False
    except MalformedCertificateError:
        pass
    return _result(ok)


def test_power_exponents_and_relabeling():
    """Cubes of connected graphs and squares of 2-connected graphs are
    Hamiltonian-connected, so they lift like complete exponents."""
    print("Test HAM_011: power-graph exponents and pivot relabeling")
    G = cycle(4)
    ok = True
    for H in (graph_core.power_graph(path(5), 3), graph_core.power_graph(cycle(6), 2)):
        space = ExpoSpace(G, H)
        cert = lift_ham_cycle(space, cp_ham_cycle(G, list(range(4)), H.n))
        valid = verify_ham_cycle(cert, space)
        print(f"  {space.name}: {cert.cycle.length} steps, valid {valid}")
        ok = ok and valid and cert.cycle.length == space.order
    shuffled = relabel_pivot_first(_diamond(), 2)
    pivot = pivot_vertex(shuffled)
    walk = cp_ham_cycle(G, list(range(4)), 4)
    try:
        lift_ham_cycle(ExpoSpace(G, shuffled), walk, require="pivot")
        ok = False
    except PreconditionError as e:
        print(f"  unrelabeled exponent refused: {e}")
    fixed = relabel_pivot_first(shuffled, pivot)
    space = ExpoSpace(G, fixed)
    cert = lift_ham_cycle(space, walk, require="pivot")
    print(f"  pivot {pivot} moved to 0, lifted {cert.cycle.length} steps")
    ok = ok and pivot == 1 and pivot_vertex(fixed) == 0 and verify_ham_cycle(cert, space)
    return _result(ok)


def test_alternating_pairs_on_even_bases():
    print("Test HAM_012: alternating cycle pairs of C4, C6, C8 and K4 powers")
    ok = True
    for G in (cycle(4), cycle(6), cycle(8), complete(4)):
        hc = canonical_hamiltonian_cycle(G)
        for n in (2, 3):
            host = cartesian_power(G, n)
            single = cp_ham_cycle(G, hc, n)
            first, second = cp_ham_cycle_pair(G, hc, n)
            verdict = (verify_ham_cycle(single, host) and verify_alternation(single)
                       and verify_ham_cycle(first, host) and verify_ham_cycle(second, host)
                       and verify_alternation(first) and verify_alternation(second)
                       and verify_edge_disjoint(first, second))
            if n == 2:
                verdict = verdict and verify_strong_alternation(single)
                if not G.is_complete():
                    verdict = verdict and edges_partition(host, first, second)
            print(f"  {G.name}^[{n}]: {host.n} vertices, pair valid {verdict}")
            ok = ok and verdict
    return _result(ok)


def test_lifting_into_mobius_exponents():
    """524288-vertex hosts are checked through the codec, never materialized."""
    print("Test HAM_013: lifting into C4^MQ3 and K4^MQ3")
    H = mobius_cube(3)
    ok = True
    for G in (cycle(4), complete(4)):
        space = ExpoSpace(G, H)
        cert = lift_ham_cycle(space, cp_ham_cycle(G, canonical_hamiltonian_cycle(G), H.n))
        valid = verify_ham_cycle(cert, space)
        print(f"  {space.name}: {cert.cycle.length} steps over {space.order} vertices, valid {valid}")
        ok = ok and valid and cert.cycle.length == space.order == 4 ** 8 * 8
    return _result(ok)


def test_edhc_and_cist_larger_exponents():
    print("Test HAM_014: EDHC and CISTs of C4^K6 and C6^K5")
    ok = True
    for G, n in ((cycle(4), 6), (cycle(6), 5)):
        hc = list(range(G.n))
        space = ExpoSpace(G, complete(n))
        a, b = edhc_gkn(G, hc, n)
        edhc_ok = (verify_ham_cycle(a, space) and verify_ham_cycle(b, space)
                   and verify_edge_disjoint(a, b))
        pair = cist_gkn(G, hc, n)
        cist_ok = (verify_cist(pair, space, samples=20, seed=11)
                   and len(pair.tree1) == len(pair.tree2) == space.order - 1)
        print(f"  {space.name}: {space.order} vertices, edhc {edhc_ok}, cist {cist_ok}")
        ok = ok and edhc_ok and cist_ok and space.order % 2 == 0
    return _result(ok)


def main():
    """Run all Hamiltonian construction tests."""
    print("=" * 60)
    print("HAMILTONIAN CONSTRUCTION TESTS")
    print("=" * 60)
    print()

    tests = [
        test_canonical_cycles,
        test_gk2_cycles,
        test_alternating_power_cycles,
        test_split_pair_uses_disjoint_dimensions,
        test_lifting_with_complete_exponent,
        test_lifting_through_a_pivot,
        test_kn_path_pairs,
        test_edhc_and_cist,
        test_cist_exhaustive_small_host,
        test_verifier_rejections,
        test_power_exponents_and_relabeling,
        test_alternating_pairs_on_even_bases,
        test_lifting_into_mobius_exponents,
        test_edhc_and_cist_larger_exponents,
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
