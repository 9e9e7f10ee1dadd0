#!/usr/bin/env python3
"""
Graph Expression Tests

Parsing, canonical names, orders computed without building, and evaluation
of nested expressions.
"""

import os
import sys
import traceback

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from expograph import expressions, graph_core
from expograph.errors import BudgetExceededError, ExpressionParseError, InvalidParameterError


def _result(ok):
    print(f"  Result: {'✅ PASS' if ok else '❌ FAIL'}")
    print()
    return ok


def test_parse_and_canonical():
    print("Test EXPR_001: parsing and canonical form")
    cases = {
        "exp(k2, k2)": "EXP(K2,K2)",
        "EXP(K4,EXP(K2,K2))": "EXP(K4,EXP(K2,K2))",
        " Omega( 3 ) ": "OMEGA(3)",
        "psi(C4,2)": "PSI(C4,2)",
        "CPOW(MQ3,2)": "CPOW(MQ3,2)",
        "B(2,3)": "B(2,3)",
        "kz(2,2)": "KZ(2,2)",
        "POW(C8,2)": "POW(C8,2)",
    }
    ok = True
    for text, expected in cases.items():
        got = expressions.canonical(text)
        print(f"  {text!r} -> {got}")
        ok = ok and got == expected
    return _result(ok)


def test_parse_errors():
    print("Test EXPR_002: malformed expressions")
    bad = ["", "EXP(K2)", "K", "FOO(K2,K2)", "EXP(K2,K2", "K2 K2", "CPOW(K2,K2)", "B(2)", "X3", "K2$"]
    rejected = []
    for text in bad:
        try:
            expressions.parse_expression(text)
        except ExpressionParseError as e:
            rejected.append(text)
            print(f"  {text!r}: {e}")
    return _result(rejected == bad)


def test_orders_without_building():
    print("Test EXPR_003: orders from the expression alone")
    cases = {
        "EXP(K2,K2)": 8,
        "EXP(K2,MQ2)": 64,
        "EXP(Q2,MQ1)": 32,
        "KZ(2,3)": 12,
        "CPROD(C4,K3)": 12,
        "CPOW(K3,4)": 81,
        "POW(C8,3)": 8,
        "OMEGA(4)": 32768,
        "PSI(3)": 2048,
    }
    ok = True
    for text, expected in cases.items():
        got = expressions.order(text)
        print(f"  |V({text})| = {got}")
        ok = ok and got.value == expected
    huge = expressions.order("PSI(5)")
    ok = ok and huge.value is None and huge.text == "2^(2^2059+2059)"
    product = expressions.order("CPROD(PSI(5),K2)")
    power = expressions.order("CPOW(PSI(5),2)")
    print(f"  symbolic: {product.text}, {power.text}")
    ok = (ok and product.value is None and product.text == "(2^(2^2059+2059))*2"
          and power.value is None and power.text == "(2^(2^2059+2059))^2")
    return _result(ok)


def test_build_nested():
    print("Test EXPR_004: building nested expressions")
    nested = expressions.build("EXP(K3,EXP(K2,K2))")
    omega3 = expressions.build("OMEGA(3)")
    omega_c4 = expressions.build("OMEGA(C4,2)")
    print(f"  {nested!r}, {omega3!r}, {omega_c4!r}")
    ok = (nested.n == 3 ** 8 * 8 and nested.name == "EXP(K3,EXP(K2,K2))"
          and set(nested.degrees.tolist()) == {4}
          and omega3.n == 128 and graph_core.diameter(omega3) == 10
          and omega_c4.n == 4 ** 4 * 4 and omega_c4.name == "OMEGA(C4,2)")
    return _result(ok)


def test_factors_and_space():
    print("Test EXPR_005: factors and implicit spaces")
    G, H = expressions.factors("OMEGA(3)")
    G2, H2 = expressions.factors("PSI(3)")
    space = expressions.space("EXP(C8,K2)")
    print(f"  OMEGA(3) = {G.name}^{H.name}; PSI(3) = {G2.name}^{H2.name}; {space!r}")
    ok = (G.n == 8 and H.n == 2 and G2.n == 2 and H2.n == 8
          and space.name == "EXP(C8,K2)" and space.order == 128
          and expressions.is_exponential("OMEGA(2)")
          and not expressions.is_exponential("OMEGA(1)")
          and not expressions.is_exponential("CPOW(K2,3)"))
    try:
        expressions.factors("C5")
        ok = False
    except InvalidParameterError:
        pass
    return _result(ok)


def test_family_stats_and_budget():
    print("Test EXPR_006: family stats and the build budget")
    stats = expressions.family_stats("OMEGA(4)")
    print(f"  OMEGA(4): order {stats.order}, diameter {stats.diameter}")
    ok = stats.order.value == 32768 and stats.diameter.value == 22
    try:
        expressions.build("PSI(4)")
        ok = False
    except BudgetExceededError as e:
        print(f"  PSI(4) refused: {e}")
    try:
        expressions.build("EXP(K4,K5)", max_vertices=1000)
        ok = False
    except BudgetExceededError:
        pass
    return _result(ok)


def main():
    """Run all expression tests."""
    print("=" * 60)
    print("GRAPH EXPRESSION TESTS")
    print("=" * 60)
    print()

    tests = [
        test_parse_and_canonical,
        test_parse_errors,
        test_orders_without_building,
        test_build_nested,
        test_factors_and_space,
        test_family_stats_and_budget,
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
