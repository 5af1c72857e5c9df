"""Smoke test for the pyeconkit extension module.

Uses an installed pyeconkit if there is one (``maturin develop``);
otherwise loads the library built by
``cargo build -p econkit-py --features extension-module``.
"""

import importlib.util
import math
import pathlib
import sys


def load():
    try:
        import pyeconkit

        return pyeconkit
    except ImportError:
        pass
    root = pathlib.Path(__file__).resolve().parents[3]
    for profile in ("release", "debug"):
        lib = root / "target" / profile / "libpyeconkit.so"
        if lib.exists():
            spec = importlib.util.spec_from_file_location("pyeconkit", lib)
            module = importlib.util.module_from_spec(spec)
            spec.loader.exec_module(module)
            return module
    sys.exit("pyeconkit not found; build it with cargo or maturin first")


ek = load()

a = ek.Matrix([[1.0, 1.0], [1.0, -1.0]])
assert a.det() == -2.0
assert ek.solve(a, [3.0, 1.0])["particular"] == [2.0, 1.0]
assert (a @ a.inverse()) == ek.Matrix.identity(2)

lp = ek.LinearProgram([3.0, 2.0], [[1.0, 1.0], [1.0, 0.0]], [4.0, 2.0])
sol = lp.solve()
assert sol["status"] == "Optimal" and sol["z"] == 10.0 and sol["x"] == [2.0, 2.0]
assert lp.graph()["solution"]["z"] == 10.0

table = ek.leontief_table(ek.Matrix([[0.0, 2.0], [1.0, 0.0]]), [2.0, 1.0])
assert table["q"] == [4.0, 2.0]
assert ek.total_output(table["P"], [2.0, 1.0]) == [4.0, 2.0]

assert round(ek.compound(100.0, 1.05, 2), 2) == 110.25
plan = ek.redemption_plan(100000.0, 5.0, t=5.0)
assert round(plan["schedule"]["rows"][0]["balance"], 2) == 95000.0
assert abs(plan["duration"] - 14.2067) < 1e-4
pension = ek.pension_plan(100000.0, 5.0, 12, 500.0)
assert round(pension["first_year_interest"], 2) == 4837.50

f = ek.Expr("x^2")
assert str(f.diff()) == "2*x"
assert f.elasticity(3.0) == 2.0
assert str(ek.Expr("x").antiderivative()) == "0.5*x^2"
assert abs(ek.Expr("exp(x)").integrate(0.0, 1.0) - (math.e - 1)) < 1e-10

costs = ek.cost_analysis(1.0, -6.0, 15.0, 40.0)
assert costs["x_w"] == 2.0 and costs["x_g1"] == 3.0
profit = ek.profit_analysis(ek.Expr("20 - x"), (1.0, -6.0, 15.0, 4.0), 0.0, 20.0)
assert abs(profit["x_m"] - 3.775) < 1e-3
market = ek.market_strategies(ek.Expr("10 - x"), ek.Expr("x"), 0.0, 10.0)
assert market["u2"] == 37.5 and market["u3"] == 12.5
assert ek.psych_value(-9.0) == -2.0

try:
    ek.Expr("1/x").integrate(-1.0, 1.0)
except ek.NumericalError as e:
    assert "pole" in str(e)
else:
    raise AssertionError("pole not reported")

try:
    ek.Matrix([[1.0, 2.0], [2.0, 4.0]]).inverse()
except ek.NoSolutionError:
    pass
else:
    raise AssertionError("singular matrix inverted")

print("pyeconkit smoke test passed")
