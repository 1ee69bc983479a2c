"""Expansion of (w * D)^n into powers of the derivative."""

from __future__ import annotations

import json
import random

from conftest import SMALL_PRESETS, random_polynomial
from normord import (
    Grammar,
    NormalForm,
    Polynomial,
    family_row,
    mono,
    normal_order_power,
    parse,
    variable,
)

x = variable("x")
y = variable("y")
q = variable("q")


def direct_power(w: Polynomial, g: Grammar, n: int, target: Polynomial) -> Polynomial:
    for _ in range(n):
        target = w * g.derive(target)
    return target


class TestGoldens:
    def test_square_under_eulerian(self):
        nf = normal_order_power(x, Grammar.preset("eulerian-xy"), 2)
        assert nf.coefficient(1) == x * y
        assert nf.coefficient(2) == x ** 2

    def test_fourth_power_with_weight(self):
        nf = normal_order_power(x, Grammar.preset("pq-eulerian"), 4)
        assert nf.coefficient(1) == parse("x*y^3 + 4*p*x^2*y^2 + p^2*x^3*y")
        assert nf.coefficient(2) == parse("7*x^2*y^2 + 4*p*x^3*y")
        assert nf.coefficient(3) == parse("6*x^3*y")
        assert nf.coefficient(4) == parse("x^4")

    def test_fourth_power_two_symbol_multiplier(self):
        nf = normal_order_power(x * y, Grammar.preset("eulerian-full"), 4)
        assert nf.coefficient(1) == parse("x*y^4 + 11*x^2*y^3 + 11*x^3*y^2 + x^4*y")
        assert nf.coefficient(4) == parse("x^4*y^4")

    def test_stirling_rows(self):
        g = Grammar.preset("stirling-second")
        for n in range(11):
            nf = normal_order_power(x, g, n)
            row = family_row("S2", n)
            for k in range(n + 1):
                assert nf.coefficient(k) == row.get((k,), 0) * x ** k

    def test_exponential_surrogate_rows(self):
        # With the rule a -> a, the multiplier acts like an exponential and
        # the coefficients carry unsigned first-kind Stirling numbers.
        g = Grammar.preset("exp-surrogate")
        av = variable("a")
        for n in range(11):
            nf = normal_order_power(av, g, n)
            row = family_row("S1", n)
            for k in range(n + 1):
                assert nf.coefficient(k) == row.get((k,), 0) * av ** n


class TestStructure:
    def test_order_zero_identity(self):
        nf = normal_order_power(x, Grammar.preset("eulerian-xy"), 0)
        assert nf.order == 0
        assert nf.coeffs == (Polynomial.one(),)

    def test_constant_coefficient_vanishes(self):
        for name in ("eulerian-xy", "eulerian-full", "second-order", "swap"):
            g = Grammar.preset(name)
            for n in range(1, 6):
                nf = normal_order_power(x, g, n)
                assert nf.coefficient(0).is_zero

    def test_coefficient_out_of_range_is_zero(self):
        nf = normal_order_power(x, Grammar.preset("eulerian-xy"), 2)
        assert nf.coefficient(5).is_zero

    def test_length_matches_order(self):
        nf = normal_order_power(x, Grammar.preset("eulerian-xy"), 4)
        assert len(nf.coeffs) == 5

    def test_homogeneous_coefficients(self):
        g = Grammar.preset("eulerian-xy")
        for n in range(1, 8):
            nf = normal_order_power(x, g, n)
            for k in range(1, n + 1):
                assert nf.coefficient(k).homogeneous_degree() == n

    def test_render(self):
        nf = normal_order_power(x, Grammar.preset("eulerian-xy"), 2)
        assert nf.render() == "D^1: x*y ; D^2: x^2"

    def test_render_order_zero(self):
        nf = normal_order_power(x, Grammar.preset("eulerian-xy"), 0)
        assert nf.render() == "D^0: 1"


class TestSpecialize:
    def test_weighted_cubic(self):
        nf = normal_order_power(x, Grammar.preset("pq-eulerian"), 3)
        want = parse("(x*y^2 + p*x^2*y)*q + 3*x^2*y*q^2 + x^3*q^3")
        assert nf.specialize(q) == want

    def test_identity_normal_form(self):
        nf = normal_order_power(x, Grammar.preset("pq-eulerian"), 0)
        assert nf.specialize(q) == Polynomial.one()

    def test_total_mass_is_factorial(self):
        import math

        g = Grammar.preset("pq-eulerian")
        for n in range(8):
            total = normal_order_power(x, g, n).specialize(Polynomial.one())
            value = total.evaluate({"p": 1, "x": 1, "y": 1})
            assert value == math.factorial(n)

    def test_scalar_value(self):
        nf = normal_order_power(x, Grammar.preset("eulerian-xy"), 2)
        assert nf.specialize(1) == x * y + x ** 2


class TestApply:
    def test_cubic_on_symbol(self):
        nf = normal_order_power(x, Grammar.preset("eulerian-xy"), 3)
        assert nf.apply_to(x) == parse("x*y^3 + 4*x^2*y^2 + x^3*y")

    def test_order_zero(self):
        nf = normal_order_power(x, Grammar.preset("eulerian-xy"), 0)
        target = y ** 2 + 3
        assert nf.apply_to(target) == target

    def test_swap_square_on_product(self):
        nf = normal_order_power(x * y, Grammar.preset("swap"), 2)
        assert nf.apply_to(x * y) == parse("x*y^5 + 6*x^3*y^3 + x^5*y")

    def test_path_independence_sampled(self):
        rng = random.Random(3303)
        for _ in range(120):
            g = Grammar.preset(rng.choice(SMALL_PRESETS))
            w = random_polynomial(rng, "abxyzuvw", max_terms=2, max_exp=2)
            f = random_polynomial(rng, "abxyzuvw", max_terms=2, max_exp=2)
            n = rng.randint(0, 4)
            nf = normal_order_power(w, g, n)
            assert nf.apply_to(f) == direct_power(w, g, n, f)


class TestXiFactorization:
    def test_preset_multipliers(self):
        cases = [
            (x, "eulerian-xy", 5),
            (x * y, "eulerian-full", 5),
            (x * y * variable("z"), "full-ternary", 4),
            (variable("w"), "elementary-symmetric", 5),
            (x, "second-order", 5),
        ]
        for w, name, n in cases:
            nf = normal_order_power(w, Grammar.preset(name), n)
            xs = nf.xi_coefficients()
            assert xs is not None
            for k in range(n + 1):
                assert xs[k] * w ** k == nf.coefficient(k)

    def test_non_monomial_multiplier(self):
        w = x + y
        nf = normal_order_power(w, Grammar.preset("swap"), 4)
        xs = nf.xi_coefficients()
        assert xs is not None
        assert xs[4] == Polynomial.one()

    def test_order_zero(self):
        nf = normal_order_power(x, Grammar.preset("eulerian-xy"), 0)
        assert nf.xi_coefficients() == [Polynomial.one()]


class TestJson:
    def test_shape_and_round_trip(self):
        nf = normal_order_power(x, Grammar.preset("eulerian-xy"), 3)
        blob = json.loads(json.dumps(nf.to_json_dict()))
        assert blob["n"] == 3
        assert Polynomial.from_json_dict(blob["w"]) == x
        assert len(blob["coeffs"]) == 4
        assert Polynomial.from_json_dict(blob["coeffs"][2]) == nf.coefficient(2)
        assert Grammar.from_text(blob["grammar"]) == Grammar.preset("eulerian-xy")
