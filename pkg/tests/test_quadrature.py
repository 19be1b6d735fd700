import math
from fractions import Fraction

import pytest

from divdiff import (SampleSet, central_quad_weights, even_quad_weights,
                     known_stencils, quad_central, quad_composite, quad_even,
                     quad_uneven, uneven_quad_plan)

from conftest import random_rational_nodes, random_rational_poly


class TestEvenWeights:
    def test_trapezoid(self):
        plan = even_quad_weights(1)
        assert plan.node_weights == (Fraction(1, 2), Fraction(1, 2))

    def test_simpson(self):
        assert even_quad_weights(2).node_weights == \
            (Fraction(1, 3), Fraction(4, 3), Fraction(1, 3))

    def test_seven_point_rule(self):
        want = tuple(Fraction(n, 140) for n in (41, 216, 27, 272, 27, 216, 41))
        assert even_quad_weights(6).node_weights == want

    def test_golden_catalog_agreement(self):
        golden = known_stencils()
        assert even_quad_weights(2).node_weights == golden["simpson"].weights
        assert even_quad_weights(6).node_weights == golden["nc7"].weights

    @pytest.mark.parametrize("n", range(1, 9))
    def test_palindromic_and_normalized(self, n):
        w = even_quad_weights(n).node_weights
        assert w == w[::-1]
        assert sum(w) == n

    @pytest.mark.parametrize("n", range(1, 8))
    def test_degree_of_exactness(self, n):
        plan = even_quad_weights(n)
        top = n + 1 if n % 2 == 0 else n
        for d in range(top + 1):
            got = plan.apply([Fraction(i) ** d for i in range(n + 1)], Fraction(1))
            want = Fraction(n) ** (d + 1) / (d + 1)
            assert got == want, (n, d)

    def test_json_dict(self):
        d = even_quad_weights(2).to_json_dict()
        assert d == {"n": 2, "weights_num": [1, 4, 1], "weights_den": 3}


class TestQuadEven:
    def test_simpson_on_square(self):
        assert quad_even([0.0, 1.0, 4.0], 1.0) == pytest.approx(8.0 / 3.0)

    def test_constant(self):
        for n in (1, 2, 5):
            vals = [3.5] * (n + 1)
            assert quad_even(vals, 0.5) == pytest.approx(3.5 * n * 0.5, rel=1e-13)

    def test_seven_point_is_exact_through_degree_seven(self):
        vals = [Fraction(i) ** 6 for i in range(7)]
        assert quad_even(vals, Fraction(1)) == Fraction(6 ** 7, 7)
        vals = [Fraction(i) ** 7 for i in range(7)]
        assert quad_even(vals, Fraction(1)) == Fraction(6 ** 8, 8)

    def test_needs_two_values(self):
        with pytest.raises(ValueError):
            quad_even([1.0], 0.1)


class TestQuadCentral:
    def test_three_point_is_simpson(self):
        vals = [1.0, 4.0, 2.0]
        h = 0.3
        want = h / 3 * (vals[0] + 4 * vals[1] + vals[2])
        assert quad_central(vals, h) == pytest.approx(want, rel=1e-13)

    def test_odd_function_integrates_to_zero(self):
        vals = [-8.0, -1.0, 0.0, 1.0, 8.0]
        assert quad_central(vals, 0.25) == pytest.approx(0.0, abs=1e-14)

    def test_constant(self):
        for n in (1, 2, 3):
            vals = [2.0] * (2 * n + 1)
            assert quad_central(vals, 0.5) == pytest.approx(2.0 * 2 * n * 0.5)

    @pytest.mark.parametrize("n", (1, 2, 3))
    def test_matches_even_rule_over_same_points(self, n):
        assert central_quad_weights(n).node_weights == \
            even_quad_weights(2 * n).node_weights

    def test_exact_through_degree_2n(self, rng):
        n = 2
        poly = random_rational_poly(rng, 2 * n)
        h = Fraction(1, 3)
        vals = [poly(i * h) for i in range(-n, n + 1)]
        want = poly.definite_integral(-n * h, n * h)
        assert quad_central(vals, h) == want

    def test_needs_odd_length(self):
        with pytest.raises(ValueError, match="odd length"):
            quad_central([1.0, 2.0, 3.0, 4.0], 0.1)

    def test_json_dict(self):
        d = central_quad_weights(1).to_json_dict()
        assert d == {"n": 1, "weights_num": [1, 4, 1], "weights_den": 3}


class TestQuadUneven:
    def test_constant(self):
        s = SampleSet([0.1, 0.7, 1.3], [4.0, 4.0, 4.0])
        assert quad_uneven(s, 0.2, 0.5) == pytest.approx(4.0 * 0.5, rel=1e-12)

    def test_linear_exactness(self):
        s = SampleSet([0.1, 0.7, 1.3], [0.1, 0.7, 1.3])
        assert quad_uneven(s, 0.2, 0.5) == pytest.approx(0.225, rel=1e-12)

    def test_quartic_exact_in_rational_mode(self):
        nodes = [Fraction(1, 20), Fraction(1, 4), Fraction(1, 2),
                 Fraction(3, 4), Fraction(19, 20)]
        s = SampleSet(nodes, [x ** 4 for x in nodes])
        x, h = Fraction(3, 10), Fraction(2, 5)
        want = ((x + h) ** 5 - x ** 5) / 5
        assert quad_uneven(s, x, h) == want

    def test_random_polynomial_exactness(self, rng):
        poly = random_rational_poly(rng, 4)
        s = poly.sample(random_rational_nodes(rng, 5))
        x, h = Fraction(-1, 7), Fraction(3, 5)
        assert quad_uneven(s, x, h) == poly.definite_integral(x, x + h)

    def test_weights_sum_to_step(self, rng):
        poly = random_rational_poly(rng, 3)
        s = poly.sample(random_rational_nodes(rng, 4))
        plan = uneven_quad_plan(s, Fraction(1, 9), Fraction(2, 7))
        assert sum(plan.node_weights) == Fraction(2, 7)

    def test_anchor_must_be_off_node(self):
        s = SampleSet([0.1, 0.7, 1.3], [0.0, 0.0, 0.0])
        with pytest.raises(ValueError, match="anchor"):
            quad_uneven(s, 0.7, 0.5)


class TestComposite:
    def test_simpson_on_sin(self):
        got = quad_composite(math.sin, 0.0, math.pi, 8)
        # classical error bound for eight three-point panels: 2.59e-5
        assert got == pytest.approx(2.0, abs=2.6e-5)

    def test_constant(self):
        assert quad_composite(lambda x: 2.5, 1.0, 4.0, 3) == \
            pytest.approx(2.5 * 3.0, rel=1e-14)

    def test_precomputed_values_match_sampler(self):
        vals = [math.sin(x * math.pi / 16) for x in range(17)]
        from_values = quad_composite(vals, 0.0, math.pi, 8)
        from_sampler = quad_composite(math.sin, 0.0, math.pi, 8)
        assert from_values == from_sampler
        with pytest.raises(ValueError, match="need 17 values"):
            quad_composite(vals[:-1], 0.0, math.pi, 8)

    def test_halving_divides_error_by_sixteen(self):
        e1 = abs(quad_composite(math.sin, 0.0, math.pi, 8) - 2.0)
        e2 = abs(quad_composite(math.sin, 0.0, math.pi, 16) - 2.0)
        assert e1 / e2 == pytest.approx(16.0, rel=0.15)

    def test_convergence_order_four(self):
        errs = [abs(quad_composite(math.sin, 0.0, math.pi, p) - 2.0)
                for p in (4, 8, 16, 32)]
        for e1, e2 in zip(errs, errs[1:]):
            assert math.log2(e1 / e2) == pytest.approx(4.0, abs=0.2)

    def test_validation(self):
        with pytest.raises(ValueError):
            quad_composite(math.sin, 1.0, 0.0, 4)
        with pytest.raises(ValueError):
            quad_composite(math.sin, 0.0, 1.0, 0)
