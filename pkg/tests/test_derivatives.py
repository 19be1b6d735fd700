import math
from fractions import Fraction

import pytest

from divdiff import (SampleSet, alternating_zeta, central_coeffs,
                     central_derivative, derivative_lincomb,
                     derivative_uneven, diff_op_counts, forward_coeffs,
                     forward_derivative, grid_lincomb_weight_sum,
                     harmonic_number, known_stencils, lincomb_weight_sum,
                     rho_coeffs, series_derivative, stencil_weights,
                     twosided_coeffs, twosided_derivative)
from divdiff.counting import OpTally

from conftest import (random_float_samples, random_rational_nodes,
                      random_rational_poly)


class TestRho:
    def test_even_grid_left_endpoint(self):
        h = 0.2
        s = SampleSet([1.0, 1.0 + h, 1.0 + 2 * h], [0.0, 0.0, 0.0])
        rho = rho_coeffs(s.subset((1, 2)), 1.0, 1)
        # two right neighbours: 2 - 1/2 over h
        assert rho[1] == pytest.approx(1.5 / h, rel=1e-12)

    def test_symmetric_grid_odd_orders_vanish(self):
        s = SampleSet([-0.3, 0.3], [0.0, 0.0])
        rho = rho_coeffs(s, 0.0, 3)
        assert rho[1] == pytest.approx(0.0, abs=1e-14)
        assert rho[3] == pytest.approx(0.0, abs=1e-12)

    def test_symmetric_grid_exact_zero_in_rational_mode(self):
        nodes = [Fraction(k) for k in (-2, -1, 1, 2)]
        s = SampleSet(nodes, [Fraction(0)] * 4)
        rho = rho_coeffs(s, Fraction(0), 3)
        assert rho[1] == 0
        assert rho[3] == 0

    def test_single_node(self):
        s = SampleSet([2.0], [5.0])
        rho = rho_coeffs(s, 1.5, 3)
        for m in (1, 2, 3):
            assert rho[m] == pytest.approx((2.0 - 1.5) ** -m, rel=1e-14)

    def test_rejects_node_point(self):
        s = SampleSet([0.0, 1.0], [0.0, 1.0])
        with pytest.raises(ValueError, match="node"):
            rho_coeffs(s, 1.0, 2)


class TestDerivativeUneven:
    def test_cubic_second_derivative(self):
        xs = [0.1, 0.9, 1.7, 2.3]
        s = SampleSet(xs, [x ** 3 for x in xs])
        assert derivative_uneven(s, 1.0, 2) == pytest.approx(6.0, rel=1e-10)

    def test_square_first_derivative_everywhere(self):
        xs = [0.2, 1.1, 2.5]
        s = SampleSet(xs, [x * x for x in xs])
        for x in (0.5, 1.9, 3.4):
            assert derivative_uneven(s, x, 1) == pytest.approx(2 * x, rel=1e-11)

    def test_exact_against_symbolic_derivative(self, rng):
        poly = random_rational_poly(rng, 4)
        s = poly.sample(random_rational_nodes(rng, 5))
        x = Fraction(4, 17)
        d3 = poly.derivative(3)
        assert derivative_uneven(s, x, 3) == d3(x)
        assert derivative_uneven(s, x, 3, fx=poly(x)) == d3(x)

    def test_node_point_rejected_with_routing_hint(self):
        s = SampleSet([0.0, 1.0, 2.0], [0.0, 1.0, 4.0])
        with pytest.raises(ValueError, match="grid formula or derivative_lincomb"):
            derivative_uneven(s, 1.0, 1)

    def test_order_out_of_range(self):
        s = SampleSet([0.0, 1.0, 2.0], [0.0, 1.0, 4.0])
        with pytest.raises(ValueError, match="out of range"):
            derivative_uneven(s, 0.5, 3)


class TestForwardDerivative:
    def test_three_point_forward_stencil(self):
        # n=2, t=1 collapses to (-3, 4, -1) / 2h
        h = 0.1
        vals = [2.0, -1.0, 0.5]
        want = (-3 * vals[0] + 4 * vals[1] - vals[2]) / (2 * h)
        assert forward_derivative(vals, h, 1) == pytest.approx(want, rel=1e-13)

    def test_constant_data(self):
        for t in (1, 2, 3):
            assert forward_derivative([3.0] * 5, 0.2, t) == pytest.approx(0.0, abs=1e-10)

    def test_exp_first_derivative_order(self):
        h = 0.1
        vals = [math.exp(i * h) for i in range(5)]
        err = abs(forward_derivative(vals, h, 1) - 1.0)
        assert err <= 10 * h ** 4

    def test_u1_is_harmonic_number(self):
        for n in range(1, 21):
            co = forward_coeffs(n, 1)
            assert co.u(1) == harmonic_number(n)
            assert float(co.u(1)) == pytest.approx(
                sum(1.0 / i for i in range(1, n + 1)), rel=1e-12)


class TestTwoSidedAndCentral:
    @pytest.mark.parametrize("m,n,name", [
        (4, 0, "backward-5pt-d2"), (3, 1, "semi-backward-5pt-d2"),
        (2, 2, "central-5pt-d2"), (1, 3, "semi-forward-5pt-d2"),
        (0, 4, "forward-5pt-d2")])
    def test_five_point_stencils_match_golden(self, m, n, name):
        got = stencil_weights(m, n, 2)
        golden = known_stencils()[name]
        assert got.offsets == golden.offsets
        assert got.weights == golden.weights

    def test_twosided_reduces_to_forward(self):
        vals = [0.3, 1.9, -0.7, 0.2]
        got = twosided_derivative(vals, 0.25, 2, m=0)
        want = forward_derivative(vals, 0.25, 2)
        assert got == pytest.approx(float(want), rel=1e-12)

    def test_central_matches_twosided(self):
        vals = [0.3, 1.9, -0.7, 0.2, 1.1]
        a = central_derivative(vals, 0.2, 2)
        b = twosided_derivative(vals, 0.2, 2, m=2)
        assert a == pytest.approx(float(b), rel=1e-12)

    def test_classic_central_first_derivative(self):
        vals = [1.0, 5.0, 2.0]
        h = 0.4
        assert central_derivative(vals, h, 1) == pytest.approx(
            (vals[2] - vals[0]) / (2 * h), rel=1e-13)

    def test_odd_data_even_order_gives_zero(self):
        vals = [-2.0, -1.0, 0.0, 1.0, 2.0]  # odd about the centre
        assert central_derivative(vals, 0.1, 2) == pytest.approx(0.0, abs=1e-9)

    def test_stencil_moment_conditions_exact(self, rng):
        for m, n, t in ((2, 2, 2), (1, 3, 2), (0, 4, 3), (3, 3, 5), (2, 1, 1)):
            st = stencil_weights(m, n, t)
            for j in range(m + n + 1):
                want = math.factorial(t) if j == t else 0
                got = sum(c * Fraction(off) ** j
                          for c, off in zip(st.weights, st.offsets))
                assert got == want, (m, n, t, j)

    def test_stencil_apply_equals_twosided(self, rng):
        vals = [rng.uniform(-1, 1) for _ in range(6)]
        st = stencil_weights(2, 3, 2)
        assert st.apply(vals, 0.3) == pytest.approx(
            twosided_derivative(vals, 0.3, 2, m=2), rel=1e-12)

    def test_grid_exactness_in_rational_mode(self, rng):
        m, n = 2, 3
        h = Fraction(1, 4)
        for t in (1, 2, 3):
            poly = random_rational_poly(rng, m + n)
            vals = [poly(i * h) for i in range(-m, n + 1)]
            want = poly.derivative(t)(Fraction(0))
            assert twosided_derivative(vals, h, t, m=m) == want

    def test_accuracy_order_metadata(self):
        assert stencil_weights(2, 2, 2).accuracy_order == 4
        assert stencil_weights(1, 3, 2).accuracy_order == 3
        assert stencil_weights(0, 4, 2).accuracy_order == 3
        assert stencil_weights(1, 1, 1).accuracy_order == 2

    def test_empirical_fourth_order_convergence(self):
        a = 0.5
        errs = []
        for h in (0.1, 0.05, 0.025):
            vals = [math.sin(a + i * h) for i in (-2, -1, 0, 1, 2)]
            errs.append(abs(central_derivative(vals, h, 2) + math.sin(a)))
        for e1, e2 in zip(errs, errs[1:]):
            order = math.log2(e1 / e2)
            assert abs(order - 4.0) <= 0.3

    def test_central_A_limit_is_alternating_unit(self):
        co = central_coeffs(1000, 2)
        for i in (1, 2, 3):
            assert float(co.A[i]) == pytest.approx((-1) ** (i - 1), abs=1e-2)

    def test_range_validation(self):
        with pytest.raises(ValueError):
            twosided_derivative([1.0, 2.0], 0.1, 3, m=1)
        with pytest.raises(ValueError, match="odd length"):
            central_derivative([1.0, 2.0, 3.0, 4.0], 0.1, 1)


class TestLincomb:
    def test_single_subset_collapse(self):
        s = SampleSet([0.0, 1.0, 2.0], [0.0, 1.0, 4.0])
        assert derivative_lincomb(s, 0.6, 2) == pytest.approx(2.0, rel=1e-12)

    def test_exactness_in_rational_mode(self, rng):
        poly = random_rational_poly(rng, 4)
        s = poly.sample(random_rational_nodes(rng, 5))
        x = Fraction(3, 8)
        for k in (1, 2, 3):
            assert derivative_lincomb(s, x, k) == poly.derivative(k)(x)
            assert derivative_lincomb(s, x, k, fx=poly(x)) == \
                poly.derivative(k)(x)

    def test_agrees_with_recursive_path(self, rng):
        for n, k in ((4, 1), (5, 2), (6, 3), (8, 2)):
            nodes = [2.0 * i / n + 0.05 * math.sin(3.7 * i) for i in range(n + 1)]
            s = SampleSet(nodes, [math.exp(x) * math.cos(x) for x in nodes])
            x = 0.5 * (nodes[n // 2] + nodes[n // 2 + 1])
            a = derivative_lincomb(s, x, k)
            b = derivative_uneven(s, x, k)
            assert a == pytest.approx(b, rel=1e-8)

    def test_weight_sum_identity(self, rng):
        for n in (3, 5, 7):
            for k in (1, 2, 3):
                nodes = [2.0 * (i + 0.3 * rng.uniform(-1, 1)) / n
                         for i in range(n + 1)]
                mid = n // 2
                x = 0.5 * (nodes[mid] + nodes[mid + 1])
                total = lincomb_weight_sum(nodes, x, k)
                assert total == pytest.approx(1.0, abs=1e-10)

    def test_grid_weight_sum_identity(self):
        for n in range(1, 8):
            for k in range(1, min(n, 3) + 1):
                assert grid_lincomb_weight_sum(n, k) == 1

    def test_grid_specialization_matches_forward(self):
        h, n, k = 0.05, 5, 2
        a = 0.3
        f = math.exp
        rest = SampleSet([a + i * h for i in range(1, n + 1)],
                         [f(a + i * h) for i in range(1, n + 1)])
        got = derivative_lincomb(rest, a, k, fx=f(a))
        want = forward_derivative([f(a + i * h) for i in range(n + 1)], h, k)
        assert got == pytest.approx(float(want), abs=100 * h ** 3)

    def test_combinatorial_guard(self):
        nodes = list(range(60))
        s = SampleSet(nodes, [0.0] * 60)
        with pytest.raises(ValueError, match="guard"):
            derivative_lincomb(s, 0.5, 25)

    def test_k_out_of_range(self):
        s = SampleSet([0.0, 1.0], [0.0, 1.0])
        with pytest.raises(ValueError):
            derivative_lincomb(s, 0.5, 2)


class TestSeries:
    def test_sigma2_is_pi_squared_over_12(self):
        assert alternating_zeta(2) == pytest.approx(math.pi ** 2 / 12, abs=1e-12)

    def test_first_derivative_of_cos(self):
        got = series_derivative(math.cos, 0.3, 0.3, 1, 500)
        want = -math.sin(0.3)
        assert abs(got - want) / abs(want) <= 1e-2

    def test_error_shrinks_with_more_terms(self):
        want = -math.sin(0.3)
        e250 = abs(series_derivative(math.cos, 0.3, 0.3, 1, 250) - want)
        e1000 = abs(series_derivative(math.cos, 0.3, 0.3, 1, 1000) - want)
        assert e1000 < e250

    def test_second_derivative_of_sin(self):
        got = series_derivative(math.sin, 0.7, 0.2, 2, 800)
        assert got == pytest.approx(-math.sin(0.7), rel=2e-2)

    def test_odd_function_even_order_data_sum_vanishes(self):
        # f odd about a: the sampled combination cancels pairwise for even k
        a = 0.0
        got = series_derivative(math.sin, a, 0.4, 2, 300)
        assert got == pytest.approx(0.0, abs=1e-12)

    def test_validation(self):
        with pytest.raises(ValueError):
            series_derivative(math.cos, 0.0, 0.3, 0, 10)
        with pytest.raises(ValueError):
            series_derivative(math.cos, 0.0, 1.5, 1, 10)


class TestDiffOpCounts:
    def test_spot_values(self):
        c = diff_op_counts(2, 1)
        assert c.divisions == 9
        assert c.additions == 7
        for n in (2, 3, 5):
            assert diff_op_counts(n, 1).multiplications == 2 * n * (n + 1) + 1

    def test_instrumented_matches(self, rng):
        for n in range(2, 7):
            s = random_float_samples(rng, n, lo=0.0, hi=2.0)
            for k in (1, 2, 3):
                if k > n:
                    continue
                tally = OpTally()
                derivative_uneven(s, 2.5, k, tally=tally)
                assert tally.snapshot() == diff_op_counts(n, k)

    def test_instrumented_value_unchanged(self, rng):
        s = random_float_samples(rng, 5, lo=0.0, hi=2.0)
        tally = OpTally()
        assert derivative_uneven(s, 2.2, 2, tally=tally) == \
            derivative_uneven(s, 2.2, 2)
