import pytest
from hypothesis import given, settings, strategies as st

import wsgap as w
from wsgap.core import add

P453 = w.curve_params(4, 5, 3)
P452 = w.curve_params(4, 5, 2)
P473 = w.curve_params(4, 7, 3)
POOL = [w.curve_params(a, b, m) for a, b, m in
        [(2, 3, 2), (3, 4, 3), (4, 5, 2), (4, 5, 3), (2, 5, 3), (5, 4, 4)]]

params_st = st.sampled_from(POOL)


def tuple_st(p, lo=-12, hi=18):
    return st.tuples(*([st.integers(lo, hi)] * p.m))


class TestLocalProfile:
    def test_ones(self):
        prof = w.local_absolute_maximals(P453, (1, 1, 1))
        assert prof.gamma_hat_beta == ((0, 0, 0),)
        assert prof.per_coord_max == (0, 0, 0)

    def test_2_3_3(self):
        prof = w.local_absolute_maximals(P453, (2, 3, 3))
        assert set(prof.gamma_hat_beta) == {(0, 0, 0), (2, 2, 2), (-2, 3, 3)}
        assert prof.per_coord_max == (2, 3, 3)

    def test_all_negative(self):
        prof = w.local_absolute_maximals(P453, (-1, -1, -1))
        assert prof.gamma_hat_beta == ()
        assert prof.per_coord_max == (None, None, None)
        assert w.per_coord_max(P453, (-1, -1, -1)) is None


class TestMembership:
    @pytest.mark.parametrize("t,expected", [
        ((0, 0, 0), True),
        ((1, 1, 1), False),
        ((12, 0, 0), True),
        ((2, 3, 3), True),
        ((0, 0, 1), False),
    ])
    def test_examples(self, t, expected):
        assert w.is_member(P453, t) is expected

    def test_needs_two_points(self):
        with pytest.raises(w.BadPointCountError):
            w.is_member(w.curve_params(4, 5, 1), (0,))


class TestDimension:
    @pytest.mark.parametrize("t,expected", [
        ((0, 0, 0), 1),
        ((12, 0, 0), 7),
        ((1, 1, 1), 1),
        ((-1, -1, -1), 0),
    ])
    def test_examples(self, t, expected):
        assert w.dim_L(P453, t) == expected

    def test_riemann_roch_regime(self):
        for t in [(11, 0, 0), (4, 4, 4), (20, 3, 1)]:
            assert w.dim_L(P453, t) == sum(t) - 6 + 1


class TestNabla:
    @pytest.mark.parametrize("method", ["search", "profile"])
    def test_examples(self, method):
        assert w.nabla_J_empty(P453, (3, 3, 3), (1,), method) is True
        assert w.nabla_J_empty(P453, (3, 3, 3), (2, 3), method) is False
        assert w.nabla_J_empty(P453, (0, 0, 0), (1,), method) is True

    def test_witness_for_nonempty(self):
        # (2,3,3) is the member witnessing nabla_{2,3}((3,3,3))
        assert w.is_member(P453, (2, 3, 3))

    def test_J_validation(self):
        with pytest.raises(w.WsgapError):
            w.nabla_J_empty(P453, (3, 3, 3), ())
        with pytest.raises(w.WsgapError):
            w.nabla_J_empty(P453, (3, 3, 3), (1, 2, 3))
        with pytest.raises(w.WsgapError):
            w.nabla_J_empty(P453, (3, 3, 3), (0,))
        with pytest.raises(w.WsgapError):
            w.nabla_J_empty(P453, (3, 3, 3), (4,))


class TestMaximality:
    @pytest.mark.parametrize("method", ["search", "profile"])
    def test_examples(self, method):
        assert w.is_relative_maximal(P453, (11, 1, 1), method)
        assert w.is_absolute_maximal(P453, (6, 1, 1), method)
        assert not w.is_relative_maximal(P453, (1, 1, 1), method)
        assert not w.is_absolute_maximal(P453, (1, 1, 1), method)
        # with three points the two kinds are mutually exclusive
        assert not w.is_absolute_maximal(P453, (11, 1, 1), method)
        assert not w.is_relative_maximal(P453, (6, 1, 1), method)

    def test_m2_kinds_coincide_on_reps(self):
        for t in w.relative_maximals_region(P452).region_reps:
            assert w.is_relative_maximal(P452, t)
            assert w.is_absolute_maximal(P452, t)


class TestRelMaxEquivalence:
    def test_relative_maximal_all_true(self):
        rep = w.check_relmax_equivalence(P453, (3, 3, 3))
        assert rep.definition and rep.dimension_step and rep.pivot_exists
        assert rep.agree

    def test_absolute_maximal_all_false(self):
        rep = w.check_relmax_equivalence(P453, (6, 1, 1))
        assert not (rep.definition or rep.dimension_step or rep.pivot_exists)
        assert rep.agree

    def test_non_member_all_false(self):
        rep = w.check_relmax_equivalence(P453, (0, 0, 1))
        assert not (rep.definition or rep.dimension_step or rep.pivot_exists)
        assert rep.agree

    @given(p=params_st, data=st.data())
    @settings(max_examples=60, deadline=None)
    def test_equivalence_agrees_randomly(self, p, data):
        alpha = data.draw(tuple_st(p, -4, 2 * p.genus))
        assert w.check_relmax_equivalence(p, alpha, method="profile").agree


class TestOracleProperties:
    @given(p=params_st, data=st.data())
    @settings(max_examples=80, deadline=None)
    def test_profile_matches_enumeration(self, p, data):
        beta = data.draw(tuple_st(p))
        prof = w.local_absolute_maximals(p, beta)
        fast = w.per_coord_max(p, beta)
        if prof.gamma_hat_beta:
            assert fast == prof.per_coord_max
            assert w.dim_L(p, beta) == len({g[0] for g in prof.gamma_hat_beta})
        else:
            assert fast is None
            assert w.dim_L(p, beta) == 0

    @given(p=params_st, data=st.data())
    @settings(max_examples=80, deadline=None)
    def test_theta_invariance(self, p, data):
        alpha = data.draw(tuple_st(p))
        d = data.draw(st.tuples(*([st.integers(-2, 2)] * (p.m - 1))))
        shifted = add(alpha, w.theta_vector(p, d))
        assert w.is_member(p, alpha) == w.is_member(p, shifted)

    @given(p=params_st, data=st.data())
    @settings(max_examples=60, deadline=None)
    def test_two_genus_rule(self, p, data):
        alpha = list(data.draw(tuple_st(p)))
        alpha[0] += max(0, 2 * p.genus - sum(alpha))
        assert w.is_member(p, tuple(alpha))

    @given(p=params_st, data=st.data())
    @settings(max_examples=60, deadline=None)
    def test_lub_closure(self, p, data):
        reps = w.relative_maximals_region(p).region_reps
        idx = st.integers(0, len(reps) - 1)
        shifts = st.tuples(*([st.integers(-2, 2)] * (p.m - 1)))
        x = add(reps[data.draw(idx)], w.theta_vector(p, data.draw(shifts)))
        y = add(reps[data.draw(idx)], w.theta_vector(p, data.draw(shifts)))
        assert w.is_member(p, x) and w.is_member(p, y)
        assert w.is_member(p, w.lub([x, y]))

    @given(p=params_st, data=st.data())
    @settings(max_examples=80, deadline=None)
    def test_dimension_steps_and_membership(self, p, data):
        alpha = data.draw(tuple_st(p))
        dim = w.dim_L(p, alpha)
        steps = []
        for i in range(p.m):
            down = tuple(c - (1 if k == i else 0) for k, c in enumerate(alpha))
            steps.append(dim - w.dim_L(p, down))
        assert all(s in (0, 1) for s in steps)
        assert w.is_member(p, alpha) == all(s == 1 for s in steps)

    @given(p=params_st, data=st.data())
    @settings(max_examples=60, deadline=None)
    def test_riemann_roch_regime(self, p, data):
        alpha = list(data.draw(tuple_st(p)))
        deficit = 2 * p.genus - 1 - sum(alpha)
        if deficit > 0:
            alpha[0] += deficit
        assert w.dim_L(p, tuple(alpha)) == sum(alpha) - p.genus + 1

    @given(p=params_st, data=st.data())
    @settings(max_examples=40, deadline=None)
    def test_nabla_methods_agree(self, p, data):
        alpha = data.draw(tuple_st(p, -3, 2 * p.genus - 1))
        size = data.draw(st.integers(1, p.m - 1))
        J = data.draw(st.permutations(range(1, p.m + 1)))[:size]
        assert w.nabla_J_empty(p, alpha, J, "search") == \
            w.nabla_J_empty(p, alpha, J, "profile")

    @given(p=params_st, data=st.data())
    @settings(max_examples=40, deadline=None)
    def test_membership_lub_generation(self, p, data):
        """Members are exactly the componentwise maxima of absolute
        maximals below them: each coordinate must be attained."""
        beta = data.draw(tuple_st(p))
        prof = w.local_absolute_maximals(p, beta)
        attained = prof.gamma_hat_beta and all(
            any(g[k] == beta[k] for g in prof.gamma_hat_beta) for k in range(p.m))
        assert w.is_member(p, beta) == bool(attained)
