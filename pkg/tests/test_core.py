import warnings

import pytest
from hypothesis import given, strategies as st

import wsgap as w
from wsgap.core import add, box_tuples, check_tuple

POOL = [w.curve_params(a, b, m) for a, b, m in
        [(2, 3, 2), (3, 4, 3), (4, 5, 2), (4, 5, 3), (4, 7, 3), (5, 9, 4), (2, 5, 2)]]

coords = st.integers(min_value=-30, max_value=30)


def tuples_st(n: int):
    return st.tuples(*([coords] * n))


params_st = st.sampled_from(POOL)


class TestCurveParams:
    def test_hermitian_genus(self):
        p = w.curve_params(4, 5, 3, field_size=16)
        assert p.genus == 6

    def test_norm_trace_genus(self):
        p = w.curve_params(4, 7, 3, field_size=8)
        assert p.genus == 9

    def test_not_coprime(self):
        with pytest.raises(w.NotCoprimeError):
            w.curve_params(4, 6, 2)

    @pytest.mark.parametrize("m", [0, -1, 6])
    def test_bad_point_count(self, m):
        with pytest.raises(w.BadPointCountError):
            w.curve_params(4, 5, m)

    def test_m_one_allowed(self):
        assert w.curve_params(4, 5, 1).m == 1

    def test_small_degrees_rejected(self):
        with pytest.raises(w.WsgapError):
            w.curve_params(1, 5, 1)

    def test_huge_degrees_rejected(self):
        with pytest.raises(w.WsgapError):
            w.curve_params(2, (1 << 16) + 1, 2)

    def test_genus_mismatch_rejected(self):
        with pytest.raises(w.WsgapError):
            w.CurveParams(a=4, b=5, m=3, genus=7)

    def test_field_too_small_warns(self):
        with pytest.warns(w.FieldTooSmallWarning):
            w.curve_params(4, 5, 3, field_size=2)

    def test_field_large_enough_silent(self):
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            w.curve_params(4, 5, 3, field_size=16)


class TestPresets:
    def test_norm_trace_is_hermitian_at_r2(self):
        assert w.norm_trace_params(4, 2, 3) == w.curve_params(4, 5, 3, field_size=16)
        assert w.hermitian_params(4, 3) == w.norm_trace_params(4, 2, 3)

    def test_norm_trace_l2_r3(self):
        assert w.norm_trace_params(2, 3, 3) == w.curve_params(4, 7, 3, field_size=8)

    def test_ell_must_be_prime_power(self):
        with pytest.raises(w.WsgapError):
            w.norm_trace_params(6, 2, 2)

    def test_r_must_be_at_least_two(self):
        with pytest.raises(w.WsgapError):
            w.norm_trace_params(4, 1, 2)

    @pytest.mark.parametrize("n,expected", [
        (2, True), (4, True), (9, True), (27, True), (1, False),
        (6, False), (12, False), (100, False), (121, True),
    ])
    def test_is_prime_power(self, n, expected):
        assert w.is_prime_power(n) is expected


class TestLubGlb:
    def test_lub_examples(self):
        assert w.lub([(11, 1, 1), (1, 11, 1)]) == (11, 11, 1)
        assert w.lub([(0, 0, 0)]) == (0, 0, 0)
        assert w.lub([(6, 1, 6), (6, 6, 1), (1, 6, 6)]) == (6, 6, 6)

    def test_glb_examples(self):
        assert w.glb([(1, 6, 6), (6, 1, 6), (6, 6, 1)]) == (1, 1, 1)
        assert w.glb([(0, 0, 0)]) == (0, 0, 0)
        assert w.glb([(2, 2, 7), (6, 1, 6), (7, 2, 2)]) == (2, 1, 2)

    @pytest.mark.parametrize("fn", [w.lub, w.glb])
    def test_empty_input(self, fn):
        with pytest.raises(w.EmptyInputError):
            fn([])

    @pytest.mark.parametrize("fn", [w.lub, w.glb])
    def test_mixed_lengths(self, fn):
        with pytest.raises(w.WsgapError):
            fn([(1, 2), (1, 2, 3)])

    @given(ts=st.lists(tuples_st(3), min_size=1, max_size=5))
    def test_lub_glb_fold_properties(self, ts):
        # idempotent, commutative, associative as folds
        assert w.lub(ts) == w.lub(list(reversed(ts)))
        assert w.glb(ts) == w.glb(list(reversed(ts)))
        assert w.lub(ts + ts) == w.lub(ts)
        assert w.glb(ts + [w.glb(ts)]) == w.glb(ts)
        split = max(1, len(ts) // 2)
        assert w.lub([w.lub(ts[:split]), w.lub(ts[split:] or ts[:1])]) == \
            w.lub(ts + ts[:1])

    @given(t=tuples_st(4))
    def test_glb_lub_bound_single(self, t):
        assert w.lub([t]) == t == w.glb([t])


class TestTheta:
    def test_basis_4_5_3(self):
        basis = w.theta_basis(w.curve_params(4, 5, 3))
        assert basis.generators == ((-5, 5, 0), (0, -5, 5))

    def test_basis_4_7_2(self):
        basis = w.theta_basis(w.curve_params(4, 7, 2))
        assert basis.generators == ((-7, 7),)

    def test_basis_needs_two_points(self):
        with pytest.raises(w.BadPointCountError):
            w.theta_basis(w.curve_params(4, 5, 1))

    @given(p=params_st, data=st.data())
    def test_generators_sum_zero_two_entries(self, p, data):
        if p.m < 2:
            return
        basis = w.theta_basis(p)
        assert len(basis.generators) == p.m - 1
        for gen in basis.generators:
            assert sum(gen) == 0
            assert sorted(abs(c) for c in gen if c) == [p.b, p.b]

    @given(p=params_st, data=st.data())
    def test_theta_vector_spans_same_lattice(self, p, data):
        d = data.draw(st.tuples(*([st.integers(-3, 3)] * (p.m - 1))))
        vec = w.theta_vector(p, d)
        assert sum(vec) == 0
        assert all(c % p.b == 0 for c in vec)


class TestReduceToRegion:
    def test_example_pull_shift_into_first(self):
        p = w.curve_params(4, 5, 3)
        rep, d = w.reduce_to_region(p, (1, 6, 6))
        assert rep == (11, 1, 1)
        assert d == (-1, -1)

    def test_example_already_reduced(self):
        p = w.curve_params(4, 5, 3)
        assert w.reduce_to_region(p, (3, 3, 3)) == ((3, 3, 3), (0, 0))

    def test_example_negative_coordinate(self):
        p = w.curve_params(4, 5, 3)
        rep, d = w.reduce_to_region(p, (0, -1, 0))
        assert rep == (-5, 4, 0)
        assert d == (1, 0)

    @given(p=params_st, data=st.data())
    def test_reduction_properties(self, p, data):
        alpha = data.draw(tuples_st(p.m))
        rep, d = w.reduce_to_region(p, alpha)
        assert all(0 <= c < p.b for c in rep[1:])
        assert sum(rep) == sum(alpha)
        assert rep == add(alpha, w.theta_vector(p, d))
        # idempotent
        assert w.reduce_to_region(p, rep) == (rep, (0,) * (p.m - 1))

    @given(p=params_st, data=st.data())
    def test_reduction_lattice_invariant(self, p, data):
        alpha = data.draw(tuples_st(p.m))
        d = data.draw(st.tuples(*([st.integers(-3, 3)] * (p.m - 1))))
        shifted = add(alpha, w.theta_vector(p, d))
        assert w.reduce_to_region(p, shifted)[0] == w.reduce_to_region(p, alpha)[0]


class TestBox:
    def test_lexicographic_order(self):
        box = w.Box(lo=(0, 0), hi=(1, 1))
        assert list(box_tuples(box)) == [(0, 0), (0, 1), (1, 0), (1, 1)]

    def test_single_cell(self):
        box = w.Box(lo=(3, 3, 3), hi=(3, 3, 3))
        assert list(box_tuples(box)) == [(3, 3, 3)]

    def test_cardinality(self):
        box = w.Box(lo=(0, 0, 0), hi=(11, 11, 11))
        assert box.cell_count() == 12**3
        assert sum(1 for _ in box_tuples(box)) == 12**3

    def test_invalid_bounds(self):
        with pytest.raises(w.WsgapError):
            w.Box(lo=(0, 2), hi=(5, 1))

    def test_contains(self):
        box = w.Box(lo=(-1, 0), hi=(1, 3))
        assert (0, 3) in box and (2, 0) not in box


def test_check_tuple_validates_length_and_type():
    p = w.curve_params(4, 5, 3)
    assert check_tuple(p, [1, 2, 3]) == (1, 2, 3)
    with pytest.raises(w.WsgapError):
        check_tuple(p, (1, 2))
    with pytest.raises(w.WsgapError):
        check_tuple(p, (1, 2, "x"))
