"""Closed forms, windows, and threshold constants."""

from fractions import Fraction as F

import pytest

from antiramsey import (
    Custom,
    Cycle,
    Graph,
    Matching,
    Path,
    TransferParams,
    TriplePath,
    Union,
    UnrecognizedFamilyError,
    ar_cycle,
    ar_family,
    ar_matching,
    ar_path,
    cover_lower_bound,
    cycle_matching_bounds,
    integer_bounds,
    linear_form,
    matching_step_threshold,
    path_matching_bounds,
    transfer_upper_bound,
    triples_step_threshold,
)


class TestPath:
    @pytest.mark.parametrize("n,k,expected", [
        (20, 5, 22),
        (20, 4, 21),
        (10, 2, 2),
        (6, 4, 7),
    ])
    def test_values(self, n, k, expected):
        rep = ar_path(n, k)
        assert rep.exact == expected
        assert rep.valid["exact"]

    def test_caveat_tag_for_long_paths(self):
        assert "large-n-window-unverified" in ar_path(20, 5).provenance
        assert "large-n-window-unverified" not in ar_path(20, 2).provenance

    def test_errors(self):
        with pytest.raises(ValueError):
            ar_path(5, 1)
        with pytest.raises(ValueError):
            ar_path(4, 4)


class TestCycle:
    @pytest.mark.parametrize("n,k,expected", [
        (6, 3, 6),
        (10, 4, 13),
        (7, 4, 9),
        (3, 3, 3),
        (4, 3, 4),
        (5, 3, 5),
        (6, 4, 8),
    ])
    def test_values(self, n, k, expected):
        rep = ar_cycle(n, k)
        assert rep.exact == expected
        assert rep.valid["exact"]

    def test_errors(self):
        with pytest.raises(ValueError):
            ar_cycle(3, 4)
        with pytest.raises(ValueError):
            ar_cycle(5, 2)


class TestMatching:
    @pytest.mark.parametrize("n,t,expected", [
        (8, 3, 9),
        (14, 7, 58),   # perfect matching, large case
        (12, 6, 40),   # perfect matching, small case
        (6, 3, 7),
        (5, 2, 2),
    ])
    def test_values(self, n, t, expected):
        assert ar_matching(n, t).exact == expected

    def test_constant_regime(self):
        # t=10: crossover at n = 43/2 = 21.5, so n=21 sits in the constant regime
        assert ar_matching(21, 10).exact == (10 - 2) * (2 * 10 - 3) + 2
        assert "matching-constant-regime" in ar_matching(21, 10).provenance

    def test_branch_agreement_at_crossover(self):
        # both branch expressions coincide whenever 2n = 5t - 7
        for t in range(3, 41):
            if (5 * t - 7) % 2 == 0:
                n = (5 * t - 7) // 2
                constant = F((t - 2) * (2 * t - 3) + 2)
                linear = linear_form(t - 2, n) + 2
                assert constant == linear, (t, n)
        # the pinned instance: t=5 crossover at n=9, both give 23
        assert linear_form(3, 9) + 2 == 23

    def test_perfect_matching_t2_has_no_closed_form(self):
        with pytest.raises(ValueError):
            ar_matching(4, 2)

    def test_errors(self):
        with pytest.raises(ValueError):
            ar_matching(5, 3)
        with pytest.raises(ValueError):
            ar_matching(10, 1)


class TestFamilyDispatch:
    def test_p3_plus_matching(self):
        rep = ar_family(18, Union(Path(2), Matching(2)))
        assert rep.exact == 19
        assert rep.valid["exact"]  # 18 > (5/2)*2 + 12 = 17

    def test_p3_plus_matching_below_window(self):
        rep = ar_family(17, Union(Path(2), Matching(2)))
        assert rep.exact == 18
        assert not rep.valid["exact"]
        assert rep.valid["lower"] and rep.lower == 18

    def test_union_order_is_normalized(self):
        a = ar_family(18, Union(Path(2), Matching(2)))
        b = ar_family(18, Union(Matching(2), TriplePath(1)))
        assert a.exact == b.exact and a.valid == b.valid

    def test_cycle_plus_single_edge_pair(self):
        rep = ar_family(11, Union(Cycle(4), Matching(1)))
        assert rep.lower == 12
        assert rep.upper == F(70, 3)
        assert rep.exact is None
        assert rep.valid == {"lower": True, "upper": True}
        assert integer_bounds(rep) == (12, 23)

    def test_cycle_pair_upper_matches_transfer_route(self):
        # same bound through the generic transfer step with the fractional slope
        k, t, n = 4, 1, 11
        x = F(k, 2) + F(1, k - 1)
        params = TransferParams(k, k, 0, x - 1, x * (x - 1) / 2 - 1, k)
        tb = transfer_upper_bound(n, t, params, "P2")
        assert tb.value == F(70, 3)
        rep = cycle_matching_bounds(n, k, t)
        assert rep.upper == tb.value

    def test_triples(self):
        rep = ar_family(12, TriplePath(2))
        assert rep.exact == 13
        assert rep.valid["exact"]  # 12 > 5*2+1

    def test_triples_small_host_lower(self):
        rep = ar_family(10, TriplePath(3))
        assert rep.lower == 23  # beats the linear value 2*(10-3/2)+2 = 19
        assert rep.exact == 19 and not rep.valid["exact"]
        assert "small-host-clique-lower" in rep.provenance

    def test_single_edge(self):
        assert ar_family(5, Matching(1)).exact == 1
        assert ar_family(7, Path(1)).exact == 1

    def test_two_edge_path(self):
        rep = ar_family(3, TriplePath(1))
        assert rep.exact == 2 and rep.valid["exact"]

    def test_p4_plus_matching(self):
        # t=1: threshold is n >= (5/2)+12 = 14.5, i.e. n >= 15 for integers
        assert not ar_family(14, Union(Path(3), Matching(1))).valid["exact"]
        rep = ar_family(15, Union(Path(3), Matching(1)))
        assert rep.valid["exact"]
        assert rep.exact == cover_lower_bound(15, 1, 1) + 1

    def test_c3_plus_matching(self):
        rep = ar_family(20, Union(Cycle(3), Matching(2)))
        assert rep.exact == 2 * (20 - F(3, 2)) + 2 == 39
        assert rep.valid["exact"]  # 20 > 5+6

    def test_edge_plus_triples(self):
        rep = ar_family(40, Union(Matching(1), TriplePath(2)))
        assert rep.exact == 1 * (40 - 1) + 3 == 42
        assert rep.valid["exact"]  # 40 > 10+27

    def test_matching_plus_triples(self):
        # t=2, k=3: window min(15+13+8, 5+28.5+7) = 36
        rep = ar_family(37, Union(Matching(2), TriplePath(3)))
        assert rep.exact == cover_lower_bound(37, 3, 1) + 1
        assert rep.valid["exact"]
        assert not ar_family(36, Union(Matching(2), TriplePath(3))).valid["exact"]

    def test_path_plus_triples(self):
        # t=4, k=1: coefficient k + floor(t/2) - 1 = 2, tail 2
        rep = ar_family(60, Union(Path(4), TriplePath(1)))
        assert rep.exact == int(linear_form(2, 60)) + 2
        assert "large-n-window-unverified" in rep.provenance

    def test_p2_p3_union(self):
        # k=1 instance of the edge-plus-triples equality: value 3, window n > 32
        rep = ar_family(9, Union(Matching(1), TriplePath(1)))
        assert rep.exact == 3 and not rep.valid["exact"]
        assert rep.lower == 3 and rep.valid["lower"]
        assert ar_family(33, Union(Matching(1), TriplePath(1))).valid["exact"]

    def test_n_below_pattern_errors(self):
        with pytest.raises(ValueError):
            ar_family(5, TriplePath(2))

    @pytest.mark.parametrize("spec", [
        Union(Path(4), Cycle(3)),
        Union(Cycle(3), TriplePath(1), Matching(1)),
        Union(Path(4), Path(5)),
        Custom(Graph(4, [(0, 1), (2, 3)])),
        Union(Path(4), TriplePath(1), Matching(1)),
    ])
    def test_unrecognized(self, spec):
        with pytest.raises(UnrecognizedFamilyError):
            ar_family(30, spec)

    def test_report_json_shape(self):
        js = ar_family(11, Union(Cycle(4), Matching(1))).to_json()
        assert js["family"] == "C4+P2"
        assert js["lower"] == "12"
        assert js["upper"] == "70/3"
        assert js["exact"] is None
        assert set(js) == {"family", "n", "lower", "upper", "exact", "valid", "provenance"}


class TestThresholdConstants:
    def test_known_constants(self):
        cases = [
            ("P2", TransferParams(3, 2, 2, F(-1), F(1), 7), F(12)),
            ("P2", TransferParams(0, 0, 2, F(-2), F(1), 5), F(3, 2)),
            ("P2", TransferParams(3, 3, 1, F(0), F(1), 6), F(6)),
            ("P3", TransferParams(2, 1, 1, F(-1), F(2), 5), F(27)),
            ("P3", TransferParams(0, 0, 2, F(-1), F(1), 7), F(1)),
            ("P3", TransferParams(0, 0, 1, F(-1), F(1), 3), F(3)),
        ]
        for step, params, expected in cases:
            fn = matching_step_threshold if step == "P2" else triples_step_threshold
            assert fn(params) == expected, (step, params)

    def test_p4_matching_constant(self):
        # n > (5/2)t + 23/2 is the integer-equivalent of n >= (5/2)t + 12
        assert matching_step_threshold(TransferParams(4, 3, 1, F(0), F(1), 6)) == F(23, 2)

    def test_cycle_threshold_dominated_by_stated_window(self):
        # computed constants never exceed the displayed (9/4)k - 5/4 window
        for k in range(4, 13):
            x = F(k, 2) + F(1, k - 1)
            params = TransferParams(k, k, 0, x - 1, x * (x - 1) / 2 - 1, k)
            assert matching_step_threshold(params) <= F(9, 4) * k - F(5, 4), k

    def test_matching_fixed_route_dominated(self):
        # appending triples to a fixed matching: computed constant stays under
        # the displayed (13/2)t + 8
        for t in range(2, 11):
            n0 = (5 * t + 26) // 2  # floor((5/2)t + 13)
            params = TransferParams(2 * t, t, 1, F(t - 2), F(1), n0)
            assert triples_step_threshold(params) <= F(13, 2) * t + 8, t

    def test_triples_fixed_route_dominated(self):
        # appending edges to fixed triples: computed constant under (19/2)k + 7
        for k in range(2, 11):
            params = TransferParams(3 * k, 2 * k, 2, F(k - 2), F(1), 5 * k + 22)
            assert matching_step_threshold(params) <= F(19, 2) * k + 7, k

    def test_degenerate_slope_guard(self):
        with pytest.raises(ValueError):
            matching_step_threshold(TransferParams(0, 0, 1, F(-2), F(1), 5))
        with pytest.raises(ValueError):
            triples_step_threshold(TransferParams(0, 0, 0, F(-1), F(1), 3))

    def test_base_min_n_guard(self):
        with pytest.raises(ValueError):
            matching_step_threshold(TransferParams(3, 2, 2, F(-1), F(1), 6))


class TestTransferBound:
    def test_example_values(self):
        p = TransferParams(3, 2, 2, F(-1), F(1), 7)
        tb = transfer_upper_bound(30, 4, p, "P2")
        assert tb.value == 86 and tb.valid

        p = TransferParams(0, 0, 2, F(-1), F(1), 7)
        tb = transfer_upper_bound(12, 2, p, "P3")
        assert tb.value == 13 and tb.valid  # base case itself

    def test_cross_check_against_matching_triples_form(self):
        # fixed part = 2 disjoint edges, appending triples; the transferred
        # value must equal the direct closed form for 2P2+3P3
        p = TransferParams(4, 2, 1, F(0), F(1), 18)
        tb = transfer_upper_bound(40, 3, p, "P3")
        assert tb.value == 116
        assert tb.value == ar_family(40, Union(Matching(2), TriplePath(3))).exact

    def test_invalid_window_still_returns_value(self):
        p = TransferParams(3, 2, 2, F(-1), F(1), 7)
        tb = transfer_upper_bound(14, 4, p, "P2")  # needs n > 22
        assert tb.value == 3 * (14 - 2) + 2
        assert not tb.valid

    def test_count_below_base_errors(self):
        p = TransferParams(3, 2, 2, F(-1), F(1), 7)
        with pytest.raises(ValueError):
            transfer_upper_bound(30, 1, p, "P2")

    def test_bad_step_errors(self):
        p = TransferParams(0, 0, 2, F(-1), F(1), 7)
        with pytest.raises(ValueError):
            transfer_upper_bound(30, 3, p, "P4")


class TestCoverLowerBound:
    @pytest.mark.parametrize("n,r1,s,expected", [
        (11, 1, 1, 11),
        (9, 0, 2, 2),
        (12, 2, 1, 22),
    ])
    def test_values(self, n, r1, s, expected):
        assert cover_lower_bound(n, r1, s) == expected

    def test_always_integer(self):
        for r1 in range(0, 8):
            for n in range(r1, r1 + 20):
                assert isinstance(cover_lower_bound(n, r1, 3), int)

    def test_errors(self):
        with pytest.raises(ValueError):
            cover_lower_bound(3, 5, 1)
        with pytest.raises(ValueError):
            cover_lower_bound(5, -1, 1)


class TestOrderingInvariants:
    def test_sandwich_where_multiple_bounds_apply(self):
        # wherever lower/upper/exact coexist and are valid: lower <= exact <= upper
        specs = [
            Matching(3), Matching(5), TriplePath(2), TriplePath(4),
            Union(Path(2), Matching(3)), Union(Path(3), Matching(2)),
            Union(Cycle(3), Matching(2)), Union(Matching(2), TriplePath(2)),
            Union(Matching(1), TriplePath(2)), Union(Path(4), TriplePath(1)),
            Union(Path(5), Matching(2)), Union(Cycle(5), Matching(2)),
        ]
        from antiramsey import build_pattern
        for spec in specs:
            size = build_pattern(spec).n
            for n in range(size, 201):
                rep = ar_family(n, spec)
                if rep.lower is not None and rep.upper is not None \
                        and rep.valid.get("lower") and rep.valid.get("upper"):
                    assert rep.lower <= rep.upper, (spec, n)
                if rep.exact is not None and rep.valid.get("exact"):
                    assert rep.lower <= rep.exact <= rep.upper, (spec, n)

    def test_cycle_upper_dominates_cycle_closed_form(self):
        # the fractional upper bound at t=0 sits above the exact cycle value
        for k in range(4, 13):
            for n in range(k, 101):
                exact = ar_cycle(n, k).exact
                upper = cycle_matching_bounds(n, k, 0).upper
                assert exact <= upper, (k, n)

    def test_path_pair_odd_gap_is_one(self):
        for k in (5, 7, 9):
            for t in (0, 1, 4):
                for n in range(2 * t + k + 1, 120):
                    rep = path_matching_bounds(n, k, t)
                    assert rep.upper - rep.lower == 1, (k, t, n)
