import random

import pytest

from mivs import (
    CoverageMode,
    VendorSubset,
    build_price_index,
    build_solution,
    generate_instance,
    validate_instance,
)
from mivs.errors import InfeasibleSubset

from conftest import FIG3_ITEMS, FIG3_VENDORS, fig3_fixed_costs, fig3_price_matrix
from oracle import naive_assignment_cost


class TestPriceIndex:
    def test_sorted_by_price_then_vendor(self, fig3):
        index = build_price_index(fig3)
        # item P2: prices 19,17,16,13,10 across vendors 1..5
        assert index.entries(1) == (
            (5, 1000), (4, 1300), (3, 1600), (2, 1700), (1, 1900),
        )
        # item P5 ties vendors 2 and 4 at 11; lower index first
        assert index.entries(4)[:2] == ((2, 1100), (4, 1100))

    def test_singleton(self):
        instance = validate_instance(
            ["A"], ["V1", "V2"], [[None, 700]], [0, 0]
        )
        assert build_price_index(instance).entries(0) == ((2, 700),)

    def test_contains_exactly_the_bidders(self):
        instance = generate_instance(m=12, n=6, seed=3, bid_density=0.5)
        index = build_price_index(instance)
        for i, row in enumerate(instance.prices):
            bidders = {j for j, p in enumerate(row, start=1) if p is not None}
            assert {v for v, _ in index.entries(i)} == bidders


class TestBuildSolution:
    def test_fig3_subset_235(self, fig3):
        s = build_solution(fig3, VendorSubset.of({2, 3, 5}))
        assert s.acquisition_cost == 10500
        assert s.fixed_cost == 3900
        assert s.total_cost == 14400
        assert s.items_covered == 9

    def test_fig3_all_vendors(self, fig3):
        s = build_solution(fig3, VendorSubset.of({1, 2, 3, 4, 5}))
        assert s.acquisition_cost == 10300
        assert s.fixed_cost == 5700
        assert s.total_cost == 16000

    def test_tie_breaks_to_lowest_vendor_index(self, fig3):
        s = build_solution(fig3, VendorSubset.of({1, 2, 3, 4, 5}))
        # P5 ties S2/S4 at 11, P9 ties S2/S3 at 10
        assert s.assignment[4] == 2
        assert s.assignment[8] == 2

    def test_uncovered_item_full_vs_partial(self):
        prices = fig3_price_matrix()
        prices[0][0] = None
        prices[0][1] = None
        instance = validate_instance(
            FIG3_ITEMS, FIG3_VENDORS, prices, fig3_fixed_costs()
        )
        with pytest.raises(InfeasibleSubset) as exc:
            build_solution(instance, VendorSubset.of({1, 2}))
        assert exc.value.uncovered == ("P1",)
        partial = build_solution(
            instance, VendorSubset.of({1, 2}), coverage=CoverageMode.PARTIAL
        )
        assert partial.items_covered == 8
        assert partial.assignment[0] is None
        assert partial.uncovered_items == ("P1",)

    def test_idle_vendor_still_pays_fixed_cost(self):
        # vendor 2 never wins an item but remains selected
        instance = validate_instance(
            ["A", "B"], ["V1", "V2"], [[100, 200], [300, 400]], [50, 70]
        )
        s = build_solution(instance, VendorSubset.of({1, 2}))
        assert s.effective_members == {1}
        assert s.fixed_cost == 120
        assert s.total_cost == 100 + 300 + 120

    def test_assignment_within_subset_and_bids(self):
        instance = generate_instance(m=10, n=6, seed=11, bid_density=0.6)
        subset = VendorSubset.of({2, 3, 5})
        s = build_solution(instance, subset, coverage=CoverageMode.PARTIAL)
        for i, j in enumerate(s.assignment):
            if j is not None:
                assert j in subset.members
                assert instance.prices[i][j - 1] is not None

    def test_matches_naive_double_loop(self):
        rng = random.Random(7)
        for trial in range(40):
            n = rng.randint(1, 6)
            m = rng.randint(1, 12)
            instance = generate_instance(
                m=m, n=n, seed=trial, bid_density=rng.choice([0.4, 0.7, 1.0])
            )
            members = sorted(
                rng.sample(range(1, n + 1), rng.randint(1, n))
            )
            s = build_solution(
                instance, VendorSubset.of(members), coverage=CoverageMode.PARTIAL
            )
            acq, covered = naive_assignment_cost(
                [list(row) for row in instance.prices], members
            )
            assert (s.acquisition_cost, s.items_covered) == (acq, covered)

    def test_superset_monotonicity(self):
        rng = random.Random(13)
        for trial in range(30):
            instance = generate_instance(m=8, n=6, seed=100 + trial, bid_density=1.0)
            small = rng.sample(range(1, 7), rng.randint(1, 5))
            extra = [j for j in range(1, 7) if j not in small]
            big = small + rng.sample(extra, rng.randint(1, len(extra)))
            a = build_solution(instance, VendorSubset.of(small))
            b = build_solution(instance, VendorSubset.of(big))
            assert b.acquisition_cost <= a.acquisition_cost
            assert b.items_covered >= a.items_covered

    def test_deterministic(self, fig3):
        first = build_solution(fig3, VendorSubset.of({2, 3, 5}))
        second = build_solution(fig3, VendorSubset.of({2, 3, 5}))
        assert first == second

    def test_accounting_identity(self):
        instance = generate_instance(m=15, n=7, seed=5, bid_density=0.8)
        for mask in (1, 5, 100, 127):
            subset = VendorSubset.of(
                j + 1 for j in range(7) if mask >> j & 1
            )
            s = build_solution(instance, subset, coverage=CoverageMode.PARTIAL)
            assert s.total_cost == s.acquisition_cost + s.fixed_cost
            assert s.fixed_cost == sum(
                instance.fixed_costs[j - 1] for j in subset.members
            )
