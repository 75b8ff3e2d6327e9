import pytest

from mivs import (
    VendorSubset,
    build_solution,
    generate_instance,
    policy_cheapest_per_item,
    policy_single_vendor,
    solve_exhaustive,
    validate_instance,
)
from mivs.errors import NoFullCoverageVendor, UncoveredItem
from mivs.policies import PolicyKind

from conftest import FIG3_ITEMS, FIG3_VENDORS, fig3_fixed_costs, fig3_price_matrix


class TestSingleVendor:
    def test_fig3_winner(self, fig3):
        result = policy_single_vendor(fig3)
        assert result.kind is PolicyKind.SINGLE_VENDOR
        assert result.solution.subset.members == {5}
        assert result.solution.acquisition_cost == 13100
        assert result.solution.total_cost == 14200
        # ranking leads with the cheapest full-coverage vendor
        assert result.ranking[0].vendor == 5
        assert result.ranking[0].purchasing_cost == 13100
        assert [r.purchasing_cost for r in result.ranking] == [
            13100, 14300, 14600, 15600, 16700,
        ]

    def test_fig3_without_vendor5_coverage(self):
        prices = fig3_price_matrix()
        prices[0][4] = None  # vendor 5 no longer bids on P1
        instance = validate_instance(
            FIG3_ITEMS, FIG3_VENDORS, prices, fig3_fixed_costs()
        )
        result = policy_single_vendor(instance)
        assert result.solution.subset.members == {4}
        assert result.solution.acquisition_cost == 14300
        assert result.solution.total_cost == 15100

    def test_single_vendor_instance(self):
        instance = validate_instance(["A"], ["V"], [[900]], [100])
        result = policy_single_vendor(instance)
        assert result.solution.total_cost == 1000

    def test_no_full_coverage_vendor(self):
        instance = validate_instance(
            ["A", "B"], ["V1", "V2"], [[100, None], [None, 100]], [10, 10]
        )
        with pytest.raises(NoFullCoverageVendor):
            policy_single_vendor(instance)


class TestCheapestPerItem:
    def test_fig3(self, fig3):
        result = policy_cheapest_per_item(fig3)
        assert result.kind is PolicyKind.CHEAPEST_PER_ITEM
        assert result.solution.acquisition_cost == 10300
        assert result.solution.subset.members == {2, 3, 4, 5}
        assert result.solution.fixed_cost == 4700
        assert result.solution.total_cost == 15000

    def test_acquisition_is_global_floor(self, fig3):
        # equals the all-vendors assignment cost, the cheapest possible
        result = policy_cheapest_per_item(fig3)
        everyone = build_solution(fig3, VendorSubset.of({1, 2, 3, 4, 5}))
        assert result.solution.acquisition_cost == everyone.acquisition_cost
        assert result.solution.subset.members == everyone.effective_members

    def test_uncovered_item(self):
        instance = validate_instance(
            ["A", "B"], ["V1", "V2"], [[100, 200], [None, None]], [10, 10]
        )
        with pytest.raises(UncoveredItem) as exc:
            policy_cheapest_per_item(instance)
        assert exc.value.items == ("B",)

    def test_single_vendor_instance_matches_alt1(self):
        instance = validate_instance(["A", "B"], ["V"], [[900], [100]], [50])
        alt1 = policy_single_vendor(instance)
        alt2 = policy_cheapest_per_item(instance)
        assert alt1.solution == alt2.solution


class TestDominance:
    def test_optimum_beats_both_policies(self):
        for seed in range(25):
            instance = generate_instance(m=10, n=5, seed=seed, bid_density=1.0)
            best = solve_exhaustive(instance).best.total_cost
            alt1 = policy_single_vendor(instance).solution.total_cost
            alt2 = policy_cheapest_per_item(instance).solution.total_cost
            assert best <= alt1
            assert best <= alt2

    def test_fig3_gaps(self, fig3):
        best = solve_exhaustive(fig3).best.total_cost
        assert best == 12700
        assert policy_single_vendor(fig3).solution.total_cost == 14200
        assert policy_cheapest_per_item(fig3).solution.total_cost == 15000
