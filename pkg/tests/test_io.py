import json

import pytest

from mivs import (
    Constraints,
    generate_instance,
    parse_bid_csv,
    policy_cheapest_per_item,
    policy_single_vendor,
    solve_exhaustive,
    write_bid_csv,
)
from mivs.bench import bench_csv, run_bench
from mivs.errors import BadNumber, BadParameters, MalformedCsv
from mivs.io import curve_json, descriptor_json, policies_json, solution_report_json
from mivs.whatif import compare_solutions, cost_curve


class TestParseCsv:
    def test_fig3(self, fig3, fig3_csv_text):
        assert parse_bid_csv(fig3_csv_text) == fig3

    def test_blank_cell_means_no_bid(self):
        text = (
            "item,S1,S2\n"
            "P1,15,21\n"
            "P3,15,\n"
            "FIXED_COST,10,12\n"
        )
        instance = parse_bid_csv(text)
        assert instance.prices[1] == (1500, None)
        assert instance.bid_counts == (2, 1)

    def test_missing_fixed_cost_row(self):
        text = "item,S1\nP1,5\nP2,6\n"
        with pytest.raises(MalformedCsv):
            parse_bid_csv(text)

    def test_fixed_cost_not_last(self):
        text = "item,S1\nFIXED_COST,3\nP1,5\n"
        with pytest.raises(MalformedCsv):
            parse_bid_csv(text)

    def test_ragged_row(self):
        text = "item,S1,S2\nP1,5\nFIXED_COST,3,4\n"
        with pytest.raises(MalformedCsv):
            parse_bid_csv(text)

    def test_duplicate_vendor_names(self):
        text = "item,S1,S1\nP1,5,6\nFIXED_COST,3,4\n"
        with pytest.raises(MalformedCsv):
            parse_bid_csv(text)

    def test_bad_numbers(self):
        for cell in ("-5", "5.123", "abc"):
            text = f"item,S1\nP1,{cell}\nFIXED_COST,3\n"
            with pytest.raises(BadNumber):
                parse_bid_csv(text)

    def test_european_format_rejected(self):
        text = "item,S1\nP1,\"1.234,56\"\nFIXED_COST,3\n"
        with pytest.raises(BadNumber):
            parse_bid_csv(text)

    def test_roundtrip(self, fig3):
        assert parse_bid_csv(write_bid_csv(fig3)) == fig3

    def test_roundtrip_sparse(self):
        instance = generate_instance(m=14, n=6, seed=9, bid_density=0.5)
        assert parse_bid_csv(write_bid_csv(instance)) == instance


class TestSolutionJson:
    def test_fig3_document(self, fig3):
        report = solve_exhaustive(fig3)
        text = solution_report_json(report)
        document = json.loads(text)
        assert document["solution_id"] == 24
        assert document["vendors"] == ["S4", "S5"]
        assert document["total_cost"] == "127.00"
        assert document["acquisition_cost"] == "108.00"
        assert document["fixed_cost"] == "19.00"
        assert document["items_covered"] == 9
        assert document["stats"]["subsets_evaluated"] == 31
        assert "delta_vs_unconstrained" not in document
        assert document["assignments"][0] == {
            "item": "P1",
            "vendor": "S4",
            "price": "12.00",
        }

    def test_bytes_stable_across_runs(self, fig3):
        a = solution_report_json(solve_exhaustive(fig3))
        b = solution_report_json(solve_exhaustive(fig3))
        assert a == b

    def test_delta_block(self, fig3):
        constrained = solve_exhaustive(fig3, Constraints(forbidden=frozenset({5})))
        baseline = solve_exhaustive(fig3)
        delta = compare_solutions(baseline.best, constrained.best)
        document = json.loads(solution_report_json(constrained, delta))
        assert document["total_cost"] == "149.00"
        assert document["delta_vs_unconstrained"]["total"] == "+22.00"
        assert document["delta_vs_unconstrained"]["vendors_leaving"] == ["S5"]

    def test_partial_coverage_lists_null_vendor(self):
        from mivs import CoverageMode, validate_instance

        instance = validate_instance(
            ["A", "B"], ["V1"], [[500], [None]], [100]
        )
        report = solve_exhaustive(
            instance, Constraints(coverage=CoverageMode.PARTIAL)
        )
        document = json.loads(solution_report_json(report))
        assert document["assignments"][1] == {
            "item": "B",
            "vendor": None,
            "price": None,
        }
        assert document["items_covered"] == 1

    def test_single_assignment_entry(self):
        from mivs import validate_instance

        instance = validate_instance(["A"], ["V"], [[500]], [100])
        document = json.loads(solution_report_json(solve_exhaustive(instance)))
        assert len(document["assignments"]) == 1


class TestOtherJson:
    def test_curve_document(self, fig3):
        document = json.loads(curve_json(cost_curve(fig3), fig3))
        assert [e["total_cost"] for e in document["entries"]] == [
            "142.00", "127.00", "135.00", "146.00", "160.00",
        ]
        assert document["optimum"] == {
            "k": 2,
            "total_cost": "127.00",
            "solution_id": 24,
        }

    def test_policies_document(self, fig3):
        document = json.loads(
            policies_json(
                policy_single_vendor(fig3), policy_cheapest_per_item(fig3), fig3
            )
        )
        assert document["single_vendor"]["solution"]["total_cost"] == "142.00"
        assert document["single_vendor"]["ranking"][0] == {
            "vendor": "S5",
            "purchasing_cost": "131.00",
            "items_bid": 9,
            "full_coverage": True,
        }
        assert document["cheapest_per_item"]["solution"]["total_cost"] == "150.00"
        assert document["cheapest_per_item"]["solution"]["vendors"] == [
            "S2", "S3", "S4", "S5",
        ]

    def test_descriptor(self, fig3):
        document = json.loads(descriptor_json(fig3, "abc123"))
        assert document == {
            "id": "abc123",
            "m": 9,
            "n": 5,
            "vendors": ["S1", "S2", "S3", "S4", "S5"],
            "flagged_items": [],
        }


class TestGenerate:
    def test_full_density_bid_count(self):
        instance = generate_instance(m=9, n=5, seed=42, bid_density=1.0)
        assert sum(instance.bid_counts) == 45

    def test_deterministic(self):
        a = generate_instance(m=20, n=8, seed=7, bid_density=0.5)
        b = generate_instance(m=20, n=8, seed=7, bid_density=0.5)
        assert a == b
        assert write_bid_csv(a) == write_bid_csv(b)

    def test_every_item_has_a_bid(self):
        instance = generate_instance(m=100, n=10, seed=7, bid_density=0.5)
        assert all(count >= 1 for count in instance.bid_counts)

    def test_bad_parameters(self):
        with pytest.raises(BadParameters):
            generate_instance(m=0, n=5, seed=1)
        with pytest.raises(BadParameters):
            generate_instance(m=5, n=5, seed=1, bid_density=0.0)
        with pytest.raises(BadParameters):
            generate_instance(m=5, n=5, seed=1, price_range=(0, 10))


class TestBench:
    def test_small_grid(self):
        records = run_bench([4, 5], [10], repetitions=2)
        assert len(records) == 2
        by_n = {r.n: r for r in records}
        assert by_n[4].subsets_evaluated == 2**4 - 1
        assert by_n[5].subsets_evaluated == 2**5 - 1
        text = bench_csv(records)
        header, *rows = text.strip().splitlines()
        assert header == "n,m,workers,pruning,subsets_evaluated,wall_time_ms"
        assert len(rows) == 2
        assert rows[0].startswith("4,10,1,false,15,")
