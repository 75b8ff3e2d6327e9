/**
 * Service payloads captured verbatim from the HTTP API for the worked
 * 9-item / 5-vendor example, so tests exercise exactly what production
 * clients would see.
 */

import type {
  CurveDocument,
  InstanceDescriptor,
  PoliciesDocument,
  SolutionDocument,
} from "../src/types.js";

export const DESCRIPTOR: InstanceDescriptor = {
  id: "abc123def456",
  m: 9,
  n: 5,
  vendors: ["S1", "S2", "S3", "S4", "S5"],
  flagged_items: [],
};

export const OPTIMUM_UNCONSTRAINED: SolutionDocument = {
  solution_id: 24,
  vendors: ["S4", "S5"],
  assignments: [
    { item: "P1", vendor: "S4", price: "12.00" },
    { item: "P2", vendor: "S5", price: "10.00" },
    { item: "P3", vendor: "S5", price: "11.00" },
    { item: "P4", vendor: "S5", price: "14.00" },
    { item: "P5", vendor: "S4", price: "11.00" },
    { item: "P6", vendor: "S5", price: "11.00" },
    { item: "P7", vendor: "S5", price: "11.00" },
    { item: "P8", vendor: "S4", price: "14.00" },
    { item: "P9", vendor: "S4", price: "14.00" },
  ],
  acquisition_cost: "108.00",
  fixed_cost: "19.00",
  total_cost: "127.00",
  items_covered: 9,
  stats: {
    subsets_evaluated: 31,
    subsets_pruned: 0,
    subsets_infeasible: 0,
    workers: 1,
    pruning: false,
  },
};

export const OPTIMUM_FORBID_S5: SolutionDocument = {
  solution_id: 9,
  vendors: ["S1", "S4"],
  assignments: [
    { item: "P1", vendor: "S4", price: "12.00" },
    { item: "P2", vendor: "S4", price: "13.00" },
    { item: "P3", vendor: "S1", price: "15.00" },
    { item: "P4", vendor: "S1", price: "16.00" },
    { item: "P5", vendor: "S4", price: "11.00" },
    { item: "P6", vendor: "S1", price: "18.00" },
    { item: "P7", vendor: "S4", price: "20.00" },
    { item: "P8", vendor: "S4", price: "14.00" },
    { item: "P9", vendor: "S1", price: "12.00" },
  ],
  acquisition_cost: "131.00",
  fixed_cost: "18.00",
  total_cost: "149.00",
  items_covered: 9,
  delta_vs_unconstrained: {
    total: "+22.00",
    acquisition: "+23.00",
    fixed: "-1.00",
    vendors_entering: ["S1"],
    vendors_leaving: ["S5"],
    items_reassigned: 6,
  },
  stats: {
    subsets_evaluated: 15,
    subsets_pruned: 0,
    subsets_infeasible: 0,
    workers: 1,
    pruning: false,
  },
};

export const OPTIMUM_K2: SolutionDocument = {
  ...OPTIMUM_UNCONSTRAINED,
  delta_vs_unconstrained: {
    total: "0.00",
    acquisition: "0.00",
    fixed: "0.00",
    vendors_entering: [],
    vendors_leaving: [],
    items_reassigned: 0,
  },
  stats: {
    subsets_evaluated: 10,
    subsets_pruned: 0,
    subsets_infeasible: 0,
    workers: 1,
    pruning: false,
  },
};

export const CURVE: CurveDocument = {
  entries: [
    { k: 1, feasible: true, solution_id: 16, vendors: ["S5"], acquisition_cost: "131.00", fixed_cost: "11.00", total_cost: "142.00", items_covered: 9 },
    { k: 2, feasible: true, solution_id: 24, vendors: ["S4", "S5"], acquisition_cost: "108.00", fixed_cost: "19.00", total_cost: "127.00", items_covered: 9 },
    { k: 3, feasible: true, solution_id: 25, vendors: ["S1", "S4", "S5"], acquisition_cost: "106.00", fixed_cost: "29.00", total_cost: "135.00", items_covered: 9 },
    { k: 4, feasible: true, solution_id: 27, vendors: ["S1", "S2", "S4", "S5"], acquisition_cost: "104.00", fixed_cost: "42.00", total_cost: "146.00", items_covered: 9 },
    { k: 5, feasible: true, solution_id: 31, vendors: ["S1", "S2", "S3", "S4", "S5"], acquisition_cost: "103.00", fixed_cost: "57.00", total_cost: "160.00", items_covered: 9 },
  ],
  optimum: { k: 2, total_cost: "127.00", solution_id: 24 },
};

export const POLICIES: PoliciesDocument = {
  single_vendor: {
    feasible: true,
    ranking: [
      { vendor: "S5", purchasing_cost: "131.00", items_bid: 9, full_coverage: true },
      { vendor: "S4", purchasing_cost: "143.00", items_bid: 9, full_coverage: true },
      { vendor: "S2", purchasing_cost: "146.00", items_bid: 9, full_coverage: true },
      { vendor: "S3", purchasing_cost: "156.00", items_bid: 9, full_coverage: true },
      { vendor: "S1", purchasing_cost: "167.00", items_bid: 9, full_coverage: true },
    ],
    solution: {
      solution_id: 16,
      vendors: ["S5"],
      assignments: [],
      acquisition_cost: "131.00",
      fixed_cost: "11.00",
      total_cost: "142.00",
      items_covered: 9,
      stats: { subsets_evaluated: 1, subsets_pruned: 0, subsets_infeasible: 0, workers: 1, pruning: false },
    },
  },
  cheapest_per_item: {
    feasible: true,
    solution: {
      solution_id: 30,
      vendors: ["S2", "S3", "S4", "S5"],
      assignments: [],
      acquisition_cost: "103.00",
      fixed_cost: "47.00",
      total_cost: "150.00",
      items_covered: 9,
      stats: { subsets_evaluated: 1, subsets_pruned: 0, subsets_infeasible: 0, workers: 1, pruning: false },
    },
  },
};
