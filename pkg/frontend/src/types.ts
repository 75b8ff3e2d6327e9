/**
 * Shapes of the JSON documents the vendor-selection service returns.
 * Every money field is a preformatted string ("127.00", "+22.00"); this UI
 * never computes costs, it only relays the strings.
 */

export interface InstanceDescriptor {
  id: string;
  m: number;
  n: number;
  vendors: string[];
  flagged_items: string[];
}

export interface AssignmentEntry {
  item: string;
  vendor: string | null;
  price: string | null;
}

export interface DeltaBlock {
  total: string;
  acquisition: string;
  fixed: string;
  vendors_entering: string[];
  vendors_leaving: string[];
  items_reassigned: number;
}

export interface SolutionDocument {
  solution_id: number;
  vendors: string[];
  assignments: AssignmentEntry[];
  acquisition_cost: string;
  fixed_cost: string;
  total_cost: string;
  items_covered: number;
  delta_vs_unconstrained?: DeltaBlock;
  stats: {
    subsets_evaluated: number;
    subsets_pruned: number;
    subsets_infeasible: number;
    workers: number;
    pruning: boolean;
  };
}

export interface CurveEntry {
  k: number;
  feasible: boolean;
  solution_id?: number;
  vendors?: string[];
  acquisition_cost?: string;
  fixed_cost?: string;
  total_cost?: string;
  items_covered?: number;
}

export interface CurveDocument {
  entries: CurveEntry[];
  optimum: { k: number; total_cost: string; solution_id: number };
}

export interface PolicySolutionBlock {
  feasible: boolean;
  reason?: string;
  solution?: SolutionDocument;
  ranking?: Array<{
    vendor: string;
    purchasing_cost: string;
    items_bid: number;
    full_coverage: boolean;
  }>;
}

export interface PoliciesDocument {
  single_vendor: PolicySolutionBlock;
  cheapest_per_item: PolicySolutionBlock;
}

export interface ErrorDocument {
  error: string;
  detail?: string;
  uncovered_items?: string[];
}
