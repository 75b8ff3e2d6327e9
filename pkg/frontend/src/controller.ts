/**
 * Explore-loop controller: turns an exploration state into a view model by
 * querying the service, with latest-wins semantics so a slow response can
 * never overwrite a newer interaction.
 *
 * Every money value in the view model is a string copied verbatim from a
 * service payload; no cost is ever computed here.
 */

import type { ApiClient } from "./api.js";
import type { ExploreState } from "./state.js";
import { isUnconstrained } from "./state.js";
import type {
  CurveDocument,
  ErrorDocument,
  InstanceDescriptor,
  PoliciesDocument,
  SolutionDocument,
} from "./types.js";

export interface VendorTable {
  vendor: string;
  items: Array<{ item: string; price: string }>;
}

export interface CurvePoint {
  k: number;
  feasible: boolean;
  total: string | null;
  isGlobalOptimum: boolean;
  isSelected: boolean;
}

export interface InfeasibleInfo {
  message: string;
  /** which control caused it, for highlighting */
  source: "forbid" | "require" | "k" | "instance";
  uncoveredItems: string[];
}

export interface ExploreViewModel {
  kind: "solution" | "infeasible" | "error";
  total: string | null;
  acquisition: string | null;
  fixed: string | null;
  itemsCovered: number | null;
  vendors: string[];
  vendorTables: VendorTable[];
  uncovered: string[];
  /** service-computed delta vs the unconstrained optimum, if constrained */
  deltaTotal: string | null;
  curve: CurvePoint[];
  policyTotals: { singleVendor: string | null; cheapestPerItem: string | null };
  infeasible: InfeasibleInfo | null;
  errorMessage: string | null;
}

export interface UploadViewModel {
  kind: "summary" | "error";
  summary: string | null;
  vendors: string[];
  flaggedItems: string[];
  errorMessage: string | null;
}

export function buildUploadViewModel(
  result: { ok: true; data: InstanceDescriptor } | { ok: false; status: number; error: ErrorDocument }
): UploadViewModel {
  if (!result.ok) {
    const detail = result.error.detail ?? result.error.error ?? "upload failed";
    return { kind: "error", summary: null, vendors: [], flaggedItems: [], errorMessage: detail };
  }
  const d = result.data;
  return {
    kind: "summary",
    summary: `${d.m} items × ${d.n} vendors`,
    vendors: d.vendors,
    flaggedItems: d.flagged_items,
    errorMessage: null,
  };
}

function vendorTables(solution: SolutionDocument): VendorTable[] {
  const byVendor = new Map<string, Array<{ item: string; price: string }>>();
  for (const vendor of solution.vendors) byVendor.set(vendor, []);
  for (const entry of solution.assignments) {
    if (entry.vendor !== null && entry.price !== null) {
      byVendor.get(entry.vendor)?.push({ item: entry.item, price: entry.price });
    }
  }
  return solution.vendors.map((vendor) => ({
    vendor,
    items: byVendor.get(vendor) ?? [],
  }));
}

function curvePoints(curve: CurveDocument | null, selectedK: number | null): CurvePoint[] {
  if (!curve) return [];
  return curve.entries.map((entry) => ({
    k: entry.k,
    feasible: entry.feasible,
    total: entry.total_cost ?? null,
    isGlobalOptimum: entry.k === curve.optimum.k,
    isSelected: entry.k === selectedK,
  }));
}

function policyTotals(policies: PoliciesDocument | null): ExploreViewModel["policyTotals"] {
  return {
    singleVendor: policies?.single_vendor.solution?.total_cost ?? null,
    cheapestPerItem: policies?.cheapest_per_item.solution?.total_cost ?? null,
  };
}

function infeasibleSource(state: ExploreState): InfeasibleInfo["source"] {
  if (state.forbid.length) return "forbid";
  if (state.require.length) return "require";
  if (state.k !== null) return "k";
  return "instance";
}

export class ExploreController {
  private ticket = 0;
  private policiesCache: { id: string; data: PoliciesDocument } | null = null;

  constructor(private readonly api: ApiClient) {}

  /**
   * Fetch everything the results pane needs for the given state.
   * Returns null when a newer refresh superseded this one.
   */
  async refresh(state: ExploreState): Promise<ExploreViewModel | null> {
    const id = state.instanceId;
    if (!id) return null;
    const ticket = ++this.ticket;

    const optimumPromise = this.api.getOptimum(id, {
      require: state.require,
      forbid: state.forbid,
      k: state.k,
    });
    const curvePromise = this.api.getCurve(id, {
      require: state.require,
      forbid: state.forbid,
    });
    const policiesPromise =
      this.policiesCache && this.policiesCache.id === id
        ? null
        : this.api.getPolicies(id);

    const optimum = await optimumPromise;
    const curve = await curvePromise;
    const policies = policiesPromise ? await policiesPromise : null;
    if (ticket !== this.ticket) return null; // superseded by a newer interaction

    if (policies && policies.ok) {
      this.policiesCache = { id, data: policies.data };
    }
    const policiesDoc = this.policiesCache?.id === id ? this.policiesCache.data : null;
    const curveDoc = curve.ok ? curve.data : null;

    if (!optimum.ok) {
      if (optimum.status === 409) {
        return {
          kind: "infeasible",
          total: null,
          acquisition: null,
          fixed: null,
          itemsCovered: null,
          vendors: [],
          vendorTables: [],
          uncovered: [],
          deltaTotal: null,
          curve: curvePoints(curveDoc, state.k),
          policyTotals: policyTotals(policiesDoc),
          infeasible: {
            message: optimum.error.detail ?? "no feasible selection",
            source: infeasibleSource(state),
            uncoveredItems: optimum.error.uncovered_items ?? [],
          },
          errorMessage: null,
        };
      }
      return {
        kind: "error",
        total: null,
        acquisition: null,
        fixed: null,
        itemsCovered: null,
        vendors: [],
        vendorTables: [],
        uncovered: [],
        deltaTotal: null,
        curve: curvePoints(curveDoc, state.k),
        policyTotals: policyTotals(policiesDoc),
        infeasible: null,
        errorMessage: optimum.error.detail ?? optimum.error.error ?? "request failed",
      };
    }

    const solution = optimum.data;
    const unconstrained = isUnconstrained(state);
    return {
      kind: "solution",
      total: solution.total_cost,
      acquisition: solution.acquisition_cost,
      fixed: solution.fixed_cost,
      itemsCovered: solution.items_covered,
      vendors: solution.vendors,
      vendorTables: vendorTables(solution),
      uncovered: solution.assignments
        .filter((a) => a.vendor === null)
        .map((a) => a.item),
      deltaTotal: unconstrained
        ? null
        : solution.delta_vs_unconstrained?.total ?? null,
      curve: curvePoints(curveDoc, state.k),
      policyTotals: policyTotals(policiesDoc),
      infeasible: null,
      errorMessage: null,
    };
  }
}
