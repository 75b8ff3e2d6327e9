/**
 * Exploration state <-> URL query parameters.
 * Pins, excludes, and the vendor-count slider live entirely in the URL so
 * any exploration step can be bookmarked or shared.
 */

export interface ExploreState {
  instanceId: string | null;
  require: string[];
  forbid: string[];
  k: number | null; // null = any vendor count
}

export const DEFAULT_STATE: ExploreState = {
  instanceId: null,
  require: [],
  forbid: [],
  k: null,
};

function parseList(raw: string | null): string[] {
  if (!raw) return [];
  return raw.split(",").map((s) => s.trim()).filter(Boolean);
}

export function decodeState(params: URLSearchParams): ExploreState {
  const rawK = params.get("k");
  const k = rawK !== null && /^\d+$/.test(rawK) ? Number(rawK) : null;
  return {
    instanceId: params.get("id"),
    require: parseList(params.get("require")),
    forbid: parseList(params.get("forbid")),
    k: k !== null && k >= 1 ? k : null,
  };
}

export function encodeState(state: ExploreState): URLSearchParams {
  const params = new URLSearchParams();
  if (state.instanceId) params.set("id", state.instanceId);
  if (state.require.length) params.set("require", state.require.join(","));
  if (state.forbid.length) params.set("forbid", state.forbid.join(","));
  if (state.k !== null) params.set("k", String(state.k));
  return params;
}

export function statesEqual(a: ExploreState, b: ExploreState): boolean {
  return encodeState(a).toString() === encodeState(b).toString();
}

/** True when no pin/exclude/count restriction is active. */
export function isUnconstrained(state: ExploreState): boolean {
  return state.require.length === 0 && state.forbid.length === 0 && state.k === null;
}

/** Cycle a vendor between neutral -> pinned -> excluded -> neutral. */
export function cycleVendor(state: ExploreState, vendor: string): ExploreState {
  const pinned = state.require.includes(vendor);
  const excluded = state.forbid.includes(vendor);
  if (pinned) {
    return {
      ...state,
      require: state.require.filter((v) => v !== vendor),
      forbid: [...state.forbid, vendor],
    };
  }
  if (excluded) {
    return { ...state, forbid: state.forbid.filter((v) => v !== vendor) };
  }
  return { ...state, require: [...state.require, vendor] };
}
