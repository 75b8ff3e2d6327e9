/**
 * Wiring: URL state -> controller -> renderers, with every interaction
 * writing the URL first so each exploration step stays shareable.
 */

import { ApiClient } from "./api.js";
import { buildUploadViewModel, ExploreController } from "./controller.js";
import { renderResults, renderSlider, renderUpload, renderVendorToggles } from "./render.js";
import { cycleVendor, decodeState, encodeState, type ExploreState } from "./state.js";

const params = new URLSearchParams(window.location.search);
const api = new ApiClient(params.get("api") ?? "");
const controller = new ExploreController(api);

let state: ExploreState = decodeState(params);
let vendors: string[] = [];

function pushState(next: ExploreState): void {
  state = next;
  const query = encodeState(state).toString();
  const apiBase = params.get("api");
  const parts = [query, apiBase ? `api=${encodeURIComponent(apiBase)}` : ""]
    .filter(Boolean)
    .join("&");
  history.replaceState(null, "", parts ? `?${parts}` : window.location.pathname);
  void refresh();
}

async function refresh(): Promise<void> {
  renderVendorToggles(vendors, state, null, (vendor) =>
    pushState(cycleVendor(state, vendor))
  );
  renderSlider(vendors.length, state, false);
  const vm = await controller.refresh(state);
  if (vm === null) return; // superseded or no instance yet
  renderResults(vm);
  const highlight = vm.infeasible?.source ?? null;
  renderVendorToggles(vendors, state, highlight, (vendor) =>
    pushState(cycleVendor(state, vendor))
  );
  renderSlider(vendors.length, state, highlight === "k");
}

async function loadInstance(csvText: string): Promise<void> {
  const result = await api.uploadInstance(csvText);
  renderUpload(buildUploadViewModel(result));
  if (!result.ok) return; // keep current state on a rejected upload
  vendors = result.data.vendors;
  pushState({ instanceId: result.data.id, require: [], forbid: [], k: null });
}

async function restoreFromUrl(): Promise<void> {
  if (!state.instanceId) return;
  const result = await api.getDescriptor(state.instanceId);
  if (!result.ok) {
    state = { ...state, instanceId: null };
    renderUpload({
      kind: "error",
      summary: null,
      vendors: [],
      flaggedItems: [],
      errorMessage: "stored instance no longer exists; upload again",
    });
    return;
  }
  vendors = result.data.vendors;
  renderUpload(buildUploadViewModel(result));
  void refresh();
}

function wire(): void {
  const fileInput = document.getElementById("csv-file") as HTMLInputElement;
  const textArea = document.getElementById("csv-text") as HTMLTextAreaElement;
  const loadButton = document.getElementById("load-button") as HTMLButtonElement;
  const slider = document.getElementById("k-slider") as HTMLInputElement;
  const resetButton = document.getElementById("reset-button") as HTMLButtonElement;

  fileInput.addEventListener("change", async () => {
    const file = fileInput.files?.[0];
    if (file) void loadInstance(await file.text());
  });
  loadButton.addEventListener("click", () => {
    if (textArea.value.trim()) void loadInstance(textArea.value);
  });
  slider.addEventListener("input", () => {
    const value = Number(slider.value);
    pushState({ ...state, k: value >= 1 ? value : null });
  });
  resetButton.addEventListener("click", () => {
    pushState({ ...state, require: [], forbid: [], k: null });
  });

  void restoreFromUrl();
}

document.addEventListener("DOMContentLoaded", wire);
