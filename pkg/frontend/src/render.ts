/**
 * DOM rendering of the three panes. All money strings are inserted
 * verbatim; numbers are parsed only to size chart bars, never to compute
 * displayed values.
 */

import type { CurvePoint, ExploreViewModel, UploadViewModel } from "./controller.js";
import type { ExploreState } from "./state.js";

function el<T extends HTMLElement = HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function clear(node: HTMLElement): void {
  while (node.firstChild) node.removeChild(node.firstChild);
}

export function renderUpload(vm: UploadViewModel): void {
  const summary = el("instance-summary");
  const error = el("instance-error");
  clear(summary);
  error.textContent = vm.errorMessage ?? "";
  error.hidden = vm.kind !== "error";
  if (vm.kind !== "summary") return;
  const heading = document.createElement("p");
  heading.className = "summary-line";
  heading.textContent = vm.summary ?? "";
  summary.appendChild(heading);
  if (vm.flaggedItems.length) {
    const warn = document.createElement("p");
    warn.className = "flagged";
    warn.textContent = `no bids on: ${vm.flaggedItems.join(", ")}`;
    summary.appendChild(warn);
  }
}

export function renderVendorToggles(
  vendors: string[],
  state: ExploreState,
  highlight: "forbid" | "require" | "k" | "instance" | null,
  onCycle: (vendor: string) => void
): void {
  const host = el("vendor-toggles");
  clear(host);
  for (const vendor of vendors) {
    const button = document.createElement("button");
    const pinned = state.require.includes(vendor);
    const excluded = state.forbid.includes(vendor);
    button.className = "vendor-toggle";
    if (pinned) button.classList.add("pinned");
    if (excluded) button.classList.add("excluded");
    if (highlight === "forbid" && excluded) button.classList.add("offending");
    if (highlight === "require" && pinned) button.classList.add("offending");
    button.textContent = pinned ? `${vendor} (pinned)` : excluded ? `${vendor} (excluded)` : vendor;
    button.addEventListener("click", () => onCycle(vendor));
    host.appendChild(button);
  }
}

export function renderSlider(n: number, state: ExploreState, highlight: boolean): void {
  const slider = el<HTMLInputElement>("k-slider");
  const label = el("k-label");
  slider.min = "0";
  slider.max = String(n);
  slider.value = state.k === null ? "0" : String(state.k);
  label.textContent = state.k === null ? "any" : String(state.k);
  slider.classList.toggle("offending", highlight);
}

function renderCurve(points: CurvePoint[]): void {
  const host = el("curve-chart");
  clear(host);
  if (!points.length) return;
  const width = 320;
  const height = 150;
  const svg = document.createElementNS("http://www.w3.org/2000/svg", "svg");
  svg.setAttribute("viewBox", `0 0 ${width} ${height + 30}`);
  // bar geometry only; labels show the service strings untouched
  const numeric = points
    .filter((p) => p.total !== null)
    .map((p) => Number.parseFloat(p.total as string));
  const top = numeric.length ? Math.max(...numeric) : 1;
  const barWidth = width / points.length;
  points.forEach((point, index) => {
    const group = document.createElementNS("http://www.w3.org/2000/svg", "g");
    if (point.total !== null) {
      const value = Number.parseFloat(point.total);
      const barHeight = top > 0 ? (value / top) * (height - 20) : 0;
      const rect = document.createElementNS("http://www.w3.org/2000/svg", "rect");
      rect.setAttribute("x", String(index * barWidth + 6));
      rect.setAttribute("y", String(height - barHeight));
      rect.setAttribute("width", String(barWidth - 12));
      rect.setAttribute("height", String(barHeight));
      rect.setAttribute(
        "class",
        "bar" +
          (point.isGlobalOptimum ? " optimum" : "") +
          (point.isSelected ? " selected" : "")
      );
      group.appendChild(rect);
      const label = document.createElementNS("http://www.w3.org/2000/svg", "text");
      label.setAttribute("x", String(index * barWidth + barWidth / 2));
      label.setAttribute("y", String(height - barHeight - 4));
      label.setAttribute("text-anchor", "middle");
      label.setAttribute("class", "bar-value");
      label.textContent = point.total;
      group.appendChild(label);
    }
    const axis = document.createElementNS("http://www.w3.org/2000/svg", "text");
    axis.setAttribute("x", String(index * barWidth + barWidth / 2));
    axis.setAttribute("y", String(height + 16));
    axis.setAttribute("text-anchor", "middle");
    axis.setAttribute("class", "bar-axis" + (point.isGlobalOptimum ? " optimum" : ""));
    axis.textContent = point.feasible ? `k=${point.k}` : `k=${point.k} —`;
    group.appendChild(axis);
    svg.appendChild(group);
  });
  host.appendChild(svg);
}

export function renderResults(vm: ExploreViewModel): void {
  const totals = el("result-totals");
  const delta = el("result-delta");
  const tables = el("vendor-tables");
  const message = el("result-message");
  const policies = el("policy-totals");
  clear(totals);
  clear(tables);
  message.textContent = "";
  message.className = "";
  delta.textContent = "";

  if (vm.kind === "infeasible" && vm.infeasible) {
    message.textContent = `no feasible selection: ${vm.infeasible.message}`;
    message.className = "infeasible";
  } else if (vm.kind === "error") {
    message.textContent = vm.errorMessage ?? "request failed";
    message.className = "error";
  } else {
    const line = document.createElement("p");
    line.className = "total-line";
    line.textContent = `total ${vm.total}`;
    totals.appendChild(line);
    const breakdown = document.createElement("p");
    breakdown.className = "breakdown";
    breakdown.textContent =
      `acquisition ${vm.acquisition} + fixed ${vm.fixed}` +
      (vm.itemsCovered !== null ? ` · ${vm.itemsCovered} items` : "");
    totals.appendChild(breakdown);
    if (vm.uncovered.length) {
      const warn = document.createElement("p");
      warn.className = "flagged";
      warn.textContent = `uncovered: ${vm.uncovered.join(", ")}`;
      totals.appendChild(warn);
    }
    if (vm.deltaTotal !== null) {
      delta.textContent = `${vm.deltaTotal} vs optimum`;
    }
    for (const table of vm.vendorTables) {
      const box = document.createElement("div");
      box.className = "vendor-table";
      const caption = document.createElement("h4");
      caption.textContent = `${table.vendor} · ${table.items.length} items`;
      box.appendChild(caption);
      const list = document.createElement("table");
      for (const row of table.items) {
        const tr = document.createElement("tr");
        const item = document.createElement("td");
        item.textContent = row.item;
        const price = document.createElement("td");
        price.textContent = row.price;
        tr.append(item, price);
        list.appendChild(tr);
      }
      box.appendChild(list);
      tables.appendChild(box);
    }
  }

  clear(policies);
  const alt1 = document.createElement("p");
  alt1.textContent = `single vendor: ${vm.policyTotals.singleVendor ?? "n/a"}`;
  const alt2 = document.createElement("p");
  alt2.textContent = `cheapest per item: ${vm.policyTotals.cheapestPerItem ?? "n/a"}`;
  policies.append(alt1, alt2);

  renderCurve(vm.curve);
}
