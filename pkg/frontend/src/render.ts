// DOM construction and per-state re-rendering. The static chrome (title,
// parameter selects, upload zone) is built once; the dynamic region
// (loading indicator, error banner, tag review list, export buttons) is
// re-rendered on every state change.

import { MODEL_OPTIONS, TAG_COUNT_OPTIONS } from "./config";
import { download, toCsv, toJson } from "./exporter";
import type { AppStore } from "./store";

export function renderApp(root: HTMLElement, store: AppStore): void {
  root.innerHTML = "";
  const card = el("div", "card");
  card.appendChild(el("h1", "", "Dataset tagger"));
  card.appendChild(
    el(
      "p",
      "hint",
      "Upload a .csv file; only its first 10 rows are read and sent for tagging.",
    ),
  );

  const controls = el("div", "controls");
  controls.appendChild(labeled("Number of tags", countSelect(store)));
  controls.appendChild(labeled("Model", modelSelect(store)));
  card.appendChild(controls);
  card.appendChild(uploadZone(store));

  const dynamic = el("div", "dynamic");
  card.appendChild(dynamic);
  root.appendChild(card);

  const repaint = () => renderDynamic(dynamic, store);
  store.subscribe(repaint);
  repaint();
}

export function renderDynamic(container: HTMLElement, store: AppStore): void {
  const state = store.state;
  container.innerHTML = "";

  if (state.fileName) {
    container.appendChild(el("p", "file-name", `File: ${state.fileName}`));
  }
  if (state.isLoading) {
    container.appendChild(el("p", "loading", "Generating tags…"));
    return;
  }
  if (state.error) {
    container.appendChild(el("div", "error-banner", state.error));
  }
  if (!state.tags) return;

  const list = el("div", "tag-list");
  const header = el("div", "tag-row tag-header");
  header.appendChild(el("span", "approve-col", "keep"));
  header.appendChild(el("span", "tag-col", "english"));
  header.appendChild(el("span", "tag-col", "translated"));
  list.appendChild(header);

  state.tags.english.forEach((english, index) => {
    const row = el("div", "tag-row");
    const checkbox = document.createElement("input");
    checkbox.type = "checkbox";
    checkbox.className = "approve-col";
    checkbox.checked = Boolean(state.approvals[english]);
    checkbox.addEventListener("change", () => store.toggleApproval(english));
    row.appendChild(checkbox);
    row.appendChild(el("span", "tag-col", english));
    row.appendChild(el("span", "tag-col", state.tags?.estonian[index] ?? ""));
    list.appendChild(row);
  });
  container.appendChild(list);

  if (state.tags.warnings.length > 0) {
    container.appendChild(
      el("p", "warnings", `warnings: ${state.tags.warnings.join(", ")}`),
    );
  }

  const approved = store.approvedCount();
  const actions = el("div", "actions");
  const exportJson = button(`Export JSON (${approved})`, () =>
    download("approved-tags.json", "application/json", toJson(store.approvedPairs())),
  );
  const exportCsv = button(`Export CSV (${approved})`, () =>
    download("approved-tags.csv", "text/csv", toCsv(store.approvedPairs())),
  );
  exportJson.disabled = approved === 0;
  exportCsv.disabled = approved === 0;
  actions.appendChild(exportJson);
  actions.appendChild(exportCsv);
  container.appendChild(actions);
}

function countSelect(store: AppStore): HTMLSelectElement {
  const select = document.createElement("select");
  select.id = "count-select";
  for (const option of TAG_COUNT_OPTIONS) {
    const node = document.createElement("option");
    node.value = String(option);
    node.textContent = String(option);
    node.selected = option === store.state.selectedCount;
    select.appendChild(node);
  }
  select.addEventListener("change", () => {
    void store.setCount(Number(select.value));
  });
  return select;
}

function modelSelect(store: AppStore): HTMLSelectElement {
  const select = document.createElement("select");
  select.id = "model-select";
  for (const option of MODEL_OPTIONS) {
    const node = document.createElement("option");
    node.value = option;
    node.textContent = option;
    node.selected = option === store.state.selectedModel;
    select.appendChild(node);
  }
  select.addEventListener("change", () => {
    void store.setModel(select.value);
  });
  return select;
}

function uploadZone(store: AppStore): HTMLElement {
  const zone = el("div", "dropzone");
  zone.appendChild(el("p", "", "Drag a .csv file here, or"));
  const input = document.createElement("input");
  input.type = "file";
  input.accept = ".csv";
  input.id = "file-input";
  input.addEventListener("change", () => {
    const file = input.files?.[0];
    if (file) void store.setFile(file);
  });
  zone.appendChild(input);

  zone.addEventListener("dragover", (event) => {
    event.preventDefault();
    zone.classList.add("dragging");
  });
  zone.addEventListener("dragleave", () => zone.classList.remove("dragging"));
  zone.addEventListener("drop", (event) => {
    event.preventDefault();
    zone.classList.remove("dragging");
    const file = event.dataTransfer?.files?.[0];
    if (file) void store.setFile(file);
  });
  return zone;
}

function el(tag: string, className = "", text = ""): HTMLElement {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text) node.textContent = text;
  return node;
}

function labeled(text: string, control: HTMLElement): HTMLElement {
  const wrapper = el("label", "labeled");
  wrapper.appendChild(el("span", "", text));
  wrapper.appendChild(control);
  return wrapper;
}

function button(text: string, onClick: () => void): HTMLButtonElement {
  const node = document.createElement("button");
  node.textContent = text;
  node.addEventListener("click", onClick);
  return node;
}
