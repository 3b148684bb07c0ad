// Rendering is string templating over the workbench state: no widget
// tree, no retained DOM. The host page assigns the result to innerHTML
// and wires pointer events back into the gesture mapper.

import { Span } from "./highlight.js";
import { Entity } from "./protocol.js";
import { WorkbenchState } from "./workbench.js";

export interface ViewModel {
  programText: string;
  macroNames: string[];
  dialect: string;
  dialectText: string;
  dialects: string[];
  recording: boolean;
  highlights: Span[];
  speed: number;
}

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function entityHtml(e: Entity): string {
  if (e.kind === "array") {
    const cells = e.cells.map(
      (v, i) =>
        `<span class="cell" data-ref="${escapeHtml(e.name)}[${i}]">` +
        `${v}</span>`,
    ).join("");
    return `<div class="entity array" data-name="${escapeHtml(e.name)}">` +
      `<span class="name">${escapeHtml(e.name)}</span>${cells}</div>`;
  }
  if (e.kind === "index") {
    return `<div class="entity index" data-name="${escapeHtml(e.name)}"` +
      ` data-array="${escapeHtml(e.array)}">` +
      `<span class="name">${escapeHtml(e.name)}</span>` +
      `<span class="value">${e.value}</span></div>`;
  }
  const cls = e.constant ? "entity constant" : "entity variable";
  return `<div class="${cls}" data-name="${escapeHtml(e.name)}">` +
    `<span class="name">${escapeHtml(e.name)}</span>` +
    `<span class="value">${e.value}</span></div>`;
}

// Wrap the highlighted column ranges of one line in <mark>.
export function markLine(line: string, spans: Span[]): string {
  const cuts = spans
    .slice()
    .sort((a, b) => a.start - b.start);
  let out = "";
  let at = 0;
  for (const s of cuts) {
    if (s.start < at) continue;
    out += escapeHtml(line.slice(at, s.start));
    out += "<mark>" + escapeHtml(line.slice(s.start, s.end)) + "</mark>";
    at = s.end;
  }
  return out + escapeHtml(line.slice(at));
}

function codeHtml(text: string, highlights: Span[]): string {
  const lines = text.split("\n");
  return lines.map((line, i) => {
    const here = highlights.filter((s) => s.line === i + 1);
    const body = here.length > 0 ? markLine(line, here) : escapeHtml(line);
    return `<span class="line" data-line="${i + 1}">${body}</span>`;
  }).join("\n");
}

export function renderZones(
  state: WorkbenchState, view: ViewModel,
): string {
  const ws = state.workspace;
  const entities = ws ? ws.entities.map(entityHtml).join("") : "";
  const palette = (ws ? ws.palette : [-1, 0, 1]).map(
    (v) => `<span class="literal" data-ref="${v}">${v}</span>`,
  ).join("");
  const macros = view.macroNames.map(
    (m) => `<div class="macro-icon" data-name="${escapeHtml(m)}">` +
      `${escapeHtml(m)}<button class="run-triangle" ` +
      `data-macro="${escapeHtml(m)}">&#9655;</button></div>`,
  ).join("");
  const tabs = view.dialects.map((d) => {
    const current = d === view.dialect ? " current" : "";
    return `<button class="tab${current}" data-dialect="${d}">${d}</button>`;
  }).join("");
  const consoleLines = state.console.map(
    (l) => `<div class="console-line">${escapeHtml(l)}</div>`,
  ).join("");
  const dialog = state.dialog.open
    ? `<div class="modal cas-manquant"><h2>${state.dialog.title}</h2>` +
      `<p>Le cas <code>${escapeHtml(state.dialog.condition)}</code> ` +
      `n'est pas trait&eacute;.</p>` +
      `<button class="treat-now">Traiter ce cas</button>` +
      `<button class="close-case">Laisser tel quel</button></div>`
    : "";
  const menu = state.menu
    ? `<div class="chooser">` + state.menu.map(
        (rel) => `<button class="menu-item" data-rel="${escapeHtml(rel)}">` +
          `${escapeHtml(rel)}</button>`,
      ).join("") + `</div>`
    : "";
  const error = state.error
    ? `<div class="error-banner">${escapeHtml(state.error)}</div>`
    : "";
  return `
<div class="workbench">
  <div class="zone toolbar">
    <label>Animation
      <input type="range" class="speed" min="1" max="20"
             value="${view.speed}">
    </label>
    ${error}
  </div>
  <div class="zone workspace">
    <div class="palette">${palette}</div>
    ${entities}
    <div class="io-icons">
      <span class="keyboard-icon" data-ref="keyboard">&#9000;</span>
      <span class="screen-icon" data-ref="screen">&#128421;</span>
    </div>
    <div class="macros">${macros}</div>
    <div class="balance">
      <span class="plate plate-left"></span>
      <span class="plate plate-right"></span>
      ${menu}
    </div>
  </div>
  <div class="zone instructions"><pre>${
    codeHtml(view.programText, [])}</pre></div>
  <div class="zone construction">
    <button class="record">${view.recording ? "stop" : "record"}</button>
    <button class="execute-selection">execute</button>
    <button class="delete-selection">delete</button>
    <select class="language">${view.dialects.map(
      (d) => `<option${d === view.dialect ? " selected" : ""}>${d}</option>`,
    ).join("")}</select>
  </div>
  <div class="zone output">
    <button class="tab current" data-tab="console">console</button>
    ${tabs}
    <button class="export">export</button>
    <div class="console">${consoleLines}</div>
    <pre class="dialect-view">${
      codeHtml(view.dialectText, view.highlights)}</pre>
  </div>
  ${dialog}
</div>`;
}
