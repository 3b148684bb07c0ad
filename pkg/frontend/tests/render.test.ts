import { describe, expect, it } from "vitest";

import { markLine, renderZones, ViewModel } from "../src/render.js";
import { EngineEvent, WorkspaceSnapshot } from "../src/protocol.js";
import { applyEvent, applyEvents, initialState } from "../src/workbench.js";
import { fixtureJson } from "./helpers.js";

interface RunFixture {
  events: EngineEvent[];
  workspace: WorkspaceSnapshot;
}

function view(overrides: Partial<ViewModel> = {}): ViewModel {
  return {
    programText: "Define M\n    Do\n    x = 1 ;\nEnd",
    macroNames: ["M"],
    dialect: "python",
    dialectText: "x = 1",
    dialects: ["agt", "python", "c", "cpp", "java"],
    recording: false,
    highlights: [],
    speed: 4,
    ...overrides,
  };
}

describe("zones", () => {
  it("lays out workspace, instructions, construction, output, toolbar",
    () => {
      const { workspace } = fixtureJson<RunFixture>("missing_else_run.json");
      const state = applyEvent(
        initialState(), { event: "WorkspaceState", workspace });
      const html = renderZones(state, view());
      for (const zone of [
        "zone workspace", "zone instructions", "zone construction",
        "zone output", "zone toolbar",
      ]) {
        expect(html).toContain(zone);
      }
      expect(html).toContain('data-name="v"');
      expect(html).toContain('class="literal" data-ref="-1"');
      expect(html).toContain("keyboard-icon");
      expect(html).toContain("screen-icon");
      expect(html).toContain("run-triangle");
      expect(html).toContain('class="speed"');
    });

  it("shows the missing-case modal when the engine pauses", () => {
    const { events } = fixtureJson<RunFixture>("missing_else_run.json");
    const state = applyEvents(initialState(), events);
    const html = renderZones(state, view());
    expect(html).toContain("cas-manquant");
    expect(html).toContain("Cas manquant");
    expect(html).toContain("v &gt; 0");
  });

  it("marks highlight spans inside the dialect view", () => {
    const state = initialState();
    const html = renderZones(state, view({
      dialectText: "while (j >= 0) :",
      highlights: [{ line: 1, start: 7, end: 13 }],
    }));
    expect(html).toContain("<mark>j &gt;= 0</mark>");
  });

  it("escapes program text", () => {
    const html = renderZones(initialState(), view({
      programText: 'Write "a < b" ;',
    }));
    expect(html).toContain("a &lt; b");
  });
});

describe("markLine", () => {
  it("wraps only the requested columns", () => {
    const marked = markLine("while (j >= 0 and t[j] > t[k]) :", [
      { line: 9, start: 7, end: 13 },
      { line: 9, start: 18, end: 29 },
    ]);
    expect(marked).toBe(
      "while (<mark>j &gt;= 0</mark> and " +
      "<mark>t[j] &gt; t[k]</mark>) :");
  });
});
