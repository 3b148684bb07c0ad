// The workbench acceptance check in one file: scripted pointer
// sequences produce the very Action records a real replay log carries,
// the engine's missing-case pause opens the dialog, and exit-condition
// selection lands on the negated span through the condition map.

import { describe, expect, it } from "vitest";

import { GestureMapper } from "../src/gestures.js";
import {
  ConditionMapRow, exitsForGuard, spanForExit,
} from "../src/highlight.js";
import { Action, EngineEvent, sameAction } from "../src/protocol.js";
import { Scene } from "../src/scene.js";
import { applyEvents, initialState } from "../src/workbench.js";
import {
  clickScript, dragScript, fixtureActions, fixtureJson, run, target,
} from "./helpers.js";

function pick(actions: Action[], probe: Partial<Action>): Action {
  const found = actions.find(
    (a) => Object.entries(probe).every(
      ( [k, v]) => (a as Record<string, unknown>)[k] === v));
  expect(found, `no ${JSON.stringify(probe)} in the replay log`)
    .toBeDefined();
  return found!;
}

describe("gesture mapping lands on engine records", () => {
  const log = fixtureActions("position_min.agts");
  const scene = new Scene([
    target("lit0", "literal", "0", 10, 10),
    target("var-m", "index", "m", 200, 10),
    target("idx-j", "index", "j", 300, 100),
    target("cell-tj", "array-cell", "t[j]", 10, 200),
    target("cell-tm", "array-cell", "t[m]", 60, 200),
    target("plate-l", "plate-left", "balance", 400, 200),
    target("plate-r", "plate-right", "balance", 460, 200),
    target("mi-gt", "menu-item", ">", 400, 300),
    target("mi-ne", "menu-item", "!=", 440, 300),
    target("mi-ge", "menu-item", ">=", 480, 300),
  ]);

  it("drag-assign emits the record the replay script contains", () => {
    const { actions } = run(
      new GestureMapper(), scene, dragScript(scene, "lit0", "var-m"));
    expect(actions).toHaveLength(1);
    expect(sameAction(actions[0], pick(log, { op: "drag", dst: "m" })))
      .toBe(true);
  });

  it("sweep increment emits the record the replay script contains", () => {
    const { actions } = run(new GestureMapper(), scene, [
      { kind: "down", x: 250, y: 118 },
      { kind: "move", x: 330, y: 119 },
      { kind: "up", x: 400, y: 118 },
    ]);
    expect(actions).toHaveLength(1);
    expect(sameAction(actions[0], pick(log, { op: "inc" }))).toBe(true);
  });

  it("comparator choice emits compare then choose, both on record", () => {
    const mapper = new GestureMapper();
    const all = run(mapper, scene, [
      ...dragScript(scene, "cell-tj", "plate-l"),
      ...dragScript(scene, "cell-tm", "plate-r"),
      ...clickScript(scene, "mi-ge"),
    ]);
    expect(all.actions).toHaveLength(2);
    expect(sameAction(all.actions[0], pick(log, { op: "compare" })))
      .toBe(true);
    expect(sameAction(all.actions[1], pick(log, { op: "choose" })))
      .toBe(true);
  });
});

describe("missing-case pause opens the dialog", () => {
  it("the Cas manquant modal names the untreated case", () => {
    const { events } =
      fixtureJson<{ events: EngineEvent[] }>("missing_else_run.json");
    const pause = events[events.length - 1];
    expect(pause.event).toBe("PausedEvent");
    const state = applyEvents(initialState(), events);
    expect(state.dialog.open).toBe(true);
    if (state.dialog.open) {
      expect(state.dialog.title).toBe("Cas manquant");
      expect(state.dialog.condition).toBe("v > 0");
    }
  });
});

describe("condition map highlighting", () => {
  it("selecting j < 0 lights up j >= 0 in the generated code", () => {
    const t = fixtureJson<{ text: string; condition_map: ConditionMapRow[] }>(
      "insere_elt_python.json");
    const exitIndex = t.condition_map[0].conditions
      .find((c) => c.text === "j < 0")!.index;
    const span = spanForExit(t.text, t.condition_map, "InsereElt", exitIndex)!;
    const lit = t.text.split("\n")[span.line - 1]
      .slice(span.start, span.end);
    expect(lit).toBe("j >= 0");
  });

  it("and the guard line points back at both exits", () => {
    const t = fixtureJson<{ text: string; condition_map: ConditionMapRow[] }>(
      "insere_elt_python.json");
    const exits = exitsForGuard(
      t.text, t.condition_map, t.condition_map[0].line);
    expect(exits.map((e) => e.text)).toEqual(["j < 0", "t[j] <= t[k]"]);
  });
});
