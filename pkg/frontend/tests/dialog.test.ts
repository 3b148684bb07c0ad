import { describe, expect, it } from "vitest";

import {
  CLOSED, beginCompletion, finishCompletion, reduceDialog,
} from "../src/dialog.js";
import { EngineEvent } from "../src/protocol.js";
import { fixtureJson } from "./helpers.js";

interface RunFixture {
  events: EngineEvent[];
}

describe("missing-case dialog", () => {
  it("opens on the engine pause with the untreated condition", () => {
    const { events } = fixtureJson<RunFixture>("missing_else_run.json");
    let state = CLOSED;
    for (const ev of events) state = reduceDialog(state, ev);
    expect(state.open).toBe(true);
    if (state.open) {
      expect(state.title).toBe("Cas manquant");
      expect(state.condition).toBe("v > 0");
      expect(state.mode).toBe("ask");
    }
  });

  it("ignores every other event kind", () => {
    const quiet: EngineEvent[] = [
      { event: "OutputProduced", text: "PGCD 15" },
      { event: "BlockEntered", macro: "M", block: "body",
        path: ["M", "body"] },
      { event: "ConditionEvaluated", path: ["M"], index: 0,
        text: "x == y", result: false },
      { event: "PausedEvent", reason: "InputRequest", path: ["M"],
        prompt: "Valeur de x " },
    ];
    let state = CLOSED;
    for (const ev of quiet) state = reduceDialog(state, ev);
    expect(state).toEqual(CLOSED);
  });

  it("walks ask -> completing -> end_case", () => {
    const { events } = fixtureJson<RunFixture>("missing_else_run.json");
    let state = CLOSED;
    for (const ev of events) state = reduceDialog(state, ev);
    state = beginCompletion(state);
    expect(state.open && state.mode).toBe("completing");
    const done = finishCompletion(state);
    expect(done.state).toEqual(CLOSED);
    expect(done.action).toEqual({ op: "end_case" });
  });

  it("closing without recording still ends the case", () => {
    const { events } = fixtureJson<RunFixture>("missing_else_run.json");
    let state = CLOSED;
    for (const ev of events) state = reduceDialog(state, ev);
    const abandoned = finishCompletion(state);
    expect(abandoned.action).toEqual({ op: "end_case" });
    expect(abandoned.state).toEqual(CLOSED);
  });

  it("a finished or failed run closes the dialog", () => {
    const { events } = fixtureJson<RunFixture>("missing_else_run.json");
    let state = CLOSED;
    for (const ev of events) state = reduceDialog(state, ev);
    expect(reduceDialog(state, { event: "FinishedEvent" })).toEqual(CLOSED);
    expect(reduceDialog(state, {
      event: "ErrorEvent", error: "step_limit", message: "too long",
    })).toEqual(CLOSED);
  });

  it("completion helpers leave a closed dialog closed", () => {
    expect(beginCompletion(CLOSED)).toEqual(CLOSED);
    expect(finishCompletion(CLOSED).action).toBeNull();
  });
});
