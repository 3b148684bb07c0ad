import { describe, expect, it } from "vitest";

import { tilt, chooserItems } from "../src/balance.js";
import { EngineEvent, WorkspaceSnapshot } from "../src/protocol.js";
import {
  AnimationPacer, applyEvent, applyEvents, clearMenu, initialState,
  showMenu,
} from "../src/workbench.js";
import { fixtureJson } from "./helpers.js";

interface RunFixture {
  events: EngineEvent[];
  workspace: WorkspaceSnapshot;
}

describe("event fold", () => {
  it("console, trace and dialog all come from events", () => {
    const { events } = fixtureJson<RunFixture>("missing_else_run.json");
    const state = applyEvents(initialState(), events);
    expect(state.dialog.open).toBe(true);
    expect(state.running).toBe(false);
    expect(state.error).toBeNull();
  });

  it("the workspace panel is the engine's last snapshot, wholesale", () => {
    const { workspace } = fixtureJson<RunFixture>("missing_else_run.json");
    const s1 = applyEvent(
      initialState(), { event: "WorkspaceState", workspace });
    expect(s1.workspace).toEqual(workspace);
    const emptied: WorkspaceSnapshot = { palette: [-1, 0, 1], entities: [] };
    const s2 = applyEvent(
      s1, { event: "WorkspaceState", workspace: emptied });
    expect(s2.workspace).toEqual(emptied);
  });

  it("outputs append in order and errors land in the banner", () => {
    let state = initialState();
    state = applyEvent(state, { event: "OutputProduced", text: "a" });
    state = applyEvent(state, { event: "OutputProduced", text: "b" });
    expect(state.console).toEqual(["a", "b"]);
    state = applyEvent(state, {
      event: "ErrorEvent", error: "division_by_zero", message: "n / 0",
    });
    expect(state.error).toBe("n / 0");
    expect(state.running).toBe(false);
  });

  it("the comparison menu is engine-supplied and clearable", () => {
    let state = showMenu(initialState(), [">", "!=", ">="]);
    expect(chooserItems("t[j]", "t[m]", state.menu!).map((i) => i.label))
      .toEqual(["t[j] > t[m]", "t[j] != t[m]", "t[j] >= t[m]"]);
    state = clearMenu(state);
    expect(state.menu).toBeNull();
  });
});

describe("balance", () => {
  it("the larger value tips its side", () => {
    expect(tilt(55, 12)).toBe("left");
    expect(tilt(12, 55)).toBe("right");
    expect(tilt(7, 7)).toBe("level");
  });
});

describe("animation pacer", () => {
  it("paces steps through the injected scheduler", () => {
    const pending: { fn: () => void; ms: number }[] = [];
    let steps = 0;
    const pacer = new AnimationPacer(
      () => { steps += 1; },
      2,
      (fn, ms) => { pending.push({ fn, ms }); return pending.length; },
      () => undefined,
    );
    pacer.start();
    expect(pending).toHaveLength(1);
    expect(pending[0].ms).toBe(500);
    pending[0].fn();
    expect(steps).toBe(1);
    expect(pending).toHaveLength(2);
    pacer.setSpeed(10);
    pending[1].fn();
    expect(pending[2].ms).toBe(100);
    pacer.stop();
    expect(pacer.running).toBe(false);
    const before = pending.length;
    expect(pending).toHaveLength(before);
  });

  it("start is idempotent while running", () => {
    const pending: (() => void)[] = [];
    const pacer = new AnimationPacer(
      () => undefined, 4,
      (fn) => { pending.push(fn as () => void); return pending.length; },
      () => undefined,
    );
    pacer.start();
    pacer.start();
    expect(pending).toHaveLength(1);
  });
});
