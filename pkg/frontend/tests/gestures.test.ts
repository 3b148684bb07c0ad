import { describe, expect, it } from "vitest";

import { GestureMapper, PointerSample } from "../src/gestures.js";
import { Action, sameAction } from "../src/protocol.js";
import { Scene } from "../src/scene.js";
import {
  clickScript, dragScript, fixtureActions, run, target,
} from "./helpers.js";

// The canvas used throughout: an array with two visible cells, two
// scalars, an index, palette literals, io icons, balance plates, one
// operator widget and a macro icon. Positions are arbitrary but fixed.
function standardScene(): Scene {
  return new Scene([
    target("lit0", "literal", "0", 10, 10),
    target("lit1", "literal", "1", 60, 10),
    target("var-m", "index", "m", 200, 10),
    target("var-x", "variable", "x", 250, 10),
    target("var-y", "variable", "y", 300, 10),
    target("const-max", "constant", "MAX", 360, 10),
    target("idx-j", "index", "j", 300, 100),
    target("cell-tj", "array-cell", "t[j]", 10, 200),
    target("cell-tm", "array-cell", "t[m]", 60, 200),
    target("plate-l", "plate-left", "balance", 400, 200),
    target("plate-r", "plate-right", "balance", 460, 200),
    target("kbd", "keyboard", "keyboard", 10, 300),
    target("screen", "screen", "screen", 60, 300),
    target("w1-left", "operator-slot-left", "w1", 200, 300),
    target("w1-right", "operator-slot-right", "w1", 260, 300),
    target("w1-result", "operator-result", "w1", 320, 300),
    target("run-pm", "run-triangle", "PositionMin", 500, 10),
  ]);
}

function expectEngineRecord(actions: Action[], emitted: Action) {
  const match = actions.find((a) => sameAction(a, emitted));
  expect(match, `${JSON.stringify(emitted)} not in the replay log`)
    .toBeDefined();
}

describe("drag assignment", () => {
  it("maps a literal-to-entity drag onto the exact engine record", () => {
    const scene = standardScene();
    const { actions } = run(
      new GestureMapper(), scene, dragScript(scene, "lit0", "var-m"));
    expect(actions).toEqual([{ op: "drag", src: "0", dst: "m" }]);
    expectEngineRecord(
      fixtureActions("position_min.agts"), actions[0]);
  });

  it("maps cell-to-cell and entity-to-cell drags", () => {
    const scene = standardScene();
    const mapper = new GestureMapper();
    const a = run(mapper, scene, dragScript(scene, "cell-tj", "var-x"));
    expect(a.actions).toEqual([{ op: "drag", src: "t[j]", dst: "x" }]);
    const b = run(mapper, scene, dragScript(scene, "var-x", "cell-tm"));
    expect(b.actions).toEqual([{ op: "drag", src: "x", dst: "t[m]" }]);
  });

  it("shows green over a legal target while dragging", () => {
    const scene = standardScene();
    const mapper = new GestureMapper();
    mapper.feed({ kind: "down", x: 30, y: 30 }, scene);
    const over = mapper.feed({ kind: "move", x: 220, y: 30 }, scene);
    expect(over.states["var-m"]).toBe("drop-target-green");
    expect(over.action).toBeNull();
  });

  it("refuses a drop on a constant, red and silent", () => {
    const scene = standardScene();
    const { actions, outcomes } = run(
      new GestureMapper(), scene, dragScript(scene, "lit1", "const-max"));
    expect(actions).toEqual([]);
    const last = outcomes[outcomes.length - 1];
    expect(last.states["const-max"]).toBe("forbidden-red");
  });

  it("refuses a drop on a literal and on empty canvas", () => {
    const scene = standardScene();
    const mapper = new GestureMapper();
    const onLiteral = run(
      mapper, scene, dragScript(scene, "var-x", "lit0"));
    expect(onLiteral.actions).toEqual([]);
    const onNothing = run(mapper, scene, [
      { kind: "down", x: 270, y: 30 },
      { kind: "up", x: 150, y: 150 },
    ]);
    expect(onNothing.actions).toEqual([]);
  });

  it("a click on an entity is not a drag", () => {
    const scene = standardScene();
    const { actions } = run(
      new GestureMapper(), scene, clickScript(scene, "var-x"));
    expect(actions).toEqual([]);
  });
});

describe("sweeps", () => {
  const sweep = (x0: number, x1: number, y = 118): PointerSample[] => [
    { kind: "down", x: x0, y },
    { kind: "move", x: (x0 + x1) / 2, y: y + 2 },
    { kind: "up", x: x1, y },
  ];

  it("left-to-right across the index emits the exact inc record", () => {
    const scene = standardScene();
    const { actions } = run(new GestureMapper(), scene, sweep(250, 400));
    expect(actions).toEqual([{ op: "inc", target: "j" }]);
    expectEngineRecord(
      fixtureActions("position_min.agts"), actions[0]);
  });

  it("right-to-left emits dec", () => {
    const scene = standardScene();
    const { actions } = run(new GestureMapper(), scene, sweep(400, 250));
    expect(actions).toEqual([{ op: "dec", target: "j" }]);
  });

  it("too short or too diagonal is no gesture", () => {
    const scene = standardScene();
    const mapper = new GestureMapper();
    expect(run(mapper, scene, sweep(290, 310)).actions).toEqual([]);
    const diagonal: PointerSample[] = [
      { kind: "down", x: 250, y: 60 },
      { kind: "up", x: 400, y: 170 },
    ];
    expect(run(mapper, scene, diagonal).actions).toEqual([]);
  });

  it("a sweep crossing two entities is ambiguous and emits nothing", () => {
    const scene = standardScene();
    // y = 30 crosses var-m, var-x, var-y
    const { actions } = run(new GestureMapper(), scene, [
      { kind: "down", x: 180, y: 32 },
      { kind: "up", x: 345, y: 30 },
    ]);
    expect(actions).toEqual([]);
  });
});

describe("io and operator gestures", () => {
  it("keyboard onto an entity asks the engine to read", () => {
    const scene = standardScene();
    const mapper = new GestureMapper({
      prompt: (kind, ref) =>
        kind === "read" && ref === "x" ? "Valeur de x " : undefined,
    });
    const { actions } = run(mapper, scene, dragScript(scene, "kbd", "var-x"));
    expect(actions).toEqual(
      [{ op: "read", prompt: "Valeur de x ", target: "x" }]);
    expectEngineRecord(fixtureActions("pgcd.agts"), actions[0]);
  });

  it("entity onto the screen icon writes it out", () => {
    const scene = standardScene();
    const mapper = new GestureMapper({
      prompt: (kind, ref) =>
        kind === "write" && ref === "x" ? "PGCD " : undefined,
    });
    const { actions } = run(
      mapper, scene, dragScript(scene, "var-x", "screen"));
    expect(actions).toEqual(
      [{ op: "write", prompt: "PGCD ", operand: "x" }]);
    expectEngineRecord(fixtureActions("pgcd.agts"), actions[0]);
  });

  it("keyboard cannot land on the screen or a plate", () => {
    const scene = standardScene();
    const mapper = new GestureMapper();
    expect(run(mapper, scene, dragScript(scene, "kbd", "screen")).actions)
      .toEqual([]);
    expect(run(mapper, scene, dragScript(scene, "kbd", "plate-l")).actions)
      .toEqual([]);
  });

  it("filling both slots then dragging the result applies the operator",
    () => {
      const scene = standardScene();
      const mapper = new GestureMapper();
      mapper.setOperator("w1", "-");
      const fills = [
        ...dragScript(scene, "var-y", "w1-left"),
        ...dragScript(scene, "var-x", "w1-right"),
      ];
      expect(run(mapper, scene, fills).actions).toEqual([]);
      const { actions } = run(
        mapper, scene, dragScript(scene, "w1-result", "var-y"));
      expect(actions).toEqual(
        [{ op: "apply", operator: "-", left: "y", right: "x", dst: "y" }]);
      expectEngineRecord(fixtureActions("pgcd.agts"), actions[0]);
    });

  it("a half-filled widget has no result to drag", () => {
    const scene = standardScene();
    const mapper = new GestureMapper();
    mapper.setOperator("w1", "+");
    run(mapper, scene, dragScript(scene, "var-x", "w1-left"));
    const down = mapper.feed({ kind: "down", x: 340, y: 320 }, scene);
    expect(down.states["w1-result"]).toBe("forbidden-red");
    const up = mapper.feed({ kind: "up", x: 270, y: 30 }, scene);
    expect(up.action).toBeNull();
  });
});

describe("balance and chooser", () => {
  it("the second plate completes the comparison", () => {
    const scene = standardScene();
    const mapper = new GestureMapper();
    const first = run(
      mapper, scene, dragScript(scene, "cell-tj", "plate-l"));
    expect(first.actions).toEqual([]);
    const second = run(
      mapper, scene, dragScript(scene, "cell-tm", "plate-r"));
    expect(second.actions).toEqual(
      [{ op: "compare", left: "t[j]", right: "t[m]" }]);
    expectEngineRecord(
      fixtureActions("position_min.agts"), second.actions[0]);
  });

  it("clicking a chooser item picks that relation", () => {
    const scene = new Scene([
      ...standardScene().targets,
      target("mi-0", "menu-item", ">", 400, 300),
      target("mi-1", "menu-item", "!=", 440, 300),
      target("mi-2", "menu-item", ">=", 480, 300),
    ]);
    const mapper = new GestureMapper();
    run(mapper, scene, dragScript(scene, "cell-tj", "plate-l"));
    run(mapper, scene, dragScript(scene, "cell-tm", "plate-r"));
    const { actions } = run(mapper, scene, clickScript(scene, "mi-2"));
    expect(actions).toEqual([{ op: "choose", rel: ">=" }]);
    expectEngineRecord(fixtureActions("position_min.agts"), actions[0]);
  });

  it("pressing a menu item but releasing elsewhere chooses nothing", () => {
    const scene = new Scene([
      ...standardScene().targets,
      target("mi-0", "menu-item", ">", 400, 300),
    ]);
    const mapper = new GestureMapper();
    const { actions } = run(mapper, scene, [
      { kind: "down", x: 420, y: 320 },
      { kind: "up", x: 150, y: 150 },
    ]);
    expect(actions).toEqual([]);
  });
});

describe("macro icons", () => {
  it("the run triangle calls the macro", () => {
    const scene = standardScene();
    const { actions } = run(
      new GestureMapper(), scene, clickScript(scene, "run-pm"));
    expect(actions).toEqual([{ op: "call", name: "PositionMin" }]);
  });
});

describe("determinism", () => {
  it("the same pointer script maps to the same actions every time", () => {
    const scene = standardScene();
    const script: PointerSample[] = [
      ...dragScript(scene, "lit0", "var-m"),
      { kind: "down", x: 250, y: 118 },
      { kind: "up", x: 400, y: 118 },
      ...dragScript(scene, "cell-tj", "plate-l"),
      ...dragScript(scene, "cell-tm", "plate-r"),
    ];
    const first = run(new GestureMapper(), scene, script).actions;
    const second = run(new GestureMapper(), scene, script).actions;
    expect(second).toEqual(first);
    const reused = new GestureMapper();
    run(reused, scene, script);
    reused.reset();
    expect(run(reused, scene, script).actions).toEqual(first);
  });
});
