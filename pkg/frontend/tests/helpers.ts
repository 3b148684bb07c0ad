import { readFileSync } from "node:fs";

import { Action, SessionDocument } from "../src/protocol.js";
import { GestureMapper, GestureOutcome, PointerSample } from "../src/gestures.js";
import { HitTarget, Rect, Scene, TargetKind } from "../src/scene.js";

export function fixture(name: string): string {
  return readFileSync(
    new URL(`./fixtures/${name}`, import.meta.url), "utf-8");
}

export function fixtureJson<T>(name: string): T {
  return JSON.parse(fixture(name)) as T;
}

export function fixtureActions(name: string): Action[] {
  const doc = fixtureJson<SessionDocument>(name);
  return doc.actions ?? [];
}

const SIZE = 40;

export function target(
  id: string, kind: TargetKind, ref: string, x: number, y: number,
  w = SIZE, h = SIZE,
): HitTarget {
  return { id, kind, ref, rect: { x, y, w, h } };
}

export function center(r: Rect): { x: number; y: number } {
  return { x: r.x + r.w / 2, y: r.y + r.h / 2 };
}

// Feed a down-move-up script and collect every emitted action.
export function run(
  mapper: GestureMapper, scene: Scene, samples: PointerSample[],
): { actions: Action[]; outcomes: GestureOutcome[] } {
  const actions: Action[] = [];
  const outcomes: GestureOutcome[] = [];
  for (const s of samples) {
    const out = mapper.feed(s, scene);
    outcomes.push(out);
    if (out.action) actions.push(out.action);
  }
  return { actions, outcomes };
}

// A straight drag from the middle of one target to the middle of
// another, with one midpoint sample.
export function dragScript(
  scene: Scene, fromId: string, toId: string,
): PointerSample[] {
  const a = center(scene.byId(fromId)!.rect);
  const b = center(scene.byId(toId)!.rect);
  return [
    { kind: "down", x: a.x, y: a.y },
    { kind: "move", x: (a.x + b.x) / 2, y: (a.y + b.y) / 2 },
    { kind: "move", x: b.x, y: b.y },
    { kind: "up", x: b.x, y: b.y },
  ];
}

export function clickScript(scene: Scene, id: string): PointerSample[] {
  const c = center(scene.byId(id)!.rect);
  return [
    { kind: "down", x: c.x, y: c.y },
    { kind: "up", x: c.x, y: c.y },
  ];
}
