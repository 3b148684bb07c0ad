// Pointer gestures to engine actions. The mapper is a little state
// machine fed one pointer sample at a time; a completed gesture emits
// at most one Action, and an illegal drop emits nothing and flags the
// target red. Feeding the same scripted samples twice produces the
// same actions: there is no hidden clock or randomness in here.

import { Action, Relation } from "./protocol.js";
import {
  HitTarget, Scene, VisualState, isAssignable, isValueSource,
} from "./scene.js";

export interface PointerSample {
  kind: "down" | "move" | "up";
  x: number;
  y: number;
}

export interface GestureOutcome {
  action: Action | null;
  states: Record<string, VisualState>;
}

export type PromptProvider =
  (gesture: "read" | "write", targetRef: string) => string | undefined;

interface WidgetState {
  operator: string;
  left: string | null;
  right: string | null;
}

type Phase =
  | { kind: "idle" }
  | { kind: "drag"; src: HitTarget; x: number; y: number }
  | { kind: "click"; target: HitTarget }
  | { kind: "sweep"; path: { x: number; y: number }[] };

const NOTHING: GestureOutcome = { action: null, states: {} };

export class GestureMapper {
  private phase: Phase = { kind: "idle" };
  private widgets = new Map<string, WidgetState>();
  private balance: { left: string | null; right: string | null } =
    { left: null, right: null };
  private minSweep: number;
  private prompt: PromptProvider | null;

  constructor(opts?: { minSweep?: number; prompt?: PromptProvider }) {
    this.minSweep = opts?.minSweep ?? 30;
    this.prompt = opts?.prompt ?? null;
  }

  // The operator widget shows one symbol at a time; the workbench tells
  // the mapper which, per widget id, when the user picks it.
  setOperator(widgetId: string, operator: string): void {
    const w = this.widgets.get(widgetId);
    if (w) {
      w.operator = operator;
    } else {
      this.widgets.set(widgetId, { operator, left: null, right: null });
    }
  }

  reset(): void {
    this.phase = { kind: "idle" };
    this.balance = { left: null, right: null };
    for (const w of this.widgets.values()) {
      w.left = null;
      w.right = null;
    }
  }

  feed(sample: PointerSample, scene: Scene): GestureOutcome {
    switch (sample.kind) {
      case "down":
        return this.onDown(sample, scene);
      case "move":
        return this.onMove(sample, scene);
      case "up":
        return this.onUp(sample, scene);
    }
  }

  private onDown(sample: PointerSample, scene: Scene): GestureOutcome {
    const target = scene.at(sample.x, sample.y);
    if (target === null) {
      this.phase = { kind: "sweep", path: [{ x: sample.x, y: sample.y }] };
      return NOTHING;
    }
    if (target.kind === "menu-item" || target.kind === "run-triangle") {
      this.phase = { kind: "click", target };
      return NOTHING;
    }
    if (target.kind === "operator-result") {
      const w = this.widgets.get(target.ref);
      if (!w || w.left === null || w.right === null) {
        // nothing to carry yet: half-filled widgets have no value
        return { action: null, states: { [target.id]: "forbidden-red" } };
      }
      this.phase = { kind: "drag", src: target, x: sample.x, y: sample.y };
      return NOTHING;
    }
    if (isValueSource(target) || target.kind === "keyboard") {
      this.phase = { kind: "drag", src: target, x: sample.x, y: sample.y };
      return NOTHING;
    }
    // plates, screen, slots: nothing starts there
    return NOTHING;
  }

  private onMove(sample: PointerSample, scene: Scene): GestureOutcome {
    if (this.phase.kind === "sweep") {
      this.phase.path.push({ x: sample.x, y: sample.y });
      return NOTHING;
    }
    if (this.phase.kind !== "drag") return NOTHING;
    this.phase.x = sample.x;
    this.phase.y = sample.y;
    const over = scene.at(sample.x, sample.y);
    if (over === null || over.id === this.phase.src.id) return NOTHING;
    const state: VisualState =
      this.dropLegal(this.phase.src, over) ? "drop-target-green"
                                           : "forbidden-red";
    return { action: null, states: { [over.id]: state } };
  }

  private onUp(sample: PointerSample, scene: Scene): GestureOutcome {
    const phase = this.phase;
    this.phase = { kind: "idle" };
    if (phase.kind === "click") {
      const hit = scene.at(sample.x, sample.y);
      if (hit === null || hit.id !== phase.target.id) return NOTHING;
      if (phase.target.kind === "menu-item") {
        this.balance = { left: null, right: null };
        return {
          action: { op: "choose", rel: phase.target.ref as Relation },
          states: {},
        };
      }
      return { action: { op: "call", name: phase.target.ref }, states: {} };
    }
    if (phase.kind === "sweep") {
      phase.path.push({ x: sample.x, y: sample.y });
      return this.finishSweep(phase.path, scene);
    }
    if (phase.kind === "drag") {
      const dst = scene.at(sample.x, sample.y);
      return this.finishDrag(phase.src, dst);
    }
    return NOTHING;
  }

  private dropLegal(src: HitTarget, dst: HitTarget): boolean {
    if (src.kind === "keyboard") return isAssignable(dst);
    switch (dst.kind) {
      case "variable":
      case "index":
      case "array-cell":
        return true;
      case "screen":
      case "plate-left":
      case "plate-right":
      case "operator-slot-left":
      case "operator-slot-right":
        return true;
      default:
        return false;
    }
  }

  private finishDrag(src: HitTarget, dst: HitTarget | null): GestureOutcome {
    if (dst === null || dst.id === src.id) return NOTHING;
    if (!this.dropLegal(src, dst)) {
      return { action: null, states: { [dst.id]: "forbidden-red" } };
    }
    if (src.kind === "keyboard") {
      const prompt = this.prompt?.("read", dst.ref);
      const action: Action = prompt === undefined
        ? { op: "read", target: dst.ref }
        : { op: "read", prompt, target: dst.ref };
      return { action, states: { [dst.id]: "drop-target-green" } };
    }
    switch (dst.kind) {
      case "variable":
      case "index":
      case "array-cell": {
        if (src.kind === "operator-result") {
          const w = this.widgets.get(src.ref)!;
          const action: Action = {
            op: "apply", operator: w.operator,
            left: w.left!, right: w.right!, dst: dst.ref,
          };
          w.left = null;
          w.right = null;
          return { action, states: { [dst.id]: "drop-target-green" } };
        }
        return {
          action: { op: "drag", src: src.ref, dst: dst.ref },
          states: { [dst.id]: "drop-target-green" },
        };
      }
      case "screen": {
        const prompt = this.prompt?.("write", src.ref);
        const action: Action = prompt === undefined
          ? { op: "write", operand: src.ref }
          : { op: "write", prompt, operand: src.ref };
        return { action, states: { [dst.id]: "drop-target-green" } };
      }
      case "plate-left":
      case "plate-right": {
        if (dst.kind === "plate-left") {
          this.balance.left = src.ref;
        } else {
          this.balance.right = src.ref;
        }
        if (this.balance.left !== null && this.balance.right !== null) {
          return {
            action: {
              op: "compare",
              left: this.balance.left,
              right: this.balance.right,
            },
            states: { [dst.id]: "drop-target-green" },
          };
        }
        return { action: null, states: { [dst.id]: "drop-target-green" } };
      }
      case "operator-slot-left":
      case "operator-slot-right": {
        const w = this.widgets.get(dst.ref);
        if (!w) {
          return { action: null, states: { [dst.id]: "forbidden-red" } };
        }
        if (dst.kind === "operator-slot-left") {
          w.left = src.ref;
        } else {
          w.right = src.ref;
        }
        return { action: null, states: { [dst.id]: "drop-target-green" } };
      }
      default:
        return { action: null, states: { [dst.id]: "forbidden-red" } };
    }
  }

  private finishSweep(
    path: { x: number; y: number }[], scene: Scene,
  ): GestureOutcome {
    const first = path[0];
    const last = path[path.length - 1];
    const dx = last.x - first.x;
    const dy = last.y - first.y;
    if (Math.abs(dx) < this.minSweep || Math.abs(dx) <= 2 * Math.abs(dy)) {
      return NOTHING;
    }
    const crossed = new Map<string, HitTarget>();
    for (let i = 1; i < path.length; i++) {
      for (const t of scene.crossedBy(
        path[i - 1].x, path[i - 1].y, path[i].x, path[i].y)) {
        if (isAssignable(t)) crossed.set(t.id, t);
      }
    }
    if (crossed.size !== 1) return NOTHING;
    const target = [...crossed.values()][0];
    return {
      action: { op: dx > 0 ? "inc" : "dec", target: target.ref },
      states: { [target.id]: "drop-target-green" },
    };
  }
}
