// The workbench state is a fold over engine events. Nothing in here
// computes a value the engine also computes: the workspace panel shows
// the last snapshot the engine sent, the console shows what it printed,
// and the dialog opens when it pauses. Undo, arithmetic, comparison
// menus: all engine-side.

import { DialogState, CLOSED, reduceDialog } from "./dialog.js";
import {
  EngineEvent, Relation, WorkspaceSnapshot,
} from "./protocol.js";

export interface TraceLine {
  path: (string | number)[];
  text: string;
}

export interface WorkbenchState {
  workspace: WorkspaceSnapshot | null;
  console: string[];
  trace: TraceLine[];
  dialog: DialogState;
  running: boolean;
  error: string | null;
  // filled from the engine's reply to a compare action
  menu: Relation[] | null;
}

export function initialState(): WorkbenchState {
  return {
    workspace: null,
    console: [],
    trace: [],
    dialog: CLOSED,
    running: false,
    error: null,
    menu: null,
  };
}

export function applyEvent(
  state: WorkbenchState, ev: EngineEvent,
): WorkbenchState {
  const next: WorkbenchState = { ...state, dialog: reduceDialog(state.dialog, ev) };
  switch (ev.event) {
    case "WorkspaceState":
      next.workspace = ev.workspace;
      return next;
    case "OutputProduced":
      next.console = [...state.console, ev.text];
      return next;
    case "InstructionExecuted":
      next.trace = [...state.trace, { path: ev.path, text: ev.text }];
      next.running = true;
      return next;
    case "BlockEntered":
    case "ConditionEvaluated":
      next.running = true;
      return next;
    case "PausedEvent":
      next.running = false;
      return next;
    case "FinishedEvent":
      next.running = false;
      return next;
    case "ErrorEvent":
      next.running = false;
      next.error = ev.message;
      return next;
  }
}

export function applyEvents(
  state: WorkbenchState, events: EngineEvent[],
): WorkbenchState {
  return events.reduce(applyEvent, state);
}

export function showMenu(
  state: WorkbenchState, menu: Relation[],
): WorkbenchState {
  return { ...state, menu };
}

export function clearMenu(state: WorkbenchState): WorkbenchState {
  return { ...state, menu: null };
}

// Animation mode: the engine has no timers, so pacing lives here. The
// pacer calls step() at the chosen rate; the scheduler is injectable so
// tests can turn the crank by hand.
export type Schedule = (fn: () => void, ms: number) => unknown;
export type Cancel = (handle: unknown) => void;

export class AnimationPacer {
  private handle: unknown = null;
  private interval: number;

  constructor(
    private step: () => void,
    stepsPerSecond = 2,
    private schedule: Schedule = (fn, ms) => setTimeout(fn, ms),
    private cancel: Cancel = (h) => clearTimeout(h as number),
  ) {
    this.interval = 1000 / stepsPerSecond;
  }

  setSpeed(stepsPerSecond: number): void {
    this.interval = 1000 / Math.max(stepsPerSecond, 0.1);
  }

  get running(): boolean {
    return this.handle !== null;
  }

  start(): void {
    if (this.handle !== null) return;
    const tick = () => {
      this.step();
      if (this.handle !== null) {
        this.handle = this.schedule(tick, this.interval);
      }
    };
    this.handle = this.schedule(tick, this.interval);
  }

  stop(): void {
    if (this.handle !== null) {
      this.cancel(this.handle);
      this.handle = null;
    }
  }
}
