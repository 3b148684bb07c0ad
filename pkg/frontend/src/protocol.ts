// The wire schema shared with the engine: Action records exactly as the
// .actions JSON form and the .agts "actions" array spell them, Event
// records exactly as the engine's event serialization spells them. The
// workbench never invents fields of its own on either side.

export type Relation = "<" | "<=" | "==" | "!=" | ">=" | ">";

export const RELATIONS: Relation[] = ["<", "<=", "==", "!=", ">=", ">"];

// --- actions (workbench -> engine) ---

export type Action =
  | { op: "seed"; value: number }
  | { op: "input"; value: number }
  | { op: "var"; type: "int" | "char"; name: string;
      constant?: boolean; value?: number }
  | { op: "array"; type: "int" | "char"; name: string;
      length?: number; values?: number[] }
  | { op: "index"; name: string; array: string }
  | { op: "macro"; kind: "simple" | "loop"; name: string }
  | { op: "comment"; macro: string; text: string }
  | { op: "record"; macro: string; section?: string }
  | { op: "stop" }
  | { op: "select" | "delete" | "add_else" | "remove_else" | "invert";
      macro: string; section: string; path: number[] }
  | { op: "drag"; src: string; dst: string }
  | { op: "apply"; operator: string; left: string; right: string;
      dst: string }
  | { op: "inc" | "dec"; target: string }
  | { op: "read"; prompt?: string; target: string }
  | { op: "write"; prompt?: string; operand?: string }
  | { op: "compare"; left: string; right: string }
  | { op: "choose"; rel: Relation }
  | { op: "call"; name: string }
  | { op: "exec"; macro: string; section?: string }
  | { op: "end_case" }
  | { op: "undo" };

// Structural equality ignoring key order, for comparing a mapped gesture
// against the record a replay script carries.
export function sameAction(a: Action, b: Action): boolean {
  return stableJson(a) === stableJson(b);
}

export function stableJson(value: unknown): string {
  if (Array.isArray(value)) {
    return "[" + value.map(stableJson).join(",") + "]";
  }
  if (value !== null && typeof value === "object") {
    const keys = Object.keys(value as object).sort();
    const body = keys.map(
      (k) => JSON.stringify(k) + ":" +
        stableJson((value as Record<string, unknown>)[k]));
    return "{" + body.join(",") + "}";
  }
  return JSON.stringify(value);
}

// --- events (engine -> workbench) ---

export type PauseReason = "MissingElse" | "EmptyMacro" | "InputRequest";

export type EngineEvent =
  | { event: "BlockEntered"; macro: string; block: string;
      path: (string | number)[] }
  | { event: "InstructionExecuted"; path: (string | number)[];
      text: string; writes: [string, number, number][] }
  | { event: "ConditionEvaluated"; path: (string | number)[];
      index: number | null; text: string; result: boolean }
  | { event: "OutputProduced"; text: string }
  | { event: "PausedEvent"; reason: PauseReason;
      path: (string | number)[]; prompt?: string }
  | { event: "FinishedEvent" }
  | { event: "ErrorEvent"; error: string; message: string;
      path?: (string | number)[] }
  | { event: "WorkspaceState"; workspace: WorkspaceSnapshot };

// --- workspace snapshots (the `workspace` object of --json output) ---

export type Entity =
  | { kind: "var"; name: string; type: "int" | "char";
      constant: boolean; value: number }
  | { kind: "array"; name: string; type: "int" | "char";
      cells: number[] }
  | { kind: "index"; name: string; array: string; value: number };

export interface WorkspaceSnapshot {
  palette: number[];
  entities: Entity[];
}

// --- saved sessions (.agts documents) ---

export interface SessionDocument {
  format: "agts";
  version: number;
  seed: number;
  palette: number[];
  entities: Entity[];
  macros: string;  // the whole program as canonical source text
  draws?: number;
  actions?: Action[];
  ui?: unknown;
}

export function isSessionDocument(d: unknown): d is SessionDocument {
  if (d === null || typeof d !== "object") return false;
  const doc = d as Record<string, unknown>;
  return doc.format === "agts" && typeof doc.version === "number" &&
    Array.isArray(doc.entities) && typeof doc.macros === "string";
}
