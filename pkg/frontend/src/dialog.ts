// The missing-case dialog. When a run reaches a branch nobody
// demonstrated, the engine pauses and names the untreated case; the
// dialog offers to record it now. Closing without recording still ends
// the case: an empty completion tells the engine to drop the pending
// branch (the if stays bare).

import { Action, EngineEvent } from "./protocol.js";

export type DialogState =
  | { open: false }
  | {
      open: true;
      title: "Cas manquant";
      condition: string;
      path: (string | number)[];
      mode: "ask" | "completing";
    };

export const CLOSED: DialogState = { open: false };

export function reduceDialog(
  state: DialogState, ev: EngineEvent,
): DialogState {
  if (ev.event === "PausedEvent" && ev.reason === "MissingElse") {
    return {
      open: true,
      title: "Cas manquant",
      condition: ev.prompt ?? "",
      path: ev.path,
      mode: "ask",
    };
  }
  if (ev.event === "FinishedEvent" || ev.event === "ErrorEvent") {
    return CLOSED;
  }
  return state;
}

// "Treat this case now": gestures recorded from here on land in the
// pending branch. No action goes to the engine; its cursor is already
// parked inside the branch.
export function beginCompletion(state: DialogState): DialogState {
  if (!state.open || state.mode !== "ask") return state;
  return { ...state, mode: "completing" };
}

// Done recording (or never started): close the case and resume. With
// nothing recorded in between the engine removes the pending branch.
export function finishCompletion(
  state: DialogState,
): { state: DialogState; action: Action | null } {
  if (!state.open) return { state, action: null };
  return { state: CLOSED, action: { op: "end_case" } };
}
