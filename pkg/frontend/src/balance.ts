// The comparator balance. The engine decides which relations hold; the
// balance only renders: the heavier plate goes down, and the chooser
// lists the three relations the engine returned, in menu order.

import { Relation } from "./protocol.js";

export type Tilt = "left" | "right" | "level";

export function tilt(left: number, right: number): Tilt {
  if (left === right) return "level";
  return left > right ? "left" : "right";
}

export interface ChooserItem {
  rel: Relation;
  label: string;
}

// The three-candidate chooser shown once both plates are loaded. The
// labels read as the full condition so the choice is self-describing.
export function chooserItems(
  leftRef: string, rightRef: string, menu: Relation[],
): ChooserItem[] {
  return menu.map((rel) => ({
    rel,
    label: `${leftRef} ${rel} ${rightRef}`,
  }));
}
