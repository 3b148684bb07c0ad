// The hit-test model of the workspace canvas. A Scene is the flat list
// of interactive rectangles the renderer laid out this frame; the
// gesture mapper only ever sees targets, never pixels.

export interface Rect {
  x: number;
  y: number;
  w: number;
  h: number;
}

export type TargetKind =
  | "variable"       // scalar entity, assignable unless constant
  | "constant"       // scalar entity, read-only
  | "index"          // index variable, assignable
  | "array-cell"     // one cell t[j] or t[3], assignable
  | "literal"        // palette number, draggable only
  | "keyboard"       // input icon, dragged onto an entity
  | "screen"         // output icon, entities dropped onto it
  | "operator-slot-left"
  | "operator-slot-right"
  | "operator-result"
  | "plate-left"     // balance plates
  | "plate-right"
  | "menu-item"      // one relation in the three-candidate chooser
  | "run-triangle";  // the run arrow on a macro icon

export interface HitTarget {
  id: string;
  kind: TargetKind;
  // what the engine calls this thing: an operand text ("m", "t[j]",
  // "0"), a widget id for operator parts, a relation for menu items,
  // a macro name for run triangles.
  ref: string;
  rect: Rect;
}

export type VisualState = "normal" | "drop-target-green" | "forbidden-red";

export function contains(r: Rect, x: number, y: number): boolean {
  return x >= r.x && x < r.x + r.w && y >= r.y && y < r.y + r.h;
}

// Does the segment from (x0,y0) to (x1,y1) pass through the rectangle?
// Checked by clipping the segment against the four slabs.
export function segmentCrosses(
  r: Rect, x0: number, y0: number, x1: number, y1: number,
): boolean {
  let t0 = 0;
  let t1 = 1;
  const dx = x1 - x0;
  const dy = y1 - y0;
  const edges: [number, number][] = [
    [-dx, x0 - r.x],
    [dx, r.x + r.w - x0],
    [-dy, y0 - r.y],
    [dy, r.y + r.h - y0],
  ];
  for (const [p, q] of edges) {
    if (p === 0) {
      if (q < 0) return false;
      continue;
    }
    const t = q / p;
    if (p < 0) {
      if (t > t1) return false;
      if (t > t0) t0 = t;
    } else {
      if (t < t0) return false;
      if (t < t1) t1 = t;
    }
  }
  return true;
}

export class Scene {
  constructor(public targets: HitTarget[]) {}

  // Topmost target wins: later entries draw (and hit) above earlier.
  at(x: number, y: number): HitTarget | null {
    for (let i = this.targets.length - 1; i >= 0; i--) {
      if (contains(this.targets[i].rect, x, y)) return this.targets[i];
    }
    return null;
  }

  byId(id: string): HitTarget | null {
    return this.targets.find((t) => t.id === id) ?? null;
  }

  crossedBy(x0: number, y0: number, x1: number, y1: number): HitTarget[] {
    return this.targets.filter(
      (t) => segmentCrosses(t.rect, x0, y0, x1, y1));
  }
}

const VALUE_SOURCES: TargetKind[] = [
  "variable", "constant", "index", "array-cell", "literal",
  "operator-result",
];

const ASSIGNABLE: TargetKind[] = ["variable", "index", "array-cell"];

export function isValueSource(t: HitTarget): boolean {
  return VALUE_SOURCES.includes(t.kind);
}

export function isAssignable(t: HitTarget): boolean {
  return ASSIGNABLE.includes(t.kind);
}
