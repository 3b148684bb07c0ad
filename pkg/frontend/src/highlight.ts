// Two-way highlighting between exit conditions and while guards, driven
// by the transpiler's condition map. Selecting an exit condition lights
// up its negated span inside the guard line; putting the cursor on a
// guard lights up the exit rows (and their margin comments) it negates.

export interface ConditionRef {
  index: number;
  path: (string | number)[];
  text: string;        // the exit condition as the source spells it
  negated: string;     // its negation as the dialect spells it
  comment_line: number;
}

export interface ConditionMapRow {
  line: number;        // 1-based line of the while guard
  macro: string;
  conditions: ConditionRef[];
}

export interface Span {
  line: number;        // 1-based
  start: number;       // 0-based column, inclusive
  end: number;         // 0-based column, exclusive
}

function lineAt(text: string, line: number): string {
  return text.split("\n")[line - 1] ?? "";
}

// Column spans of every negated condition inside the guard line, in
// condition order. Conditions join left to right, so scanning for each
// negated form after the previous match keeps duplicates apart.
export function guardSpans(
  text: string, row: ConditionMapRow,
): Span[] {
  const guard = lineAt(text, row.line);
  const spans: Span[] = [];
  let from = 0;
  for (const cond of row.conditions) {
    const at = guard.indexOf(cond.negated, from);
    if (at < 0) {
      spans.push({ line: row.line, start: 0, end: guard.length });
      continue;
    }
    spans.push({ line: row.line, start: at, end: at + cond.negated.length });
    from = at + cond.negated.length;
  }
  return spans;
}

// Selecting one exit condition in the source view: where does its
// negation sit in the generated code?
export function spanForExit(
  text: string, map: ConditionMapRow[], macro: string, exitIndex: number,
): Span | null {
  for (const row of map) {
    if (row.macro !== macro) continue;
    const pos = row.conditions.findIndex((c) => c.index === exitIndex);
    if (pos < 0) continue;
    return guardSpans(text, row)[pos];
  }
  return null;
}

// The reverse direction: the cursor sits on a guard line (optionally at
// a column); which exit conditions does it negate? With a column, only
// the condition whose span contains it; without, all of them.
export function exitsForGuard(
  text: string, map: ConditionMapRow[], line: number, column?: number,
): ConditionRef[] {
  const row = map.find((r) => r.line === line);
  if (!row) return [];
  if (column === undefined) return row.conditions;
  const spans = guardSpans(text, row);
  return row.conditions.filter(
    (_, i) => spans[i].start <= column && column < spans[i].end);
}
