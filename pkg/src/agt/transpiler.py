"""Program tree to readable code in five dialects, two flavors.

The instrumented flavor mirrors the block structure with marker comments
and keeps macro calls as calls; it exists to be displayed next to the
original and stepped through, so it also carries a line-to-path source map
and a map tying each while line to the exit conditions it negates.

The export flavor produces a standalone routine: macros are inlined at
their call sites between arrow comments, and all instrumentation is left
out.

A loop exits through the first true condition of its list, so the while
guard is the AND of the relation-wise negations of every exit condition.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import MacroRecursion, UnknownDialect, UnknownMacro
from .nodes import (
    Assign, CallMacro, CellAt, CellVia, Comment, Condition, If, Length,
    Lit, MacroLoop, MacroSimple, Program, Read, Var, Write,
)
from .printer import condition_text, document_text, macro_lines_with_map
from .relations import negate
from .workspace import Workspace

DIALECTS = ("agt", "python", "c", "cpp", "java")
FLAVORS = ("instrumented", "export")

MARK_MACRO = "Macro"
MARK_INIT = "Initialisation"
MARK_EXITS = "Conditions de sortie :"
MARK_EXIT_ONE = "Sortir si"
MARK_BODY = "Corps de boucle"
MARK_TERM = "Terminaison"


@dataclass
class TranspileResult:
    dialect: str
    flavor: str
    text: str
    source_map: list = field(default_factory=list)
    condition_map: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"dialect": self.dialect, "flavor": self.flavor,
                "text": self.text, "source_map": self.source_map,
                "condition_map": self.condition_map}


def transpile(ws: Workspace, program: Program, dialect: str = "python",
              flavor: str = "instrumented",
              entry: str | None = None) -> TranspileResult:
    if dialect not in DIALECTS:
        raise UnknownDialect(f"unknown dialect {dialect!r}")
    if flavor not in FLAVORS:
        raise UnknownDialect(f"unknown flavor {flavor!r}")
    if dialect == "agt":
        return _agt_result(ws, program, flavor)
    t = _Transpiler(program, dialect)
    if flavor == "instrumented":
        t.instrumented()
    else:
        t.export(_entry_macro(program, entry))
    return TranspileResult(dialect, flavor, "\n".join(t.lines) + "\n",
                           t.source_map, t.condition_map)


def negate_until(exits: list[Condition]) -> list[Condition]:
    """The continuation conjunction: every exit negated, order kept.

    A loop leaves through the first true exit, so it keeps going exactly
    when all of these hold at once.
    """
    return [Condition(c.left, negate(c.rel), c.right) for c in exits]


def _entry_macro(program: Program, entry: str | None):
    if entry is not None:
        m = program.macro(entry)
        if m is None:
            raise UnknownMacro(f"no macro named {entry!r}")
        return m
    if not program.macros:
        raise UnknownMacro("the program has no macros")
    return program.macros[-1]  # the most recently defined one


def _agt_result(ws: Workspace, program: Program, flavor: str):
    """The identity dialect: canonical text, both flavors alike."""
    text = document_text(ws, program)
    source_map = []
    offset = len([e for e in ws.entities.values()]) + (1 if ws.entities
                                                       else 0)
    for m in program.macros:
        lines, line_of_path = macro_lines_with_map(m)
        for path, line in line_of_path.items():
            source_map.append({"line": line + offset, "path": list(path)})
        offset += len(lines) + 1
    return TranspileResult("agt", flavor, text, source_map, [])


class _Transpiler:
    def __init__(self, program: Program, dialect: str):
        self.program = program
        self.dialect = dialect
        self.braces = dialect != "python"
        self.c = "#" if dialect == "python" else "//"
        self.lines: list[str] = []
        self.source_map: list = []
        self.condition_map: list = []
        self.inline_stack: list[str] = []

    # --- low-level emission ---

    def emit(self, depth: int, text: str, path: tuple | None = None) -> int:
        self.lines.append("    " * depth + text)
        n = len(self.lines)
        if path is not None:
            self.source_map.append({"line": n, "path": list(path)})
        return n

    def mark(self, text: str) -> int:
        """Instrumentation comments sit at the left margin."""
        self.lines.append(f"{self.c} {text}" if text else self.c)
        return len(self.lines)

    # --- operand rendering ---

    def rop(self, op) -> str:
        if isinstance(op, Lit):
            return str(op.value)
        if isinstance(op, Var):
            return op.name
        if isinstance(op, Length):
            if self.dialect == "python":
                return f"len({op.array})"
            if self.dialect == "c":
                return f"{op.array}_length"
            return f"{op.array}.length"
        if isinstance(op, CellVia):
            return f"{op.array}[{op.index}]"
        if isinstance(op, CellAt):
            return f"{op.array}[{op.pos}]"
        raise TypeError(f"not an operand: {op!r}")

    def rexpr(self, e) -> str:
        if hasattr(e, "op") and hasattr(e, "left"):
            return f"{self.rop(e.left)} {e.op} {self.rop(e.right)}"
        return self.rop(e)

    def rcond(self, cond: Condition, flip: bool = False) -> str:
        rel = negate(cond.rel) if flip else cond.rel
        return f"{self.rop(cond.left)} {rel} {self.rop(cond.right)}"

    def guard(self, exits: list) -> str:
        if not exits:
            return {"python": "True", "java": "true"}.get(self.dialect, "1")
        joiner = " and " if self.dialect == "python" else " && "
        return joiner.join(self.rcond(c) for c in negate_until(exits))

    # --- statement rendering ---

    def stmt_lines(self, stmts: list, depth: int, path: tuple,
                   inline_calls: bool, pad_empty: bool = True):
        """pad_empty keeps indentation-blocks parseable; top-level macro
        sections pass False since emptiness is fine there."""
        live = [s for s in stmts if not isinstance(s, Comment)]
        if not live:
            if pad_empty and not self.braces:
                self.emit(depth, "pass")
            return
        for i, s in enumerate(stmts):
            if isinstance(s, Comment):
                continue
            self.stmt(s, depth, path + (i,), inline_calls)

    def stmt(self, s, depth: int, path: tuple, inline_calls: bool):
        end = ";" if self.braces else ""
        if isinstance(s, Assign):
            self.emit(depth, f"{self.rop(s.target)} = {self.rexpr(s.expr)}"
                      f"{end}", path)
        elif isinstance(s, Read):
            prompt = s.prompt if s.prompt is not None else \
                f"Read {self.rop(s.target)} "
            self.emit(depth, self.read_code(s, prompt), path)
        elif isinstance(s, Write):
            self.emit(depth, self.write_code(s), path)
        elif isinstance(s, If):
            self.if_lines(s, depth, path, inline_calls)
        elif isinstance(s, CallMacro):
            if inline_calls:
                self.inline_call(s, depth, path)
            else:
                self.emit(depth, f"{s.name}(){end}", path)
        else:
            raise TypeError(f"not a statement: {s!r}")

    def read_code(self, s: Read, prompt: str) -> str:
        lv = self.rop(s.target)
        if self.dialect == "python":
            return f'{lv} = int(input("{prompt}"))'
        if self.dialect == "c":
            return f'printf("{prompt}"); scanf("%lld", &{lv});'
        if self.dialect == "cpp":
            return f'std::cout << "{prompt}"; std::cin >> {lv};'
        return f'System.out.print("{prompt}"); {lv} = in.nextLong();'

    def write_code(self, s: Write) -> str:
        prompt = s.prompt or ""
        if s.operand is None:
            if self.dialect == "python":
                return f'print("{prompt}")'
            if self.dialect == "c":
                return f'printf("{prompt}\\n");'
            if self.dialect == "cpp":
                return f'std::cout << "{prompt}" << std::endl;'
            return f'System.out.println("{prompt}");'
        op = self.rop(s.operand)
        if self.dialect == "python":
            return f'print("{prompt}" + str({op}))'
        if self.dialect == "c":
            return f'printf("{prompt}%lld\\n", {op});'
        if self.dialect == "cpp":
            return f'std::cout << "{prompt}" << {op} << std::endl;'
        return f'System.out.println("{prompt}" + {op});'

    def if_lines(self, s: If, depth: int, path: tuple, inline_calls: bool):
        cond = self.rcond(s.cond)
        if self.braces:
            self.emit(depth, f"if ({cond}) {{", path)
            self.stmt_lines(s.then, depth + 1, path + ("then",),
                            inline_calls)
            if s.todo:
                self.emit(depth, "} else {")
                self.emit(depth + 1, f"// {self.rcond(s.cond, flip=True)}")
                self.emit(depth + 1, "// TO DO")
                self.emit(depth, "}")
            elif s.orelse is not None:
                self.emit(depth, "} else {")
                self.stmt_lines(s.orelse, depth + 1, path + ("else",),
                                inline_calls)
                self.emit(depth, "}")
            else:
                self.emit(depth, "}")
            return
        self.emit(depth, f"if ({cond}) :", path)
        self.stmt_lines(s.then, depth + 1, path + ("then",), inline_calls)
        if s.todo:
            self.emit(depth, "else :")
            self.emit(depth + 1, f"# {self.rcond(s.cond, flip=True)}")
            self.emit(depth + 1, "# TO DO")
            self.emit(depth + 1, "pass")
        elif s.orelse is not None:
            self.emit(depth, "else :")
            self.stmt_lines(s.orelse, depth + 1, path + ("else",),
                            inline_calls)

    def while_line(self, m: MacroLoop, depth: int,
                   exit_comment_lines: list | None) -> int:
        guard = self.guard(m.exits)
        text = f"while ({guard}) {{" if self.braces else \
            f"while ({guard}) :"
        n = self.emit(depth, text, (m.name, "Until"))
        conds = []
        for i, cond in enumerate(m.exits):
            entry = {"index": i, "path": [m.name, "exits", i],
                     "text": condition_text(cond),
                     "negated": self.rcond(cond, flip=True),
                     "comment_line": None}
            if exit_comment_lines:
                entry["comment_line"] = exit_comment_lines[i]
            conds.append(entry)
        self.condition_map.append({"line": n, "macro": m.name,
                                   "conditions": conds})
        return n

    # --- instrumented flavor ---

    def instrumented(self):
        for i, m in enumerate(self.program.macros):
            if i:
                self.lines.append("")
            self.instrumented_macro(m)

    def instrumented_macro(self, m):
        self.mark(f"{MARK_MACRO} {m.name}")
        if isinstance(m, MacroSimple):
            self.stmt_lines(m.body, 0, (m.name, "body"),
                            inline_calls=False, pad_empty=False)
            return
        self.mark(MARK_INIT)
        self.stmt_lines(m.init, 0, (m.name, "init"), inline_calls=False,
                        pad_empty=False)
        self.mark(MARK_EXITS)
        comment_lines = [self.mark(f"{MARK_EXIT_ONE} {condition_text(c)}")
                         for c in m.exits]
        self.mark("")
        self.while_line(m, 0, comment_lines)
        self.mark(MARK_BODY)
        self.stmt_lines(m.body, 1, (m.name, "body"), inline_calls=False)
        if self.braces:
            self.emit(0, "}")
        self.mark(MARK_TERM)
        self.stmt_lines(m.terminate, 0, (m.name, "terminate"),
                        inline_calls=False, pad_empty=False)
        self.mark("")

    # --- export flavor ---

    def export(self, m):
        if m.comment:
            self.mark("")
            for line in m.comment.split("\n"):
                self.mark(line)
            self.mark("")
        self.inline_macro(m, 0)

    def inline_call(self, s: CallMacro, depth: int, path: tuple):
        callee = self.program.macro(s.name)
        if callee is None:
            raise UnknownMacro(f"no macro named {s.name!r}")
        if s.name in self.inline_stack:
            raise MacroRecursion(f"{s.name} calls itself", path)
        role = f": {callee.comment}".replace("\n", " ") if callee.comment \
            else ""
        self.emit(depth, f"{self.c} -> {s.name}{role}")
        before = len(self.lines)
        self.inline_macro(callee, depth)
        real = any(line.strip() and not line.lstrip().startswith(self.c)
                   for line in self.lines[before:])
        if not real and not self.braces:
            self.emit(depth, "pass")  # keep the enclosing block non-empty
        self.emit(depth, f"{self.c} <- {s.name}")

    def inline_macro(self, m, depth: int):
        self.inline_stack.append(m.name)
        try:
            if isinstance(m, MacroSimple):
                self.stmt_lines(m.body, depth, (m.name, "body"),
                                inline_calls=True, pad_empty=False)
            else:
                self.stmt_lines(m.init, depth, (m.name, "init"),
                                inline_calls=True, pad_empty=False)
                self.while_line(m, depth, None)
                self.stmt_lines(m.body, depth + 1, (m.name, "body"),
                                inline_calls=True)
                if self.braces:
                    self.emit(depth, "}")
                self.stmt_lines(m.terminate, depth, (m.name, "terminate"),
                                inline_calls=True, pad_empty=False)
        finally:
            self.inline_stack.pop()
