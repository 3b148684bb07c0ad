"""Canonical text for programs and declarations.

There is exactly one way to print a program, so printing then reparsing
then printing again is a fixed point; tests lean on that.
"""

from __future__ import annotations

from .nodes import (
    Assign, BinOp, CallMacro, CellAt, CellVia, Comment, Condition, If,
    Length, Lit, MacroLoop, MacroSimple, Program, Read, Var, Write,
)
from .relations import negate
from .workspace import ArrayEntity, CHAR_DEFAULT, IndexVariable, Variable, Workspace

INDENT = "    "


def operand_text(op) -> str:
    if isinstance(op, Lit):
        return str(op.value)
    if isinstance(op, Var):
        return op.name
    if isinstance(op, Length):
        return f"{op.array}.length"
    if isinstance(op, CellVia):
        return f"{op.array}[{op.index}]"
    if isinstance(op, CellAt):
        return f"{op.array}[{op.pos}]"
    raise TypeError(f"not an operand: {op!r}")


def expr_text(e) -> str:
    if isinstance(e, BinOp):
        return f"{operand_text(e.left)} {e.op} {operand_text(e.right)}"
    return operand_text(e)


def condition_text(c: Condition) -> str:
    return f"{operand_text(c.left)} {c.rel} {operand_text(c.right)}"


def negated_condition_text(c: Condition) -> str:
    return f"{operand_text(c.left)} {negate(c.rel)} {operand_text(c.right)}"


class _Printer:
    """Accumulates lines and remembers which path each line renders."""

    def __init__(self):
        self.lines: list[str] = []
        self.line_of_path: dict[tuple, int] = {}

    def emit(self, depth: int, text: str, path: tuple | None = None):
        self.lines.append(INDENT * depth + text if text else "")
        if path is not None:
            self.line_of_path[path] = len(self.lines)

    def statements(self, stmts: list, depth: int, path: tuple):
        for i, s in enumerate(stmts):
            self.statement(s, depth, path + (i,))

    def statement(self, s, depth: int, path: tuple):
        if isinstance(s, Comment):
            self.emit(depth, f"// {s.text}" if s.text else "//", path)
        elif isinstance(s, Assign):
            self.emit(depth, f"{operand_text(s.target)} = {expr_text(s.expr)} ;",
                      path)
        elif isinstance(s, Read):
            prompt = f'"{s.prompt}" ' if s.prompt is not None else ""
            self.emit(depth, f"Read {prompt}{operand_text(s.target)} ;", path)
        elif isinstance(s, Write):
            parts = ["Write"]
            if s.prompt is not None:
                parts.append(f'"{s.prompt}"')
            if s.operand is not None:
                parts.append(operand_text(s.operand))
            self.emit(depth, " ".join(parts) + " ;", path)
        elif isinstance(s, CallMacro):
            self.emit(depth, f"{s.name} ;", path)
        elif isinstance(s, If):
            self.emit(depth, f"if ({condition_text(s.cond)}) {{", path)
            self.statements(s.then, depth + 1, path + ("then",))
            if s.todo:
                self.emit(depth, "} else {")
                self.emit(depth + 1, f"// {negated_condition_text(s.cond)}")
                self.emit(depth + 1, "// TO DO")
                self.emit(depth, "}")
            elif s.orelse is not None:
                self.emit(depth, "} else {")
                self.statements(s.orelse, depth + 1, path + ("else",))
                self.emit(depth, "}")
            else:
                self.emit(depth, "}")
        else:
            raise TypeError(f"not a statement: {s!r}")

    def macro(self, m):
        self.emit(0, f"Define {m.name}", (m.name,))
        if m.comment:
            for line in m.comment.split("\n"):
                self.emit(1, f"// {line}")
        if isinstance(m, MacroSimple):
            self.emit(1, "Do", (m.name, "Do"))
            self.statements(m.body, 2, (m.name, "body"))
        else:
            self.emit(1, "From", (m.name, "From"))
            self.statements(m.init, 2, (m.name, "init"))
            self.emit(1, "Until", (m.name, "Until"))
            for i, c in enumerate(m.exits):
                self.emit(2, condition_text(c), (m.name, "exits", i))
            self.emit(1, "Loop", (m.name, "Loop"))
            self.statements(m.body, 2, (m.name, "body"))
            self.emit(1, "Terminate", (m.name, "Terminate"))
            self.statements(m.terminate, 2, (m.name, "terminate"))
        self.emit(0, "End", (m.name, "End"))


def macro_text(m) -> str:
    p = _Printer()
    p.macro(m)
    return "\n".join(p.lines) + "\n"


def macro_lines_with_map(m) -> tuple[list[str], dict[tuple, int]]:
    """Lines of one macro plus a path -> 1-based line number map."""
    p = _Printer()
    p.macro(m)
    return p.lines, p.line_of_path


def program_text(prog: Program) -> str:
    return "\n".join(macro_text(m) for m in prog.macros)


def declaration_text(e) -> str:
    if isinstance(e, Variable):
        head = f"const {e.type} {e.name}" if e.constant else f"{e.type} {e.name}"
        default = CHAR_DEFAULT if e.type == "char" else 0
        if e.constant or e.value != default:
            return f"{head} = {e.value} ;"
        return f"{head} ;"
    if isinstance(e, ArrayEntity):
        cells = ",".join(str(c) for c in e.cells)
        return f"{e.type} {e.name}[{len(e.cells)}] = {{{cells}}} ;"
    if isinstance(e, IndexVariable):
        return f"index {e.name} of {e.array} ;"
    raise TypeError(f"not an entity: {e!r}")


def declarations_text(ws: Workspace) -> str:
    lines = [declaration_text(e) for e in ws.entities.values()]
    return "\n".join(lines) + ("\n" if lines else "")


def document_text(ws: Workspace, prog: Program) -> str:
    decls = declarations_text(ws)
    progs = program_text(prog)
    if decls and progs:
        return decls + "\n" + progs
    return decls + progs
