"""Program tree: operands, expressions, instructions, macros.

The tree is deliberately small. Expressions hold at most one binary
operator, conditions are a single comparison, and there are no boolean
connectives anywhere; a loop exits through an ordered list of conditions
instead.

Instruction positions are addressed by paths. A container path names a
statement list: ``(macro, section)`` optionally extended by
``(index, branch)`` pairs for nested conditionals. Section is "body" for
simple macros and "init" / "body" / "terminate" for loop macros (exit
conditions are not statements and have no paths); branch is "then" or
"else". An instruction path is a container path plus a final index.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidPath

KEYWORDS = {
    "Define", "End", "Do", "From", "Until", "Loop", "Terminate",
    "Read", "Write", "if", "else", "index", "of", "int", "char", "const",
}

BINARY_OPS = ("+", "-", "*", "/", "%")


# --- operands ---

@dataclass(frozen=True)
class Lit:
    value: int


@dataclass(frozen=True)
class Var:
    """A variable or index variable used by name."""
    name: str


@dataclass(frozen=True)
class Length:
    array: str


@dataclass(frozen=True)
class CellVia:
    """Array cell reached through an index variable: t[i]."""
    array: str
    index: str


@dataclass(frozen=True)
class CellAt:
    """Array cell at a fixed position: t[3]."""
    array: str
    pos: int


Operand = Lit | Var | Length | CellVia | CellAt
LValue = Var | CellVia | CellAt


@dataclass(frozen=True)
class BinOp:
    op: str
    left: Operand
    right: Operand


Expr = BinOp | Lit | Var | Length | CellVia | CellAt


@dataclass(frozen=True)
class Condition:
    left: Operand
    rel: str
    right: Operand


def is_guard(cond: Condition) -> bool:
    """True when neither side touches an array cell.

    Guard conditions can always be evaluated; a cell access can be out of
    bounds, so guards go first in an exit list.
    """
    return not isinstance(cond.left, (CellVia, CellAt)) and not isinstance(
        cond.right, (CellVia, CellAt))


# --- instructions ---

@dataclass
class Assign:
    target: LValue
    expr: Expr


@dataclass
class Read:
    target: LValue
    prompt: str | None = None


@dataclass
class Write:
    prompt: str | None = None
    operand: Operand | None = None


@dataclass
class If:
    cond: Condition
    then: list = field(default_factory=list)
    orelse: list | None = None
    todo: bool = False  # else branch demanded but not demonstrated yet


@dataclass
class CallMacro:
    name: str


@dataclass
class Comment:
    text: str


Instruction = Assign | Read | Write | If | CallMacro | Comment


# --- macros ---

@dataclass
class MacroSimple:
    name: str
    body: list = field(default_factory=list)
    comment: str | None = None


@dataclass
class MacroLoop:
    name: str
    init: list = field(default_factory=list)
    exits: list = field(default_factory=list)  # list[Condition]
    body: list = field(default_factory=list)
    terminate: list = field(default_factory=list)
    comment: str | None = None


Macro = MacroSimple | MacroLoop


@dataclass
class Program:
    """Macros in definition order."""
    macros: list = field(default_factory=list)

    def macro(self, name: str) -> Macro | None:
        for m in self.macros:
            if m.name == name:
                return m
        return None


# --- path navigation ---

SECTIONS_SIMPLE = ("body",)
SECTIONS_LOOP = ("init", "body", "terminate")


def get_container(program: Program, path: tuple) -> list:
    """Resolve a container path to the actual statement list."""
    if len(path) < 2:
        raise InvalidPath(f"container path too short: {path!r}")
    macro = program.macro(path[0])
    if macro is None:
        raise InvalidPath(f"no macro named {path[0]!r}")
    section = path[1]
    if isinstance(macro, MacroSimple):
        if section != "body":
            raise InvalidPath(f"macro {macro.name} has no section {section!r}")
        cur = macro.body
    else:
        if section not in SECTIONS_LOOP:
            raise InvalidPath(f"macro {macro.name} has no section {section!r}")
        cur = getattr(macro, section)
    rest = path[2:]
    while rest:
        if len(rest) < 2:
            raise InvalidPath(f"dangling path element in {path!r}")
        idx, branch = rest[0], rest[1]
        if not isinstance(idx, int) or not 0 <= idx < len(cur):
            raise InvalidPath(f"index {idx!r} out of range in {path!r}")
        node = cur[idx]
        if not isinstance(node, If):
            raise InvalidPath(f"{path!r} descends into a non-conditional")
        if branch == "then":
            cur = node.then
        elif branch == "else":
            if node.orelse is None:
                raise InvalidPath(f"{path!r}: conditional has no else branch")
            cur = node.orelse
        else:
            raise InvalidPath(f"bad branch {branch!r} in {path!r}")
        rest = rest[2:]
    return cur


def get_instruction(program: Program, path: tuple):
    container = get_container(program, path[:-1])
    idx = path[-1]
    if not isinstance(idx, int) or not 0 <= idx < len(container):
        raise InvalidPath(f"index {idx!r} out of range in {path!r}")
    return container[idx]
