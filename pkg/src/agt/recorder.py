"""Recording state: where the next demonstrated instruction lands.

The recorder never executes anything. The session executes a gesture
against the workspace first, then hands the equivalent instruction here;
this module only manages the insertion cursor, open conditionals, the
pending comparison, and the completion of missing branches.

Structure edits on a finished program (delete, add/remove else, invert)
also live here since they share the path plumbing.
"""

from __future__ import annotations

import copy
from dataclasses import dataclass, field

from .errors import (
    EditError,
    InvalidPath,
    InvertNonEmptyThen,
    NoPendingComparison,
    RecorderStateError,
    UnknownMacro,
)
from .nodes import (
    Condition, If, MacroLoop, MacroSimple, Program, get_container,
    get_instruction, is_guard,
)
from .relations import negate, partition_stable

SECTION_WORDS = {
    "do": "body", "body": "body", "from": "init", "init": "init",
    "until": "exits", "exits": "exits", "loop": "body",
    "terminate": "terminate",
}


def normalize_section(macro, word: str) -> str:
    try:
        section = SECTION_WORDS[word.lower()]
    except KeyError:
        raise RecorderStateError(f"unknown section {word!r}") from None
    if isinstance(macro, MacroSimple) and section != "body":
        raise RecorderStateError(
            f"macro {macro.name} has no {word!r} section")
    return section


@dataclass
class Cursor:
    container: tuple
    index: int


@dataclass
class _Saved:
    mode: str
    cursor: Cursor | None
    exits_macro: str | None
    open_ifs: list
    completion: tuple | None


@dataclass
class Recorder:
    program: Program
    mode: str = "off"  # off, recording, completing
    cursor: Cursor | None = None
    exits_macro: str | None = None  # recording exit conditions of this macro
    open_ifs: list = field(default_factory=list)  # (container, index) pairs
    pending: tuple | None = None  # (left operand, right operand)
    completion: tuple | None = None  # (reason, path) while completing
    suspended: list = field(default_factory=list)

    # --- state save/restore (for session checkpoints) ---

    def save_state(self) -> dict:
        return copy.deepcopy({
            "mode": self.mode, "cursor": self.cursor,
            "exits_macro": self.exits_macro, "open_ifs": self.open_ifs,
            "pending": self.pending, "completion": self.completion,
            "suspended": self.suspended,
        })

    def restore_state(self, d: dict):
        d = copy.deepcopy(d)
        self.mode = d["mode"]
        self.cursor = d["cursor"]
        self.exits_macro = d["exits_macro"]
        self.open_ifs = d["open_ifs"]
        self.pending = d["pending"]
        self.completion = d["completion"]
        self.suspended = d["suspended"]

    # --- start / stop ---

    def start(self, macro_name: str, section_word: str | None):
        if self.mode != "off":
            raise RecorderStateError("already recording")
        macro = self.program.macro(macro_name)
        if macro is None:
            raise UnknownMacro(f"no macro named {macro_name!r}")
        section = normalize_section(macro, section_word or "body")
        self.mode = "recording"
        if section == "exits":
            self.exits_macro = macro_name
            self.cursor = None
        else:
            container = (macro_name, section)
            self.cursor = Cursor(container,
                                 len(get_container(self.program, container)))

    def stop(self):
        if self.mode != "recording":
            raise RecorderStateError("not recording")
        if self.open_ifs:
            raise RecorderStateError(
                "a demonstrated case is still open; end it first")
        self.mode = "off"
        self.cursor = None
        self.exits_macro = None
        self.pending = None

    # --- instruction flow ---

    def accepts_statements(self) -> bool:
        return self.mode in ("recording", "completing") \
            and self.exits_macro is None

    def insert(self, instr) -> tuple:
        """Insert at the cursor; returns the instruction's path."""
        if not self.accepts_statements():
            raise RecorderStateError("no insertion point")
        container = get_container(self.program, self.cursor.container)
        idx = min(self.cursor.index, len(container))
        container.insert(idx, instr)
        self.cursor.index = idx + 1
        return self.cursor.container + (idx,)

    def record_or_pass(self, instr) -> tuple | None:
        """The dual effect hinge: record when a cursor is live, else no-op.

        Returns the inserted path, or None when the gesture only touched
        the data (not recording, or demonstrating exit conditions).
        """
        if self.accepts_statements():
            return self.insert(instr)
        return None

    # --- comparison protocol ---

    def set_pending(self, left, right):
        self.pending = (left, right)

    def take_pending(self) -> tuple:
        if self.pending is None:
            raise NoPendingComparison("compare two values first")
        left, right = self.pending
        self.pending = None
        return left, right

    def add_exit_condition(self, cond: Condition):
        if self.mode != "recording" or self.exits_macro is None:
            raise RecorderStateError("not recording exit conditions")
        macro = self.program.macro(self.exits_macro)
        macro.exits.append(cond)
        macro.exits[:] = partition_stable(macro.exits, is_guard)

    def open_if(self, cond: Condition) -> tuple:
        """Insert ``if (cond) { } else { TO DO }`` and descend into then."""
        if not self.accepts_statements():
            raise RecorderStateError("no insertion point")
        node = If(cond, [], [], todo=True)
        path = self.insert(node)
        self.open_ifs.append((self.cursor.container, path[-1]))
        self.cursor = Cursor(path + ("then",), 0)
        return path

    # --- case endings ---

    def end_case(self) -> str:
        """Close the innermost open structure.

        Returns "closed" when an if was closed, "resume" when a completion
        finished and the paused run should continue.
        """
        if self.open_ifs:
            container, idx = self.open_ifs.pop()
            self.cursor = Cursor(container, idx + 1)
            return "closed"
        if self.mode == "completing":
            self._finish_completion()
            return "resume"
        raise RecorderStateError("no open case to end")

    # --- completions (missing else, empty macro) ---

    def enter_completion(self, reason: str, path: tuple):
        self.suspended.append(_Saved(self.mode, self.cursor,
                                     self.exits_macro, self.open_ifs,
                                     self.completion))
        self.mode = "completing"
        self.exits_macro = None
        self.open_ifs = []
        self.pending = None
        self.completion = (reason, path)
        if reason == "MissingElse":
            node = get_instruction(self.program, path)
            node.todo = False
            if node.orelse is None:
                node.orelse = []
            self.cursor = Cursor(path + ("else",), len(node.orelse))
        else:  # EmptyMacro: fill the body
            if len(path) == 1:
                macro = self.program.macro(path[0])
            else:
                # paused at a call instruction; record into the callee
                callee = get_instruction(self.program, path)
                macro = self.program.macro(callee.name)
            container = (macro.name, "body")
            self.cursor = Cursor(container,
                                 len(get_container(self.program, container)))

    def _finish_completion(self):
        reason, path = self.completion
        if reason == "MissingElse":
            node = get_instruction(self.program, path)
            if not node.orelse:
                node.orelse = None  # nothing demonstrated: plain if
        saved = self.suspended.pop()
        self.mode = saved.mode
        self.cursor = saved.cursor
        self.exits_macro = saved.exits_macro
        self.open_ifs = saved.open_ifs
        self.completion = saved.completion

    # --- cursor movement ---

    def select(self, container: tuple, index: int | None):
        if self.mode != "recording" or self.exits_macro is not None:
            raise RecorderStateError("select needs an active recording")
        if self.open_ifs:
            raise RecorderStateError("end the open case before selecting")
        stmts = get_container(self.program, container)
        if index is None:
            self.cursor = Cursor(container, len(stmts))
        else:
            if not 0 <= index < len(stmts):
                raise InvalidPath(f"no instruction {index} there")
            self.cursor = Cursor(container, index + 1)


# --- structure edits on a quiet program ---

def delete_instruction(program: Program, path: tuple):
    container = get_container(program, path[:-1])
    idx = path[-1]
    if not isinstance(idx, int) or not 0 <= idx < len(container):
        raise InvalidPath(f"no instruction at {path!r}")
    del container[idx]


def add_else(program: Program, path: tuple):
    node = get_instruction(program, path)
    if not isinstance(node, If):
        raise EditError("not a conditional")
    if node.todo or node.orelse is not None:
        raise EditError("the conditional already has an else branch")
    node.todo = True
    node.orelse = []


def remove_else(program: Program, path: tuple):
    node = get_instruction(program, path)
    if not isinstance(node, If):
        raise EditError("not a conditional")
    if node.todo:
        node.todo = False
        node.orelse = None
        return
    if node.orelse is None:
        raise EditError("the conditional has no else branch")
    if node.orelse:
        raise EditError("the else branch is not empty")
    node.orelse = None


def invert_conditional(program: Program, path: tuple):
    """Turn ``if (c) { } else { B }`` into ``if (not c) { B }``."""
    node = get_instruction(program, path)
    if not isinstance(node, If):
        raise EditError("not a conditional")
    if node.then:
        raise InvertNonEmptyThen("the then branch is not empty")
    if node.todo or not node.orelse:
        raise EditError("nothing in the else branch to promote")
    node.cond = Condition(node.cond.left, negate(node.cond.rel),
                          node.cond.right)
    node.then = node.orelse
    node.orelse = None
