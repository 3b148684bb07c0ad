"""Stepping interpreter.

The machine keeps an explicit frame stack instead of recursing, because a
run must be able to freeze mid-instruction (missing else branch, empty
macro, input wanted), let the recorder splice instructions into the very
lists being executed, and then pick up where it stopped. Frames therefore
hold paths into the program tree, not references to lists; every step
resolves its container fresh.

Execution of a single instruction lives in Executor, which the recorder
also uses to give gestures their immediate effect on the data.
"""

from __future__ import annotations

import copy
from dataclasses import dataclass, field

from . import printer
from .errors import (
    DivisionByZero,
    EngineError,
    MacroRecursion,
    Overflow,
    PausedUnresolved,
    StepLimitExceeded,
    UnknownMacro,
)
from .nodes import (
    Assign, BinOp, CallMacro, CellAt, CellVia, Comment, Condition, If,
    Length, Lit, MacroLoop, MacroSimple, Program, Read, Var, Write,
    get_container,
)
from .relations import holds
from .workspace import INT64_MAX, INT64_MIN, Workspace

DEFAULT_STEP_LIMIT = 100000

PAUSE_MISSING_ELSE = "MissingElse"
PAUSE_EMPTY_MACRO = "EmptyMacro"
PAUSE_INPUT = "InputRequest"


# --- events ---

@dataclass
class BlockEntered:
    macro: str
    block: str  # macro, init, body, terminate, then, else
    path: tuple

    def to_dict(self):
        return {"event": "BlockEntered", "macro": self.macro,
                "block": self.block, "path": list(self.path)}


@dataclass
class InstructionExecuted:
    path: tuple
    text: str
    writes: list = field(default_factory=list)  # (target, old, new)

    def to_dict(self):
        return {"event": "InstructionExecuted", "path": list(self.path),
                "text": self.text,
                "writes": [list(w) for w in self.writes]}


@dataclass
class ConditionEvaluated:
    path: tuple
    index: int | None  # position in the exit list, None inside an if
    text: str
    result: bool

    def to_dict(self):
        return {"event": "ConditionEvaluated", "path": list(self.path),
                "index": self.index, "text": self.text, "result": self.result}


@dataclass
class OutputProduced:
    text: str

    def to_dict(self):
        return {"event": "OutputProduced", "text": self.text}


@dataclass
class PausedEvent:
    reason: str
    path: tuple
    prompt: str | None = None

    def to_dict(self):
        d = {"event": "PausedEvent", "reason": self.reason,
             "path": list(self.path)}
        if self.prompt is not None:
            d["prompt"] = self.prompt
        return d


@dataclass
class FinishedEvent:
    def to_dict(self):
        return {"event": "FinishedEvent"}


@dataclass
class ErrorEvent:
    error: EngineError

    def to_dict(self):
        return {"event": "ErrorEvent", **self.error.to_dict()}


@dataclass
class WorkspaceState:
    snapshot: dict

    def to_dict(self):
        return {"event": "WorkspaceState", "workspace": self.snapshot}


# --- arithmetic ---

def _check64(value: int) -> int:
    if not INT64_MIN <= value <= INT64_MAX:
        raise Overflow(f"{value} does not fit in 64 bits")
    return value


def apply_op(op: str, a: int, b: int) -> int:
    """Signed 64-bit arithmetic; division truncates toward zero."""
    if op == "+":
        return _check64(a + b)
    if op == "-":
        return _check64(a - b)
    if op == "*":
        return _check64(a * b)
    if b == 0:
        raise DivisionByZero(f"{a} {op} 0")
    if a == INT64_MIN and b == -1:
        raise Overflow(f"{a} {op} {b} overflows")
    q = abs(a) // abs(b)
    if (a < 0) != (b < 0):
        q = -q
    if op == "/":
        return q
    if op == "%":
        return a - b * q
    raise ValueError(f"unknown operator {op!r}")


# --- single-instruction execution ---

class Executor:
    """Evaluates operands and runs one instruction against a workspace."""

    def __init__(self, ws: Workspace):
        self.ws = ws

    def eval_operand(self, op) -> int:
        if isinstance(op, Lit):
            return op.value
        if isinstance(op, Var):
            return self.ws.value_of(op.name)
        if isinstance(op, Length):
            return self.ws.length(op.array)
        if isinstance(op, CellVia):
            return self.ws.cell_via(op.array, op.index)
        if isinstance(op, CellAt):
            return self.ws.cell_at(op.array, op.pos)
        raise TypeError(f"not an operand: {op!r}")

    def eval_expr(self, e) -> int:
        if isinstance(e, BinOp):
            return apply_op(e.op, self.eval_operand(e.left),
                            self.eval_operand(e.right))
        return self.eval_operand(e)

    def eval_condition(self, c: Condition) -> bool:
        return holds(self.eval_operand(c.left), c.rel,
                     self.eval_operand(c.right))

    def read_lvalue(self, target) -> int:
        return self.eval_operand(target)

    def write_lvalue(self, target, value: int):
        if isinstance(target, Var):
            self.ws.set_value(target.name, value)
        elif isinstance(target, CellVia):
            self.ws.set_cell_via(target.array, target.index, value)
        elif isinstance(target, CellAt):
            self.ws.set_cell_at(target.array, target.pos, value)
        else:
            raise TypeError(f"not an lvalue: {target!r}")

    def assign(self, target, value: int) -> tuple:
        """Returns the (target, old, new) delta."""
        old = self.read_lvalue(target)
        self.write_lvalue(target, value)
        return (printer.operand_text(target), old, value)

    def run_assign(self, instr: Assign) -> tuple:
        return self.assign(instr.target, self.eval_expr(instr.expr))

    def render_output(self, instr: Write) -> str:
        text = instr.prompt or ""
        if instr.operand is not None:
            text += str(self.eval_operand(instr.operand))
        return text


# --- frames ---

@dataclass
class Seq:
    path: tuple  # container path
    idx: int = 0
    stop: int | None = None  # exclusive bound for partial execution


@dataclass
class LoopPhase:
    macro: str
    phase: str  # until, body-done, terminate-done


@dataclass
class UntilOnce:
    macro: str


@dataclass
class MacroEnd:
    macro: str


class Machine:
    """Drives one program activation to completion, pause, or error."""

    def __init__(self, ws: Workspace, program: Program, *,
                 inputs: list | None = None,
                 step_limit: int = DEFAULT_STEP_LIMIT,
                 detail: str = "Detailed",
                 snapshot_every: str | None = None):
        self.ws = ws
        self.program = program
        self.ex = Executor(ws)
        self.inputs = list(inputs or [])
        self.step_limit = step_limit
        self.detail = detail
        self.snapshot_every = snapshot_every  # None, instruction, block
        self.frames: list = []
        self.active_macros: list[str] = []
        self.events: list = []
        self.outputs: list[str] = []
        self.steps = 0
        self.state = "idle"
        self.pause_reason: str | None = None
        self.pause_path: tuple | None = None
        self.pause_prompt: str | None = None
        self.error: EngineError | None = None

    # --- checkpointing (used by the session's rollback) ---

    def save_state(self) -> dict:
        """Positions only; the workspace and program are owned elsewhere."""
        return {
            "frames": copy.deepcopy(self.frames),
            "active_macros": list(self.active_macros),
            "steps": self.steps,
            "state": self.state,
            "pause_reason": self.pause_reason,
            "pause_path": self.pause_path,
            "pause_prompt": self.pause_prompt,
            "inputs": list(self.inputs),
            "error": self.error,
            "events_len": len(self.events),
            "outputs_len": len(self.outputs),
        }

    def restore_state(self, d: dict):
        self.frames = copy.deepcopy(d["frames"])
        self.active_macros = list(d["active_macros"])
        self.steps = d["steps"]
        self.state = d["state"]
        self.pause_reason = d["pause_reason"]
        self.pause_path = d["pause_path"]
        self.pause_prompt = d["pause_prompt"]
        self.inputs = list(d["inputs"])
        self.error = d["error"]
        del self.events[d["events_len"]:]
        del self.outputs[d["outputs_len"]:]

    # --- event plumbing ---

    def emit(self, ev):
        if self.detail == "Summary" and isinstance(
                ev, (InstructionExecuted, ConditionEvaluated)):
            return
        self.events.append(ev)
        if isinstance(ev, OutputProduced):
            self.outputs.append(ev.text)
        if isinstance(ev, BlockEntered) and self.snapshot_every == "block":
            self.events.append(WorkspaceState(self.ws.to_dict()))

    def _after_step(self):
        if self.snapshot_every == "instruction":
            self.events.append(WorkspaceState(self.ws.to_dict()))

    # --- starting ---

    def _macro_or_fail(self, name: str):
        m = self.program.macro(name)
        if m is None:
            raise UnknownMacro(f"no macro named {name!r}")
        return m

    def _macro_is_empty(self, m) -> bool:
        def alive(stmts):
            return any(not isinstance(s, Comment) for s in stmts)
        if isinstance(m, MacroSimple):
            return not alive(m.body)
        return not (alive(m.init) or m.exits or alive(m.body)
                    or alive(m.terminate))

    def _push_macro(self, name: str, call_path: tuple | None):
        if name in self.active_macros:
            raise MacroRecursion(f"{name} is already running", call_path)
        m = self._macro_or_fail(name)
        if self._macro_is_empty(m):
            self._pause(PAUSE_EMPTY_MACRO, call_path or (name,))
            return
        self.active_macros.append(name)
        self.frames.append(MacroEnd(name))
        self.emit(BlockEntered(name, "macro", (name,)))
        if isinstance(m, MacroSimple):
            self.frames.append(Seq((name, "body")))
        else:
            self.frames.append(LoopPhase(name, "until"))
            self.emit(BlockEntered(name, "init", (name, "init")))
            self.frames.append(Seq((name, "init")))

    def start_macro(self, name: str):
        self.state = "running"
        try:
            self._push_macro(name, None)
        except EngineError as e:
            self._fail(e)

    def start_block(self, macro: str, section: str):
        """One section of a macro, run once, no control transfer."""
        m = self._macro_or_fail(macro)
        self.state = "running"
        if isinstance(m, MacroLoop) and section == "until":
            self.frames.append(UntilOnce(macro))
            return
        self.emit(BlockEntered(macro, section, (macro, section)))
        self.frames.append(Seq((macro, section)))

    def start_range(self, container_path: tuple, lo: int, hi: int):
        """Instructions lo..hi-1 of one container."""
        self.state = "running"
        self.frames.append(Seq(container_path, lo, hi))

    # --- stopping ---

    def _pause(self, reason: str, path: tuple, prompt: str | None = None):
        self.state = "paused"
        self.pause_reason = reason
        self.pause_path = path
        self.pause_prompt = prompt
        self.emit(PausedEvent(reason, path, prompt))

    def _fail(self, e: EngineError):
        self.state = "error"
        self.error = e
        self.emit(ErrorEvent(e))

    def resume(self):
        """Continue after a pause.

        Anything the user demonstrated while paused has already run against
        the workspace, so MissingElse and EmptyMacro skip past the paused
        instruction instead of executing the new material a second time.
        An InputRequest retries the read.
        """
        if self.state != "paused":
            raise EngineError("nothing to resume")
        if self.pause_reason in (PAUSE_MISSING_ELSE, PAUSE_EMPTY_MACRO):
            if self.frames and isinstance(self.frames[-1], Seq):
                self.frames[-1].idx += 1
            elif not self.frames:
                pass  # empty macro started directly; nothing left to do
        self.state = "running"
        self.pause_reason = None
        self.pause_path = None
        self.pause_prompt = None

    # --- the loop ---

    def run(self) -> str:
        while self.state == "running":
            self.step()
        return self.state

    def step(self):
        if self.state != "running":
            return
        try:
            self._step_inner()
        except EngineError as e:
            self._fail(e)

    def _count_step(self):
        self.steps += 1
        if self.steps > self.step_limit:
            raise StepLimitExceeded(
                f"stopped after {self.step_limit} steps")

    def _step_inner(self):
        while True:
            if not self.frames:
                self.state = "finished"
                if self.snapshot_every:
                    self.events.append(WorkspaceState(self.ws.to_dict()))
                self.emit(FinishedEvent())
                return
            f = self.frames[-1]
            if isinstance(f, MacroEnd):
                self.frames.pop()
                self.active_macros.remove(f.macro)
                continue
            if isinstance(f, UntilOnce):
                self.frames.pop()
                self._count_step()
                self._eval_exits(self._macro_or_fail(f.macro), f.macro)
                return
            if isinstance(f, LoopPhase):
                self._loop_step(f)
                return
            assert isinstance(f, Seq)
            container = get_container(self.program, f.path)
            end = len(container) if f.stop is None else min(f.stop,
                                                            len(container))
            if f.idx >= end:
                self.frames.pop()
                continue
            instr = container[f.idx]
            if isinstance(instr, Comment):
                f.idx += 1
                continue
            self._exec_instruction(instr, f)
            return

    def _eval_exits(self, m: MacroLoop, name: str) -> int | None:
        """First true exit condition, in list order, or None."""
        for i, cond in enumerate(m.exits):
            result = self.ex.eval_condition(cond)
            self.emit(ConditionEvaluated((name, "exits", i), i,
                                         printer.condition_text(cond),
                                         result))
            if result:
                return i
        return None

    def _loop_step(self, f: LoopPhase):
        m = self._macro_or_fail(f.macro)
        if not isinstance(m, MacroLoop):
            raise UnknownMacro(f"{f.macro!r} changed shape mid-run")
        if f.phase == "until":
            self._count_step()
            hit = self._eval_exits(m, f.macro)
            if hit is None:
                f.phase = "until"  # come back after the body
                self.emit(BlockEntered(f.macro, "body", (f.macro, "body")))
                self.frames.append(Seq((f.macro, "body")))
            else:
                f.phase = "terminate-done"
                self.emit(BlockEntered(f.macro, "terminate",
                                       (f.macro, "terminate")))
                self.frames.append(Seq((f.macro, "terminate")))
            self._after_step()
            return
        # terminate section finished
        self.frames.pop()

    def _exec_instruction(self, instr, f: Seq):
        path = f.path + (f.idx,)
        if isinstance(instr, Assign):
            self._count_step()
            delta = self.ex.run_assign(instr)
            self.emit(InstructionExecuted(
                path, f"{printer.operand_text(instr.target)} = "
                      f"{printer.expr_text(instr.expr)}", [delta]))
            f.idx += 1
            self._after_step()
            return
        if isinstance(instr, Read):
            if not self.inputs:
                prompt = instr.prompt if instr.prompt is not None else \
                    f"Read {printer.operand_text(instr.target)} "
                self._pause(PAUSE_INPUT, path, prompt)
                return
            self._count_step()
            value = self.inputs.pop(0)
            delta = self.ex.assign(instr.target, value)
            self.emit(InstructionExecuted(
                path, f"Read {printer.operand_text(instr.target)}", [delta]))
            f.idx += 1
            self._after_step()
            return
        if isinstance(instr, Write):
            self._count_step()
            text = self.ex.render_output(instr)
            self.emit(InstructionExecuted(path, "Write", []))
            self.emit(OutputProduced(text))
            f.idx += 1
            self._after_step()
            return
        if isinstance(instr, If):
            self._count_step()
            result = self.ex.eval_condition(instr.cond)
            self.emit(ConditionEvaluated(
                path, None, printer.condition_text(instr.cond), result))
            if result:
                f.idx += 1
                self.emit(BlockEntered(f.path[0], "then", path + ("then",)))
                self.frames.append(Seq(path + ("then",)))
            elif instr.todo:
                self._pause(PAUSE_MISSING_ELSE, path,
                            printer.negated_condition_text(instr.cond))
            elif instr.orelse is not None:
                f.idx += 1
                self.emit(BlockEntered(f.path[0], "else", path + ("else",)))
                self.frames.append(Seq(path + ("else",)))
            else:
                f.idx += 1
            self._after_step()
            return
        if isinstance(instr, CallMacro):
            self._count_step()
            self.emit(InstructionExecuted(path, f"{instr.name}", []))
            f.idx += 1
            try:
                self._push_macro(instr.name, path)
            except EngineError:
                f.idx -= 1
                raise
            if self.state == "paused":
                f.idx -= 1  # empty macro: stay on the call
            return
        raise TypeError(f"not an instruction: {instr!r}")


def run_headless(ws: Workspace, program: Program, entry: str, *,
                 inputs: list | None = None,
                 step_limit: int = DEFAULT_STEP_LIMIT,
                 detail: str = "Detailed",
                 snapshot_every: str | None = None) -> Machine:
    """Run a macro to the end; any pause is an error here.

    This is the CLI path: nobody is around to demonstrate the missing
    branch or type a value, so a pause becomes PausedUnresolved.
    """
    machine = Machine(ws, program, inputs=inputs, step_limit=step_limit,
                      detail=detail, snapshot_every=snapshot_every)
    machine.start_macro(entry)
    machine.run()
    if machine.state == "paused":
        raise PausedUnresolved(
            f"paused on {machine.pause_reason} at "
            f"{'/'.join(str(p) for p in (machine.pause_path or ()))}",
            machine.pause_path)
    if machine.state == "error":
        raise machine.error
    return machine
