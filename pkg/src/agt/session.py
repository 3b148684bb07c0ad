"""A construction session: one workspace, one program, one action log.

Every state change goes through apply(), which checkpoints first and rolls
everything back if the action fails, so an action either happens completely
or not at all. The log of applied actions plus the seed reproduces the
session exactly.

Gestures have their dual effect here: the session executes the equivalent
instruction against the workspace, then offers it to the recorder, which
inserts it wherever the cursor currently points (or nowhere).
"""

from __future__ import annotations

import copy

from . import recorder as rec
from .errors import (
    ConditionNotDemonstrated,
    DuplicateName,
    EngineError,
    InvalidPath,
    InvalidSweepTarget,
    PausedUnresolved,
    RecorderStateError,
    UnknownMacro,
)
from .interpreter import (
    Executor,
    Machine,
    PAUSE_INPUT,
    DEFAULT_STEP_LIMIT,
)
from .nodes import (
    Assign, BinOp, CallMacro, Condition, Lit, MacroLoop, MacroSimple,
    Program, Read, Var, Write, get_container,
)
from .parser import Parser
from .printer import condition_text, operand_text
from .relations import true_relations
from .workspace import Variable, Workspace


class Session:
    def __init__(self, seed: int = 0, step_limit: int = DEFAULT_STEP_LIMIT):
        self.seed = seed
        self.step_limit = step_limit
        self.ws = Workspace()
        self.program = Program()
        self.recorder = rec.Recorder(self.program)
        self.executor = Executor(self.ws)
        self.input_queue: list[int] = []
        self.outputs: list[str] = []
        self.log: list[dict] = []
        self.undo_stack: list[dict] = []
        self.machine_stack: list[Machine] = []
        self.draws = 0  # random values consumed for array fills
        self.last_menu: list[str] | None = None  # relations shown by compare

    # --- checkpointing ---

    def _snapshot(self) -> dict:
        return {
            "ws": self.ws.to_dict(),
            "macros": copy.deepcopy(self.program.macros),
            "recorder": self.recorder.save_state(),
            "inputs": list(self.input_queue),
            "outputs_len": len(self.outputs),
            "log_len": len(self.log),
            "draws": self.draws,
            "seed": self.seed,
            "menu": list(self.last_menu) if self.last_menu else None,
            "machines": [(m, m.save_state()) for m in self.machine_stack],
        }

    def _restore(self, snap: dict):
        self.ws.restore_dict(snap["ws"])
        self.program.macros[:] = snap["macros"]
        self.recorder.restore_state(snap["recorder"])
        self.input_queue[:] = snap["inputs"]
        del self.outputs[snap["outputs_len"]:]
        del self.log[snap["log_len"]:]
        self.draws = snap["draws"]
        self.seed = snap["seed"]
        self.last_menu = snap["menu"]
        self.machine_stack[:] = [m for m, _ in snap["machines"]]
        for m, state in snap["machines"]:
            m.restore_state(state)

    def apply(self, action: dict):
        """Apply one action atomically; failures leave no trace."""
        op = action.get("op")
        if op == "undo":
            self._undo()
            return
        snap = self._snapshot()
        try:
            self._dispatch(action)
        except EngineError:
            self._restore(snap)
            raise
        self.undo_stack.append(snap)
        self.log.append(dict(action))

    def _undo(self):
        if self.machine_stack:
            raise RecorderStateError("cannot undo while a run is paused")
        if not self.undo_stack:
            raise RecorderStateError("nothing to undo")
        self._restore(self.undo_stack.pop())

    # --- dispatch ---

    def _dispatch(self, action: dict):
        op = action.get("op")
        handler = getattr(self, f"_op_{op}", None) if op else None
        if handler is None:
            raise EngineError(f"unknown action {op!r}")
        handler(action)

    # declarations and bookkeeping

    def _op_seed(self, a):
        self.seed = int(a["value"])

    def _op_input(self, a):
        self.input_queue.append(int(a["value"]))

    def _op_literal(self, a):
        self.ws.touch_literal(int(a["value"]))

    def _op_var(self, a):
        self.ws.declare_variable(a["name"], a.get("type", "int"),
                                 bool(a.get("constant", False)),
                                 a.get("value"))

    def _op_array(self, a):
        values = a.get("values")
        length = a.get("length")
        if values is not None:
            self.ws.declare_array(a["name"], length, a.get("type", "int"),
                                  [int(v) for v in values])
        else:
            arr = self.ws.declare_array(a["name"], length,
                                        a.get("type", "int"), None,
                                        seed=self.seed,
                                        draw_offset=self.draws)
            self.draws += len(arr.cells)

    def _op_index(self, a):
        self.ws.declare_index(a["name"], a["array"])

    def _op_macro(self, a):
        name = a["name"]
        if self.program.macro(name) is not None:
            raise DuplicateName(f"macro {name!r} already exists")
        if name in self.ws.entities:
            raise DuplicateName(f"{name!r} already names an entity")
        kind = a.get("kind", "simple")
        if kind == "simple":
            self.program.macros.append(MacroSimple(name))
        elif kind == "loop":
            self.program.macros.append(MacroLoop(name))
        else:
            raise EngineError(f"unknown macro kind {kind!r}")

    def _op_comment(self, a):
        m = self.program.macro(a["macro"])
        if m is None:
            raise UnknownMacro(f"no macro named {a['macro']!r}")
        m.comment = a["text"] or None

    # recording control

    def _op_record(self, a):
        self._require_quiet("record")
        self.recorder.start(a["macro"], a.get("section"))

    def _op_stop(self, a):
        self.recorder.stop()

    def _op_select(self, a):
        container, index = self._resolve_selection(a)
        self.recorder.select(container, index)

    def _op_end_case(self, a):
        outcome = self.recorder.end_case()
        if outcome == "resume":
            if not self.machine_stack:
                raise RecorderStateError("no paused run to resume")
            machine = self.machine_stack[-1]
            machine.resume()
            self._drive(machine, in_stack=True)

    # gestures

    def _op_drag(self, a):
        src = self._operand(a["src"])
        dst = self._lvalue(a["dst"])
        if isinstance(src, Lit):
            self.ws.touch_literal(src.value)
        self._gesture_assign(Assign(dst, src))

    def _op_apply(self, a):
        expr = BinOp(a["operator"], self._operand(a["left"]),
                     self._operand(a["right"]))
        self._gesture_assign(Assign(self._lvalue(a["dst"]), expr))

    def _op_inc(self, a):
        self._sweep(a["target"], "+")

    def _op_dec(self, a):
        self._sweep(a["target"], "-")

    def _sweep(self, target_text: str, op: str):
        target = self._lvalue(target_text)
        if isinstance(target, Var):
            ent = self.ws.get(target.name)
            if isinstance(ent, Variable) and ent.constant:
                raise InvalidSweepTarget(
                    f"{target.name!r} is a constant")
        self._gesture_assign(Assign(target, BinOp(op, target, Lit(1))))

    def _gesture_assign(self, instr: Assign):
        self.executor.run_assign(instr)
        self.recorder.record_or_pass(instr)

    def _op_read(self, a):
        target = self._lvalue(a["target"])
        prompt = a.get("prompt")
        if prompt is None:
            prompt = f"Read {operand_text(target)} "
        if not self.input_queue:
            raise PausedUnresolved("a value is needed for Read and none"
                                   " is queued")
        value = self.input_queue.pop(0)
        self.executor.assign(target, value)
        self.recorder.record_or_pass(Read(target, prompt))

    def _op_write(self, a):
        operand = self._operand(a["operand"]) if a.get("operand") else None
        prompt = a.get("prompt")
        if prompt is None:
            if operand is None:
                raise EngineError("write needs a message or a value")
            prompt = f"Valeur de {operand_text(operand)} "
        instr = Write(prompt, operand)
        self.outputs.append(self.executor.render_output(instr))
        self.recorder.record_or_pass(instr)

    def _op_call(self, a):
        name = a["name"]
        if self.program.macro(name) is None:
            raise UnknownMacro(f"no macro named {name!r}")
        self.recorder.record_or_pass(CallMacro(name))
        machine = self._new_machine()
        machine.start_macro(name)
        self._drive(machine)

    # comparison protocol

    def _op_compare(self, a):
        left = self._operand(a["left"])
        right = self._operand(a["right"])
        lv = self.executor.eval_operand(left)
        rv = self.executor.eval_operand(right)
        self.recorder.set_pending(left, right)
        self.last_menu = true_relations(lv, rv)

    def _op_choose(self, a):
        rel = a["rel"]
        left, right = self.recorder.take_pending()
        cond = Condition(left, rel, right)
        if not self.executor.eval_condition(cond):
            raise ConditionNotDemonstrated(
                f"{condition_text(cond)} does not hold on the current"
                " values")
        self.last_menu = None
        if self.recorder.mode == "recording" and \
                self.recorder.exits_macro is not None:
            self.recorder.add_exit_condition(cond)
        else:
            self.recorder.open_if(cond)

    # execution

    def _op_exec(self, a):
        self._require_quiet("exec")
        machine = self._new_machine()
        macro = self.program.macro(a["macro"])
        if macro is None:
            raise UnknownMacro(f"no macro named {a['macro']!r}")
        section = a.get("section")
        if section is None:
            machine.start_macro(a["macro"])
        else:
            machine.start_block(a["macro"],
                                rec.normalize_section(macro, section))
        self._drive(machine)

    def _new_machine(self) -> Machine:
        m = Machine(self.ws, self.program, step_limit=self.step_limit)
        m._outputs_synced = 0
        return m

    def _require_quiet(self, what: str):
        if self.machine_stack:
            raise RecorderStateError(
                f"cannot {what} while a run is paused")

    def _sync_outputs(self, machine: Machine):
        seen = getattr(machine, "_outputs_synced", 0)
        self.outputs.extend(machine.outputs[seen:])
        machine._outputs_synced = len(machine.outputs)

    def _drive(self, machine: Machine, in_stack: bool = False):
        """Run until the machine finishes, errors, or needs the user."""
        while True:
            machine.run()
            self._sync_outputs(machine)
            if machine.state == "finished":
                if in_stack:
                    self.machine_stack.pop()
                return
            if machine.state == "error":
                if in_stack:
                    self.machine_stack.pop()
                raise machine.error
            reason = machine.pause_reason
            if reason == PAUSE_INPUT:
                if self.input_queue:
                    machine.inputs.append(self.input_queue.pop(0))
                    machine.resume()
                    continue
                if in_stack:
                    self.machine_stack.pop()
                raise PausedUnresolved(
                    f"run wants input ({machine.pause_prompt!r}) and none"
                    " is queued", machine.pause_path)
            # MissingElse or EmptyMacro: hand over to the recorder
            if not in_stack:
                self.machine_stack.append(machine)
            self.recorder.enter_completion(reason, machine.pause_path)
            return

    # structure edits

    def _op_delete(self, a):
        self._require_edit()
        container, index = self._resolve_selection(a)
        if index is None:
            raise EngineError("delete needs an instruction, not a block")
        rec.delete_instruction(self.program, container + (index,))

    def _op_add_else(self, a):
        self._require_edit()
        rec.add_else(self.program, self._instruction_path(a))

    def _op_remove_else(self, a):
        self._require_edit()
        rec.remove_else(self.program, self._instruction_path(a))

    def _op_invert(self, a):
        self._require_edit()
        rec.invert_conditional(self.program, self._instruction_path(a))

    def _require_edit(self):
        if self.recorder.mode != "off":
            raise RecorderStateError("stop recording before editing")
        self._require_quiet("edit")

    def _instruction_path(self, a) -> tuple:
        container, index = self._resolve_selection(a)
        if index is None:
            raise EngineError("this edit needs an instruction position")
        return container + (index,)

    # --- path and operand helpers ---

    def _resolve_selection(self, a) -> tuple[tuple, int | None]:
        """(container, index) from macro/section/path fields.

        The path alternates instruction indices and branch words; a path
        ending on an index selects that instruction, one ending on a
        branch word (or empty) selects the end of that statement list.
        """
        name = a["macro"]
        macro = self.program.macro(name)
        if macro is None:
            raise UnknownMacro(f"no macro named {name!r}")
        section = rec.normalize_section(macro, a.get("section") or "body")
        if section == "exits":
            raise EngineError("exit conditions have no instruction paths")
        container: tuple = (name, section)
        index: int | None = None
        for part in a.get("path", []):
            if index is not None:
                container = container + (index, str(part))
                index = None
            else:
                try:
                    index = int(part)
                except (TypeError, ValueError):
                    raise InvalidPath(
                        f"expected an instruction index, got {part!r}"
                    ) from None
        # validate
        get_container(self.program, container)
        return container, index

    def _operand(self, text: str):
        p = Parser(str(text))
        op = p.parse_operand()
        if not p.at("eof"):
            p.fail("trailing text after operand")
        return op

    def _lvalue(self, text: str):
        p = Parser(str(text))
        lv = p.parse_lvalue()
        if not p.at("eof"):
            p.fail("trailing text after target")
        return lv
