"""Error types shared by the whole engine.

Every failure the engine can signal is an EngineError subclass carrying a
stable ``code`` string (used by the CLI --json output and by tests) and an
optional instruction path into the program tree.
"""

from __future__ import annotations


class EngineError(Exception):
    code = "engine_error"

    def __init__(self, message: str, path: tuple | None = None):
        super().__init__(message)
        self.message = message
        self.path = path

    def to_dict(self) -> dict:
        d = {"error": self.code, "message": self.message}
        if self.path is not None:
            d["path"] = list(self.path)
        return d


# --- workspace ---

class DuplicateName(EngineError):
    code = "duplicate_name"


class InvalidName(EngineError):
    code = "invalid_name"


class UnknownName(EngineError):
    code = "unknown_name"


class ConstantWrite(EngineError):
    code = "constant_write"


class IndexOutOfBounds(EngineError):
    """Raised when dereferencing t[i] while i is outside 0..length-1.

    Carries the array, the index entity (None for a fixed position) and the
    offending value so messages can name the culprit.
    """

    code = "index_out_of_bounds"

    def __init__(self, array: str, index: str | None, value: int, path=None):
        place = f"{array}[{index}]" if index else f"{array}[{value}]"
        detail = f" ({index} = {value})" if index else ""
        super().__init__(f"{place} is out of bounds{detail}", path)
        self.array = array
        self.index = index
        self.value = value


class CharRange(EngineError):
    code = "char_range"


class EntityInUse(EngineError):
    code = "entity_in_use"


# --- arithmetic ---

class DivisionByZero(EngineError):
    code = "division_by_zero"


class Overflow(EngineError):
    code = "overflow"


# --- interpreter ---

class StepLimitExceeded(EngineError):
    code = "step_limit"


class MacroRecursion(EngineError):
    code = "macro_recursion"


class UnknownMacro(EngineError):
    code = "unknown_macro"


class PausedUnresolved(EngineError):
    """A headless run hit a pause nothing can answer (ToDo, empty macro,
    exhausted input queue)."""

    code = "paused_unresolved"


# --- recorder ---

class RecorderStateError(EngineError):
    code = "recorder_state"


class NoPendingComparison(EngineError):
    code = "no_pending_comparison"


class ConditionNotDemonstrated(EngineError):
    """An exit condition or case choice must be true on the current data."""

    code = "condition_not_demonstrated"


class InvalidSweepTarget(EngineError):
    code = "invalid_sweep_target"


class InvalidPath(EngineError):
    code = "invalid_path"


class InvertNonEmptyThen(EngineError):
    code = "invert_non_empty_then"


class EditError(EngineError):
    code = "edit_error"


# --- text formats ---

class AgtSyntaxError(EngineError):
    code = "syntax_error"

    def __init__(self, message: str, line: int, col: int | None = None):
        where = f"line {line}" + (f", col {col}" if col is not None else "")
        super().__init__(f"{where}: {message}")
        self.line = line
        self.col = col


class ScriptError(EngineError):
    code = "script_error"

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class MalformedDocument(EngineError):
    code = "malformed_document"


class VersionUnsupported(EngineError):
    code = "version_unsupported"


class UnknownDialect(EngineError):
    code = "unknown_dialect"
