"""Build programs by manipulating the data they work on.

The pieces: a workspace of named integers and arrays, a recorder that
turns manipulations into instructions, an interpreter that replays them
(and pauses on branches nobody has demonstrated yet), a transpiler to
readable code, and a session that ties the dual effect together.
"""

from .errors import EngineError
from .interpreter import Machine, run_headless
from .nodes import Program
from .parser import parse_document, parse_macro, parse_program
from .persistence import SessionDocument, document_of, restore_session
from .printer import document_text, macro_text, program_text
from .scripts import format_script, parse_script
from .session import Session
from .transpiler import TranspileResult, negate_until, transpile
from .workspace import Workspace

__all__ = [
    "EngineError", "Machine", "Program", "Session", "SessionDocument",
    "TranspileResult", "Workspace", "document_of", "document_text",
    "format_script", "macro_text", "parse_document", "parse_macro",
    "negate_until", "parse_program", "parse_script", "program_text",
    "restore_session", "run_headless", "transpile",
]
