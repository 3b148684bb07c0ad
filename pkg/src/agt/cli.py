"""The agt command: replay scripts, run macros, transpile, format.

Exit codes: 0 on success, 1 when the program itself misbehaves at run
time (division by zero, an unresolved pause, a step-limit blowup), 2 when
the input is unusable (unreadable file, syntax error, bad flag value).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import persistence, scripts
from .errors import (
    AgtSyntaxError,
    EngineError,
    MalformedDocument,
    PausedUnresolved,
    ScriptError,
    UnknownDialect,
    UnknownMacro,
    VersionUnsupported,
)
from .interpreter import Machine, PAUSE_INPUT
from .parser import parse_document
from .printer import document_text
from .session import Session
from .transpiler import DIALECTS, FLAVORS, transpile

USAGE_ERRORS = (OSError, ScriptError, AgtSyntaxError, MalformedDocument,
                VersionUnsupported, UnknownDialect)


def _fail(code: int, message: str) -> int:
    print(f"agt: {message}", file=sys.stderr)
    return code


def _read_text(path: str) -> str:
    with open(path, encoding="utf-8") as f:
        return f.read()


def _load_code(path: str):
    """Either an .agt text document or an .agts JSON document."""
    text = _read_text(path)
    if path.endswith(".agts") or text.lstrip().startswith("{"):
        doc = persistence.loads(text)
        return doc.workspace, doc.program
    return parse_document(text)


def _default_seed() -> int:
    raw = os.environ.get("AGT_SEED", "")
    return int(raw, 0) if raw else 0


# --- subcommands ---


def cmd_replay(args) -> int:
    try:
        lines = scripts.parse_script(_read_text(args.script))
        seed = args.seed if args.seed is not None else _default_seed()
    except USAGE_ERRORS as exc:
        return _fail(2, str(exc))
    except ValueError:
        return _fail(2, f"AGT_SEED is not an integer: "
                        f"{os.environ.get('AGT_SEED')!r}")
    session = Session(seed=seed)
    for lineno, action in lines:
        try:
            session.apply(action)
        except EngineError as exc:
            return _fail(1, f"{args.script}:{lineno}: {exc}")
    text = document_text(session.ws, session.program)
    if args.out:
        try:
            persistence.save(persistence.document_of(session), args.out)
        except OSError as exc:
            return _fail(2, str(exc))
    if args.json:
        print(json.dumps({"document": text, "outputs": session.outputs,
                          "workspace": session.ws.to_dict(),
                          "seed": session.seed,
                          "actions": len(session.log)},
                         ensure_ascii=False))
    else:
        sys.stdout.write(text)
    return 0


def _stdin_values():
    """Whitespace-separated integers, pulled only when a Read asks."""
    try:
        for line in sys.stdin:
            for tok in line.split():
                yield int(tok, 0)
    except OSError:
        return  # no usable stdin means no values


def cmd_run(args) -> int:
    try:
        ws, program = _load_code(args.doc)
        if not program.macros:
            return _fail(2, f"{args.doc}: no macros to run")
        entry = args.macro or program.macros[-1].name
    except USAGE_ERRORS as exc:
        return _fail(2, str(exc))
    machine = Machine(ws, program, inputs=list(args.input),
                      step_limit=args.step_limit)
    stdin_values = _stdin_values()
    try:
        machine.start_macro(entry)
        while True:
            machine.run()
            if machine.state == "finished":
                break
            if machine.state == "error":
                raise machine.error
            if machine.pause_reason != PAUSE_INPUT:
                raise PausedUnresolved(
                    f"paused on {machine.pause_reason}; run cannot "
                    f"demonstrate the missing piece", machine.pause_path)
            try:
                machine.inputs.append(next(stdin_values))
            except StopIteration:
                raise PausedUnresolved(
                    "the program wants input and none is left",
                    machine.pause_path) from None
            except ValueError as exc:
                return _fail(2, f"inputs must be integers: {exc}")
            machine.resume()
    except UnknownMacro as exc:
        return _fail(2, str(exc))
    except EngineError as exc:
        return _fail(1, str(exc))
    if args.json:
        print(json.dumps({"outputs": machine.outputs,
                          "workspace": ws.to_dict()}, ensure_ascii=False))
    else:
        for line in machine.outputs:
            print(line)
    return 0


def _transpile_cmd(args, flavor: str) -> int:
    try:
        ws, program = _load_code(args.doc)
        result = transpile(ws, program, args.dialect, flavor,
                           entry=args.entry)
    except (UnknownMacro,) + USAGE_ERRORS as exc:
        return _fail(2, str(exc))
    except EngineError as exc:
        return _fail(1, str(exc))
    if args.json:
        print(json.dumps(result.to_dict(), ensure_ascii=False))
    else:
        sys.stdout.write(result.text)
    return 0


def cmd_transpile(args) -> int:
    return _transpile_cmd(args, args.flavor)


def cmd_export(args) -> int:
    return _transpile_cmd(args, "export")


def cmd_fmt(args) -> int:
    try:
        ws, program = parse_document(_read_text(args.doc))
    except USAGE_ERRORS as exc:
        return _fail(2, str(exc))
    text = document_text(ws, program)
    if args.write:
        try:
            with open(args.doc, "w", encoding="utf-8") as f:
                f.write(text)
        except OSError as exc:
            return _fail(2, str(exc))
    else:
        sys.stdout.write(text)
    return 0


# --- wiring ---


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="agt",
        description="replay gesture scripts, run macros, emit readable "
                    "code")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("replay",
                       help="apply a .actions script to a fresh session")
    p.add_argument("script", help="path to the .actions file")
    p.add_argument("--seed", type=int, default=None,
                   help="session seed (default: $AGT_SEED or 0)")
    p.add_argument("--out", help="also save the session as an .agts file")
    p.add_argument("--json", action="store_true",
                   help="print document, outputs and workspace as JSON")
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("run", help="run a macro from an .agt/.agts document")
    p.add_argument("doc", help="path to the document")
    p.add_argument("--macro", help="macro to run (default: last defined)")
    p.add_argument("--input", action="append", type=int, default=[],
                   metavar="N", help="queue a value for Read (repeatable)")
    p.add_argument("--step-limit", type=int, default=100000)
    p.add_argument("--json", action="store_true",
                   help="print outputs and workspace as JSON")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("transpile", help="emit code in another dialect")
    p.add_argument("doc", help="path to the document")
    p.add_argument("--dialect", choices=DIALECTS, default="python")
    p.add_argument("--flavor", choices=FLAVORS, default="instrumented")
    p.add_argument("--entry", help="entry macro (default: last defined)")
    p.add_argument("--json", action="store_true",
                   help="include the source and condition maps")
    p.set_defaults(func=cmd_transpile)

    p = sub.add_parser("export",
                       help="emit a standalone routine (calls inlined)")
    p.add_argument("doc", help="path to the document")
    p.add_argument("--dialect", choices=DIALECTS, default="python")
    p.add_argument("--entry", help="entry macro (default: last defined)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("fmt", help="print a document in canonical form")
    p.add_argument("doc", help="path to the .agt file")
    p.add_argument("--write", action="store_true",
                   help="rewrite the file in place")
    p.set_defaults(func=cmd_fmt)

    return top


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
