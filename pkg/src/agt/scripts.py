"""Text form of session actions (.actions files).

One action per line. Tokens are space-separated; double quotes group a
string (prompts, comments); a # at a token boundary starts a comment.
Each line maps to one flat dict, the same shape the session log and the
saved session document use. parse and format are inverses on canonical
lines.
"""

from __future__ import annotations

from .errors import ScriptError
from .nodes import BINARY_OPS
from .relations import RELATIONS

SECTION_WORDS = ("do", "body", "from", "init", "until", "exits", "loop",
                 "terminate")


def _tokens(line: str, lineno: int) -> list[tuple[bool, str]]:
    """(is_string, text) pairs."""
    out = []
    i, n = 0, len(line)
    while i < n:
        c = line[i]
        if c in " \t":
            i += 1
            continue
        if c == "#":
            break
        if c == '"':
            j = line.find('"', i + 1)
            if j == -1:
                raise ScriptError("unterminated string", lineno)
            out.append((True, line[i + 1:j]))
            i = j + 1
            continue
        j = i
        while j < n and line[j] not in " \t":
            j += 1
        out.append((False, line[i:j]))
        i = j
    return out


def _int(tok: tuple[bool, str], lineno: int) -> int:
    is_str, text = tok
    try:
        if is_str:
            raise ValueError
        return int(text)
    except ValueError:
        raise ScriptError(f"expected a number, got {text!r}",
                          lineno) from None


def _word(tok: tuple[bool, str], lineno: int, what: str = "a word") -> str:
    is_str, text = tok
    if is_str:
        raise ScriptError(f"expected {what}, got a string", lineno)
    return text


def _path(tokens, lineno) -> list:
    path = []
    for tok in tokens:
        word = _word(tok, lineno, "a path element")
        path.append(int(word) if word.lstrip("-").isdigit() else word)
    return path


def parse_action_line(line: str, lineno: int = 0) -> dict | None:
    """One line to one action dict; None for blank and comment lines."""
    toks = _tokens(line, lineno)
    if not toks:
        return None
    op = _word(toks[0], lineno, "an action")
    args = toks[1:]

    def need(n):
        if len(args) != n:
            raise ScriptError(f"{op} takes {n} argument(s)", lineno)

    if op in ("seed", "input", "literal"):
        need(1)
        return {"op": op, "value": _int(args[0], lineno)}
    if op == "var" or op == "const":
        if len(args) < 2:
            raise ScriptError(f"{op} takes a type and a name", lineno)
        type_ = _word(args[0], lineno)
        if type_ not in ("int", "char"):
            raise ScriptError(f"unknown type {type_!r}", lineno)
        a = {"op": "var", "type": type_, "name": _word(args[1], lineno),
             "constant": op == "const"}
        rest = args[2:]
        if rest:
            if _word(rest[0], lineno) != "=" or len(rest) != 2:
                raise ScriptError(f"bad {op} initializer", lineno)
            a["value"] = _int(rest[1], lineno)
        elif op == "const":
            raise ScriptError("const needs a value", lineno)
        return a
    if op == "array":
        if len(args) < 2:
            raise ScriptError("array takes a type and a name", lineno)
        type_ = _word(args[0], lineno)
        if type_ not in ("int", "char"):
            raise ScriptError(f"unknown type {type_!r}", lineno)
        a = {"op": "array", "type": type_, "name": _word(args[1], lineno)}
        rest = args[2:]
        if rest:
            a["length"] = _int(rest[0], lineno)
            rest = rest[1:]
        if rest:
            if _word(rest[0], lineno) != "=":
                raise ScriptError("expected = before array values", lineno)
            a["values"] = [_int(t, lineno) for t in rest[1:]]
        return a
    if op == "index":
        if len(args) == 3 and _word(args[1], lineno) == "of":
            return {"op": "index", "name": _word(args[0], lineno),
                    "array": _word(args[2], lineno)}
        raise ScriptError("index takes: index NAME of ARRAY", lineno)
    if op == "macro":
        need(2)
        kind = _word(args[0], lineno)
        if kind not in ("simple", "loop"):
            raise ScriptError(f"unknown macro kind {kind!r}", lineno)
        return {"op": "macro", "kind": kind,
                "name": _word(args[1], lineno)}
    if op == "comment":
        need(2)
        if not args[1][0]:
            raise ScriptError("comment text must be quoted", lineno)
        return {"op": "comment", "macro": _word(args[0], lineno),
                "text": args[1][1]}
    if op == "record":
        if len(args) not in (1, 2):
            raise ScriptError("record takes a macro and optional section",
                              lineno)
        a = {"op": "record", "macro": _word(args[0], lineno)}
        if len(args) == 2:
            a["section"] = _section(args[1], lineno)
        return a
    if op == "stop":
        need(0)
        return {"op": "stop"}
    if op in ("select", "delete", "add-else", "remove-else", "invert"):
        if len(args) < 2:
            raise ScriptError(f"{op} takes a macro and a section", lineno)
        return {"op": op.replace("-", "_"),
                "macro": _word(args[0], lineno),
                "section": _section(args[1], lineno),
                "path": _path(args[2:], lineno)}
    if op == "drag":
        need(2)
        return {"op": "drag", "src": _word(args[0], lineno),
                "dst": _word(args[1], lineno)}
    if op == "apply":
        need(4)
        operator = _word(args[0], lineno)
        if operator not in BINARY_OPS:
            raise ScriptError(f"unknown operator {operator!r}", lineno)
        return {"op": "apply", "operator": operator,
                "left": _word(args[1], lineno),
                "right": _word(args[2], lineno),
                "dst": _word(args[3], lineno)}
    if op in ("inc", "dec"):
        need(1)
        return {"op": op, "target": _word(args[0], lineno)}
    if op == "read":
        if len(args) == 1:
            return {"op": "read", "target": _word(args[0], lineno)}
        need(2)
        if not args[0][0]:
            raise ScriptError("read prompt must be quoted", lineno)
        return {"op": "read", "prompt": args[0][1],
                "target": _word(args[1], lineno)}
    if op == "write":
        if len(args) == 1:
            if args[0][0]:
                return {"op": "write", "prompt": args[0][1]}
            return {"op": "write", "operand": args[0][1]}
        need(2)
        if not args[0][0]:
            raise ScriptError("write message must be quoted", lineno)
        return {"op": "write", "prompt": args[0][1],
                "operand": _word(args[1], lineno)}
    if op == "compare":
        need(2)
        return {"op": "compare", "left": _word(args[0], lineno),
                "right": _word(args[1], lineno)}
    if op == "choose":
        need(1)
        rel = _word(args[0], lineno)
        if rel not in RELATIONS:
            raise ScriptError(f"unknown relation {rel!r}", lineno)
        return {"op": "choose", "rel": rel}
    if op == "call":
        need(1)
        return {"op": "call", "name": _word(args[0], lineno)}
    if op == "exec":
        if len(args) not in (1, 2):
            raise ScriptError("exec takes a macro and optional section",
                              lineno)
        a = {"op": "exec", "macro": _word(args[0], lineno)}
        if len(args) == 2:
            a["section"] = _section(args[1], lineno)
        return a
    if op == "end-case":
        need(0)
        return {"op": "end_case"}
    if op == "undo":
        need(0)
        return {"op": "undo"}
    raise ScriptError(f"unknown action {op!r}", lineno)


def _section(tok, lineno) -> str:
    word = _word(tok, lineno, "a section")
    if word.lower() not in SECTION_WORDS:
        raise ScriptError(f"unknown section {word!r}", lineno)
    return word.lower()


def parse_script(text: str) -> list[tuple[int, dict]]:
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        action = parse_action_line(line, lineno)
        if action is not None:
            out.append((lineno, action))
    return out


def format_action(a: dict) -> str:
    """Canonical script line for one action dict."""
    op = a["op"]
    if op in ("seed", "input", "literal"):
        return f"{op} {a['value']}"
    if op == "var":
        head = "const" if a.get("constant") else "var"
        line = f"{head} {a.get('type', 'int')} {a['name']}"
        if a.get("value") is not None:
            line += f" = {a['value']}"
        return line
    if op == "array":
        line = f"array {a.get('type', 'int')} {a['name']}"
        if a.get("length") is not None:
            line += f" {a['length']}"
        if a.get("values") is not None:
            line += " = " + " ".join(str(v) for v in a["values"])
        return line
    if op == "index":
        return f"index {a['name']} of {a['array']}"
    if op == "macro":
        return f"macro {a.get('kind', 'simple')} {a['name']}"
    if op == "comment":
        return f'comment {a["macro"]} "{a["text"]}"'
    if op in ("record", "exec"):
        line = f"{op} {a['macro']}"
        if a.get("section"):
            line += f" {a['section']}"
        return line
    if op in ("select", "delete", "add_else", "remove_else", "invert"):
        parts = [op.replace("_", "-"), a["macro"], a["section"]]
        parts += [str(p) for p in a.get("path", [])]
        return " ".join(parts)
    if op == "drag":
        return f"drag {a['src']} {a['dst']}"
    if op == "apply":
        return (f"apply {a['operator']} {a['left']} {a['right']}"
                f" {a['dst']}")
    if op in ("inc", "dec"):
        return f"{op} {a['target']}"
    if op == "read":
        if a.get("prompt") is not None:
            return f'read "{a["prompt"]}" {a["target"]}'
        return f"read {a['target']}"
    if op == "write":
        parts = ["write"]
        if a.get("prompt") is not None:
            parts.append(f'"{a["prompt"]}"')
        if a.get("operand") is not None:
            parts.append(a["operand"])
        return " ".join(parts)
    if op == "compare":
        return f"compare {a['left']} {a['right']}"
    if op == "choose":
        return f"choose {a['rel']}"
    if op == "call":
        return f"call {a['name']}"
    if op == "end_case":
        return "end-case"
    if op in ("stop", "undo"):
        return op
    raise ScriptError(f"cannot format action {op!r}", 0)


def format_script(actions: list[dict]) -> str:
    return "\n".join(format_action(a) for a in actions) + "\n"
