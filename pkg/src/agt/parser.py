"""Lexer and recursive-descent parser for program text.

A document is declarations followed by macro definitions (interleaving is
tolerated). Blocks are keyword-delimited, so the parser never looks at
indentation; newlines matter only to comments.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AgtSyntaxError
from .nodes import (
    Assign, BinOp, CallMacro, CellAt, CellVia, Comment, Condition, If,
    KEYWORDS, Length, Lit, MacroLoop, MacroSimple, Program, Read, Var, Write,
)
from .relations import RELATIONS
from .workspace import Workspace

SYMBOLS = ("<=", ">=", "==", "!=", "<", ">", "=", "+", "-", "*", "/", "%",
           ";", ",", ".", "[", "]", "{", "}", "(", ")")

TODO_MARK = "TO DO"


@dataclass
class Token:
    kind: str  # name, kw, int, string, sym, comment, eof
    value: str
    line: int
    col: int


def lex(text: str, keep_comments: bool = True) -> list[Token]:
    toks = []
    i, line, bol = 0, 1, 0
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            i += 1
            bol = i
            continue
        if c in " \t\r":
            i += 1
            continue
        col = i - bol + 1
        if text.startswith("//", i):
            j = text.find("\n", i)
            j = n if j == -1 else j
            if keep_comments:
                toks.append(Token("comment", text[i + 2:j].strip(), line, col))
            i = j
            continue
        if c == '"':
            j = text.find('"', i + 1)
            if j == -1:
                raise AgtSyntaxError("unterminated string", line, col)
            toks.append(Token("string", text[i + 1:j], line, col))
            i = j + 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(Token("int", text[i:j], line, col))
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            toks.append(Token("kw" if word in KEYWORDS else "name",
                              word, line, col))
            i = j
            continue
        for sym in SYMBOLS:
            if text.startswith(sym, i):
                toks.append(Token("sym", sym, line, col))
                i += len(sym)
                break
        else:
            raise AgtSyntaxError(f"stray character {c!r}", line, col)
    toks.append(Token("eof", "", line, 1))
    return toks


def significant_tokens(text: str) -> list[tuple[str, str]]:
    """(kind, value) pairs with comments stripped.

    Two program texts that agree on this list are the same program.
    """
    return [(t.kind, t.value) for t in lex(text, keep_comments=False)
            if t.kind != "eof"]


class Parser:
    def __init__(self, text: str):
        self.toks = lex(text)
        self.pos = 0

    # --- plumbing ---

    def peek(self) -> Token:
        return self.toks[self.pos]

    def next(self) -> Token:
        t = self.toks[self.pos]
        if t.kind != "eof":
            self.pos += 1
        return t

    def fail(self, msg: str, tok: Token | None = None):
        tok = tok or self.peek()
        raise AgtSyntaxError(msg, tok.line, tok.col)

    def expect(self, kind: str, value: str | None = None) -> Token:
        t = self.peek()
        if t.kind != kind or (value is not None and t.value != value):
            want = value or kind
            self.fail(f"expected {want!r}, got {t.value or t.kind!r}")
        return self.next()

    def at(self, kind: str, value: str | None = None) -> bool:
        t = self.peek()
        return t.kind == kind and (value is None or t.value == value)

    def at_kw(self, *words: str) -> bool:
        t = self.peek()
        return t.kind == "kw" and t.value in words

    def skip_comments(self) -> list[str]:
        out = []
        while self.at("comment"):
            out.append(self.next().value)
        return out

    # --- document ---

    def parse_document(self) -> tuple[Workspace, Program]:
        ws = Workspace()
        prog = Program()
        while True:
            self.skip_comments()  # free-floating comments are dropped
            t = self.peek()
            if t.kind == "eof":
                break
            if t.kind == "kw" and t.value in ("int", "char", "const", "index"):
                self.parse_declaration(ws)
            elif t.kind == "kw" and t.value == "Define":
                prog.macros.append(self.parse_macro())
            else:
                self.fail(f"expected a declaration or Define,"
                          f" got {t.value!r}")
        return ws, prog

    def parse_declaration(self, ws: Workspace):
        t = self.next()
        constant = False
        if t.value == "const":
            constant = True
            t = self.next()
            if t.kind != "kw" or t.value not in ("int", "char"):
                self.fail("expected int or char after const", t)
        if t.value == "index":
            name = self.expect("name").value
            self.expect("kw", "of")
            arr = self.expect("name").value
            self.expect("sym", ";")
            ws.declare_index(name, arr)
            return
        type_ = t.value
        name = self.expect("name").value
        if self.at("sym", "["):
            self.next()
            length = self.parse_int_literal()
            self.expect("sym", "]")
            values = None
            if self.at("sym", "="):
                self.next()
                self.expect("sym", "{")
                values = [self.parse_int_literal()]
                while self.at("sym", ","):
                    self.next()
                    values.append(self.parse_int_literal())
                self.expect("sym", "}")
            self.expect("sym", ";")
            if values is None:
                fill = 63 if type_ == "char" else 0
                values = [fill] * length
            ws.declare_array(name, length, type_, values)
            return
        value = None
        if self.at("sym", "="):
            self.next()
            value = self.parse_int_literal()
        elif constant:
            self.fail(f"constant {name} needs a value")
        self.expect("sym", ";")
        ws.declare_variable(name, type_, constant, value)

    def parse_int_literal(self) -> int:
        neg = False
        if self.at("sym", "-"):
            self.next()
            neg = True
        t = self.expect("int")
        v = int(t.value)
        return -v if neg else v

    # --- macros ---

    def parse_macro(self):
        self.expect("kw", "Define")
        name = self.expect("name").value
        comments = self.skip_comments()
        comment = "\n".join(comments) if comments else None
        if self.at_kw("Do"):
            self.next()
            body = self.parse_statements(("End",))
            self.expect("kw", "End")
            return MacroSimple(name, body, comment)
        self.expect("kw", "From")
        init = self.parse_statements(("Until",))
        self.expect("kw", "Until")
        exits = self.parse_conditions()
        self.expect("kw", "Loop")
        body = self.parse_statements(("Terminate",))
        self.expect("kw", "Terminate")
        terminate = self.parse_statements(("End",))
        self.expect("kw", "End")
        return MacroLoop(name, init, exits, body, terminate, comment)

    def parse_conditions(self) -> list[Condition]:
        conds = []
        while True:
            self.skip_comments()
            if self.at_kw("Loop") or self.at("eof"):
                return conds
            conds.append(self.parse_condition())

    def parse_condition(self) -> Condition:
        left = self.parse_operand()
        t = self.peek()
        if not (t.kind == "sym" and t.value in RELATIONS):
            self.fail(f"expected a comparison, got {t.value!r}")
        self.next()
        right = self.parse_operand()
        return Condition(left, t.value, right)

    # --- statements ---

    def parse_statements(self, stop: tuple) -> list:
        out = []
        while True:
            t = self.peek()
            if t.kind == "eof" or (t.kind == "kw" and t.value in stop) \
                    or (t.kind == "sym" and t.value == "}"):
                return out
            out.append(self.parse_statement())

    def parse_statement(self):
        t = self.peek()
        if t.kind == "comment":
            return Comment(self.next().value)
        if t.kind == "kw":
            if t.value == "Read":
                return self.parse_read()
            if t.value == "Write":
                return self.parse_write()
            if t.value == "if":
                return self.parse_if()
            self.fail(f"unexpected {t.value!r} in a statement")
        if t.kind != "name":
            self.fail(f"unexpected {t.value or t.kind!r} in a statement")
        if self.toks[self.pos + 1].kind == "sym" and \
                self.toks[self.pos + 1].value == ";":
            name = self.next().value
            self.next()
            return CallMacro(name)
        target = self.parse_lvalue()
        self.expect("sym", "=")
        expr = self.parse_expr()
        self.expect("sym", ";")
        return Assign(target, expr)

    def parse_read(self) -> Read:
        self.expect("kw", "Read")
        prompt = self.next().value if self.at("string") else None
        target = self.parse_lvalue()
        self.expect("sym", ";")
        return Read(target, prompt)

    def parse_write(self) -> Write:
        self.expect("kw", "Write")
        prompt = self.next().value if self.at("string") else None
        operand = None
        if not self.at("sym", ";"):
            operand = self.parse_operand()
        self.expect("sym", ";")
        if prompt is None and operand is None:
            self.fail("Write needs a message or a value")
        return Write(prompt, operand)

    def parse_if(self) -> If:
        self.expect("kw", "if")
        self.expect("sym", "(")
        cond = self.parse_condition()
        self.expect("sym", ")")
        self.expect("sym", "{")
        then = self.parse_statements(())
        self.expect("sym", "}")
        if not self.at_kw("else"):
            return If(cond, then, None, False)
        self.next()
        self.expect("sym", "{")
        orelse = self.parse_statements(())
        self.expect("sym", "}")
        todo = any(isinstance(s, Comment) and s.text == TODO_MARK
                   for s in orelse)
        if todo:
            # the pending branch holds only generated comments; drop them
            return If(cond, then, [], True)
        return If(cond, then, orelse, False)

    # --- operands and expressions ---

    def parse_lvalue(self):
        name = self.expect("name").value
        if self.at("sym", "["):
            self.next()
            t = self.peek()
            if t.kind == "int" or (t.kind == "sym" and t.value == "-"):
                pos = self.parse_int_literal()
                self.expect("sym", "]")
                return CellAt(name, pos)
            index = self.expect("name").value
            self.expect("sym", "]")
            return CellVia(name, index)
        return Var(name)

    def parse_operand(self):
        t = self.peek()
        if t.kind == "int" or (t.kind == "sym" and t.value == "-"):
            return Lit(self.parse_int_literal())
        if t.kind != "name":
            self.fail(f"expected a value, got {t.value or t.kind!r}")
        name = self.next().value
        if self.at("sym", "."):
            self.next()
            attr = self.expect("name")
            if attr.value != "length":
                self.fail(f"unknown attribute {attr.value!r}", attr)
            return Length(name)
        if self.at("sym", "["):
            self.next()
            t = self.peek()
            if t.kind == "int" or (t.kind == "sym" and t.value == "-"):
                pos = self.parse_int_literal()
                self.expect("sym", "]")
                return CellAt(name, pos)
            index = self.expect("name").value
            self.expect("sym", "]")
            return CellVia(name, index)
        return Var(name)

    def parse_expr(self):
        left = self.parse_operand()
        t = self.peek()
        if t.kind == "sym" and t.value in ("+", "-", "*", "/", "%"):
            self.next()
            right = self.parse_operand()
            return BinOp(t.value, left, right)
        return left


def parse_document(text: str) -> tuple[Workspace, Program]:
    return Parser(text).parse_document()


def parse_program(text: str) -> Program:
    """Macros only; any declarations in the text are applied and dropped."""
    return Parser(text).parse_document()[1]


def parse_macro(text: str):
    p = Parser(text)
    m = p.parse_macro()
    p.skip_comments()
    if not p.at("eof"):
        p.fail("trailing text after End")
    return m
