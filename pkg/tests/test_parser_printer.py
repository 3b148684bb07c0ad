"""Round trips between program text and the tree.

Pattern for every case: parse, print, parse again. The second parse must
give an equal tree and the second print identical text (printing is a
fixed point).
"""

import pytest

from agt import parser, printer
from agt.errors import AgtSyntaxError
from agt.nodes import (
    Assign, CallMacro, CellVia, Comment, Condition, If, Length, Lit,
    MacroLoop, MacroSimple, Read, Var, Write,
)

INSERE_ELT = """\
Define InsereElt
    From
        k = i ;
        j = i - 1 ;
    Until
        j < 0
        t[j] <= t[k]
    Loop
        tmp = t[k] ;
        t[k] = t[j] ;
        t[j] = tmp ;
        j = j - 1 ;
        k = k - 1 ;
    Terminate
End
"""

ROUND_TRIPS = [
    INSERE_ELT,
    # simple macro with conditional and calls
    """\
Define Parite
    Do
        Read "Valeur de n " n ;
        r = n % 2 ;
        if (r == 0) {
            Write "n est pair " ;
        } else {
            Write "n est impair " ;
        }
End
""",
    # pending else prints its two generated comment lines
    """\
Define Ajuste
    Do
        if (v <= 0) {
            v = v + 1 ;
        } else {
            // v > 0
            // TO DO
        }
End
""",
    # macro comment, call, fixed cells, length, message-only write
    """\
Define Tri
    // Effectue le tri par insertion
    From
        i = 1 ;
    Until
        i >= t.length
    Loop
        InsereElt ;
        i = i + 1 ;
    Terminate
        Write "fini " ;
        t[0] = -1 ;
End
""",
]


@pytest.mark.parametrize("text", ROUND_TRIPS)
def test_print_is_fixed_point(text):
    m1 = parser.parse_macro(text)
    out1 = printer.macro_text(m1)
    assert out1 == text
    m2 = parser.parse_macro(out1)
    assert m2 == m1
    assert printer.macro_text(m2) == out1


def test_parsed_shapes():
    m = parser.parse_macro(INSERE_ELT)
    assert isinstance(m, MacroLoop)
    assert m.name == "InsereElt"
    assert m.init == [
        Assign(Var("k"), Var("i")),
        Assign(Var("j"), parser.Parser("i - 1").parse_expr()),
    ]
    assert m.exits == [
        Condition(Var("j"), "<", Lit(0)),
        Condition(CellVia("t", "j"), "<=", CellVia("t", "k")),
    ]
    assert len(m.body) == 5
    assert m.terminate == []


def test_simple_macro_shape():
    m = parser.parse_macro(ROUND_TRIPS[1])
    assert isinstance(m, MacroSimple)
    read, assign, branch = m.body
    assert read == Read(Var("n"), "Valeur de n ")
    assert isinstance(assign, Assign)
    assert isinstance(branch, If)
    assert branch.orelse == [Write("n est impair ", None)]
    assert branch.todo is False


def test_pending_else_round_trip_keeps_flag():
    m = parser.parse_macro(ROUND_TRIPS[2])
    branch = m.body[0]
    assert branch.todo is True
    assert branch.orelse == []


def test_macro_comment_and_call():
    m = parser.parse_macro(ROUND_TRIPS[3])
    assert m.comment == "Effectue le tri par insertion"
    assert m.body[0] == CallMacro("InsereElt")
    assert m.exits == [Condition(Var("i"), ">=", Length("t"))]


DECLS = """\
int q ;
char c ;
const int MAX = 20 ;
const char OUI = 157 ;
int a[10] = {12,55,17,58,47,10,71,90,66,82} ;
index i of a ;
"""


def test_declarations_round_trip():
    ws, prog = parser.parse_document(DECLS)
    assert prog.macros == []
    assert printer.declarations_text(ws) == DECLS
    assert ws.value_of("q") == 0
    assert ws.value_of("c") == 63
    assert ws.value_of("MAX") == 20
    assert ws.value_of("OUI") == 157
    assert ws.array("a").cells == [12, 55, 17, 58, 47, 10, 71, 90, 66, 82]
    assert ws.get("i").array == "a"


def test_document_round_trip():
    text = DECLS + "\n" + INSERE_ELT
    ws, prog = parser.parse_document(text)
    assert printer.document_text(ws, prog) == text


def test_nondefault_value_prints_initializer():
    ws, _ = parser.parse_document("int q = 5 ;\nchar c = 100 ;\n")
    assert printer.declarations_text(ws) == "int q = 5 ;\nchar c = 100 ;\n"


def test_comments_are_not_significant():
    with_comment = INSERE_ELT.replace("    Terminate\n",
                                      "    Terminate\n        // ...\n")
    assert parser.significant_tokens(with_comment) == \
        parser.significant_tokens(INSERE_ELT)
    m = parser.parse_macro(with_comment)
    assert m.terminate == [Comment("...")]


@pytest.mark.parametrize("bad, line", [
    ("Define 3x\n    Do\nEnd\n", 1),
    ("Define M\n    Do\n        x = ;\nEnd\n", 3),
    ("Define M\n    Do\n        x = a + b + c ;\nEnd\n", 3),
    ("Define M\n    From\n    Loop\nEnd\n", 3),
    ('Define M\n    Do\n        Write "oops ;\nEnd\n', 3),
])
def test_syntax_errors_carry_line_numbers(bad, line):
    with pytest.raises(AgtSyntaxError) as err:
        parser.parse_macro(bad)
    assert err.value.line == line


def test_expression_allows_at_most_one_operator():
    e = parser.Parser("i - 1").parse_expr()
    assert e.op == "-"
    with pytest.raises(AgtSyntaxError):
        parser.parse_macro(
            "Define M\n    Do\n        x = 1 + 2 * 3 ;\nEnd\n")
