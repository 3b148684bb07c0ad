"""The six comparison relations and the little algebra the engine needs.

Comparing two concrete values makes exactly three of the six relations true.
The recorder shows those three (in a fixed menu order) when the user compares
two things; the transpiler needs the relation-wise negation to turn an exit
condition list into a while guard.
"""

from __future__ import annotations

RELATIONS = ("<", "<=", "==", "!=", ">=", ">")

NEGATION = {
    "<": ">=",
    "<=": ">",
    "==": "!=",
    "!=": "==",
    ">=": "<",
    ">": "<=",
}


def holds(a: int, rel: str, b: int) -> bool:
    if rel == "<":
        return a < b
    if rel == "<=":
        return a <= b
    if rel == "==":
        return a == b
    if rel == "!=":
        return a != b
    if rel == ">=":
        return a >= b
    if rel == ">":
        return a > b
    raise ValueError(f"unknown relation {rel!r}")


def negate(rel: str) -> str:
    return NEGATION[rel]


def true_relations(a: int, b: int) -> list[str]:
    """The three relations holding between a and b, in menu order.

    The strict relation (or equality) comes first, then inequality if it
    holds, then the weak forms.
    """
    if a < b:
        return ["<", "!=", "<="]
    if a > b:
        return [">", "!=", ">="]
    return ["==", "<=", ">="]


def partition_stable(items, pred):
    """Items satisfying pred first, the rest after, original order kept."""
    yes = [x for x in items if pred(x)]
    no = [x for x in items if not pred(x)]
    return yes + no
