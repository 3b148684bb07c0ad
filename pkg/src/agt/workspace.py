"""The data being manipulated: variables, arrays, index variables.

Everything is an integer underneath. A char is an int constrained to
0..255 (default 63, the question mark); an int is constrained to signed
64 bits. Index variables are bound to one array for their whole life and
may hold out-of-range values; only dereferencing through them is checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import rng
from .errors import (
    CharRange,
    ConstantWrite,
    DuplicateName,
    EngineError,
    IndexOutOfBounds,
    InvalidName,
    Overflow,
    UnknownName,
)
from .nodes import KEYWORDS

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1

CHAR_DEFAULT = 63
DEFAULT_ARRAY_LENGTH = 10


@dataclass
class Variable:
    name: str
    type: str = "int"
    constant: bool = False
    value: int = 0

    def to_dict(self) -> dict:
        return {"kind": "var", "name": self.name, "type": self.type,
                "constant": self.constant, "value": self.value}


@dataclass
class ArrayEntity:
    name: str
    type: str = "int"
    cells: list[int] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"kind": "array", "name": self.name, "type": self.type,
                "cells": list(self.cells)}


@dataclass
class IndexVariable:
    name: str
    array: str
    value: int = 0

    def to_dict(self) -> dict:
        return {"kind": "index", "name": self.name, "array": self.array,
                "value": self.value}


def _check_name(name: str):
    if not name.isidentifier() or name in KEYWORDS:
        raise InvalidName(f"{name!r} is not a usable name")


def _check_range(type_: str, value: int, what: str):
    if type_ == "char":
        if not 0 <= value <= 255:
            raise CharRange(f"{what}: {value} is outside 0..255")
    else:
        if not INT64_MIN <= value <= INT64_MAX:
            raise Overflow(f"{what}: {value} does not fit in 64 bits")


class Workspace:
    """Named entities plus the palette of literal values seen so far."""

    def __init__(self):
        self.entities: dict[str, Variable | ArrayEntity | IndexVariable] = {}
        self.palette: list[int] = [-1, 0, 1]

    # --- declaration ---

    def _claim(self, name: str):
        _check_name(name)
        if name in self.entities:
            raise DuplicateName(f"{name!r} already exists")

    def declare_variable(self, name: str, type: str = "int",
                         constant: bool = False,
                         value: int | None = None) -> Variable:
        self._claim(name)
        if value is None:
            value = CHAR_DEFAULT if type == "char" else 0
        _check_range(type, value, name)
        v = Variable(name, type, constant, value)
        self.entities[name] = v
        self.touch_literal(value)
        return v

    def declare_array(self, name: str, length: int | None = None,
                      type: str = "int", values: list[int] | None = None,
                      seed: int | None = None,
                      draw_offset: int = 0) -> ArrayEntity:
        """Either explicit values or a reproducible random fill.

        Random cells come from the splitmix64 stream of `seed`, skipping
        `draw_offset` values already consumed by earlier arrays of the
        same session.
        """
        self._claim(name)
        if values is not None:
            length = len(values) if length is None else length
            if length != len(values):
                raise EngineError(
                    f"{name}: {len(values)} values for length {length}")
            cells = list(values)
        else:
            if length is None:
                length = DEFAULT_ARRAY_LENGTH
            if seed is None:
                cells = [0 if type == "int" else CHAR_DEFAULT] * length
            else:
                cells = rng.draw_cell_values(seed, length, draw_offset)
        if length < 1:
            raise EngineError(f"{name}: array length must be at least 1")
        for c in cells:
            _check_range(type, c, name)
        a = ArrayEntity(name, type, cells)
        self.entities[name] = a
        return a

    def declare_index(self, name: str, array: str) -> IndexVariable:
        self._claim(name)
        self.array(array)  # must exist
        ix = IndexVariable(name, array, 0)
        self.entities[name] = ix
        return ix

    # --- lookup ---

    def get(self, name: str):
        try:
            return self.entities[name]
        except KeyError:
            raise UnknownName(f"no entity named {name!r}") from None

    def array(self, name: str) -> ArrayEntity:
        e = self.get(name)
        if not isinstance(e, ArrayEntity):
            raise UnknownName(f"{name!r} is not an array")
        return e

    def scalar(self, name: str) -> Variable | IndexVariable:
        e = self.get(name)
        if isinstance(e, ArrayEntity):
            raise UnknownName(f"{name!r} is an array, not a value")
        return e

    # --- reads ---

    def value_of(self, name: str) -> int:
        return self.scalar(name).value

    def length(self, name: str) -> int:
        return len(self.array(name).cells)

    def cell_at(self, array: str, pos: int, index_name: str | None = None) -> int:
        a = self.array(array)
        if not 0 <= pos < len(a.cells):
            raise IndexOutOfBounds(array, index_name, pos)
        return a.cells[pos]

    def cell_via(self, array: str, index: str) -> int:
        ix = self.get(index)
        if not isinstance(ix, IndexVariable) or ix.array != array:
            raise UnknownName(f"{index!r} is not an index of {array!r}")
        return self.cell_at(array, ix.value, index)

    # --- writes ---

    def set_value(self, name: str, value: int):
        e = self.scalar(name)
        if isinstance(e, Variable):
            if e.constant:
                raise ConstantWrite(f"{name!r} is a constant")
            _check_range(e.type, value, name)
        else:
            # index variables store any int; bounds apply on dereference
            _check_range("int", value, name)
        e.value = value

    def set_cell_at(self, array: str, pos: int, value: int,
                    index_name: str | None = None):
        a = self.array(array)
        if not 0 <= pos < len(a.cells):
            raise IndexOutOfBounds(array, index_name, pos)
        _check_range(a.type, value, f"{array}[{pos}]")
        a.cells[pos] = value

    def set_cell_via(self, array: str, index: str, value: int):
        ix = self.get(index)
        if not isinstance(ix, IndexVariable) or ix.array != array:
            raise UnknownName(f"{index!r} is not an index of {array!r}")
        self.set_cell_at(array, ix.value, value, index)

    # --- palette ---

    def touch_literal(self, value: int):
        if value not in self.palette:
            self.palette.append(value)

    # --- snapshots ---

    def to_dict(self) -> dict:
        return {"palette": list(self.palette),
                "entities": [e.to_dict() for e in self.entities.values()]}

    @classmethod
    def from_dict(cls, d: dict) -> "Workspace":
        ws = cls()
        ws.palette = [int(v) for v in d.get("palette", [-1, 0, 1])]
        for ed in d.get("entities", []):
            kind = ed.get("kind")
            if kind == "var":
                ws.entities[ed["name"]] = Variable(
                    ed["name"], ed.get("type", "int"),
                    bool(ed.get("constant", False)), int(ed.get("value", 0)))
            elif kind == "array":
                ws.entities[ed["name"]] = ArrayEntity(
                    ed["name"], ed.get("type", "int"),
                    [int(c) for c in ed["cells"]])
            elif kind == "index":
                ws.entities[ed["name"]] = IndexVariable(
                    ed["name"], ed["array"], int(ed.get("value", 0)))
            else:
                raise UnknownName(f"unknown entity kind {kind!r}")
        return ws

    def restore_dict(self, d: dict):
        """In-place restore, so references to this workspace stay valid."""
        fresh = Workspace.from_dict(d)
        self.entities = fresh.entities
        self.palette = fresh.palette

    def clone(self) -> "Workspace":
        return Workspace.from_dict(self.to_dict())
