"""Saving sessions to .agts files and packing them into URLs.

An .agts document is JSON: the seed, the literal palette, every entity
with its current value, and the macros as program text. The entity list
is the authority on data; the macro text is the authority on code. Two
optional fields ride along: the action log (so a session can be audited
or replayed elsewhere) and a ui object this module never interprets,
only preserves.

The URL form packs the same JSON into a single query parameter named
`prog`, either percent-encoded as is or deflated and base64url-coded
behind a `z:` prefix when that comes out shorter.
"""

from __future__ import annotations

import base64
import copy
import json
import zlib
from dataclasses import dataclass, field
from urllib.parse import parse_qs, quote, unquote, urlsplit

from .errors import EngineError, MalformedDocument, VersionUnsupported
from .nodes import Program
from .parser import parse_program
from .printer import program_text
from .workspace import Workspace

FORMAT = "agts"
VERSION = 1

URL_PARAM = "prog"


@dataclass
class SessionDocument:
    """Everything needed to put a session back on its feet."""

    seed: int = 0
    workspace: Workspace = field(default_factory=Workspace)
    program: Program = field(default_factory=lambda: Program([]))
    draws: int = 0
    actions: list | None = None
    ui: dict | None = None


def document_of(session, with_actions: bool = True,
                ui: dict | None = None) -> SessionDocument:
    """Photograph a live session (it keeps its own parts)."""
    return SessionDocument(
        seed=session.seed,
        workspace=session.ws.clone(),
        program=Program(copy.deepcopy(session.program.macros)),
        draws=session.draws,
        actions=[dict(a) for a in session.log] if with_actions else None,
        ui=ui,
    )


def to_dict(doc: SessionDocument) -> dict:
    out = {
        "format": FORMAT,
        "version": VERSION,
        "seed": doc.seed,
        "palette": list(doc.workspace.palette),
        "entities": [e.to_dict() for e in doc.workspace.entities.values()],
        "macros": program_text(doc.program),
    }
    if doc.draws:
        out["draws"] = doc.draws
    if doc.actions is not None:
        out["actions"] = doc.actions
    if doc.ui is not None:
        out["ui"] = doc.ui
    return out


def dumps(doc: SessionDocument) -> str:
    return json.dumps(to_dict(doc), ensure_ascii=False, indent=2) + "\n"


def from_dict(raw) -> SessionDocument:
    if not isinstance(raw, dict):
        raise MalformedDocument("the document is not a JSON object")
    if raw.get("format") != FORMAT:
        raise MalformedDocument(
            f"format is {raw.get('format')!r}, expected {FORMAT!r}")
    version = raw.get("version")
    if not isinstance(version, int):
        raise MalformedDocument("version is missing or not an integer")
    if not 1 <= version <= VERSION:
        raise VersionUnsupported(
            f"version {version} is not supported (this reader knows "
            f"1..{VERSION})")
    try:
        ws = Workspace.from_dict({"palette": raw.get("palette", [-1, 0, 1]),
                                  "entities": raw.get("entities", [])})
    except (EngineError, KeyError, TypeError, ValueError) as exc:
        raise MalformedDocument(f"bad entity list: {exc}") from exc
    macros = raw.get("macros", "")
    if not isinstance(macros, str):
        raise MalformedDocument("macros must be program text")
    try:
        program = parse_program(macros)
    except EngineError as exc:
        raise MalformedDocument(f"bad macro text: {exc}") from exc
    seed = raw.get("seed", 0)
    draws = raw.get("draws", 0)
    if not isinstance(seed, int) or not isinstance(draws, int):
        raise MalformedDocument("seed and draws must be integers")
    actions = raw.get("actions")
    if actions is not None:
        if not isinstance(actions, list) or \
                not all(isinstance(a, dict) for a in actions):
            raise MalformedDocument("actions must be a list of objects")
    ui = raw.get("ui")
    return SessionDocument(seed, ws, program, draws, actions, ui)


def loads(text: str) -> SessionDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedDocument(f"not valid JSON: {exc}") from exc
    return from_dict(raw)


def save(doc: SessionDocument, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps(doc))


def load(path) -> SessionDocument:
    with open(path, encoding="utf-8") as f:
        return loads(f.read())


# --- the URL form ---


def to_url_param(doc: SessionDocument, compress: str = "auto") -> str:
    """The value for `prog=`; compress is "auto", "always" or "never"."""
    text = json.dumps(to_dict(doc), ensure_ascii=False,
                      separators=(",", ":"))
    plain = quote(text, safe="")
    if compress == "never":
        return plain
    packed = base64.urlsafe_b64encode(
        zlib.compress(text.encode("utf-8"), 9)).decode("ascii").rstrip("=")
    zipped = "z:" + packed
    if compress == "always":
        return quote(zipped, safe="")
    return plain if len(plain) <= len(zipped) else quote(zipped, safe="")


def _decode_payload(text: str) -> SessionDocument:
    """`text` is already percent-decoded: JSON or z:<base64url(deflate)>."""
    if text.startswith("z:"):
        packed = text[2:]
        packed += "=" * (-len(packed) % 4)
        try:
            text = zlib.decompress(
                base64.urlsafe_b64decode(packed)).decode("utf-8")
        except (ValueError, zlib.error) as exc:
            raise MalformedDocument(f"bad compressed payload: {exc}") from exc
    return loads(text)


def from_url_param(value: str) -> SessionDocument:
    return _decode_payload(unquote(value))


def to_url(doc: SessionDocument, base: str, compress: str = "auto") -> str:
    sep = "&" if "?" in base else "?"
    return f"{base}{sep}{URL_PARAM}={to_url_param(doc, compress)}"


def from_url(url: str) -> SessionDocument:
    query = parse_qs(urlsplit(url).query, keep_blank_values=True)
    values = query.get(URL_PARAM)
    if not values:
        raise MalformedDocument(f"no {URL_PARAM!r} parameter in the URL")
    # parse_qs has already percent-decoded the value
    return _decode_payload(values[-1])


# --- back to a live session ---


def restore_session(doc: SessionDocument):
    """A quiet session holding the document's data and code.

    The recorder is off and the log is empty: the document's action list
    is testimony about the past, not something to replay here.
    """
    from .session import Session

    s = Session(seed=doc.seed)
    s.ws.restore_dict({"palette": list(doc.workspace.palette),
                       "entities": [e.to_dict()
                                    for e in doc.workspace.entities.values()]})
    s.program.macros[:] = copy.deepcopy(doc.program.macros)
    s.draws = doc.draws
    return s
